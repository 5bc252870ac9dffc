#ifndef LCSB2_NCPOLY_HPP
#define LCSB2_NCPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lcsb2/grading.hpp"
#include "lcsb2/rational.hpp"
#include "lcsb2/word.hpp"

namespace lcsb2 {

/// Sparse noncommutative polynomial over Q in x, y: a finite word -> rational
/// map with no stored zeros, ordered shortlex.
class NcPoly {
public:
    NcPoly() = default;
    explicit NcPoly(const Word& w, Rat c = Rat(1)) {
        if (c != 0) terms_[w] = std::move(c);
    }

    static NcPoly zero() { return {}; }
    static NcPoly unit() { return NcPoly(Word::unit()); }
    static NcPoly x() { return NcPoly(Word::x()); }
    static NcPoly y() { return NcPoly(Word::y()); }

    const std::map<Word, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Rat coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const Word& w, const Rat& c);

    NcPoly& operator+=(const NcPoly& other);
    NcPoly& operator-=(const NcPoly& other);
    NcPoly& operator*=(const Rat& scalar);
    friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
    friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
    friend NcPoly operator*(NcPoly a, const Rat& c) { return a *= c; }
    friend NcPoly operator*(const Rat& c, NcPoly a) { return a *= c; }
    friend NcPoly operator-(NcPoly a) { return a *= Rat(-1); }
    friend NcPoly operator*(const NcPoly& a, const NcPoly& b) { return multiply(a, b); }
    bool operator==(const NcPoly&) const = default;

    /// Free product: bilinear extension of word concatenation.
    friend NcPoly multiply(const NcPoly& a, const NcPoly& b);

    /// The degree when every word has the same weighted degree; nullopt for
    /// the zero polynomial or inhomogeneous input.
    std::optional<long long> homogeneous_degree(const Grading& g) const;

    /// Terms of weighted degree exactly m.
    NcPoly homogeneous_part(const Grading& g, long long m) const;

    std::string str() const;

private:
    std::map<Word, Rat> terms_;
};

/// ab - ba.
NcPoly commutator(const NcPoly& a, const NcPoly& b);

/// Generating family {[w1, w2] : w1 w2 nonempty words, deg w1 + deg w2 = m};
/// may contain zero or dependent elements, rank is taken downstream.
std::vector<NcPoly> span_L2(const Grading& g, long long m);

/// Generating family {[w1, [w2, w3]]} at total degree m.
std::vector<NcPoly> span_L3(const Grading& g, long long m);

/// Generating family {w1 P w2 : deg w1 + deg w2 = m - d} of the two-sided
/// ideal slice; empty when m < d. Throws for inhomogeneous P.
std::vector<NcPoly> span_ideal(const NcPoly& P, const Grading& g, long long m);

/// JSON object {"word": "p/q", ...}; "" keys the unit word.
std::string ncpoly_to_json(const NcPoly& p);
NcPoly ncpoly_from_json(const std::string& json_text);

} // namespace lcsb2

#endif
