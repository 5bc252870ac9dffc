#ifndef LCSB2_CPOLY_HPP
#define LCSB2_CPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "lcsb2/grading.hpp"
#include "lcsb2/ncpoly.hpp"
#include "lcsb2/rational.hpp"

namespace lcsb2 {

/// Monomial x^i y^j.
struct Mono {
    int i = 0;
    int j = 0;
    long long degree(const Grading& g) const {
        return static_cast<long long>(g.s) * i + static_cast<long long>(g.r) * j;
    }
    friend auto operator<=>(const Mono&, const Mono&) = default;
};

enum class Var { x, y };

/// Sparse commutative bivariate polynomial over Q.
class CPoly {
public:
    CPoly() = default;
    explicit CPoly(const Mono& m, Rat c = Rat(1)) {
        if (c != 0) terms_[m] = std::move(c);
    }
    static CPoly constant(Rat c) { return CPoly(Mono{0, 0}, std::move(c)); }

    const std::map<Mono, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const Mono& m, const Rat& c);

    CPoly& operator+=(const CPoly& o);
    CPoly& operator-=(const CPoly& o);
    CPoly& operator*=(const Rat& c);
    friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
    friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
    friend CPoly operator*(CPoly a, const Rat& c) { return a *= c; }
    friend CPoly operator*(const Rat& c, CPoly a) { return a *= c; }
    friend CPoly operator-(CPoly a) { return a *= Rat(-1); }
    friend CPoly operator*(const CPoly& a, const CPoly& b);
    bool operator==(const CPoly&) const = default;

    std::optional<long long> homogeneous_degree(const Grading& g) const;

    std::string str() const;

private:
    std::map<Mono, Rat> terms_;
};

/// Ring homomorphism sending each word to the monomial of its letter counts.
CPoly abelianize(const NcPoly& p);

/// Formal partial derivative.
CPoly partial(const CPoly& p, Var v);

/// True iff nonzero p is quasihomogeneous of degree d under g; checked both
/// as the Euler identity d*p = s*x*dp/dx + r*y*dp/dy and termwise.
bool euler_check(const CPoly& p, const Grading& g, long long d);

/// JSON object mapping monomial strings ("1", "x^2", "x^1 y^3", ...) to
/// rational strings.
std::string cpoly_to_json(const CPoly& p);
CPoly cpoly_from_json(const std::string& json_text);

std::string mono_str(const Mono& m);
Mono mono_parse(const std::string& text);

} // namespace lcsb2

#endif
