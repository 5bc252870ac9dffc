#include "lcsb2/ncpoly.hpp"

#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace lcsb2 {

void NcPoly::add_term(const Word& w, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

NcPoly& NcPoly::operator+=(const NcPoly& other) {
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& other) {
    for (const auto& [w, c] : other.terms_) add_term(w, -c);
    return *this;
}

NcPoly& NcPoly::operator*=(const Rat& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= scalar;
    return *this;
}

NcPoly multiply(const NcPoly& a, const NcPoly& b) {
    NcPoly out;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) out.add_term(wa.concat(wb), ca * cb);
    return out;
}

std::optional<long long> NcPoly::homogeneous_degree(const Grading& g) const {
    if (terms_.empty()) return std::nullopt;
    long long d = terms_.begin()->first.degree(g);
    for (const auto& [w, c] : terms_)
        if (w.degree(g) != d) return std::nullopt;
    return d;
}

NcPoly NcPoly::homogeneous_part(const Grading& g, long long m) const {
    NcPoly out;
    for (const auto& [w, c] : terms_)
        if (w.degree(g) == m) out.add_term(w, c);
    return out;
}

std::string NcPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << rational_to_string(c);
        if (!w.empty()) out << "*" << w.str();
    }
    return out.str();
}

NcPoly commutator(const NcPoly& a, const NcPoly& b) {
    return multiply(a, b) - multiply(b, a);
}

std::vector<NcPoly> span_L2(const Grading& g, long long m) {
    if (m < 1) throw std::invalid_argument("span_L2 needs m >= 1");
    std::vector<NcPoly> out;
    for (long long a = 1; a < m; ++a) {
        auto left = enumerate_words(g, a);
        auto right = enumerate_words(g, m - a);
        for (const Word& w1 : left)
            for (const Word& w2 : right) out.push_back(commutator(NcPoly(w1), NcPoly(w2)));
    }
    return out;
}

std::vector<NcPoly> span_L3(const Grading& g, long long m) {
    if (m < 1) throw std::invalid_argument("span_L3 needs m >= 1");
    std::vector<NcPoly> out;
    for (long long a = 1; a < m; ++a) {
        for (long long b = 1; a + b < m; ++b) {
            long long c = m - a - b;
            auto was = enumerate_words(g, a);
            auto wbs = enumerate_words(g, b);
            auto wcs = enumerate_words(g, c);
            for (const Word& w1 : was)
                for (const Word& w2 : wbs)
                    for (const Word& w3 : wcs)
                        out.push_back(commutator(NcPoly(w1), commutator(NcPoly(w2), NcPoly(w3))));
        }
    }
    return out;
}

std::vector<NcPoly> span_ideal(const NcPoly& P, const Grading& g, long long m) {
    auto d = P.homogeneous_degree(g);
    if (!d) throw std::invalid_argument("span_ideal requires homogeneous nonzero P");
    std::vector<NcPoly> out;
    if (m < *d) return out;
    for (long long a = 0; a <= m - *d; ++a) {
        auto left = enumerate_words(g, a);
        auto right = enumerate_words(g, m - *d - a);
        for (const Word& w1 : left)
            for (const Word& w2 : right)
                out.push_back(multiply(multiply(NcPoly(w1), P), NcPoly(w2)));
    }
    return out;
}

std::string ncpoly_to_json(const NcPoly& p) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [w, c] : p.terms()) j[w.str()] = rational_to_string(c);
    return j.dump();
}

NcPoly ncpoly_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    if (!j.is_object()) throw std::invalid_argument("NcPoly JSON must be an object");
    NcPoly p;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!it.value().is_string())
            throw std::invalid_argument("NcPoly coefficients must be rational strings");
        p.add_term(Word::parse(it.key()), parse_rational(it.value().get<std::string>()));
    }
    return p;
}

} // namespace lcsb2
