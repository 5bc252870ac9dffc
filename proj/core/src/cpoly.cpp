#include "lcsb2/cpoly.hpp"

#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace lcsb2 {

void CPoly::add_term(const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

CPoly& CPoly::operator+=(const CPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

CPoly& CPoly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

CPoly operator*(const CPoly& a, const CPoly& b) {
    CPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.add_term(Mono{ma.i + mb.i, ma.j + mb.j}, ca * cb);
    return out;
}

std::optional<long long> CPoly::homogeneous_degree(const Grading& g) const {
    if (terms_.empty()) return std::nullopt;
    long long d = terms_.begin()->first.degree(g);
    for (const auto& [m, c] : terms_)
        if (m.degree(g) != d) return std::nullopt;
    return d;
}

std::string CPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << rational_to_string(c);
        if (m.i || m.j) out << "*" << mono_str(m);
    }
    return out.str();
}

CPoly abelianize(const NcPoly& p) {
    CPoly out;
    for (const auto& [w, c] : p.terms()) out.add_term(Mono{w.x_count(), w.y_count()}, c);
    return out;
}

CPoly partial(const CPoly& p, Var v) {
    CPoly out;
    for (const auto& [m, c] : p.terms()) {
        if (v == Var::x && m.i > 0) out.add_term(Mono{m.i - 1, m.j}, c * m.i);
        if (v == Var::y && m.j > 0) out.add_term(Mono{m.i, m.j - 1}, c * m.j);
    }
    return out;
}

bool euler_check(const CPoly& p, const Grading& g, long long d) {
    if (p.is_zero()) throw std::invalid_argument("euler_check requires nonzero input");
    bool termwise = p.homogeneous_degree(g) == std::optional<long long>(d);
    // Eq-style check: d*p == s*x*dp/dx + r*y*dp/dy
    CPoly lhs = p * Rat(static_cast<long>(d));
    CPoly xdx = CPoly(Mono{1, 0}) * partial(p, Var::x) * Rat(g.s);
    CPoly ydy = CPoly(Mono{0, 1}) * partial(p, Var::y) * Rat(g.r);
    bool euler = (lhs == xdx + ydy);
    if (termwise != euler)
        throw std::logic_error("euler_check cross-validation mismatch");
    return euler;
}

std::string mono_str(const Mono& m) {
    if (m.i == 0 && m.j == 0) return "1";
    std::ostringstream out;
    if (m.i > 0) out << "x^" << m.i;
    if (m.j > 0) {
        if (m.i > 0) out << ' ';
        out << "y^" << m.j;
    }
    return out.str();
}

Mono mono_parse(const std::string& text) {
    if (text == "1") return Mono{0, 0};
    Mono m{0, 0};
    std::istringstream in(text);
    std::string tok;
    bool any = false;
    while (in >> tok) {
        any = true;
        char var = tok[0];
        int exp = 1;
        if (tok.size() > 1) {
            if (tok[1] != '^') throw std::invalid_argument("bad monomial: " + text);
            exp = std::stoi(tok.substr(2));
        }
        if (exp < 0) throw std::invalid_argument("negative exponent in: " + text);
        if (var == 'x')
            m.i += exp;
        else if (var == 'y')
            m.j += exp;
        else
            throw std::invalid_argument("bad monomial: " + text);
    }
    if (!any) throw std::invalid_argument("empty monomial");
    return m;
}

std::string cpoly_to_json(const CPoly& p) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [m, c] : p.terms()) j[mono_str(m)] = rational_to_string(c);
    return j.dump();
}

CPoly cpoly_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    if (!j.is_object()) throw std::invalid_argument("CPoly JSON must be an object");
    CPoly p;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!it.value().is_string())
            throw std::invalid_argument("CPoly coefficients must be rational strings");
        p.add_term(mono_parse(it.key()), parse_rational(it.value().get<std::string>()));
    }
    return p;
}

} // namespace lcsb2
