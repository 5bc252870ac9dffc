#include "lcsb2/forms.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "lcsb2/errors.hpp"
#include "lcsb2/shape.hpp"

namespace lcsb2 {

namespace {

CPoly shift(const CPoly& p, int di, int dj) {
    CPoly out;
    for (const auto& [m, c] : p.terms()) out.add_term(Mono{m.i + di, m.j + dj}, c);
    return out;
}

const Rat kHalf(1, 2);

} // namespace

EvenForm star(const EvenForm& a, const EvenForm& b) {
    EvenForm out;
    out.f0 = a.f0 * b.f0;
    out.f2 = a.f0 * b.f2 + b.f0 * a.f2 +
             kHalf * (partial(a.f0, Var::x) * partial(b.f0, Var::y) -
                      partial(a.f0, Var::y) * partial(b.f0, Var::x));
    return out;
}

EvenForm psi(const NcPoly& p) {
    EvenForm acc;
    for (const auto& [w, c] : p.terms()) {
        EvenForm fw{CPoly::constant(Rat(1)), CPoly()};
        for (int i = 0; i < w.length(); ++i) {
            EvenForm letter{CPoly(Mono{w.letter(i) ? 0 : 1, w.letter(i) ? 1 : 0}), CPoly()};
            fw = star(fw, letter);
        }
        acc.f0 += c * fw.f0;
        acc.f2 += c * fw.f2;
    }
    return acc;
}

std::string evenform_to_json(const EvenForm& f) {
    nlohmann::ordered_json j;
    j["f0"] = nlohmann::ordered_json::parse(cpoly_to_json(f.f0));
    j["f2"] = nlohmann::ordered_json::parse(cpoly_to_json(f.f2));
    return j.dump();
}

EvenForm evenform_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    if (!j.is_object() || !j.contains("f0") || !j.contains("f2"))
        throw std::invalid_argument("EvenForm JSON must have f0 and f2");
    return {cpoly_from_json(j["f0"].dump()), cpoly_from_json(j["f2"].dump())};
}

const CPoly& PsiTable::psi2(const Word& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    CPoly value;
    if (w.length() > 0) {
        Word prefix{static_cast<std::uint32_t>(w.bits >> 1), static_cast<std::uint8_t>(w.len - 1)};
        const CPoly& head = psi2(prefix);
        const int i = prefix.x_count();
        const int j = prefix.y_count();
        if (w.letter(w.length() - 1) == 0) {
            // append x: psi2 shifts by x and picks up -(1/2) dy(ab(prefix))
            value = shift(head, 1, 0);
            if (j > 0) value.add_term(Mono{i, j - 1}, -kHalf * j);
        } else {
            value = shift(head, 0, 1);
            if (i > 0) value.add_term(Mono{i - 1, j}, kHalf * i);
        }
    }
    return memo_.emplace(w, std::move(value)).first->second;
}

Omega2Slice::Omega2Slice(const CPoly& p_ab, const Grading& g, long long m) : ech_(0) {
    const long long k = m - g.s - g.r;
    if (k >= 0) {
        for (long long j = 0; j * g.r <= k; ++j) {
            long long rest = k - j * g.r;
            if (rest % g.s) continue;
            cols_.push_back(Mono{static_cast<int>(rest / g.s), static_cast<int>(j)});
        }
        std::sort(cols_.begin(), cols_.end());
    }
    ech_ = SparseEchelon(static_cast<std::int32_t>(cols_.size()));
    if (k < 0) return;

    for (Var v : {Var::x, Var::y}) {
        const CPoly gen = partial(p_ab, v);
        if (gen.is_zero()) continue;
        auto gd = gen.homogeneous_degree(g);
        if (!gd) throw std::invalid_argument("Omega2Slice requires quasihomogeneous P_ab");
        long long wd = k - *gd;
        if (wd < 0) continue;
        for (long long j = 0; j * g.r <= wd; ++j) {
            long long rest = wd - j * g.r;
            if (rest % g.s) continue;
            Mono w{static_cast<int>(rest / g.s), static_cast<int>(j)};
            std::vector<std::pair<std::int32_t, Rat>> terms;
            for (const auto& [mo, c] : gen.terms())
                terms.emplace_back(column_of(Mono{mo.i + w.i, mo.j + w.j}), c);
            ech_.insert(SparseVec::from_terms(std::move(terms)));
        }
    }
}

std::int32_t Omega2Slice::column_of(const Mono& m) const {
    auto it = std::lower_bound(cols_.begin(), cols_.end(), m);
    if (it == cols_.end() || *it != m) throw std::logic_error("monomial outside the slice");
    return static_cast<std::int32_t>(it - cols_.begin());
}

long long Omega2Slice::dim() const {
    return static_cast<long long>(cols_.size()) - ech_.rank();
}

std::vector<Mono> Omega2Slice::complement() const {
    std::vector<Mono> out;
    for (std::size_t i = 0; i < cols_.size(); ++i)
        if (!ech_.is_pivot(static_cast<std::int32_t>(i))) out.push_back(cols_[i]);
    return out;
}

std::vector<Rat> Omega2Slice::coordinates(const CPoly& f) const {
    std::vector<std::pair<std::int32_t, Rat>> v;
    for (const auto& [mo, c] : f.terms()) v.emplace_back(column_of(mo), c);
    auto residual = ech_.reduce_full(std::move(v));
    std::vector<Rat> out;
    out.reserve(cols_.size() - ech_.rank());
    std::size_t at = 0;
    for (std::size_t i = 0; i < cols_.size(); ++i) {
        if (ech_.is_pivot(static_cast<std::int32_t>(i))) continue;
        Rat value(0);
        if (at < residual.size() && residual[at].first == static_cast<std::int32_t>(i)) {
            value = residual[at].second;
            ++at;
        }
        out.push_back(std::move(value));
    }
    return out;
}

std::vector<Rat> phi_on_L2(const NcPoly& p, const NcPoly& P, const Grading& g, long long m) {
    auto pd = p.homogeneous_degree(g);
    if (!p.is_zero() && (!pd || *pd != m))
        throw std::invalid_argument("phi_on_L2: p must be homogeneous of degree m");
    const CPoly p_ab = abelianize(P);
    if (p_ab.is_zero() || !is_square_free(p_ab, g))
        throw NotSquareFreeError("phi_on_L2 requires square-free P_ab");

    SpanCache cache(g);
    if (!cache.l2_echelon(m).reduces_to_zero(cache.vectorize(p, m)))
        throw std::invalid_argument("phi_on_L2: p is not in the L2 span");

    Omega2Slice slice(p_ab, g, m);
    return slice.coordinates(psi(p).f2);
}

namespace {

// Shared driver: rank of the psi_2 image of the L2 family, optionally inside
// a quotient echelon. Each generator [w1, w2] contributes
// psi2(w1 w2) - psi2(w2 w1), a rotation pair.
long long l2_image_rank(const Grading& g, long long m, const std::vector<Mono>& cols,
                        SparseEchelon ech) {
    PsiTable table;
    const long long base = ech.rank();
    auto col_of = [&cols](const Mono& mo) {
        auto it = std::lower_bound(cols.begin(), cols.end(), mo);
        return static_cast<std::int32_t>(it - cols.begin());
    };
    for (const Word& w : enumerate_words(g, m)) {
        for (int k = 1; k < w.length(); ++k) {
            Word rot = w.rotated_left(k);
            if (rot == w) continue;
            CPoly diff = table.psi2(w) - table.psi2(rot);
            if (diff.is_zero()) continue;
            std::vector<std::pair<std::int32_t, Rat>> terms;
            for (const auto& [mo, c] : diff.terms()) terms.emplace_back(col_of(mo), c);
            ech.insert(SparseVec::from_terms(std::move(terms)));
        }
    }
    return ech.rank() - base;
}

} // namespace

long long phi_rank(const NcPoly& P, const Grading& g, long long m) {
    const CPoly p_ab = abelianize(P);
    if (p_ab.is_zero() || !is_square_free(p_ab, g))
        throw NotSquareFreeError("phi_rank requires square-free P_ab");
    if (m < g.s + g.r) return 0;
    Omega2Slice slice(p_ab, g, m);
    return l2_image_rank(g, m, slice.columns(), slice.echelon());
}

long long psi2_l2_rank(const Grading& g, long long m) {
    const long long k = m - g.s - g.r;
    if (k < 0) return 0;
    std::vector<Mono> cols;
    for (long long j = 0; j * g.r <= k; ++j) {
        long long rest = k - j * g.r;
        if (rest % g.s) continue;
        cols.push_back(Mono{static_cast<int>(rest / g.s), static_cast<int>(j)});
    }
    std::sort(cols.begin(), cols.end());
    return l2_image_rank(g, m, cols, SparseEchelon(static_cast<std::int32_t>(cols.size())));
}

} // namespace lcsb2
