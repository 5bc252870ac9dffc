#include "lcsb2/shape.hpp"

#include <algorithm>
#include <stdexcept>

#include "lcsb2/errors.hpp"
#include "lcsb2/sparse.hpp"
#include "lcsb2/word.hpp"

namespace lcsb2 {

CPoly ShapeParams::reconstruct(const Grading& g) const {
    CPoly out;
    for (int k = 0; k <= n; ++k)
        out.add_term(Mono{static_cast<int>(u_exp(k, g)), static_cast<int>(v_exp(k, g))}, a[k]);
    return out;
}

std::vector<Rat> ShapeParams::h_derivative_coeffs() const {
    std::vector<Rat> out;
    for (int k = 0; k < n; ++k) out.push_back(a[k] * Rat(n - k));
    return out;
}

ShapeParams shape_decompose(const CPoly& p, const Grading& g) {
    if (p.is_zero()) throw std::invalid_argument("shape_decompose requires nonzero input");
    auto deg = p.homogeneous_degree(g);
    if (!deg) throw std::invalid_argument("shape_decompose requires quasihomogeneous input");

    int U = p.terms().begin()->first.i;
    int V = p.terms().begin()->first.j;
    for (const auto& [m, c] : p.terms()) {
        U = std::min(U, m.i);
        V = std::min(V, m.j);
    }
    if (U >= 2 || V >= 2)
        throw SquarePartError("monomial factor x^" + std::to_string(U) + " y^" + std::to_string(V) +
                              " has an exponent >= 2");
    if (*deg - U * g.s - V * g.r == 0) {
        // constant cofactor would force d = u*s + v*r; n = 0 is fine, but a
        // constant overall (d = 0) is not a valid shape
        if (*deg == 0) throw std::invalid_argument("constant polynomial has no shape");
    }

    // Cofactor exponents must match x^((n-k)r) y^(ks); with coprime r, s and
    // U, V factored out this always succeeds for quasihomogeneous input.
    long long rest = *deg - static_cast<long long>(U) * g.s - static_cast<long long>(V) * g.r;
    if (rest % (static_cast<long long>(g.r) * g.s) != 0)
        throw ShapeMismatchError("degree does not fit the u*s + v*r + n*r*s form");
    long long n_ll = rest / (static_cast<long long>(g.r) * g.s);
    int n = static_cast<int>(n_ll);

    ShapeParams sp;
    sp.u = U;
    sp.v = V;
    sp.n = n;
    sp.d = *deg;
    sp.a.assign(n + 1, Rat(0));
    for (const auto& [m, c] : p.terms()) {
        long long ei = m.i - U;
        long long ej = m.j - V;
        if (ei % g.r != 0 || ej % g.s != 0) throw ShapeMismatchError("exponent off the (r, s) grid");
        long long k = ej / g.s;
        if (k < 0 || k > n || ei / g.r != n - k) throw ShapeMismatchError("exponent off the (r, s) grid");
        sp.a[static_cast<std::size_t>(k)] = c;
    }
    if (sp.a.front() == 0 || sp.a.back() == 0)
        throw ShapeMismatchError("a_0 or a_n vanished; monomial factor was not maximal");
    return sp;
}

ExactMatrix sylvester(const std::vector<Rat>& f, const std::vector<Rat>& g) {
    if (f.empty() || g.empty() || f.front() == 0 || g.front() == 0)
        throw std::invalid_argument("sylvester requires nonzero polynomials with nonzero leading coefficients");
    const std::size_t df = f.size() - 1;
    const std::size_t dg = g.size() - 1;
    ExactMatrix m(df + dg, df + dg);
    for (std::size_t i = 0; i < dg; ++i)
        for (std::size_t k = 0; k < f.size(); ++k) m.at(i, i + k) = f[k];
    for (std::size_t i = 0; i < df; ++i)
        for (std::size_t k = 0; k < g.size(); ++k) m.at(dg + i, i + k) = g[k];
    return m;
}

Rat resultant(const std::vector<Rat>& f, const std::vector<Rat>& g) {
    return det(sylvester(f, g));
}

bool is_square_free(const CPoly& p, const Grading& g) {
    if (p.is_zero()) throw std::invalid_argument("is_square_free requires nonzero input");
    if (!p.homogeneous_degree(g))
        throw std::invalid_argument("is_square_free requires quasihomogeneous input");
    ShapeParams sp;
    try {
        sp = shape_decompose(p, g);
    } catch (const SquarePartError&) {
        return false;
    }
    if (sp.n == 0) return true;
    return resultant(sp.h_coeffs(), sp.h_derivative_coeffs()) != 0;
}

long long omega2_quotient_dim(const CPoly& p, const Grading& g, long long m) {
    long long k = m - g.s - g.r;
    if (k < 0) return 0;

    // monomials of weighted degree k
    std::vector<Mono> cols;
    for (long long j = 0; j * g.r <= k; ++j) {
        long long rest = k - j * g.r;
        if (rest % g.s) continue;
        cols.push_back(Mono{static_cast<int>(rest / g.s), static_cast<int>(j)});
    }
    std::sort(cols.begin(), cols.end());
    auto col_of = [&](const Mono& mo) {
        auto it = std::lower_bound(cols.begin(), cols.end(), mo);
        return static_cast<std::int32_t>(it - cols.begin());
    };

    SparseEchelon ech(static_cast<std::int32_t>(cols.size()));
    const CPoly px = partial(p, Var::x);
    const CPoly py = partial(p, Var::y);
    for (const CPoly* gen : {&px, &py}) {
        if (gen->is_zero()) continue;
        long long gd = *gen->homogeneous_degree(g);
        long long wd = k - gd;
        if (wd < 0) continue;
        for (long long j = 0; j * g.r <= wd; ++j) {
            long long rest = wd - j * g.r;
            if (rest % g.s) continue;
            Mono w{static_cast<int>(rest / g.s), static_cast<int>(j)};
            std::vector<std::pair<std::int32_t, Rat>> terms;
            for (const auto& [mo, c] : gen->terms())
                terms.emplace_back(col_of(Mono{mo.i + w.i, mo.j + w.j}), c);
            ech.insert(SparseVec::from_terms(std::move(terms)));
        }
    }
    return static_cast<long long>(cols.size()) - ech.rank();
}

} // namespace lcsb2
