#ifndef LCSB2_SHAPE_HPP
#define LCSB2_SHAPE_HPP

#include <vector>

#include "lcsb2/cpoly.hpp"
#include "lcsb2/exactla.hpp"
#include "lcsb2/grading.hpp"

namespace lcsb2 {

/// Quasihomogeneous shape data: P_ab = x^u y^v * sum_k a_k x^((n-k)r) y^(ks)
/// with u, v in {0,1}, a_0 != 0, a_n != 0, and d = u*s + v*r + n*r*s.
struct ShapeParams {
    int u = 0;
    int v = 0;
    int n = 0;
    long long d = 0;
    std::vector<Rat> a; // a_0 ... a_n

    long long u_exp(int k, const Grading& g) const { return u + static_cast<long long>(n - k) * g.r; }
    long long v_exp(int k, const Grading& g) const { return v + static_cast<long long>(k) * g.s; }

    /// x^u y^v * sum a_k x^((n-k)r) y^(ks); inverse of shape_decompose.
    CPoly reconstruct(const Grading& g) const;

    /// h(t) = a_0 t^n + ... + a_n, descending coefficients.
    std::vector<Rat> h_coeffs() const { return a; }
    /// h'(t), descending coefficients (empty for n = 0).
    std::vector<Rat> h_derivative_coeffs() const;
};

/// Factors the maximal monomial and matches the cofactor against the coprime
/// exponent grid. Throws SquarePartError when the monomial part has an
/// exponent >= 2, ShapeMismatchError when the grid cannot be matched (broken
/// precondition), std::invalid_argument for zero/inhomogeneous/constant input.
ShapeParams shape_decompose(const CPoly& p, const Grading& g);

/// Standard (deg f + deg g)-square Sylvester matrix of two univariate
/// polynomials given by descending coefficient lists with nonzero leading
/// coefficients. det(sylvester(f, g)) = Res(f, g).
ExactMatrix sylvester(const std::vector<Rat>& f, const std::vector<Rat>& g);

/// Exact resultant via the Sylvester determinant.
Rat resultant(const std::vector<Rat>& f, const std::vector<Rat>& g);

/// Square-freeness of quasihomogeneous p over the algebraic closure, decided
/// through the shape decomposition: success with u,v <= 1 and (n = 0 or
/// Res(h, h') != 0). SquarePartError maps to false.
bool is_square_free(const CPoly& p, const Grading& g);

/// dim of the degree-m piece of C[x,y]/(dp/dx, dp/dy) dx^dy, where dx^dy
/// carries degree s+r: monomial count at degree m-s-r minus the rank of the
/// ideal slice spanned by {w * dp/dx, w * dp/dy}.
long long omega2_quotient_dim(const CPoly& p, const Grading& g, long long m);

} // namespace lcsb2

#endif
