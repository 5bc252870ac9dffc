#ifndef LCSB2_FORMS_HPP
#define LCSB2_FORMS_HPP

#include <map>
#include <vector>

#include "lcsb2/cpoly.hpp"
#include "lcsb2/grading.hpp"
#include "lcsb2/ncpoly.hpp"
#include "lcsb2/sparse.hpp"
#include "lcsb2/spans.hpp"

namespace lcsb2 {

/// Element f0 + f2 dx^dy of the even de Rham complex of the plane.
struct EvenForm {
    CPoly f0;
    CPoly f2;

    bool operator==(const EvenForm&) const = default;
};

/// a*b = a.b + (1/2) da.db: the 0-form parts multiply, the 2-form part picks
/// up a0*b2 + b0*a2 + (1/2)(dx a0 dy b0 - dy a0 dx b0). Higher wedge terms
/// vanish identically in two variables.
EvenForm star(const EvenForm& a, const EvenForm& b);

/// The unital algebra homomorphism from the free algebra to (even forms, *)
/// with x -> x, y -> y, evaluated by folding * left-to-right over each word.
/// Its 0-form component is the abelianization.
EvenForm psi(const NcPoly& p);

std::string evenform_to_json(const EvenForm& f);
EvenForm evenform_from_json(const std::string& json_text);

/// Memoized psi_2 on words; the one-letter extension has a closed form, so
/// the table fills in O(words x degree).
class PsiTable {
public:
    const CPoly& psi2(const Word& w);

private:
    std::map<Word, CPoly> memo_;
};

/// One graded slice of Omega^2((C<x,y>/P)_ab): monomial columns at degree
/// m - s - r and the echelon of the Kaehler ideal slice
/// {w dP_ab/dx, w dP_ab/dy} (the P_ab generator is Euler-redundant).
class Omega2Slice {
public:
    Omega2Slice(const CPoly& p_ab, const Grading& g, long long m);

    long long dim() const;
    const std::vector<Mono>& columns() const { return cols_; }
    /// Non-pivot monomials: a basis of the quotient slice.
    std::vector<Mono> complement() const;
    /// Class coordinates of a degree-homogeneous f on the complement basis.
    std::vector<Rat> coordinates(const CPoly& f) const;

    const SparseEchelon& echelon() const { return ech_; }
    std::int32_t column_of(const Mono& m) const;

private:
    std::vector<Mono> cols_;
    SparseEchelon ech_;
};

/// psi_2(p) reduced into the Omega^2 quotient slice at degree m, as
/// coordinates on the fixed complement basis. Rejects p that is not
/// homogeneous of degree m or lies outside the L2 span (rank test), and P
/// whose abelianization is not square-free.
std::vector<Rat> phi_on_L2(const NcPoly& p, const NcPoly& P, const Grading& g, long long m);

/// Rank of {phi([w1, w2])} over the whole degree-m L2 generating family
/// inside the Omega^2 quotient slice. Equality with omega2_quotient_dim is
/// the degreewise surjectivity of phi.
long long phi_rank(const NcPoly& P, const Grading& g, long long m);

/// Rank of {psi_2([w1, w2])} with no quotient: the free-algebra image.
long long psi2_l2_rank(const Grading& g, long long m);

} // namespace lcsb2

#endif
