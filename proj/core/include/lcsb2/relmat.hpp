#ifndef LCSB2_RELMAT_HPP
#define LCSB2_RELMAT_HPP

#include <string>
#include <vector>

#include "lcsb2/exactla.hpp"
#include "lcsb2/grading.hpp"
#include "lcsb2/series.hpp"
#include "lcsb2/shape.hpp"

namespace lcsb2 {

/// Lattice data of one degree: S_m = {(i,j) >= 0 : si+rj = m} listed with i
/// descending, its strictly positive part, and when S_{m-d} is nonempty the
/// parameters (p, q, l) with S_{m-d} = {(p+(l-t)r, q+ts) : 0 <= t <= l}.
struct SmData {
    long long m = 0;
    std::vector<std::pair<long long, long long>> S_m;
    std::vector<std::pair<long long, long long>> S_m_plus;
    bool has_smd = false;
    long long p = 0, q = 0, l = 0;

    long long p_t(long long t, const Grading& g) const { return p + (l - t) * g.r; }
    long long q_t(long long t, const Grading& g) const { return q + t * g.s; }
};

enum class ShapeClass { UV00, UV11, UV01 };
enum class PqCase { BothNonzero, PZeroQNonzero, PNonzeroQZero, BothZero };

struct CaseTag {
    ShapeClass shape;
    PqCase pq;
};

std::string shape_class_name(ShapeClass s);
std::string pq_case_name(PqCase c);

SmData compute_sm(const Grading& g, const ShapeParams& shape, long long m);

/// Dispatch tag for a degree; the shape must already be normalized away from
/// (u,v) = (1,0) (see swap_xy), and S_{m-d} must be nonempty.
CaseTag classify_case(const ShapeParams& shape, const SmData& sm);

/// The relation matrix A of the chosen case: one row per available bracket
/// relation (two per t when p_t, q_t > 0), one column per element of S+_m.
/// Requires nonempty S_{m-d} and n >= 1; (u,v) = (1,0) shapes must be swapped
/// to (0,1) before entry (see swap_xy).
ExactMatrix build_A(const ShapeParams& shape, const Grading& g, const SmData& sm);

/// The row/column-operation script that carries A to the banded B in the
/// (p != 0, q != 0) case: scale column i by (u+p+(n+l-i)r)(v+q+is), then per
/// row j <= l scale by r, add s times row j+l+1, scale by 1/m, subtract
/// u+p+(l-j)r times row j from row j+l+1, scale that row by 1/r.
OpScript reduction_script(const ShapeParams& shape, const Grading& g, const SmData& sm);

/// The banded target matrix for the given shape and pq-case, assembled
/// directly from a_0..a_n.
ExactMatrix build_B(const ShapeParams& shape, const Grading& g, const SmData& sm);

/// The x <-> y swap: exchanges weights, reverses coefficients, and swaps
/// (u, v); used to route (u,v) = (1,0) through the (0,1) case.
ShapeParams swap_xy(const ShapeParams& shape);

struct DetCheck {
    std::string name;
    Rat expected_abs;
    Rat computed_abs;
    int sign = 0; // sign of the computed determinant; recorded, never asserted
    bool ok = false;
};

struct RankCertificate {
    long long m = 0;
    CaseTag tag{ShapeClass::UV00, PqCase::BothNonzero};
    long long rows = 0, cols = 0;
    long long rank = 0, expected_rank = 0;
    bool rank_ok = false;
    bool script_applicable = false;
    bool script_ok = false;
    std::vector<DetCheck> det_checks;
    bool ok = false;
    std::string failed_dump; // CSV of the offending matrix when !ok
};

/// Verifies rank(A) = min(dims), the script identity where it applies, and
/// the determinant certificates: the leading square of B against
/// a_n^(l-n+2) Res(h, h'), the punctured square against a_n^(l-n) Res(h, h'),
/// and the seed matrix reached from Sylv(h, h'). Requires Res(h, h') != 0.
RankCertificate certify_max_rank(const ShapeParams& shape, const Grading& g, long long m);

std::string certificate_to_json(const RankCertificate& cert);

struct BoundResult {
    long long bound = 0;
    bool certified = false;      // rank certificate passed (or none was needed)
    bool used_certificate = false;
};

/// Upper bound on dim B2[m] from the bracket relations: |S+_m| when S_{m-d}
/// is empty or n = 0 (single-term relations), otherwise the per-case bound
/// max(#cols - #rows, 0), emitted as certified only when the rank
/// certificate holds at this degree.
BoundResult dim_bound(const Grading& g, const ShapeParams& shape, long long m);

/// sum_m dim_bound(m) t^m up to order N; throws CertificateError when any
/// degree's bound is uncertified.
TruncatedSeries bound_series(const Grading& g, const ShapeParams& shape, long long N);

} // namespace lcsb2

#endif
