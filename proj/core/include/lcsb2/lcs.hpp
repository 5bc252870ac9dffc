#ifndef LCSB2_LCS_HPP
#define LCSB2_LCS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lcsb2/grading.hpp"
#include "lcsb2/ncpoly.hpp"
#include "lcsb2/shape.hpp"
#include "lcsb2/spans.hpp"

namespace lcsb2 {

inline constexpr std::uint64_t kDefaultSeed = 271828;

/// Exact per-degree dimensions entering dim B2 = dim(L2 + <P>) - dim(L3 + <P>).
struct DegreeReport {
    long long m = 0;
    long long dim_L2 = 0;
    long long dim_L3 = 0;
    long long dim_ideal = 0;
    long long dim_L2_plus_ideal = 0;
    long long dim_L3_plus_ideal = 0;
    long long dim_B2 = 0;
};

/// Brute-force engine for one grading: all ranks exact. A modular elimination
/// is used only as a lower-bound certificate that can close the sandwich
/// rank_p(L3+I) <= rank(L3+I) <= rank(L2+I); when it does not close, the rank
/// is recomputed by exact elimination.
class B2Engine {
public:
    explicit B2Engine(const Grading& g, std::uint64_t seed = kDefaultSeed);

    const Grading& grading() const { return g_; }
    SpanCache& spans() { return cache_; }

    long long dim_L2(long long m);
    long long dim_L3(long long m);
    long long dim_B2_free(long long m);

    /// The L3 echelon of the free algebra at degree m (cached), for membership
    /// tests of bracket identities.
    const SparseEchelon& l3_echelon(long long m);

private:
    Grading g_;
    SpanCache cache_;
    std::uint64_t prime_;
    std::map<long long, SparseEchelon> l3_;

    friend class QuotientEngine;
};

/// Degreewise data for one quotient C<x,y>/P on top of a shared B2Engine.
class QuotientEngine {
public:
    QuotientEngine(B2Engine& base, NcPoly P);

    const Grading& grading() const { return base_.grading(); }
    long long degree_d() const { return d_; }
    DegreeReport report(long long m);

    /// Membership of a homogeneous combination in (L3 + <P>)[m]: zero class
    /// in B2 of the quotient.
    bool vanishes_in_B2(const NcPoly& combo);

private:
    const SparseEchelon& l3i_echelon(long long m);

    B2Engine& base_;
    NcPoly P_;
    long long d_;
    std::map<long long, SparseEchelon> l3i_;
    std::map<long long, long long> r2i_;
};

long long dim_B2_free(const Grading& g, long long m);
DegreeReport dim_B2_quotient(const NcPoly& P, const Grading& g, long long m);

/// One verdict per random instance of the bracket rewriting identities
/// (i)-(iv); the difference of the two sides must lie in the L3 span.
struct RelCheckResult {
    std::string identity;
    long long degree = 0;
    bool pass = false;
};

std::vector<RelCheckResult> check_b2rels(const Grading& g, long long bound,
                                         int instances_per_identity = 25,
                                         std::uint64_t seed = kDefaultSeed);

/// Verdict for the bracket-dependency proposition at one (i, j): each
/// applicable statement's combination must vanish in B2(A/P).
struct BracketDepResult {
    long long i = 0;
    long long j = 0;
    bool first_applicable = false;  // i >= 0, j >= 1
    bool second_applicable = false; // i >= 1, j >= 0
    bool first_vanishes = false;
    bool second_vanishes = false;
    bool pass = false;
};

BracketDepResult check_bracketdep(const NcPoly& P, const Grading& g, long long i, long long j);

/// Engine-backed variant that reuses cached eliminations across many (i, j).
BracketDepResult check_bracketdep(QuotientEngine& engine, const ShapeParams& shape,
                                  long long i, long long j);

} // namespace lcsb2

#endif
