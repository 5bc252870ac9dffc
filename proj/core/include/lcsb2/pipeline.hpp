#ifndef LCSB2_PIPELINE_HPP
#define LCSB2_PIPELINE_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lcsb2/grading.hpp"
#include "lcsb2/lcs.hpp"
#include "lcsb2/ncpoly.hpp"
#include "lcsb2/relmat.hpp"
#include "lcsb2/series.hpp"
#include "lcsb2/shape.hpp"

namespace lcsb2 {

enum class Check { bruteforce, phi, relmat, lemmas, series };

std::string check_name(Check c);
Check check_from_name(const std::string& name);

struct ProblemSpec {
    NcPoly P;
    std::optional<Grading> weights;
    long long max_degree = 0;        // 0: pick the default for the grading
    long long max_degree_limit = 14; // cap for s = r = 1 workloads
    std::set<Check> checks;          // empty: run everything
    std::uint64_t seed = kDefaultSeed;
    int lemma_instances = 25;    // per identity
    int bracketdep_instances = 60;
    int property_instances = 100;
};

ProblemSpec problem_from_json(const std::string& json_text);

/// Minimal coprime positive weights making P homogeneous; throws
/// NotQuasihomogeneousError when none exist.
Grading infer_grading(const NcPoly& P);

struct PhiDegree {
    long long m = 0;
    long long phi_rank = 0;
    long long omega2_dim = 0;
};

struct LemmaSummary {
    int b2rels_pass = 0, b2rels_total = 0;
    int bracketdep_pass = 0, bracketdep_total = 0;
    int star_assoc_pass = 0, star_assoc_total = 0;
    int supercomm_pass = 0, supercomm_total = 0;
    int l3_nilpotent_pass = 0, l3_nilpotent_total = 0;
    int psi_mult_pass = 0, psi_mult_total = 0;
    int psi0_ab_pass = 0, psi0_ab_total = 0;
    bool all_passed() const;
};

struct RunReport {
    std::string poly_json;
    Grading grading;
    long long d = 0;
    ShapeParams shape;
    long long max_degree = 0;
    std::uint64_t seed = 0;
    std::set<Check> checks_run;

    std::vector<DegreeReport> degrees;      // bruteforce
    std::vector<PhiDegree> phi;             // phi
    std::vector<RankCertificate> certificates; // relmat
    bool bounds_certified = true;
    std::optional<LemmaSummary> lemmas;

    std::optional<TruncatedSeries> hp_brute;
    std::optional<TruncatedSeries> hp_bound;
    TruncatedSeries hp_closed;
    std::optional<TruncatedSeries> hp_regseq;

    std::string verdict;            // ISOMORPHISM_VERIFIED / CHECKS_PASSED / FAILED
    bool all_requested_passed = false;

    /// 0 success, 3 verification failure (hypothesis violations throw before
    /// a report exists and map to 2 at the CLI).
    int exit_code() const;
};

/// Executes the requested checks. Throws HypothesisError subclasses for
/// invalid relations and std::invalid_argument for usage problems.
RunReport run(const ProblemSpec& spec);

std::string report_to_json(const RunReport& report);
std::string report_pretty(const RunReport& report);

} // namespace lcsb2

#endif
