#include "lcsb2/pipeline.hpp"

#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <numeric>
#include <random>

#include "lcsb2/errors.hpp"
#include "lcsb2/forms.hpp"

namespace lcsb2 {

std::string check_name(Check c) {
    switch (c) {
    case Check::bruteforce: return "bruteforce";
    case Check::phi: return "phi";
    case Check::relmat: return "relmat";
    case Check::lemmas: return "lemmas";
    case Check::series: return "series";
    }
    return "?";
}

Check check_from_name(const std::string& name) {
    for (Check c : {Check::bruteforce, Check::phi, Check::relmat, Check::lemmas, Check::series})
        if (check_name(c) == name) return c;
    throw std::invalid_argument("unknown check '" + name + "'");
}

ProblemSpec problem_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    if (!j.is_object() || !j.contains("P"))
        throw std::invalid_argument("problem JSON must be an object with a \"P\" field");
    ProblemSpec spec;
    spec.P = ncpoly_from_json(j["P"].dump());
    if (j.contains("weights")) {
        auto w = j["weights"];
        if (!w.is_array() || w.size() != 2)
            throw std::invalid_argument("weights must be [s, r]");
        spec.weights = Grading(w[0].get<int>(), w[1].get<int>());
    }
    if (j.contains("max_degree")) spec.max_degree = j["max_degree"].get<long long>();
    if (j.contains("max_degree_limit")) spec.max_degree_limit = j["max_degree_limit"].get<long long>();
    if (j.contains("seed")) spec.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("checks"))
        for (const auto& c : j["checks"]) spec.checks.insert(check_from_name(c.get<std::string>()));
    return spec;
}

Grading infer_grading(const NcPoly& P) {
    if (P.is_zero()) throw std::invalid_argument("infer_grading requires nonzero P");
    std::vector<std::pair<int, int>> counts;
    for (const auto& [w, c] : P.terms()) counts.emplace_back(w.x_count(), w.y_count());
    const auto [c0, d0] = counts[0];
    long long s = 0, r = 0;
    for (const auto& [ci, di] : counts) {
        const long long dc = ci - c0, dd = di - d0;
        if (dc == 0 && dd == 0) continue;
        if (dc == 0 || dd == 0 || (dc > 0) == (dd > 0))
            throw NotQuasihomogeneousError("no positive weights make P homogeneous");
        const long long g = std::gcd(std::llabs(dc), std::llabs(dd));
        const long long cand_s = std::llabs(dd) / g, cand_r = std::llabs(dc) / g;
        if (s == 0) {
            s = cand_s;
            r = cand_r;
        } else if (s != cand_s || r != cand_r) {
            throw NotQuasihomogeneousError("no positive weights make P homogeneous");
        }
    }
    if (s == 0) return Grading(1, 1); // every word has the same letter counts
    Grading g(static_cast<int>(s), static_cast<int>(r));
    if (!P.homogeneous_degree(g))
        throw NotQuasihomogeneousError("no positive weights make P homogeneous");
    return g;
}

bool LemmaSummary::all_passed() const {
    return b2rels_pass == b2rels_total && bracketdep_pass == bracketdep_total &&
           star_assoc_pass == star_assoc_total && supercomm_pass == supercomm_total &&
           l3_nilpotent_pass == l3_nilpotent_total && psi_mult_pass == psi_mult_total &&
           psi0_ab_pass == psi0_ab_total;
}

int RunReport::exit_code() const {
    return (verdict == "ISOMORPHISM_VERIFIED" && all_requested_passed) ? 0 : 3;
}

namespace {

CPoly random_cpoly(std::mt19937_64& rng, int max_deg, int max_terms) {
    std::uniform_int_distribution<int> e(0, max_deg);
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<int> nterms(1, max_terms);
    CPoly p;
    const int k = nterms(rng);
    for (int t = 0; t < k; ++t) p.add_term(Mono{e(rng), e(rng)}, Rat(coef(rng)));
    return p;
}

EvenForm random_form(std::mt19937_64& rng) {
    return {random_cpoly(rng, 3, 3), random_cpoly(rng, 2, 2)};
}

Word random_word(std::mt19937_64& rng, int min_len, int max_len) {
    std::uniform_int_distribution<int> len_dist(min_len, max_len);
    const int len = len_dist(rng);
    std::uniform_int_distribution<std::uint32_t> bits(0, (1u << len) - 1);
    return Word{len ? bits(rng) : 0, static_cast<std::uint8_t>(len)};
}

LemmaSummary run_lemmas(const ProblemSpec& spec, const Grading& g, const ShapeParams& shape,
                        QuotientEngine& quotient, long long cap) {
    LemmaSummary sum;
    std::mt19937_64 rng(spec.seed ^ 0x9e3779b97f4a7c15ull);

    const long long rel_bound = std::min<long long>(8, cap);
    for (const RelCheckResult& r :
         check_b2rels(g, rel_bound, spec.lemma_instances, spec.seed)) {
        ++sum.b2rels_total;
        if (r.pass) ++sum.b2rels_pass;
    }

    // bracket dependencies at admissible (i, j) inside the degree cap
    std::vector<std::pair<long long, long long>> ij;
    for (long long i = 0; i * g.s + shape.d <= cap; ++i)
        for (long long j = (i == 0 ? 1 : 0); i * g.s + j * g.r + shape.d <= cap; ++j)
            ij.emplace_back(i, j);
    std::shuffle(ij.begin(), ij.end(), rng);
    if (static_cast<int>(ij.size()) > spec.bracketdep_instances)
        ij.resize(spec.bracketdep_instances);
    for (const auto& [i, j] : ij) {
        ++sum.bracketdep_total;
        if (check_bracketdep(quotient, shape, i, j).pass) ++sum.bracketdep_pass;
    }

    for (int t = 0; t < spec.property_instances; ++t) {
        EvenForm a = random_form(rng), b = random_form(rng), c = random_form(rng);
        ++sum.star_assoc_total;
        if (star(star(a, b), c) == star(a, star(b, c))) ++sum.star_assoc_pass;

        ++sum.supercomm_total;
        EvenForm comm = star(a, b);
        EvenForm ba = star(b, a);
        comm.f0 -= ba.f0;
        comm.f2 -= ba.f2;
        CPoly jac = partial(a.f0, Var::x) * partial(b.f0, Var::y) -
                    partial(a.f0, Var::y) * partial(b.f0, Var::x);
        if (comm.f0.is_zero() && comm.f2 == jac) ++sum.supercomm_pass;

        ++sum.l3_nilpotent_total;
        EvenForm bc = star(b, c);
        EvenForm cb = star(c, b);
        EvenForm inner{bc.f0 - cb.f0, bc.f2 - cb.f2};
        EvenForm left = star(a, inner);
        EvenForm right = star(inner, a);
        if (left.f0 == right.f0 && left.f2 == right.f2) ++sum.l3_nilpotent_pass;

        ++sum.psi_mult_total;
        NcPoly wp(random_word(rng, 1, 5));
        NcPoly wq(random_word(rng, 1, 5));
        EvenForm prod = psi(multiply(wp, wq));
        EvenForm starred = star(psi(wp), psi(wq));
        if (prod == starred) ++sum.psi_mult_pass;

        ++sum.psi0_ab_total;
        NcPoly wr(random_word(rng, 1, 10));
        if (psi(wr).f0 == abelianize(wr)) ++sum.psi0_ab_pass;
    }
    return sum;
}

} // namespace

RunReport run(const ProblemSpec& spec) {
    if (spec.P.is_zero())
        throw NotSquareFreeError("the zero polynomial is not square-free");
    if (spec.P.homogeneous_degree(Grading(1, 1)) == 0 && spec.P.term_count() == 1 &&
        spec.P.terms().begin()->first.empty())
        throw InvalidRelationError("constant relation: the quotient is the zero ring");

    const Grading g = spec.weights ? *spec.weights : infer_grading(spec.P);
    auto d = spec.P.homogeneous_degree(g);
    if (!d)
        throw NotQuasihomogeneousError("P is not homogeneous under weights (" +
                                       std::to_string(g.s) + ", " + std::to_string(g.r) + ")");
    if (*d == 0) throw InvalidRelationError("constant relation: the quotient is the zero ring");

    const CPoly p_ab = abelianize(spec.P);
    if (p_ab.is_zero())
        throw NotSquareFreeError("P_ab = 0: the zero polynomial is not square-free");
    if (!is_square_free(p_ab, g))
        throw NotSquareFreeError("P_ab is not square-free");
    const ShapeParams shape = shape_decompose(p_ab, g);

    long long N = spec.max_degree;
    if (N <= 0)
        N = (g.s == 1 && g.r == 1) ? 12 : 3LL * (g.s + g.r) * std::max(shape.n, 2);
    if (g.s == 1 && g.r == 1 && N > spec.max_degree_limit)
        throw std::invalid_argument(
            fmt::format("max degree {} exceeds the limit {} for s = r = 1 (raise --max-degree-limit)",
                        N, spec.max_degree_limit));

    std::set<Check> checks = spec.checks;
    if (checks.empty())
        checks = {Check::bruteforce, Check::phi, Check::relmat, Check::lemmas, Check::series};

    RunReport rep;
    rep.poly_json = ncpoly_to_json(spec.P);
    rep.grading = g;
    rep.d = *d;
    rep.shape = shape;
    rep.max_degree = N;
    rep.seed = spec.seed;
    rep.checks_run = checks;
    rep.hp_closed = closed_form_hp(g, *d, N);

    bool ok = true;

    B2Engine engine(g, spec.seed);
    QuotientEngine quotient(engine, spec.P);

    if (checks.count(Check::bruteforce)) {
        TruncatedSeries brute(N);
        for (long long m = 1; m <= N; ++m) {
            DegreeReport r = quotient.report(m);
            brute.at(m) = r.dim_B2;
            rep.degrees.push_back(r);
        }
        rep.hp_brute = brute;
        ok = ok && (brute == rep.hp_closed);
    }

    if (checks.count(Check::phi)) {
        for (long long m = 1; m <= N; ++m) {
            PhiDegree pd;
            pd.m = m;
            pd.phi_rank = phi_rank(spec.P, g, m);
            pd.omega2_dim = omega2_quotient_dim(p_ab, g, m);
            rep.phi.push_back(pd);
            ok = ok && pd.phi_rank == pd.omega2_dim &&
                 pd.omega2_dim == rep.hp_closed.at(m);
        }
    }

    if (checks.count(Check::relmat)) {
        TruncatedSeries bound(N);
        for (long long m = 0; m <= N; ++m) {
            BoundResult b = dim_bound(g, shape, m);
            bound.at(m) = b.bound;
            rep.bounds_certified = rep.bounds_certified && b.certified;
            if (b.used_certificate)
                rep.certificates.push_back(certify_max_rank(shape, g, m));
        }
        rep.hp_bound = bound;
        ok = ok && rep.bounds_certified && bound == rep.hp_closed;
        if (rep.hp_brute) ok = ok && leq(*rep.hp_brute, bound);
    }

    if (checks.count(Check::lemmas)) {
        rep.lemmas = run_lemmas(spec, g, shape, quotient, std::min<long long>(N, 10) + shape.d);
        ok = ok && rep.lemmas->all_passed();
    }

    if (checks.count(Check::series) && *d > std::max(g.s, g.r)) {
        // for d = max(s, r) the closed form is identically zero and the
        // regular-sequence expansion is outside its domain
        rep.hp_regseq = regular_sequence_hp(g, *d, N);
        ok = ok && (*rep.hp_regseq == rep.hp_closed);
    }

    rep.all_requested_passed = ok;
    const bool iso_checked = checks.count(Check::bruteforce) && checks.count(Check::phi);
    bool iso = iso_checked && rep.hp_brute == rep.hp_closed;
    if (iso)
        for (const PhiDegree& pd : rep.phi)
            iso = iso && pd.phi_rank == pd.omega2_dim &&
                  pd.phi_rank == rep.hp_brute->at(pd.m);
    rep.verdict = iso ? "ISOMORPHISM_VERIFIED" : (ok ? "CHECKS_PASSED" : "FAILED");
    return rep;
}

std::string report_to_json(const RunReport& rep) {
    nlohmann::ordered_json j;
    j["problem"] = {{"P", nlohmann::ordered_json::parse(rep.poly_json)},
                    {"weights", {rep.grading.s, rep.grading.r}},
                    {"max_degree", rep.max_degree},
                    {"seed", rep.seed}};
    {
        nlohmann::ordered_json checks = nlohmann::ordered_json::array();
        for (Check c : rep.checks_run) checks.push_back(check_name(c));
        j["problem"]["checks"] = checks;
    }
    j["degree_d"] = rep.d;
    nlohmann::ordered_json sh;
    sh["u"] = rep.shape.u;
    sh["v"] = rep.shape.v;
    sh["n"] = rep.shape.n;
    sh["d"] = rep.shape.d;
    sh["a"] = nlohmann::ordered_json::array();
    for (const Rat& c : rep.shape.a) sh["a"].push_back(rational_to_string(c));
    j["shape"] = sh;

    if (!rep.degrees.empty()) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const DegreeReport& r : rep.degrees) {
            arr.push_back({{"m", r.m},
                           {"dim_L2", r.dim_L2},
                           {"dim_L3", r.dim_L3},
                           {"dim_ideal", r.dim_ideal},
                           {"dim_L2_plus_ideal", r.dim_L2_plus_ideal},
                           {"dim_L3_plus_ideal", r.dim_L3_plus_ideal},
                           {"dim_B2", r.dim_B2}});
        }
        j["degree_reports"] = arr;
    }
    if (!rep.phi.empty()) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const PhiDegree& p : rep.phi)
            arr.push_back({{"m", p.m}, {"phi_rank", p.phi_rank}, {"omega2_dim", p.omega2_dim}});
        j["phi"] = arr;
    }
    if (!rep.certificates.empty()) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const RankCertificate& c : rep.certificates)
            arr.push_back(nlohmann::ordered_json::parse(certificate_to_json(c)));
        j["certificates"] = arr;
        j["bounds_certified"] = rep.bounds_certified;
    }
    if (rep.lemmas) {
        const LemmaSummary& s = *rep.lemmas;
        j["lemmas"] = {{"b2rels", {{"pass", s.b2rels_pass}, {"total", s.b2rels_total}}},
                       {"bracketdep", {{"pass", s.bracketdep_pass}, {"total", s.bracketdep_total}}},
                       {"star_assoc", {{"pass", s.star_assoc_pass}, {"total", s.star_assoc_total}}},
                       {"supercomm", {{"pass", s.supercomm_pass}, {"total", s.supercomm_total}}},
                       {"l3_nilpotent", {{"pass", s.l3_nilpotent_pass}, {"total", s.l3_nilpotent_total}}},
                       {"psi_mult", {{"pass", s.psi_mult_pass}, {"total", s.psi_mult_total}}},
                       {"psi0_ab", {{"pass", s.psi0_ab_pass}, {"total", s.psi0_ab_total}}}};
    }
    nlohmann::ordered_json series;
    series["closed_form"] = rep.hp_closed.coeffs;
    if (rep.hp_brute) series["bruteforce"] = rep.hp_brute->coeffs;
    if (rep.hp_bound) series["bound"] = rep.hp_bound->coeffs;
    if (rep.hp_regseq) series["regular_sequence"] = rep.hp_regseq->coeffs;
    j["series"] = series;
    j["verdict"] = rep.verdict;
    j["all_requested_passed"] = rep.all_requested_passed;
    return j.dump(2);
}

std::string report_pretty(const RunReport& rep) {
    std::string out;
    out += fmt::format("relation P = {}\n", rep.poly_json);
    out += fmt::format("weights (s, r) = ({}, {}), degree d = {}\n", rep.grading.s, rep.grading.r, rep.d);
    out += fmt::format("shape: u={} v={} n={}, HP closed form: {}\n", rep.shape.u, rep.shape.v,
                       rep.shape.n, rep.hp_closed.str());
    if (!rep.degrees.empty() || !rep.phi.empty()) {
        out += fmt::format("{:>4} {:>8} {:>8} {:>8} {:>10} {:>8}\n", "m", "dim B2", "closed", "phi",
                           "omega2", "status");
        for (long long m = 1; m <= rep.max_degree; ++m) {
            const DegreeReport* dr = nullptr;
            for (const DegreeReport& r : rep.degrees)
                if (r.m == m) dr = &r;
            const PhiDegree* pd = nullptr;
            for (const PhiDegree& p : rep.phi)
                if (p.m == m) pd = &p;
            const long long closed = rep.hp_closed.at(m);
            bool okm = (!dr || dr->dim_B2 == closed) && (!pd || (pd->phi_rank == pd->omega2_dim &&
                                                                pd->omega2_dim == closed));
            out += fmt::format("{:>4} {:>8} {:>8} {:>8} {:>10} {:>8}\n", m,
                               dr ? std::to_string(dr->dim_B2) : "-", closed,
                               pd ? std::to_string(pd->phi_rank) : "-",
                               pd ? std::to_string(pd->omega2_dim) : "-", okm ? "ok" : "FAIL");
        }
    }
    if (!rep.certificates.empty()) {
        int certified = 0;
        for (const RankCertificate& c : rep.certificates)
            if (c.ok) ++certified;
        out += fmt::format("rank certificates: {}/{} certified\n", certified, rep.certificates.size());
    }
    if (rep.hp_bound) out += fmt::format("bound series:  {}\n", rep.hp_bound->str());
    if (rep.hp_brute) out += fmt::format("brute series:  {}\n", rep.hp_brute->str());
    if (rep.hp_regseq) out += fmt::format("regseq series: {}\n", rep.hp_regseq->str());
    out += fmt::format("closed series: {}\n", rep.hp_closed.str());
    if (rep.lemmas) {
        const LemmaSummary& s = *rep.lemmas;
        out += fmt::format(
            "lemma checks: b2rels {}/{}, bracketdep {}/{}, star-assoc {}/{}, supercomm {}/{}, "
            "L3-nilpotent {}/{}, psi-mult {}/{}, psi0=ab {}/{}\n",
            s.b2rels_pass, s.b2rels_total, s.bracketdep_pass, s.bracketdep_total, s.star_assoc_pass,
            s.star_assoc_total, s.supercomm_pass, s.supercomm_total, s.l3_nilpotent_pass,
            s.l3_nilpotent_total, s.psi_mult_pass, s.psi_mult_total, s.psi0_ab_pass, s.psi0_ab_total);
    }
    out += fmt::format("verdict: {}\n", rep.verdict);
    return out;
}

} // namespace lcsb2
