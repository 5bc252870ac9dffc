#include <doctest.h>

#include "lcsb2/errors.hpp"
#include "lcsb2/pipeline.hpp"

using namespace lcsb2;

namespace {

NcPoly nc(const char* json) { return ncpoly_from_json(json); }

} // namespace

TEST_CASE("infer_grading examples") {
    Grading g1 = infer_grading(nc(R"({"xxx":"1","yy":"1"})"));
    CHECK(g1.s == 2);
    CHECK(g1.r == 3);

    Grading g2 = infer_grading(nc(R"({"xy":"1","yx":"1"})"));
    CHECK(g2.s == 1);
    CHECK(g2.r == 1);

    Grading g3 = infer_grading(nc(R"({"x":"1","yy":"1"})"));
    CHECK(g3.s == 2);
    CHECK(g3.r == 1);

    CHECK_THROWS_AS(infer_grading(nc(R"({"x":"1","xx":"1"})")), NotQuasihomogeneousError);
    CHECK_THROWS_AS(infer_grading(nc(R"({"x":"1","y":"1","xx":"1"})")), NotQuasihomogeneousError);
}

TEST_CASE("run: quick full pipeline on xy + yx") {
    ProblemSpec spec;
    spec.P = nc(R"({"xy":"1","yx":"1"})");
    spec.max_degree = 6;
    RunReport rep = run(spec);
    CHECK(rep.verdict == "ISOMORPHISM_VERIFIED");
    CHECK(rep.all_requested_passed);
    CHECK(rep.exit_code() == 0);
    CHECK(rep.hp_brute == rep.hp_closed);
    CHECK(rep.hp_bound == rep.hp_closed);
    CHECK(rep.hp_regseq == rep.hp_closed);
    REQUIRE(rep.lemmas.has_value());
    CHECK(rep.lemmas->all_passed());
}

TEST_CASE("run: hypothesis violations") {
    ProblemSpec square;
    square.P = nc(R"({"xxy":"1"})");
    CHECK_THROWS_AS(run(square), NotSquareFreeError);

    ProblemSpec zero_ab;
    zero_ab.P = nc(R"({"xy":"1","yx":"-1"})");
    CHECK_THROWS_AS(run(zero_ab), NotSquareFreeError);

    ProblemSpec zero;
    CHECK_THROWS_AS(run(zero), NotSquareFreeError);

    ProblemSpec constant;
    constant.P = nc(R"({"":"5"})");
    CHECK_THROWS_AS(run(constant), InvalidRelationError);

    ProblemSpec inhom;
    inhom.P = nc(R"({"x":"1","yy":"1","y":"1"})");
    CHECK_THROWS_AS(run(inhom), NotQuasihomogeneousError);

    ProblemSpec badweights;
    badweights.P = nc(R"({"xxx":"1","yy":"1"})");
    badweights.weights = Grading(1, 1);
    CHECK_THROWS_AS(run(badweights), NotQuasihomogeneousError);
}

TEST_CASE("run: single-letter relations, where the closed form vanishes") {
    // d = max(s, r): the quotient is a polynomial ring in the other letter
    for (const char* text : {R"({"x":"1"})", R"({"y":"2"})"}) {
        ProblemSpec spec;
        spec.P = nc(text);
        spec.max_degree = 6;
        RunReport rep = run(spec);
        CHECK(rep.verdict == "ISOMORPHISM_VERIFIED");
        CHECK(rep.exit_code() == 0);
        for (long long c : rep.hp_closed.coeffs) CHECK(c == 0);
        CHECK_FALSE(rep.hp_regseq.has_value()); // expansion undefined at d = max(s, r)
    }
}

TEST_CASE("run: the s = r = 1 degree cap is enforced") {
    ProblemSpec spec;
    spec.P = nc(R"({"xy":"1","yx":"1"})");
    spec.max_degree = 20;
    CHECK_THROWS_AS(run(spec), std::invalid_argument);
    spec.max_degree_limit = 20;
    spec.max_degree = 15;
    spec.checks = {Check::series};
    CHECK_NOTHROW(run(spec));
}

TEST_CASE("run: subset of checks cannot claim the isomorphism") {
    ProblemSpec spec;
    spec.P = nc(R"({"xxx":"1","yy":"1"})");
    spec.checks = {Check::series};
    RunReport rep = run(spec);
    CHECK(rep.verdict == "CHECKS_PASSED");
    CHECK(rep.all_requested_passed);
    CHECK(rep.exit_code() == 3);
}

TEST_CASE("reports are byte-identical for a fixed seed") {
    ProblemSpec spec;
    spec.P = nc(R"({"xxx":"1","yy":"1"})");
    spec.max_degree = 14;
    spec.seed = 12345;
    std::string a = report_to_json(run(spec));
    std::string b = report_to_json(run(spec));
    CHECK(a == b);
    CHECK(a.find("\"verdict\": \"ISOMORPHISM_VERIFIED\"") != std::string::npos);
}

TEST_CASE("problem JSON parsing") {
    ProblemSpec spec = problem_from_json(
        R"({"P": {"xxx":"1","yy":"1"}, "weights": [2,3], "max_degree": 10,
            "checks": ["series","phi"], "seed": 99})");
    CHECK(spec.P == nc(R"({"xxx":"1","yy":"1"})"));
    REQUIRE(spec.weights.has_value());
    CHECK(spec.weights->s == 2);
    CHECK(spec.max_degree == 10);
    CHECK(spec.seed == 99);
    CHECK(spec.checks == std::set<Check>{Check::series, Check::phi});
    CHECK_THROWS_AS(problem_from_json(R"({"weights": [1,1]})"), std::invalid_argument);
    CHECK_THROWS_AS(problem_from_json(R"({"P": {}, "checks": ["nope"]})"), std::invalid_argument);
}
