#include <doctest.h>

#include <random>

#include "lcsb2/cpoly.hpp"
#include "lcsb2/errors.hpp"
#include "lcsb2/series.hpp"
#include "lcsb2/shape.hpp"
#include "oracles.hpp"

using namespace lcsb2;

namespace {

CPoly from_json(const char* text) { return cpoly_from_json(text); }

NcPoly random_ncpoly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> len(0, 4), coef(-3, 3), nterms(1, 3);
    NcPoly p;
    const int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        const int L = len(rng);
        std::uniform_int_distribution<std::uint32_t> bits(0, (1u << L) - 1);
        p.add_term(Word{L ? bits(rng) : 0, static_cast<std::uint8_t>(L)}, Rat(coef(rng)));
    }
    return p;
}

/// Random shape with square-free h; reconstructs P_ab on the (r,s) grid.
ShapeParams random_shape(std::mt19937_64& rng, int max_n, int allow_uv = 1) {
    std::uniform_int_distribution<int> uv(0, allow_uv), nd(0, max_n), coef(-4, 4), lead(1, 4);
    ShapeParams sp;
    while (true) {
        sp.u = uv(rng);
        sp.v = uv(rng);
        sp.n = nd(rng);
        sp.a.assign(sp.n + 1, Rat(0));
        sp.a[0] = Rat(lead(rng));
        if (sp.n > 0) {
            sp.a[sp.n] = Rat(lead(rng));
            for (int k = 1; k < sp.n; ++k) sp.a[k] = Rat(coef(rng));
        }
        if (sp.n == 0 && sp.u == 0 && sp.v == 0) continue; // constant
        if (sp.n == 0 || oracles::square_free_by_gcd(sp.a)) return sp;
    }
}

} // namespace

TEST_CASE("abelianize examples") {
    CHECK(abelianize(commutator(NcPoly::x(), NcPoly::y())).is_zero());
    CHECK(abelianize(NcPoly(Word::parse("xyx")) + NcPoly(Word::parse("yyy"))) ==
          from_json(R"({"x^2 y^1":"1","y^3":"1"})"));
    CHECK(abelianize(NcPoly(Word::parse("xy")) + NcPoly(Word::parse("yx"))) ==
          from_json(R"({"x^1 y^1":"2"})"));
}

TEST_CASE("abelianize is a ring homomorphism") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 40; ++t) {
        NcPoly a = random_ncpoly(rng), b = random_ncpoly(rng);
        CHECK(abelianize(multiply(a, b)) == abelianize(a) * abelianize(b));
        CHECK(abelianize(a + b) == abelianize(a) + abelianize(b));
    }
}

TEST_CASE("partial derivatives") {
    CPoly p = from_json(R"({"x^3":"1","y^2":"1"})");
    CHECK(partial(p, Var::x) == from_json(R"({"x^2":"3"})"));
    CHECK(partial(p, Var::y) == from_json(R"({"y^1":"2"})"));
    CHECK(partial(from_json(R"({"x^2 y^1":"1"})"), Var::x) == from_json(R"({"x^1 y^1":"2"})"));
}

TEST_CASE("euler_check") {
    CHECK(euler_check(from_json(R"({"x^3":"1","y^2":"1"})"), Grading(2, 3), 6));
    CHECK(euler_check(from_json(R"({"x^2":"1","y^2":"-1"})"), Grading(1, 1), 2));
    CHECK_FALSE(euler_check(from_json(R"({"x^1":"1","y^2":"1"})"), Grading(1, 1), 2));
    CHECK_FALSE(euler_check(from_json(R"({"x^3":"1","y^2":"1"})"), Grading(2, 3), 7));
    CHECK_THROWS_AS(euler_check(CPoly(), Grading(1, 1), 1), std::invalid_argument);
}

TEST_CASE("shape_decompose examples") {
    ShapeParams s1 = shape_decompose(from_json(R"({"x^3":"1","y^2":"1"})"), Grading(2, 3));
    CHECK(s1.u == 0);
    CHECK(s1.v == 0);
    CHECK(s1.n == 1);
    CHECK(s1.d == 6);
    CHECK(s1.a == std::vector<Rat>{Rat(1), Rat(1)});

    ShapeParams s2 = shape_decompose(from_json(R"({"x^2 y^1":"1","y^3":"1"})"), Grading(1, 1));
    CHECK(s2.u == 0);
    CHECK(s2.v == 1);
    CHECK(s2.n == 2);
    CHECK(s2.d == 3);
    CHECK(s2.a == std::vector<Rat>{Rat(1), Rat(0), Rat(1)});

    CHECK_THROWS_AS(shape_decompose(from_json(R"({"x^2 y^3":"1"})"), Grading(1, 1)),
                    SquarePartError);
    CHECK_THROWS_AS(shape_decompose(CPoly(), Grading(1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(shape_decompose(from_json(R"({"1":"3"})"), Grading(1, 1)),
                    std::invalid_argument);
}

TEST_CASE("shape round trip reproduces the input") {
    std::mt19937_64 rng(29);
    for (const Grading& g : {Grading(1, 1), Grading(2, 3), Grading(3, 5)}) {
        for (int t = 0; t < 25; ++t) {
            ShapeParams sp = random_shape(rng, 4);
            sp.d = sp.u * g.s + sp.v * g.r + static_cast<long long>(sp.n) * g.r * g.s;
            CPoly p = sp.reconstruct(g);
            ShapeParams back = shape_decompose(p, g);
            CHECK(back.u == sp.u);
            CHECK(back.v == sp.v);
            CHECK(back.n == sp.n);
            CHECK(back.d == sp.d);
            CHECK(back.a == sp.a);
            CHECK(back.reconstruct(g) == p);
        }
    }
}

TEST_CASE("sylvester examples") {
    ExactMatrix s = sylvester({Rat(1), Rat(0), Rat(-1)}, {Rat(2), Rat(0)});
    CHECK(s == ExactMatrix::from_rows({{Rat(1), Rat(0), Rat(-1)},
                                       {Rat(2), Rat(0), Rat(0)},
                                       {Rat(0), Rat(2), Rat(0)}}));
    CHECK_THROWS_AS(sylvester({}, {Rat(1)}), std::invalid_argument);
    CHECK_THROWS_AS(sylvester({Rat(0), Rat(1)}, {Rat(1)}), std::invalid_argument);
}

TEST_CASE("resultant examples") {
    CHECK(resultant({Rat(1), Rat(0), Rat(-1)}, {Rat(2), Rat(0)}) == -4);
    CHECK(resultant({Rat(1), Rat(-1)}, {Rat(1), Rat(1)}) == 2);
    CHECK(resultant({Rat(1), Rat(-2), Rat(1)}, {Rat(2), Rat(-2)}) == 0);
    // Res(x - alpha, x - beta) = alpha - beta
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int t = 0; t < 15; ++t) {
        Rat alpha(coef(rng)), beta(coef(rng));
        CHECK(resultant({Rat(1), -alpha}, {Rat(1), -beta}) == alpha - beta);
    }
}

TEST_CASE("is_square_free examples") {
    CHECK(is_square_free(from_json(R"({"x^2":"1","y^2":"-1"})"), Grading(1, 1)));
    CHECK_FALSE(is_square_free(from_json(R"({"x^2 y^1":"1"})"), Grading(1, 1)));
    CHECK_FALSE(
        is_square_free(from_json(R"({"x^2":"1","x^1 y^1":"-2","y^2":"1"})"), Grading(1, 1)));
    CHECK(is_square_free(from_json(R"({"x^1 y^1":"2"})"), Grading(1, 1)));
}

TEST_CASE("is_square_free agrees with a gcd oracle on random shapes") {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<int> uv(0, 1), nd(1, 6), coef(-4, 4), lead(1, 4);
    for (const Grading& g : {Grading(1, 1), Grading(2, 3)}) {
        for (int t = 0; t < 60; ++t) {
            ShapeParams sp;
            sp.u = uv(rng);
            sp.v = uv(rng);
            sp.n = nd(rng);
            sp.a.assign(sp.n + 1, Rat(0));
            sp.a[0] = Rat(lead(rng));
            sp.a[sp.n] = Rat(lead(rng));
            for (int k = 1; k < sp.n; ++k) sp.a[k] = Rat(coef(rng));
            CPoly p = sp.reconstruct(g);
            CHECK(is_square_free(p, g) == oracles::square_free_by_gcd(sp.a));
        }
    }
}

TEST_CASE("omega2_quotient_dim examples") {
    CPoly cusp = from_json(R"({"x^3":"1","y^2":"1"})");
    Grading g23(2, 3);
    for (long long m = 1; m <= 20; ++m) {
        long long expect = (m == 5 || m == 7) ? 1 : 0;
        CHECK(omega2_quotient_dim(cusp, g23, m) == expect);
    }
    CPoly cone = from_json(R"({"x^2":"1","y^2":"-1"})");
    Grading g11(1, 1);
    for (long long m = 1; m <= 12; ++m)
        CHECK(omega2_quotient_dim(cone, g11, m) == (m == 2 ? 1 : 0));
    CHECK(omega2_quotient_dim(cone, g11, g11.s + g11.r - 1) == 0);
}

TEST_CASE("omega2 dimensions sum to the regular-sequence series") {
    std::mt19937_64 rng(41);
    for (const Grading& g : {Grading(1, 1), Grading(2, 3)}) {
        for (int t = 0; t < 10; ++t) {
            ShapeParams sp = random_shape(rng, 3);
            sp.d = sp.u * g.s + sp.v * g.r + static_cast<long long>(sp.n) * g.r * g.s;
            if (sp.d <= std::max(g.s, g.r)) continue;
            CPoly p = sp.reconstruct(g);
            const long long N = 24;
            TruncatedSeries sum(N);
            for (long long m = 0; m <= N; ++m) sum.at(m) = omega2_quotient_dim(p, g, m);
            CHECK(sum == regular_sequence_hp(g, sp.d, N));
            CHECK(sum == closed_form_hp(g, sp.d, N));
        }
    }
}

TEST_CASE("CPoly JSON round trip") {
    CPoly p = from_json(R"({"1":"-1/3","x^2":"1","x^1 y^3":"5"})");
    CHECK(cpoly_from_json(cpoly_to_json(p)) == p);
    CHECK(mono_str(Mono{0, 0}) == "1");
    CHECK(mono_str(Mono{2, 1}) == "x^2 y^1");
    CHECK(mono_parse("x") == Mono{1, 0});
    CHECK(mono_parse("x^2 y^7") == Mono{2, 7});
    CHECK_THROWS_AS(mono_parse("z^2"), std::invalid_argument);
    CHECK_THROWS_AS(cpoly_from_json(R"({"x^2":"nope"})"), std::invalid_argument);
}
