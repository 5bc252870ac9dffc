#include <doctest.h>

#include <numeric>
#include <random>
#include <tuple>
#include <vector>

#include "lcsb2/series.hpp"

using namespace lcsb2;

namespace {

TruncatedSeries monomial(long long m, long long N) {
    TruncatedSeries s(N);
    if (m <= N) s.at(m) = 1;
    return s;
}

} // namespace

TEST_CASE("closed_form_hp examples") {
    CHECK(closed_form_hp(Grading(1, 1), 2, 10) == monomial(2, 10));
    TruncatedSeries cusp = closed_form_hp(Grading(2, 3), 6, 20);
    TruncatedSeries expect(20);
    expect.at(5) = 1;
    expect.at(7) = 1;
    CHECK(cusp == expect);
    TruncatedSeries cubic = closed_form_hp(Grading(1, 1), 3, 10);
    TruncatedSeries expect3(10);
    expect3.at(2) = 1;
    expect3.at(3) = 2;
    expect3.at(4) = 1;
    CHECK(cubic == expect3);
}

TEST_CASE("regular_sequence_hp examples and identity") {
    TruncatedSeries a = regular_sequence_hp(Grading(2, 3), 6, 20);
    TruncatedSeries expect(20);
    expect.at(5) = 1;
    expect.at(7) = 1;
    CHECK(a == expect);
    CHECK(regular_sequence_hp(Grading(1, 1), 2, 10) == monomial(2, 10));

    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> sd(1, 5), nd(0, 5), uv(0, 1);
    for (int t = 0; t < 40; ++t) {
        int s = sd(rng), r = sd(rng);
        if (std::gcd(s, r) != 1) continue;
        long long d = static_cast<long long>(uv(rng)) * s + static_cast<long long>(uv(rng)) * r +
                      static_cast<long long>(nd(rng)) * r * s;
        if (d <= std::max(s, r)) continue;
        Grading g(s, r);
        CHECK(regular_sequence_hp(g, d, 40) == closed_form_hp(g, d, 40));
    }
}

TEST_CASE("closed form has nonnegative coefficients for valid shapes") {
    for (int s = 1; s <= 4; ++s)
        for (int r = 1; r <= 4; ++r) {
            if (std::gcd(s, r) != 1) continue;
            for (int n = 0; n <= 4; ++n)
                for (int u = 0; u <= 1; ++u)
                    for (int v = 0; v <= 1; ++v) {
                        long long d = u * s + v * r + static_cast<long long>(n) * r * s;
                        if (d < std::max(s, r)) continue;
                        for (long long c : closed_form_hp(Grading(s, r), d, 30).coeffs)
                            CHECK(c >= 0);
                    }
        }
}

TEST_CASE("multiplying back by the denominators recovers the numerator") {
    const std::vector<std::tuple<int, int, long long>> cases{{1, 1, 3}, {2, 3, 6}, {3, 4, 24}};
    for (auto [s, r, d] : cases) {
        Grading g(s, r);
        const long long N = 30;
        TruncatedSeries f = closed_form_hp(g, d, N);
        TruncatedSeries den_s(N), den_r(N), num(N);
        den_s.at(0) = 1;
        if (s <= N) den_s.at(s) -= 1;
        den_r.at(0) = 1;
        if (r <= N) den_r.at(r) -= 1;
        if (s <= N) num.at(s) += 1;
        if (d <= N) num.at(d) -= 1;
        TruncatedSeries num2(N);
        if (r <= N) num2.at(r) += 1;
        if (d <= N) num2.at(d) -= 1;
        CHECK(mul(mul(f, den_s), den_r) == mul(num, num2));
    }
}

TEST_CASE("leq") {
    TruncatedSeries f(10), g(10);
    f.at(2) = 1;
    g.at(2) = 1;
    g.at(3) = 1;
    CHECK(leq(f, g));
    CHECK_FALSE(leq(g, f));
    CHECK(leq(f, f));
    TruncatedSeries h(8);
    CHECK_THROWS_AS(leq(f, h), std::invalid_argument);
}
