#include "lcsb2/series.hpp"

#include <sstream>
#include <stdexcept>

namespace lcsb2 {

std::string TruncatedSeries::str() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t m = 0; m < coeffs.size(); ++m) {
        if (coeffs[m] == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (coeffs[m] != 1 || m == 0) out << coeffs[m];
        if (m > 0) {
            if (coeffs[m] != 1) out << "*";
            out << "t";
            if (m > 1) out << "^" << m;
        }
    }
    if (first) out << "0";
    return out.str();
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("mismatched truncation orders");
    TruncatedSeries out(a.order());
    for (long long i = 0; i <= a.order(); ++i) {
        if (a.at(i) == 0) continue;
        for (long long j = 0; i + j <= a.order(); ++j)
            out.at(i + j) += a.at(i) * b.at(j);
    }
    return out;
}

namespace {

// 1 / (1 - t^k) up to order N
TruncatedSeries geometric(long long k, long long N) {
    TruncatedSeries out(N);
    for (long long m = 0; m <= N; m += k) out.at(m) = 1;
    return out;
}

TruncatedSeries monomial_diff(long long lo, long long hi, long long N) {
    // t^lo - t^hi
    TruncatedSeries out(N);
    if (lo <= N) out.at(lo) += 1;
    if (hi <= N) out.at(hi) -= 1;
    return out;
}

} // namespace

TruncatedSeries closed_form_hp(const Grading& g, long long d, long long N) {
    if (d < std::max(g.s, g.r)) throw std::invalid_argument("closed_form_hp needs d >= max(s, r)");
    if (N < 0) throw std::invalid_argument("negative truncation order");
    TruncatedSeries num = mul(monomial_diff(g.s, d, N), monomial_diff(g.r, d, N));
    return mul(mul(num, geometric(g.s, N)), geometric(g.r, N));
}

TruncatedSeries regular_sequence_hp(const Grading& g, long long d, long long N) {
    if (d <= std::max(g.s, g.r)) throw std::invalid_argument("regular_sequence_hp needs d > max(s, r)");
    if (N < 0) throw std::invalid_argument("negative truncation order");
    TruncatedSeries num = mul(monomial_diff(0, d - g.s, N), monomial_diff(0, d - g.r, N));
    TruncatedSeries shift(N);
    if (g.s + g.r <= N) shift.at(g.s + g.r) = 1;
    num = mul(num, shift);
    return mul(mul(num, geometric(g.s, N)), geometric(g.r, N));
}

bool leq(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (f.order() != g.order()) throw std::invalid_argument("mismatched truncation orders");
    for (std::size_t m = 0; m < f.coeffs.size(); ++m)
        if (f.coeffs[m] > g.coeffs[m]) return false;
    return true;
}

} // namespace lcsb2
