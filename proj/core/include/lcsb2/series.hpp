#ifndef LCSB2_SERIES_HPP
#define LCSB2_SERIES_HPP

#include <string>
#include <vector>

#include "lcsb2/grading.hpp"

namespace lcsb2 {

/// Integer power series truncated at order N: coeffs[m] is the t^m
/// coefficient, 0 <= m <= N.
struct TruncatedSeries {
    std::vector<long long> coeffs; // size N+1

    explicit TruncatedSeries(long long N = 0) : coeffs(static_cast<std::size_t>(N) + 1, 0) {}

    long long order() const { return static_cast<long long>(coeffs.size()) - 1; }
    long long at(long long m) const { return coeffs[static_cast<std::size_t>(m)]; }
    long long& at(long long m) { return coeffs[static_cast<std::size_t>(m)]; }

    bool operator==(const TruncatedSeries&) const = default;
    std::string str() const;
};

/// Product truncated at the common order.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// (t^s - t^d)(t^r - t^d) / ((1 - t^s)(1 - t^r)) up to order N.
TruncatedSeries closed_form_hp(const Grading& g, long long d, long long N);

/// (1 - t^(d-s))(1 - t^(d-r)) / ((1 - t^s)(1 - t^r)) * t^s t^r up to order N;
/// algebraically identical to closed_form_hp.
TruncatedSeries regular_sequence_hp(const Grading& g, long long d, long long N);

/// Coefficientwise f <= g; throws on mismatched truncation orders.
bool leq(const TruncatedSeries& f, const TruncatedSeries& g);

} // namespace lcsb2

#endif
