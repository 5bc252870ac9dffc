#ifndef LCSB2_GRADING_HPP
#define LCSB2_GRADING_HPP

#include <numeric>
#include <stdexcept>

namespace lcsb2 {

/// Positive coprime weights: x carries weight s, y carries weight r.
struct Grading {
    int s = 1;
    int r = 1;

    Grading() = default;
    Grading(int s_, int r_) : s(s_), r(r_) {
        if (s < 1 || r < 1)
            throw std::invalid_argument("weights must be positive");
        if (std::gcd(s, r) != 1)
            throw std::invalid_argument("weights must be coprime");
    }

    bool operator==(const Grading&) const = default;
};

} // namespace lcsb2

#endif
