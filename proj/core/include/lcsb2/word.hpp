#ifndef LCSB2_WORD_HPP
#define LCSB2_WORD_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "lcsb2/grading.hpp"

namespace lcsb2 {

/// A word over {x, y}, at most 31 letters, packed into a machine word.
/// Letter i (counting from the left) lives in bit (len-1-i): 0 = x, 1 = y.
/// Tuple comparison on (len, bits) is exactly shortlex with x < y, the
/// canonical monomial order used for all row/column labelings.
struct Word {
    std::uint32_t bits = 0;
    std::uint8_t len = 0;

    static constexpr int max_len = 31;

    Word() = default;
    Word(std::uint32_t bits_, std::uint8_t len_) : bits(bits_), len(len_) {}

    static Word unit() { return {}; }
    static Word x() { return {0u, 1}; }
    static Word y() { return {1u, 1}; }

    /// Builds from a string over "xy"; "" is the unit.
    static Word parse(const std::string& letters);

    bool empty() const { return len == 0; }
    int length() const { return len; }

    /// 0 = x, 1 = y.
    int letter(int i) const { return (bits >> (len - 1 - i)) & 1u; }
    int y_count() const { return __builtin_popcount(bits); }
    int x_count() const { return len - y_count(); }
    long long degree(const Grading& g) const {
        return static_cast<long long>(g.s) * x_count() + static_cast<long long>(g.r) * y_count();
    }

    Word concat(const Word& rhs) const;
    /// Moves the first k letters to the back.
    Word rotated_left(int k) const;

    std::string str() const;

    friend auto operator<=>(const Word& a, const Word& b) {
        if (a.len != b.len) return a.len <=> b.len;
        return a.bits <=> b.bits;
    }
    friend bool operator==(const Word&, const Word&) = default;
};

/// All words of weighted degree exactly m, in shortlex order. Empty when no
/// word has that degree; the unit word is the sole word of degree 0.
std::vector<Word> enumerate_words(const Grading& g, long long m);

} // namespace lcsb2

#endif
