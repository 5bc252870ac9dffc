#include "lcsb2/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcsb2 {

Word Word::parse(const std::string& letters) {
    if (letters.size() > static_cast<std::size_t>(max_len))
        throw std::invalid_argument("word too long: " + letters);
    Word w;
    for (char c : letters) {
        std::uint32_t bit;
        if (c == 'x' || c == 'X')
            bit = 0;
        else if (c == 'y' || c == 'Y')
            bit = 1;
        else
            throw std::invalid_argument("invalid letter '" + std::string(1, c) + "' in word");
        w.bits = (w.bits << 1) | bit;
        ++w.len;
    }
    return w;
}

Word Word::concat(const Word& rhs) const {
    if (len + rhs.len > max_len)
        throw std::length_error("word concatenation exceeds the supported length");
    return {(bits << rhs.len) | rhs.bits, static_cast<std::uint8_t>(len + rhs.len)};
}

Word Word::rotated_left(int k) const {
    if (len == 0) return *this;
    k %= len;
    if (k == 0) return *this;
    std::uint32_t head = bits >> (len - k);                 // first k letters
    std::uint32_t tail = bits & ((1u << (len - k)) - 1u);   // remaining letters
    return {(tail << k) | head, len};
}

std::string Word::str() const {
    std::string out;
    out.reserve(len);
    for (int i = 0; i < len; ++i) out.push_back(letter(i) ? 'y' : 'x');
    return out;
}

std::vector<Word> enumerate_words(const Grading& g, long long m) {
    std::vector<Word> out;
    if (m < 0) return out;
    if (m == 0) {
        out.push_back(Word::unit());
        return out;
    }
    // Letter counts (cx, cy) with s*cx + r*cy = m, grouped by length cx+cy.
    // Distinct solutions share a length only when s = r = 1, so enumerating
    // lengths in increasing order and bit patterns in increasing numeric order
    // yields shortlex.
    std::vector<std::pair<int, int>> counts; // (length, cy)
    for (long long cy = 0; cy * g.r <= m; ++cy) {
        long long rest = m - cy * g.r;
        if (rest % g.s != 0) continue;
        long long cx = rest / g.s;
        if (cx + cy > Word::max_len)
            throw std::length_error("degree too large for the packed word representation");
        counts.emplace_back(static_cast<int>(cx + cy), static_cast<int>(cy));
    }
    std::sort(counts.begin(), counts.end());
    std::size_t i = 0;
    while (i < counts.size()) {
        int len = counts[i].first;
        std::uint32_t allowed = 0; // bitmask over popcounts sharing this length
        std::size_t j = i;
        while (j < counts.size() && counts[j].first == len) {
            allowed |= 1u << counts[j].second;
            ++j;
        }
        std::uint64_t top = 1ull << len;
        for (std::uint64_t v = 0; v < top; ++v) {
            if (allowed & (1u << __builtin_popcountll(v)))
                out.push_back(Word{static_cast<std::uint32_t>(v), static_cast<std::uint8_t>(len)});
        }
        i = j;
    }
    return out;
}

} // namespace lcsb2
