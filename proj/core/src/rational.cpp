#include "lcsb2/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace lcsb2 {

namespace {

bool looks_like_rational(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = 0;
    auto digits = [&](std::size_t& pos) {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return pos > start;
    };
    if (s[i] == '-' || s[i] == '+') ++i;
    if (!digits(i)) return false;
    if (i == s.size()) return true;
    if (s[i] != '/') return false;
    ++i;
    if (s[i] == '-' || s[i] == '+') ++i;
    if (!digits(i)) return false;
    return i == s.size();
}

} // namespace

Rat parse_rational(const std::string& text) {
    if (!looks_like_rational(text))
        throw std::invalid_argument("not a rational literal: '" + text + "'");
    Rat value;
    if (value.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational literal: '" + text + "'");
    if (value.get_den() == 0)
        throw std::invalid_argument("zero denominator in '" + text + "'");
    value.canonicalize();
    return value;
}

std::string rational_to_string(const Rat& value) {
    return value.get_str();
}

} // namespace lcsb2
