#ifndef LCSB2_RATIONAL_HPP
#define LCSB2_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace lcsb2 {

// Exact coefficients everywhere; no floating point in the library.
using Rat = mpq_class;
using Int = mpz_class;

/// Parses "p/q" or "p" (base 10). Throws std::invalid_argument on garbage or
/// zero denominator.
Rat parse_rational(const std::string& text);

/// Canonical "p/q" form, "p" when the denominator is 1.
std::string rational_to_string(const Rat& value);

} // namespace lcsb2

#endif
