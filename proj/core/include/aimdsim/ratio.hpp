// Exact rational arithmetic used by the analytic formulas and the
// loss-probability calculus. Backed by boost::multiprecision, so values
// like 9/17 or 289/1024 stay exact through any chain of operations.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace aimdsim {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always held in reduced form with a
/// positive denominator.
using Ratio = boost::multiprecision::cpp_rational;

/// base^exp for non-negative integer exponents.
Ratio ratio_pow(const Ratio& base, unsigned exp);

/// Parses "9/17", "3", "0.53", "-1.5e-2" into an exact rational.
/// Decimal strings are read as exact base-10 values (0.7 -> 7/10), which is
/// what the CLI needs to report exact closed forms for human-entered inputs.
/// Throws std::invalid_argument on malformed input or zero denominator.
Ratio parse_ratio(std::string_view text);

/// Exact conversion: every finite double is a binary rational.
Ratio ratio_from_double(double value);

double ratio_to_double(const Ratio& value);

/// "9/17", or just "9" when the denominator is 1.
std::string ratio_to_string(const Ratio& value);

}  // namespace aimdsim
