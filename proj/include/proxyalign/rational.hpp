#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace proxyalign {

/// Exact arithmetic for bound estimates and aggregates.
using Rational = boost::rational<std::int64_t>;

/// "7", "7/2".
std::string to_string(const Rational& value);

/// Decimal rendering when the expansion terminates within 12 digits,
/// otherwise "p/q".
std::string to_decimal_string(const Rational& value);

/// Accepts "3", "-3", "7/2", "0.25", "12.5".
Rational parse_rational(std::string_view text);

double to_double(const Rational& value);

}  // namespace proxyalign
