#include "proxyalign/rational.hpp"

#include <charconv>
#include <cstdlib>

#include "proxyalign/error.hpp"

namespace proxyalign {
namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw InvalidArgument("not a number: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

std::string to_string(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

std::string to_decimal_string(const Rational& value) {
  std::int64_t den = value.denominator();
  if (den == 1) return std::to_string(value.numerator());
  std::int64_t d = den;
  while (d % 2 == 0) d /= 2;
  while (d % 5 == 0) d /= 5;
  if (d != 1) return to_string(value);

  const bool negative = value.numerator() < 0;
  const std::int64_t num = negative ? -value.numerator() : value.numerator();
  std::string out = (negative ? "-" : "") + std::to_string(num / den) + ".";
  std::int64_t rem = num % den;
  for (int digits = 0; rem != 0; ++digits) {
    if (digits == 12) return to_string(value);
    rem *= 10;
    out += static_cast<char>('0' + rem / den);
    rem %= den;
  }
  return out;
}

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = parse_int(text.substr(0, slash), text);
    const auto den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw InvalidArgument("zero denominator: '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    if (frac.size() > 15) throw InvalidArgument("too many decimals: '" + std::string(text) + "'");
    const bool negative = !whole.empty() && whole.front() == '-';
    const std::int64_t int_part =
        (whole.empty() || whole == "-") ? 0 : parse_int(whole, text);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::int64_t frac_part = frac.empty() ? 0 : parse_int(frac, text);
    if (frac_part < 0) throw InvalidArgument("not a number: '" + std::string(text) + "'");
    const std::int64_t magnitude = (negative ? -int_part : int_part) * scale + frac_part;
    return Rational(negative ? -magnitude : magnitude, scale);
  }
  return Rational(parse_int(text, text));
}

double to_double(const Rational& value) {
  return static_cast<double>(value.numerator()) / static_cast<double>(value.denominator());
}

}  // namespace proxyalign
