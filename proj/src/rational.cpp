#include "omni/rational.hpp"

#include <cctype>
#include <charconv>

namespace omni {

namespace {

long long parse_int(std::string_view text, std::string_view whole) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec == std::errc::result_out_of_range) {
    throw std::overflow_error("Rational: '" + std::string(whole) + "' exceeds 64-bit range");
  }
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("Rational: cannot parse '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("Rational: empty string");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const long long num = parse_int(text.substr(0, slash), text);
    const long long den = parse_int(text.substr(slash + 1), text);
    if (den <= 0) throw std::invalid_argument("Rational: denominator must be positive in '" + std::string(text) + "'");
    return {num, den};
  }

  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 18) {
      throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
    }
    const bool negative = text.front() == '-';
    std::string_view whole = text.substr(negative ? 1 : 0, dot - (negative ? 1 : 0));
    Rational r = whole.empty() ? Rational(0) : Rational(parse_int(whole, text));
    long long den = 1;
    for (char c : frac) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
      }
      den *= 10;
    }
    r += Rational(parse_int(frac, text), den);
    return negative ? -r : r;
  }

  return {parse_int(text, text), 1};
}

}  // namespace omni
