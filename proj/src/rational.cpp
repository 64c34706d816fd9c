#include "gik/rational.hpp"

#include <cctype>

#include "gik/error.hpp"

namespace gik {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text)) fail(Errc::bad_rational, "not a rational: '" + text + "'");
    return Rational(Integer(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) {
    fail(Errc::bad_rational, "not a rational: '" + text + "'");
  }
  Integer d(den);
  if (d == 0) fail(Errc::bad_rational, "zero denominator: '" + text + "'");
  return Rational(Integer(num), d);
}

std::string to_string(const Rational& value) { return value.str(); }

Integer floor_div(const Rational& value) {
  Integer num = numerator(value);
  Integer den = denominator(value);  // canonical, > 0
  Integer q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

Integer ceil_div(const Rational& value) { return -floor_div(-value); }

Integer floor_ratio(const Rational& a, const Rational& b) { return floor_div(Rational(a / b)); }

int ceil_log(const Rational& base, const Rational& value) {
  require(base > 1 && value > 0, Errc::out_of_range, "ceil_log domain");
  int k = 0;
  Rational power(1);
  while (power < value) {
    power *= base;
    ++k;
  }
  return k;
}

Rational ln_upper_bound(const Rational& x) {
  require(x >= 1, Errc::out_of_range, "ln_upper_bound needs x >= 1");
  // Reduce to (1, 2], then sum the atanh series with an upper bound on the tail.
  auto series_ub = [](const Rational& y) {
    const Rational z = (y - 1) / (y + 1);  // in [0, 1/3]
    const Rational z2 = z * z;
    Rational term = z;
    Rational sum = 0;
    constexpr int kTerms = 12;
    for (int j = 0; j < kTerms; ++j) {
      sum += term / (2 * j + 1);
      term *= z2;
    }
    sum += term / ((2 * kTerms + 1) * (1 - z2));  // geometric tail bound
    return Rational(2 * sum);
  };
  static const Rational kLn2Upper = series_ub(Rational(2));
  Rational y = x;
  int halvings = 0;
  while (y > 2) {
    y /= 2;
    ++halvings;
  }
  return halvings * kLn2Upper + series_ub(y);
}

}  // namespace gik
