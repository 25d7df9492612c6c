#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace lrh {

// The only scalar type in the engine: exact arbitrary-precision rationals,
// always in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

inline std::string to_string(const Rational &r) {
  if (denominator(r) == 1)
    return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Parses "n", "-n", "n/d".  Returns nullopt on malformed input.
inline std::optional<Rational> parse_rational(const std::string &s) {
  if (s.empty())
    return std::nullopt;
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos)
      return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0)
      return std::nullopt;
    return Rational(num, den);
  } catch (...) {
    return std::nullopt;
  }
}

inline Rational binomial(long n, long k) {
  if (k < 0 || k > n)
    return 0;
  Rational r = 1;
  for (long j = 0; j < k; ++j)
    r *= Rational(n - j, j + 1);
  return r;
}

} // namespace lrh
