#pragma once

#include "lrh/pbw.hpp"

#include <cctype>
#include <optional>
#include <string>

namespace lrh {

// Prints PBW elements as `+`-separated monomials `x^a y^b D^c E^m` with
// rational coefficients, highest term first.
inline std::string pbw_to_string(const PbwElement &e) {
  if (e.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (auto it = e.terms.rbegin(); it != e.terms.rend(); ++it) {
    const auto &[t, c] = *it;
    Rational abs_c = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0)
        out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string vars;
    auto emit = [&](const char *name, int exp) {
      if (exp == 0)
        return;
      if (!vars.empty())
        vars += " ";
      vars += name;
      if (exp != 1)
        vars += "^" + std::to_string(exp);
    };
    emit("x", t.a);
    emit("y", t.b);
    emit("D", t.c);
    emit("E", t.m);
    if (abs_c != 1 || vars.empty()) {
      out += to_string(abs_c);
      if (!vars.empty())
        out += " ";
    }
    out += vars;
  }
  return out;
}

namespace detail {

struct ElementParser {
  const std::string &s;
  size_t pos = 0;
  SpecPtr spec;

  explicit ElementParser(const std::string &str, SpecPtr sp)
      : s(str), spec(std::move(sp)) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::optional<Rational> parse_number() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start)
      return std::nullopt;
    Integer num(s.substr(start, pos - start));
    if (eat('/')) {
      skip_ws();
      size_t dstart = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
      if (pos == dstart)
        return std::nullopt;
      Integer den(s.substr(dstart, pos - dstart));
      if (den == 0)
        return std::nullopt;
      return Rational(num, den);
    }
    return Rational(num);
  }

  std::optional<int> parse_exponent() {
    if (!eat('^'))
      return 1;
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start)
      return std::nullopt;
    int e = std::stoi(s.substr(start, pos - start));
    return e;
  }

  // A term is a product of factors: numbers and generator powers, separated
  // by whitespace or '*'.  The generator word need not be ordered; the
  // result is the normal form of the product.
  std::optional<PbwElement> parse_term() {
    PbwElement acc = pbw_one(spec);
    bool any = false;
    for (;;) {
      skip_ws();
      if (pos >= s.size())
        break;
      char c = s[pos];
      if (c == '+' || c == '-')
        break;
      if (c == '*') {
        ++pos;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        auto n = parse_number();
        if (!n)
          return std::nullopt;
        acc = acc * *n;
        any = true;
        continue;
      }
      PbwElement g(spec);
      if (c == 'x')
        g = gen_x(spec);
      else if (c == 'y')
        g = gen_y(spec);
      else if (c == 'D' && spec->kind == AlgebraKind::Arrangement)
        g = gen_D(spec);
      else if (c == 'E' && spec->kind == AlgebraKind::Arrangement)
        g = gen_E(spec);
      else
        return std::nullopt;
      ++pos;
      auto exp = parse_exponent();
      if (!exp || *exp < 0)
        return std::nullopt;
      for (int k = 0; k < *exp; ++k)
        acc = multiply(acc, g);
      any = true;
    }
    if (!any)
      return std::nullopt;
    return acc;
  }

  std::optional<PbwElement> parse_sum() {
    PbwElement total(spec);
    bool first = true;
    for (;;) {
      skip_ws();
      if (pos >= s.size())
        break;
      Rational sign = 1;
      if (eat('+')) {
        if (first)
          return std::nullopt;
      } else if (eat('-')) {
        sign = -1;
      } else if (!first) {
        return std::nullopt;
      }
      auto term = parse_term();
      if (!term)
        return std::nullopt;
      total += *term * sign;
      first = false;
    }
    if (first)
      return std::nullopt;
    return total;
  }
};

} // namespace detail

// Parses an arbitrary generator word expression ("2 E x - y^2", "x*D^2") and
// returns its PBW normal form.  Returns nullopt on malformed input.
inline std::optional<PbwElement> parse_pbw(const SpecPtr &spec,
                                           const std::string &s) {
  detail::ElementParser p(s, spec);
  auto r = p.parse_sum();
  if (!r)
    return std::nullopt;
  p.skip_ws();
  if (p.pos != s.size())
    return std::nullopt;
  return r;
}

// Parses a univariate polynomial in x ("x^2-1"); used for the A_h parameter.
inline std::optional<Polynomial> parse_poly_x(const std::string &s) {
  auto probe = AlgebraSpec::ah(Polynomial::x());
  detail::ElementParser p(s, probe);
  auto r = p.parse_sum();
  if (!r)
    return std::nullopt;
  p.skip_ws();
  if (p.pos != s.size())
    return std::nullopt;
  Polynomial out;
  for (const auto &[t, c] : r->terms) {
    if (t.b != 0)
      return std::nullopt;
    out.add_term(t.a, 0, c);
  }
  return out;
}

} // namespace lrh
