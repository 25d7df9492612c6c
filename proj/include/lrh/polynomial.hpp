#pragma once

#include "lrh/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lrh {

// Commutative polynomials in x, y over the rationals; univariate polynomials
// (k[x]) are the y-degree-zero case.  No zero coefficients are stored.
struct Polynomial {
  // (x-exponent, y-exponent) -> coefficient
  std::map<std::pair<int, int>, Rational> coeffs;

  Polynomial() = default;
  explicit Polynomial(const Rational &c) {
    if (c != 0)
      coeffs[{0, 0}] = c;
  }

  static Polynomial monomial(int a, int b, const Rational &c = 1) {
    Polynomial p;
    if (c != 0)
      p.coeffs[{a, b}] = c;
    return p;
  }
  static Polynomial x() { return monomial(1, 0); }
  static Polynomial y() { return monomial(0, 1); }

  bool is_zero() const { return coeffs.empty(); }

  void add_term(int a, int b, const Rational &c) {
    if (c == 0)
      return;
    auto key = std::make_pair(a, b);
    auto it = coeffs.find(key);
    if (it == coeffs.end()) {
      coeffs.emplace(key, c);
    } else {
      it->second += c;
      if (it->second == 0)
        coeffs.erase(it);
    }
  }

  Polynomial &operator+=(const Polynomial &o) {
    for (const auto &[e, c] : o.coeffs)
      add_term(e.first, e.second, c);
    return *this;
  }
  Polynomial &operator-=(const Polynomial &o) {
    for (const auto &[e, c] : o.coeffs)
      add_term(e.first, e.second, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial &b) {
    a += b;
    return a;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) {
    a -= b;
    return a;
  }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b) {
    Polynomial p;
    for (const auto &[ea, ca] : a.coeffs)
      for (const auto &[eb, cb] : b.coeffs)
        p.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return p;
  }
  friend Polynomial operator*(const Polynomial &a, const Rational &s) {
    Polynomial p;
    for (const auto &[e, c] : a.coeffs)
      p.add_term(e.first, e.second, c * s);
    return p;
  }
  friend Polynomial operator*(const Rational &s, const Polynomial &a) {
    return a * s;
  }
  friend Polynomial operator-(const Polynomial &a) { return a * Rational(-1); }
  friend bool operator==(const Polynomial &a, const Polynomial &b) {
    return a.coeffs == b.coeffs;
  }

  Polynomial derivative_x() const {
    Polynomial p;
    for (const auto &[e, c] : coeffs)
      if (e.first > 0)
        p.add_term(e.first - 1, e.second, c * e.first);
    return p;
  }
  Polynomial derivative_y() const {
    Polynomial p;
    for (const auto &[e, c] : coeffs)
      if (e.second > 0)
        p.add_term(e.first, e.second - 1, c * e.second);
    return p;
  }

  int total_degree() const {
    int d = -1;
    for (const auto &[e, c] : coeffs)
      d = std::max(d, e.first + e.second);
    return d;
  }

  bool is_homogeneous() const {
    int d = -2;
    for (const auto &[e, c] : coeffs) {
      if (d == -2)
        d = e.first + e.second;
      else if (e.first + e.second != d)
        return false;
    }
    return true;
  }

  bool is_univariate_x() const {
    for (const auto &[e, c] : coeffs)
      if (e.second != 0)
        return false;
    return true;
  }

  int degree_x() const {
    int d = -1;
    for (const auto &[e, c] : coeffs)
      d = std::max(d, e.first);
    return d;
  }
};

// --- univariate (k[x]) helpers ---------------------------------------------

inline Rational coeff_x(const Polynomial &p, int a) {
  auto it = p.coeffs.find({a, 0});
  return it == p.coeffs.end() ? Rational(0) : it->second;
}

// (quotient, remainder) of univariate division in k[x].
inline std::pair<Polynomial, Polynomial> divmod_x(Polynomial a,
                                                  const Polynomial &b) {
  if (!a.is_univariate_x() || !b.is_univariate_x() || b.is_zero())
    throw std::invalid_argument("divmod_x: bad inputs");
  Polynomial q;
  int db = b.degree_x();
  Rational lead_b = coeff_x(b, db);
  while (!a.is_zero() && a.degree_x() >= db) {
    int da = a.degree_x();
    Rational f = coeff_x(a, da) / lead_b;
    q.add_term(da - db, 0, f);
    a -= Polynomial::monomial(da - db, 0, f) * b;
  }
  return {q, a};
}

// Monic gcd in k[x]; gcd(0,0) = 0.
inline Polynomial gcd_x(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod_x(a, b).second;
    a = b;
    b = r;
  }
  if (!a.is_zero()) {
    Rational lead = coeff_x(a, a.degree_x());
    a = a * (Rational(1) / lead);
  }
  return a;
}

inline std::string poly_to_string(const Polynomial &p) {
  if (p.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
    const auto &[e, c] = *it;
    Rational abs_c = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0)
        out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    bool has_var = e.first > 0 || e.second > 0;
    if (abs_c != 1 || !has_var) {
      out += to_string(abs_c);
      if (has_var)
        out += " ";
    }
    if (e.first > 0)
      out += e.first == 1 ? "x" : "x^" + std::to_string(e.first);
    if (e.first > 0 && e.second > 0)
      out += " ";
    if (e.second > 0)
      out += e.second == 1 ? "y" : "y^" + std::to_string(e.second);
  }
  return out;
}

} // namespace lrh
