#pragma once

#include "lrh/polynomial.hpp"
#include "lrh/rational.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace lrh {

enum class AlgebraKind { Arrangement, Ah };

// Algebra presentation data.  Two families:
//  - Arrangement: U = U(S, Der A) for a central arrangement of l lines,
//    generators x < y < D < E with D = F d/dy, E the Euler derivation,
//    F = prod_i (y + t_i x).
//  - Ah: generators x < y with yx - xy = h(x).
struct AlgebraSpec {
  AlgebraKind kind;

  // arrangement
  long l = 0;
  std::vector<Rational> slopes; // t_1 .. t_{l-1}, t_1 = 0, pairwise distinct
  Polynomial F;                 // prod (y + t_i x), degree l-1
  Polynomial Q;                 // x * F
  long d_deg = 0;               // internal degree of D: l - 2

  // ah
  Polynomial h;

  mutable std::map<std::tuple<int, int, int>, Polynomial> theta_cache;
  mutable std::mutex cache_mutex;

  static std::shared_ptr<const AlgebraSpec>
  arrangement(long l, std::vector<Rational> slopes_in) {
    if (l < 3)
      throw std::invalid_argument("arrangement: need l >= 3");
    if (static_cast<long>(slopes_in.size()) != l - 1)
      throw std::invalid_argument("arrangement: need l-1 slopes");
    if (slopes_in[0] != 0)
      throw std::invalid_argument("arrangement: first slope must be 0");
    for (size_t i = 0; i < slopes_in.size(); ++i)
      for (size_t j = i + 1; j < slopes_in.size(); ++j)
        if (slopes_in[i] == slopes_in[j])
          throw std::invalid_argument("arrangement: repeated slope");
    auto s = std::make_shared<AlgebraSpec>();
    s->kind = AlgebraKind::Arrangement;
    s->l = l;
    s->slopes = std::move(slopes_in);
    s->d_deg = l - 2;
    s->F = Polynomial(Rational(1));
    for (const auto &t : s->slopes)
      s->F = s->F * (Polynomial::y() + Polynomial::x() * t);
    s->Q = Polynomial::x() * s->F;
    return s;
  }

  // The three-line case Q = x * y * (tx + y); t must be nonzero so the
  // lines are distinct.
  static std::shared_ptr<const AlgebraSpec> three_lines(const Rational &t) {
    return arrangement(3, {Rational(0), t});
  }

  static std::shared_ptr<const AlgebraSpec> ah(Polynomial h_in) {
    if (!h_in.is_univariate_x())
      throw std::invalid_argument("ah: h must be a polynomial in x");
    if (h_in.is_zero())
      throw std::invalid_argument("ah: h must be nonzero");
    auto s = std::make_shared<AlgebraSpec>();
    s->kind = AlgebraKind::Ah;
    s->h = std::move(h_in);
    return s;
  }

  // The derivation used by PBW straightening: ad of the top Lie generator on
  // the polynomial subalgebra (F d/dy, resp. h d/dx).
  Polynomial theta(const Polynomial &s) const {
    if (kind == AlgebraKind::Arrangement)
      return F * s.derivative_y();
    return h * s.derivative_x();
  }

  // theta^k applied to the monomial x^a y^b, memoized.
  Polynomial theta_power(int k, int a, int b) const {
    if (k == 0)
      return Polynomial::monomial(a, b);
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto key = std::make_tuple(k, a, b);
    auto it = theta_cache.find(key);
    if (it != theta_cache.end())
      return it->second;
    Polynomial p = Polynomial::monomial(a, b);
    for (int i = 0; i < k; ++i)
      p = theta(p);
    theta_cache.emplace(key, p);
    return p;
  }

  // Saito's criterion: det of the coefficient matrix of {E, D} with respect
  // to (d/dx, d/dy) must equal Q up to a nonzero scalar.
  bool saito_check() const {
    if (kind != AlgebraKind::Arrangement)
      return false;
    // E = x d/dx + y d/dy, D = 0 d/dx + F d/dy
    Polynomial det = Polynomial::x() * F - Polynomial::y() * Polynomial();
    if (det.is_zero() || Q.is_zero())
      return false;
    // det = c * Q for some nonzero rational c?
    auto lead = det.coeffs.begin();
    auto leadQ = Q.coeffs.begin();
    if (lead->first != leadQ->first)
      return false;
    Rational c = lead->second / leadQ->second;
    return det == Q * c;
  }
};

using SpecPtr = std::shared_ptr<const AlgebraSpec>;

// PBW exponent tuple: x^a y^b D^c E^m (Ah: c = m = 0).
struct PbwTerm {
  int a = 0, b = 0, c = 0, m = 0;
  auto operator<=>(const PbwTerm &) const = default;
};

struct PbwElement {
  SpecPtr spec;
  std::map<PbwTerm, Rational> terms;

  explicit PbwElement(SpecPtr s = nullptr) : spec(std::move(s)) {}

  bool is_zero() const { return terms.empty(); }

  void add_term(const PbwTerm &t, const Rational &c) {
    if (c == 0)
      return;
    if (t.a < 0 || t.b < 0 || t.c < 0 || t.m < 0)
      throw std::invalid_argument("PbwElement: negative exponent");
    auto it = terms.find(t);
    if (it == terms.end()) {
      terms.emplace(t, c);
    } else {
      it->second += c;
      if (it->second == 0)
        terms.erase(it);
    }
  }

  PbwElement &operator+=(const PbwElement &o) {
    check_spec(o);
    for (const auto &[t, c] : o.terms)
      add_term(t, c);
    return *this;
  }
  PbwElement &operator-=(const PbwElement &o) {
    check_spec(o);
    for (const auto &[t, c] : o.terms)
      add_term(t, -c);
    return *this;
  }
  friend PbwElement operator+(PbwElement a, const PbwElement &b) {
    a += b;
    return a;
  }
  friend PbwElement operator-(PbwElement a, const PbwElement &b) {
    a -= b;
    return a;
  }
  friend PbwElement operator*(const PbwElement &a, const Rational &s) {
    PbwElement p(a.spec);
    for (const auto &[t, c] : a.terms)
      p.add_term(t, c * s);
    return p;
  }
  friend PbwElement operator-(const PbwElement &a) { return a * Rational(-1); }
  friend bool operator==(const PbwElement &a, const PbwElement &b) {
    return a.terms == b.terms;
  }

  void check_spec(const PbwElement &o) const {
    if (spec && o.spec && spec != o.spec)
      throw std::invalid_argument("PbwElement: algebra spec mismatch");
  }

  // Internal degree of a term: a + b + d_deg * c; E contributes 0.
  long term_degree(const PbwTerm &t) const {
    return t.a + t.b + spec->d_deg * t.c;
  }

  bool is_homogeneous(long degree) const {
    for (const auto &[t, c] : terms)
      if (term_degree(t) != degree)
        return false;
    return true;
  }

  int e_truncation_degree() const {
    int m = 0;
    for (const auto &[t, c] : terms)
      m = std::max(m, t.m);
    return m;
  }
};

inline PbwElement pbw_zero(const SpecPtr &s) { return PbwElement(s); }

inline PbwElement pbw_monomial(const SpecPtr &s, int a, int b, int c = 0,
                               int m = 0, const Rational &coeff = 1) {
  if (s->kind == AlgebraKind::Ah && (c != 0 || m != 0))
    throw std::invalid_argument("pbw_monomial: Ah has generators x, y only");
  PbwElement e(s);
  e.add_term({a, b, c, m}, coeff);
  return e;
}

inline PbwElement pbw_one(const SpecPtr &s) { return pbw_monomial(s, 0, 0); }
inline PbwElement gen_x(const SpecPtr &s) { return pbw_monomial(s, 1, 0); }
inline PbwElement gen_y(const SpecPtr &s) { return pbw_monomial(s, 0, 1); }
inline PbwElement gen_D(const SpecPtr &s) {
  return pbw_monomial(s, 0, 0, 1, 0);
}
inline PbwElement gen_E(const SpecPtr &s) {
  return pbw_monomial(s, 0, 0, 0, 1);
}

inline PbwElement from_polynomial(const SpecPtr &s, const Polynomial &p) {
  PbwElement e(s);
  for (const auto &[ex, c] : p.coeffs)
    e.add_term({ex.first, ex.second, 0, 0}, c);
  return e;
}

namespace detail {

inline Rational int_pow(long base, int exp) {
  Rational r = 1;
  for (int i = 0; i < exp; ++i)
    r *= base;
  return r;
}

// Product of two arrangement PBW monomials.  Straightening uses the closed
// forms D^c s = sum_k C(c,k) theta^k(s) D^{c-k} and E^m u = u (E+|u|)^m for
// homogeneous u, so no term rewriting loop is needed.
inline void multiply_term_arrangement(PbwElement &out, const PbwTerm &t1,
                                      const PbwTerm &t2, const Rational &coeff) {
  const AlgebraSpec &sp = *out.spec;
  long d2 = t2.a + t2.b + sp.d_deg * t2.c;
  for (int k = 0; k <= t1.c; ++k) {
    Rational ck = binomial(t1.c, k);
    Polynomial moved = sp.theta_power(k, t2.a, t2.b);
    for (const auto &[ex, pc] : moved.coeffs) {
      for (int j = 0; j <= t1.m; ++j) {
        Rational cj = binomial(t1.m, j) * int_pow(d2, t1.m - j);
        out.add_term({t1.a + ex.first, t1.b + ex.second,
                      t1.c - k + t2.c, j + t2.m},
                     coeff * ck * pc * cj);
      }
    }
  }
}

inline void multiply_term_ah(PbwElement &out, const PbwTerm &t1,
                             const PbwTerm &t2, const Rational &coeff) {
  const AlgebraSpec &sp = *out.spec;
  for (int k = 0; k <= t1.b; ++k) {
    Rational ck = binomial(t1.b, k);
    Polynomial moved = sp.theta_power(k, t2.a, 0);
    for (const auto &[ex, pc] : moved.coeffs)
      out.add_term({t1.a + ex.first, t1.b - k + t2.b, 0, 0}, coeff * ck * pc);
  }
}

} // namespace detail

inline PbwElement multiply(const PbwElement &u, const PbwElement &v) {
  u.check_spec(v);
  SpecPtr spec = u.spec ? u.spec : v.spec;
  PbwElement out(spec);
  for (const auto &[t1, c1] : u.terms)
    for (const auto &[t2, c2] : v.terms) {
      if (spec->kind == AlgebraKind::Arrangement)
        detail::multiply_term_arrangement(out, t1, t2, c1 * c2);
      else
        detail::multiply_term_ah(out, t1, t2, c1 * c2);
    }
  return out;
}

inline PbwElement commutator(const PbwElement &u, const PbwElement &v) {
  return multiply(u, v) - multiply(v, u);
}

// Decomposition by internal degree (arrangement grading |x|=|y|=1,
// |D| = l-2, |E| = 0).
inline std::map<long, PbwElement> degree_components(const PbwElement &u) {
  if (u.spec->kind != AlgebraKind::Arrangement)
    throw std::invalid_argument("degree_components: arrangement algebras only");
  std::map<long, PbwElement> out;
  for (const auto &[t, c] : u.terms) {
    long d = u.term_degree(t);
    auto it = out.find(d);
    if (it == out.end())
      it = out.emplace(d, PbwElement(u.spec)).first;
    it->second.add_term(t, c);
  }
  return out;
}

// --- S tensor S ------------------------------------------------------------

// Elements of S^e in expanded monomial (x) monomial form:
// ((left a, left b), (right a, right b)) -> weight.
struct BiTensor {
  using Key = std::pair<std::pair<int, int>, std::pair<int, int>>;
  std::map<Key, Rational> pairs;

  bool is_zero() const { return pairs.empty(); }

  void add(int la, int lb, int ra, int rb, const Rational &c) {
    if (c == 0)
      return;
    Key k{{la, lb}, {ra, rb}};
    auto it = pairs.find(k);
    if (it == pairs.end()) {
      pairs.emplace(k, c);
    } else {
      it->second += c;
      if (it->second == 0)
        pairs.erase(it);
    }
  }

  static BiTensor one() {
    BiTensor b;
    b.add(0, 0, 0, 0, 1);
    return b;
  }

  static BiTensor of(const Polynomial &left, const Polynomial &right) {
    BiTensor b;
    for (const auto &[el, cl] : left.coeffs)
      for (const auto &[er, cr] : right.coeffs)
        b.add(el.first, el.second, er.first, er.second, cl * cr);
    return b;
  }

  BiTensor &operator+=(const BiTensor &o) {
    for (const auto &[k, c] : o.pairs)
      add(k.first.first, k.first.second, k.second.first, k.second.second, c);
    return *this;
  }
  friend BiTensor operator+(BiTensor a, const BiTensor &b) {
    a += b;
    return a;
  }
  friend BiTensor operator*(const BiTensor &a, const Rational &s) {
    BiTensor out;
    for (const auto &[k, c] : a.pairs)
      out.add(k.first.first, k.first.second, k.second.first, k.second.second,
              c * s);
    return out;
  }
  friend BiTensor operator-(const BiTensor &a) { return a * Rational(-1); }
  friend BiTensor operator-(BiTensor a, const BiTensor &b) {
    a += -b;
    return a;
  }
  // S^e product; S is commutative so (s1|s2)(t1|t2) = s1 t1 | s2 t2.
  friend BiTensor operator*(const BiTensor &a, const BiTensor &b) {
    BiTensor out;
    for (const auto &[ka, ca] : a.pairs)
      for (const auto &[kb, cb] : b.pairs)
        out.add(ka.first.first + kb.first.first,
                ka.first.second + kb.first.second,
                ka.second.first + kb.second.first,
                ka.second.second + kb.second.second, ca * cb);
    return out;
  }
  friend bool operator==(const BiTensor &a, const BiTensor &b) {
    return a.pairs == b.pairs;
  }
};

// Bimodule action (s1 (x) s2) . u = s1 u s2, extended linearly.
inline PbwElement bimodule_eval(const BiTensor &bt, const PbwElement &u) {
  PbwElement out(u.spec);
  for (const auto &[k, w] : bt.pairs) {
    PbwElement left = pbw_monomial(u.spec, k.first.first, k.first.second);
    PbwElement right = pbw_monomial(u.spec, k.second.first, k.second.second);
    out += multiply(multiply(left, u), right) * w;
  }
  return out;
}

} // namespace lrh
