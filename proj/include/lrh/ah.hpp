#pragma once

#include "lrh/lifting.hpp"
#include "lrh/pbw.hpp"
#include "lrh/sparse.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace lrh {

// The A_h pipeline: S = k[x], L generated by y = h d/dx, U = A_h.  The
// Hochschild complex collapses to U -[x,-]-> U; truncation is by bidegree
// window (x-degree <= X, y-degree <= Y) since there is no Euler generator.

inline PbwElement ah_delta(const PbwElement &u) {
  return commutator(gen_x(u.spec), u);
}

namespace detail {

struct AhIndex {
  std::map<std::pair<int, int>, long> idx;
  long of(int a, int b) {
    auto it = idx.find({a, b});
    if (it == idx.end())
      it = idx.emplace(std::make_pair(a, b), (long)idx.size()).first;
    return it->second;
  }
  long dim() const { return static_cast<long>(idx.size()); }
};

inline SparseVec ah_vec(AhIndex &ix, const PbwElement &u) {
  SparseVec v;
  for (const auto &[t, c] : u.terms)
    v[ix.of(t.a, t.b)] = c;
  return v;
}

} // namespace detail

// dim of the visible part of im([x,-]) inside the (X, Y) window, with
// sources widened enough in x to generate every intersection element.
inline long ah_image_in_window(const SpecPtr &spec, int X, int Y) {
  long dh = std::max(1, spec->h.degree_x());
  int src_x = X + static_cast<int>((Y + 2) * dh);
  detail::AhIndex ix;
  for (int a = 0; a <= X; ++a)
    for (int b = 0; b <= Y; ++b)
      ix.of(a, b);
  long window_dim = ix.dim();
  std::vector<SparseVec> images;
  for (int a = 0; a <= src_x; ++a)
    for (int b = 0; b <= Y + 1; ++b)
      images.push_back(detail::ah_vec(ix, ah_delta(pbw_monomial(spec, a, b))));
  std::vector<bool> allowed(ix.dim(), false);
  for (long k = 0; k < window_dim; ++k)
    allowed[k] = true;
  return intersect_with_coordinates(ix.dim(), images, allowed).dim();
}

// H^q(S,U) in the window: q=0 is ker [x,-], q=1 is U/(im [x,-]), 0 beyond.
inline long ah_hochschild_dim(const SpecPtr &spec, int q, int X, int Y) {
  if (q >= 2)
    return 0;
  if (q == 1)
    return (long)(X + 1) * (Y + 1) - ah_image_in_window(spec, X, Y);
  detail::AhIndex ix;
  std::vector<SparseVec> cols;
  for (int a = 0; a <= X; ++a)
    for (int b = 0; b <= Y; ++b)
      cols.push_back(detail::ah_vec(ix, ah_delta(pbw_monomial(spec, a, b))));
  SparseMatrix m(ix.dim(), static_cast<long>(cols.size()));
  for (long j = 0; j < m.cols; ++j)
    for (const auto &[r, c] : cols[j])
      m.set(r, j, c);
  return m.cols - rank(m);
}

// Independent counting oracle for the cokernel: im [x,-] = hU, and hU meets
// the window in the span of h x^a y^b with deg(h x^a) <= X, so the window
// cokernel has dimension (Y+1) min(deg h, X+1).
inline long ah_coker_oracle(const SpecPtr &spec, int X, int Y) {
  long dh = spec->h.degree_x();
  return (long)(Y + 1) * std::min<long>(dh, X + 1);
}

// Class of u modulo hU: reduce each y-coefficient mod h in k[x].
inline PbwElement ah_reduce_mod_h(const PbwElement &u) {
  const Polynomial &h = u.spec->h;
  std::map<int, Polynomial> per_b;
  for (const auto &[t, c] : u.terms)
    per_b[t.b].add_term(t.a, 0, c);
  PbwElement out(u.spec);
  for (const auto &[b, poly] : per_b) {
    Polynomial rem = h.degree_x() == 0 ? Polynomial() : divmod_x(poly, h).second;
    for (const auto &[e, c] : rem.coeffs)
      out.add_term({e.first, b, 0, 0}, c);
  }
  return out;
}

// nabla_y^0(s) = h s' and nabla_y^1(class u) = class of -h'u.
inline PbwElement ah_nabla0_closed(const SpecPtr &spec, const PbwElement &s) {
  PbwElement out(spec);
  for (const auto &[t, c] : s.terms) {
    if (t.b != 0)
      throw std::invalid_argument("ah_nabla0_closed: input not in S");
    if (t.a > 0)
      for (const auto &[e, hc] : spec->h.coeffs)
        out.add_term({e.first + t.a - 1, 0, 0, 0}, c * t.a * hc);
  }
  return out;
}

inline PbwElement ah_nabla1_closed(const SpecPtr &spec, const PbwElement &u) {
  Polynomial hp = spec->h.derivative_x();
  return ah_reduce_mod_h(multiply(from_polynomial(spec, -hp), u));
}

// Lifting-based versions: plain commutator at level 0, and at level 1 the
// sharp of the lifting with correction Delta(h).
inline PbwElement ah_nabla0_lift(const LiftingData &L, const PbwElement &s) {
  return commutator(gen_y(L.spec), s);
}

inline PbwElement ah_nabla1_lift(const LiftingData &L, const PbwElement &u) {
  return ah_reduce_mod_h(commutator(gen_y(L.spec), u) -
                         bimodule_eval(L.ah_corr, u));
}

// Closed-form and lifting-based nabla must agree on every window monomial.
inline bool ah_nabla_agree(const SpecPtr &spec, int X, int Y) {
  LiftingData L = build_lifting(Theta::AhY, spec);
  for (int a = 0; a <= X; ++a) {
    PbwElement s = pbw_monomial(spec, a, 0);
    if (!(ah_nabla0_closed(spec, s) == ah_nabla0_lift(L, s)))
      return false;
  }
  for (int a = 0; a <= X; ++a)
    for (int b = 0; b <= Y; ++b) {
      PbwElement u = pbw_monomial(spec, a, b);
      if (!(ah_nabla1_closed(spec, u) == ah_nabla1_lift(L, u)))
        return false;
    }
  return true;
}

struct AhReport {
  Polynomial h;
  Polynomial d; // monic gcd(h, h')
  long deg_h = 0, deg_d = 0;
  int X = 0, Y = 0;
  long hh0 = 0, hh1 = 0, hh2 = 0;                // engine, windowed
  long hh0_pred = 0, hh1_pred = 0, hh2_pred = 0; // closed forms, windowed
  bool nabla_agree = false;
  bool match = false;
};

// Windowed HH*(A_h): HH0 = ker nabla0, HH1 = coker nabla0 (+) ker nabla1,
// HH2 = coker nabla1.  Closed forms: k, S/(h) (+) I[y], S/(d)[y] with
// d = gcd(h, h') and I = (class of h/d) <= S/(h), so dim I = deg d.
inline AhReport ah_hh_dims(const SpecPtr &spec, int X = 8, int Y = 6) {
  const Polynomial &h = spec->h;
  if (X < h.degree_x())
    throw std::invalid_argument("ah_hh_dims: window must cover deg h");
  AhReport rep;
  rep.h = h;
  rep.d = gcd_x(h, h.derivative_x());
  rep.deg_h = h.degree_x();
  rep.deg_d = rep.d.degree_x();
  rep.X = X;
  rep.Y = Y;

  // nabla0 on the S window, with sources one degree wider so the visible
  // image is exact
  detail::AhIndex ix0;
  std::vector<SparseVec> im0;
  long ker0 = 0;
  {
    std::vector<SparseVec> cols;
    for (int a = 0; a <= X; ++a)
      cols.push_back(
          detail::ah_vec(ix0, ah_nabla0_closed(spec, pbw_monomial(spec, a, 0))));
    SparseMatrix m(ix0.dim(), static_cast<long>(cols.size()));
    for (long j = 0; j < m.cols; ++j)
      for (const auto &[r, c] : cols[j])
        m.set(r, j, c);
    ker0 = m.cols - rank(m);
  }
  long coker0;
  {
    detail::AhIndex ix;
    for (int a = 0; a <= X; ++a)
      ix.of(a, 0);
    long wdim = ix.dim();
    std::vector<SparseVec> images;
    for (int a = 0; a <= X + 1; ++a)
      images.push_back(
          detail::ah_vec(ix, ah_nabla0_closed(spec, pbw_monomial(spec, a, 0))));
    std::vector<bool> allowed(ix.dim(), false);
    for (long k = 0; k < wdim; ++k)
      allowed[k] = true;
    coker0 = wdim - intersect_with_coordinates(ix.dim(), images, allowed).dim();
  }

  // nabla1 on the reduced window basis of U/hU
  long red_x = std::min<long>(rep.deg_h, X + 1);
  long ker1 = 0, coker1 = 0;
  if (red_x > 0) {
    detail::AhIndex ix;
    std::vector<SparseVec> cols;
    for (int a = 0; a < red_x; ++a)
      for (int b = 0; b <= Y; ++b)
        cols.push_back(
            detail::ah_vec(ix, ah_nabla1_closed(spec, pbw_monomial(spec, a, b))));
    SparseMatrix m(std::max<long>(ix.dim(), 1), (long)cols.size());
    for (long j = 0; j < m.cols; ++j)
      for (const auto &[r, c] : cols[j])
        m.set(r, j, c);
    long r = rank(m);
    ker1 = m.cols - r;
    coker1 = red_x * (Y + 1) - r;
  }

  rep.hh0 = ker0;
  rep.hh1 = coker0 + ker1;
  rep.hh2 = coker1;
  rep.hh0_pred = 1;
  rep.hh1_pred = rep.deg_h + rep.deg_d * (Y + 1);
  rep.hh2_pred = rep.deg_d * (Y + 1);
  rep.nabla_agree = ah_nabla_agree(spec, X, Y);
  rep.match = rep.nabla_agree && rep.hh0 == rep.hh0_pred &&
              rep.hh1 == rep.hh1_pred && rep.hh2 == rep.hh2_pred;
  return rep;
}

} // namespace lrh
