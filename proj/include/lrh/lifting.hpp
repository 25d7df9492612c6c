#pragma once

#include "lrh/hochschild.hpp"
#include "lrh/pbw.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace lrh {

// Difference quotients of g in S (x) S:
//   g(x)1 - 1(x)g = Dx(g).(x(x)1 - 1(x)x) + Dy(g).(y(x)1 - 1(x)y),
// expanding each monomial x^a y^b by telescoping the y factor first, so that
//   Dy(x^a y^b) = sum_{s+t=b-1} x^a y^s (x) y^t,
//   Dx(x^a y^b) = sum_{s+t=a-1} x^s (x) x^t y^b.
inline std::pair<BiTensor, BiTensor> difference_quotients(const Polynomial &g) {
  BiTensor dx, dy;
  for (const auto &[e, c] : g.coeffs) {
    int a = e.first, b = e.second;
    for (int s = 0; s + 1 <= a; ++s)
      dx.add(s, 0, a - 1 - s, b, c);
    for (int s = 0; s + 1 <= b; ++s)
      dy.add(a, s, 0, b - 1 - s, c);
  }
  return {dx, dy};
}

// One-variable difference quotient: D(g) with g(x)1 - 1(x)g = D(g).(x(x)1-1(x)x).
inline BiTensor difference_quotient_x(const Polynomial &g) {
  return difference_quotients(g).first;
}

enum class Theta { D, E, AhY };

// A lifting of a derivation of S to the Koszul resolution, stored through its
// values on the resolution generators:
//   theta1(1|1 (x) x) = d1_xx (x) x + d1_xy (x) y   (and likewise d1_y*),
//   theta2(1|1 (x) x/\y) = d2 (x) x/\y,
// and for the one-variable case the correction theta1(1|1) = ah_corr.
struct LiftingData {
  SpecPtr spec;
  Theta theta = Theta::D;
  BiTensor d1_xx, d1_xy, d1_yx, d1_yy;
  BiTensor d2;
  BiTensor ah_corr;
};

namespace detail {

// The derivation of S lifted: F d/dy, the Euler derivation, or h d/dx.
inline Polynomial theta_on_S(const LiftingData &L, const Polynomial &s) {
  switch (L.theta) {
  case Theta::D:
    return L.spec->F * s.derivative_y();
  case Theta::E: {
    Polynomial out;
    for (const auto &[e, c] : s.coeffs)
      out.add_term(e.first, e.second, c * (e.first + e.second));
    return out;
  }
  case Theta::AhY:
    return L.spec->h * s.derivative_x();
  }
  return {};
}

// theta0(s (x) t) = theta(s) (x) t + s (x) theta(t).
inline BiTensor theta0_apply(const LiftingData &L, const BiTensor &bt) {
  BiTensor out;
  for (const auto &[k, c] : bt.pairs) {
    Polynomial left = Polynomial::monomial(k.first.first, k.first.second);
    Polynomial right = Polynomial::monomial(k.second.first, k.second.second);
    out += BiTensor::of(theta_on_S(L, left), right) * c;
    out += BiTensor::of(left, theta_on_S(L, right)) * c;
  }
  return out;
}

struct P1Elem {
  BiTensor cx, cy;
  friend bool operator==(const P1Elem &a, const P1Elem &b) {
    return a.cx == b.cx && a.cy == b.cy;
  }
};

inline P1Elem theta1_apply(const LiftingData &L, const P1Elem &p) {
  P1Elem out;
  out.cx = theta0_apply(L, p.cx) + p.cx * L.d1_xx + p.cy * L.d1_yx;
  out.cy = theta0_apply(L, p.cy) + p.cx * L.d1_xy + p.cy * L.d1_yy;
  return out;
}

inline BiTensor theta2_apply(const LiftingData &L, const BiTensor &w) {
  return theta0_apply(L, w) + w * L.d2;
}

// Koszul boundaries: b2(w (x) x/\y) = -w.(y|1-1|y) (x) x + w.(x|1-1|x) (x) y,
// b1(cx (x) x + cy (x) y) = cx.(x|1-1|x) + cy.(y|1-1|y).
inline BiTensor koszul_x() {
  return BiTensor::of(Polynomial::x(), Polynomial(Rational(1))) -
         BiTensor::of(Polynomial(Rational(1)), Polynomial::x());
}
inline BiTensor koszul_y() {
  return BiTensor::of(Polynomial::y(), Polynomial(Rational(1))) -
         BiTensor::of(Polynomial(Rational(1)), Polynomial::y());
}

inline P1Elem b2_apply(const BiTensor &w) {
  P1Elem out;
  out.cx = -(w * koszul_y());
  out.cy = w * koszul_x();
  return out;
}

inline BiTensor b1_apply(const P1Elem &p) {
  return p.cx * koszul_x() + p.cy * koszul_y();
}

inline Polynomial eps_apply(const BiTensor &bt) {
  Polynomial out;
  for (const auto &[k, c] : bt.pairs)
    out.add_term(k.first.first + k.second.first,
                 k.first.second + k.second.second, c);
  return out;
}

// Chain-lifting identities, expanded symbolically over S (x) S on
// monomial-scaled generators.
inline bool verify_lifting(const LiftingData &L) {
  if (L.spec->kind == AlgebraKind::Ah) {
    // delta1 . theta1 = theta0 . delta1 on s (x) t, with
    // delta1(s|t) = sx|t - s|xt and theta1 = theta0 + (.).ah_corr.
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b) {
        BiTensor st;
        st.add(a, 0, b, 0, 1);
        BiTensor lhs = (theta0_apply(L, st) + st * L.ah_corr) * koszul_x();
        BiTensor rhs = theta0_apply(L, st * koszul_x());
        if (!(lhs == rhs))
          return false;
        // eps . theta0 = theta_S . eps
        Polynomial pl = eps_apply(theta0_apply(L, st));
        Polynomial pr = theta_on_S(L, eps_apply(st));
        if (!(pl == pr))
          return false;
      }
    return true;
  }
  for (int la = 0; la <= 2; ++la)
    for (int lb = 0; lb <= 2; ++lb)
      for (int ra = 0; ra <= 2; ++ra)
        for (int rb = 0; rb <= 2; ++rb) {
          BiTensor st;
          st.add(la, lb, ra, rb, 1);
          // eps . theta0 = theta_S . eps
          if (!(eps_apply(theta0_apply(L, st)) ==
                theta_on_S(L, eps_apply(st))))
            return false;
          // b1 . theta1 = theta0 . b1 on st (x) x and st (x) y
          P1Elem gx{st, BiTensor{}}, gy{BiTensor{}, st};
          if (!(b1_apply(theta1_apply(L, gx)) ==
                theta0_apply(L, b1_apply(gx))))
            return false;
          if (!(b1_apply(theta1_apply(L, gy)) ==
                theta0_apply(L, b1_apply(gy))))
            return false;
          // b2 . theta2 = theta1 . b2 on st (x) x/\y
          if (!(b2_apply(theta2_apply(L, st)) ==
                theta1_apply(L, b2_apply(st))))
            return false;
        }
  return true;
}

} // namespace detail

inline LiftingData build_lifting(Theta theta, const SpecPtr &spec) {
  LiftingData L;
  L.spec = spec;
  L.theta = theta;
  switch (theta) {
  case Theta::D: {
    auto [dx, dy] = difference_quotients(spec->F);
    L.d1_yx = dx;
    L.d1_yy = dy;
    L.d2 = dy;
    break;
  }
  case Theta::E:
    L.d1_xx = BiTensor::one();
    L.d1_yy = BiTensor::one();
    L.d2 = BiTensor::one() * Rational(2);
    break;
  case Theta::AhY:
    L.ah_corr = difference_quotient_x(spec->h);
    break;
  }
  if (!detail::verify_lifting(L))
    throw std::logic_error("build_lifting: chain-lifting identities failed");
  return L;
}

// The element of U realizing the lifted derivation.
inline PbwElement theta_element(const LiftingData &L) {
  switch (L.theta) {
  case Theta::D:
    return gen_D(L.spec);
  case Theta::E:
    return gen_E(L.spec);
  case Theta::AhY:
    return gen_y(L.spec);
  }
  return PbwElement(L.spec);
}

// sharp(phi) = [theta, phi(-)] - phi(theta_q(-)) on resolution generators.
inline Cochain sharp(const LiftingData &L, const Cochain &c) {
  const SpecPtr &s = c.spec;
  PbwElement th = theta_element(L);
  if (c.q == 0)
    return cochain0(s, commutator(th, c[0]));
  if (c.q == 1) {
    PbwElement ax = commutator(th, c[0]) - bimodule_eval(L.d1_xx, c[0]) -
                    bimodule_eval(L.d1_xy, c[1]);
    PbwElement ay = commutator(th, c[1]) - bimodule_eval(L.d1_yx, c[0]) -
                    bimodule_eval(L.d1_yy, c[1]);
    return cochain1(s, ax, ay);
  }
  if (c.q == 2)
    return cochain2(s, commutator(th, c[0]) - bimodule_eval(L.d2, c[0]));
  throw std::invalid_argument("sharp: bad position");
}

// delta . sharp = sharp . delta on every slab basis element, exactly.
inline bool chain_map_check(const LiftingData &L, int q, long i, int N) {
  if (q >= 2)
    return true;
  SliceBasis b =
      slice_basis({ComplexId::HochschildKoszul, q, i, N, 0}, L.spec);
  for (long j = 0; j < b.dim(); ++j) {
    Cochain c = cochain_from_vector(SparseVec{{j, Rational(1)}}, b);
    if (!(delta(sharp(L, c)) == sharp(L, delta(c))))
      return false;
  }
  return true;
}

// Matrix of the induced map on cohomology, in representative coordinates.
// The target model must hold classes of internal degree i + deg(theta) and be
// large enough to contain sharp of every source representative.  Returns
// nullopt when a column's class fails membership (insufficient truncation).
inline std::optional<SparseMatrix> nabla(const LiftingData &L,
                                         const SliceModel &source,
                                         const SliceModel &target) {
  SparseMatrix m(target.reps.dim(), source.reps.dim());
  for (long j = 0; j < source.reps.dim(); ++j) {
    Cochain r = cochain_from_vector(source.reps.vectors[j], source.big);
    Cochain sh = sharp(L, r);
    SparseVec v;
    try {
      v = cochain_to_vector(sh, target.big);
    } catch (const std::invalid_argument &) {
      return std::nullopt;
    }
    SparseVec res = target.Bfull.residual(v);
    auto coeffs = membership(res, target.reps, target.big.dim());
    if (!coeffs)
      return std::nullopt;
    for (long r2 = 0; r2 < target.reps.dim(); ++r2)
      if ((*coeffs)[r2] != 0)
        m.set(r2, j, (*coeffs)[r2]);
  }
  return m;
}

// [nabla_E, nabla_D] = (l-2) nabla_D on H^q_i -> H^q_{i+l-2}.
inline bool lie_morphism_check(const SpecPtr &spec, int q, long i, int N = 6,
                               int slack = 3) {
  LiftingData LD = build_lifting(Theta::D, spec);
  LiftingData LE = build_lifting(Theta::E, spec);
  long d = spec->d_deg;
  SliceModel src = build_slice_model(spec, q, i, N, slack);
  SliceModel tgt = build_slice_model(spec, q, i + d, N, slack,
                                     N + 2 * slack);
  auto nD = nabla(LD, src, tgt);
  auto nE_src = nabla(LE, src, src);
  auto nE_tgt = nabla(LE, tgt, tgt);
  if (!nD || !nE_src || !nE_tgt)
    return false;
  // commutator of matrices
  SparseMatrix lhs(tgt.reps.dim(), src.reps.dim());
  for (long r = 0; r < lhs.rows; ++r)
    for (long c = 0; c < lhs.cols; ++c) {
      Rational acc = 0;
      for (long k = 0; k < nD->rows; ++k)
        acc += nE_tgt->get(r, k) * nD->get(k, c);
      for (long k = 0; k < nE_src->rows; ++k)
        acc -= nD->get(r, k) * nE_src->get(k, c);
      acc -= Rational(d) * nD->get(r, c);
      if (acc != 0)
        return false;
    }
  return true;
}

} // namespace lrh
