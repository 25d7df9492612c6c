#pragma once

#include "lrh/hochschild.hpp"
#include "lrh/lie_rinehart.hpp"
#include "lrh/lifting.hpp"
#include "lrh/slices.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <vector>

namespace lrh {

struct KerCoker {
  long ker = 0, coker = 0;
  friend bool operator==(const KerCoker &, const KerCoker &) = default;
};

// Kernel and cokernel of nabla_D: H^q(S,U)_0 -> H^q(S,U)_{l-2}, computed as
// subspace dimensions rather than from a matrix in representative
// coordinates.  This stays finite and stabilizes even when the graded slices
// themselves do not (the q=2 slice grows with the E-bound):
//   ker  = dim{z in Z_0(N) : sharp(D,z) is a boundary} - dim(Z_0 /\ B_0),
//   coker = dim(Z_d(N) + T) - dim T,  T = B_d + sharp(D, Z_0(N+slack)),
// with boundary spaces generated from E-slack sources throughout.
inline KerCoker nabla_d_kercoker(const SpecPtr &spec, int q, int N,
                                 int slack) {
  LiftingData LD = build_lifting(Theta::D, spec);
  long d = spec->d_deg;

  SliceModel src = build_slice_model(spec, q, 0, N, slack, N + 2 * slack);
  SliceModel tgt = build_slice_model(spec, q, d, N, 2 * slack);

  // kernel side
  SparseMatrix A(tgt.big.dim(), src.Z.dim());
  for (long j = 0; j < src.Z.dim(); ++j) {
    Cochain z = cochain_from_vector(src.Z.vectors[j], src.big);
    SparseVec v = cochain_to_vector(sharp(LD, z), tgt.big);
    SparseVec res = tgt.Bfull.residual(v);
    for (const auto &[r, val] : res)
      A.set(r, j, val);
  }
  long in_boundary = src.Z.dim() - rank(A);
  long z_cap_b = intersection_dim(src.big.dim(), src.Z, src.Bfull);
  KerCoker out;
  out.ker = in_boundary - z_cap_b;

  // cokernel side
  SliceModel src_ext =
      build_slice_model(spec, q, 0, N + slack, slack, N + 2 * slack);
  SubspaceBasis T = tgt.Bfull;
  for (const auto &zv : src_ext.Z.vectors) {
    Cochain z = cochain_from_vector(zv, src_ext.big);
    T.insert(cochain_to_vector(sharp(LD, z), tgt.big));
  }
  SubspaceBasis sum = T;
  for (const auto &zv : tgt.Z.vectors)
    sum.insert(zv);
  out.coker = sum.dim() - T.dim();
  return out;
}

struct E2Table {
  SpecPtr spec;
  std::array<LrReport, 3> rows;           // index q
  std::array<std::array<long, 3>, 3> grid; // grid[q][p]
  std::array<StabilizationCertificate, 3> certs;
  bool all_stable = true;
};

inline E2Table e2_table(const SpecPtr &spec, int N0 = 6, int slack0 = 3,
                        int max_e_bound = 16) {
  E2Table t;
  t.spec = spec;
  for (int q = 0; q <= 2; ++q) {
    auto compute = [&](int N, int s) -> std::vector<long> {
      KerCoker kc = nabla_d_kercoker(spec, q, N, s);
      return {kc.ker, kc.coker};
    };
    auto [dims, cert] = stabilize(compute, N0, slack0, max_e_bound);
    t.certs[q] = cert;
    if (!cert.stable)
      t.all_stable = false;
    LrReport row = lr_dims_shortcut(dims[0], dims[1]);
    t.rows[q] = row;
    t.grid[q] = {row.h0, row.h1, row.h2};
  }
  return t;
}

struct HilbertResult {
  std::vector<long> coeffs; // degrees 0..3
  bool degenerate = false;
  long e2_top_sum = 0;
  long hh3 = 0;
};

// Anti-diagonal sums of the E2 grid; the only possibly nonzero higher
// differential in this grid is d2 on (0,2), which is ruled out exactly when
// the independent lower bound for dim HH^3 reaches the E2 sum.
inline HilbertResult hilbert_series(const E2Table &t, long hh3) {
  HilbertResult h;
  h.hh3 = hh3;
  for (int n = 0; n <= 3; ++n) {
    long s = 0;
    for (int q = 0; q <= 2; ++q) {
      int p = n - q;
      if (p >= 0 && p <= 2)
        s += t.grid[q][p];
    }
    h.coeffs.push_back(s);
  }
  h.e2_top_sum = h.coeffs[3];
  if (hh3 > h.e2_top_sum)
    throw std::logic_error(
        "hilbert_series: lower bound exceeds the E2 convergence bound");
  h.degenerate = (hh3 >= h.e2_top_sum);
  if (!h.degenerate)
    h.coeffs[3] = hh3;
  return h;
}

// --- the X-complex (l = 3 only) --------------------------------------------
// X* = (U (x) Lambda* V_U*)_0 with V_U = <x, y, D, E>; labels are bit masks
// x^=1, y^=2, D^=4, E^=8.

namespace detail {

inline void xadd(std::map<int, PbwElement> &out, int mask,
                 const PbwElement &e) {
  auto it = out.find(mask);
  if (it == out.end())
    out.emplace(mask, e);
  else
    it->second += e;
}

} // namespace detail

// d^2 of u (x) (2-form mask).  The x^/\y^ -> x^/\y^/\D^ component involves an
// operator defined only in earlier work; it is omitted here and the mask-7
// output of that input must therefore never be read (the projection used by
// hh3_lower_bound drops it).
inline std::map<int, PbwElement> x_d2(const SpecPtr &spec, int mask,
                                      const PbwElement &u) {
  auto x = gen_x(spec), y = gen_y(spec), D = gen_D(spec), E = gen_E(spec);
  PbwElement Fy = from_polynomial(spec, spec->F.derivative_y());
  Rational t = spec->slopes.at(1);
  std::map<int, PbwElement> out;
  auto com = [](const PbwElement &a, const PbwElement &b) {
    return commutator(a, b);
  };
  switch (mask) {
  case 3: // x^/\y^ : mask-7 part omitted
    detail::xadd(out, 11, com(E, u) - u * Rational(2));
    break;
  case 9: // x^/\E^
    detail::xadd(out, 11, -com(y, u));
    detail::xadd(out, 13, -com(D, u));
    detail::xadd(out, 14, multiply(u, y) * t);
    break;
  case 10: // y^/\E^
    detail::xadd(out, 11, com(x, u));
    detail::xadd(out, 14, multiply(Fy, u) - com(y, u) - com(D, u));
    break;
  case 5: // x^/\D^
    detail::xadd(out, 7, -com(y, u));
    detail::xadd(out, 13, com(E, u) - u * Rational(2));
    break;
  case 6: // y^/\D^
    detail::xadd(out, 7, com(x, u));
    detail::xadd(out, 14, com(E, u) - u * Rational(2));
    break;
  case 12: // D^/\E^
    detail::xadd(out, 13, com(x, u));
    detail::xadd(out, 14, com(y, u));
    break;
  default:
    throw std::invalid_argument("x_d2: not a 2-form label");
  }
  return out;
}

// d^3 of u (x) (3-form mask); lands in the single 4-form coordinate.
inline PbwElement x_d3(const SpecPtr &spec, int mask, const PbwElement &u) {
  auto x = gen_x(spec), y = gen_y(spec), D = gen_D(spec), E = gen_E(spec);
  PbwElement Fy = from_polynomial(spec, spec->F.derivative_y());
  switch (mask) {
  case 7: // x^/\y^/\D^
    return -commutator(E, u) + u * Rational(3);
  case 11: // x^/\y^/\E^
    return commutator(D, u) - multiply(Fy, u) + commutator(y, u);
  case 13: // x^/\D^/\E^
    return -commutator(y, u);
  case 14: // y^/\D^/\E^
    return commutator(x, u);
  }
  throw std::invalid_argument("x_d3: not a 3-form label");
}

// d^3 . d^2 = 0 on the x^/\y^-free 2-form generators (where d^2 is fully
// known); validates the borrowed differentials.
inline bool x_d3d2_check(const SpecPtr &spec, int N) {
  for (int mask : {9, 10, 5, 6, 12}) {
    SliceKey key{ComplexId::XComplex, 2, 0, N, 0};
    SliceBasis b = slice_basis(key, spec);
    for (const auto &[label, term] : b.monomials) {
      if (label != mask)
        continue;
      PbwElement u(spec);
      u.add_term(term, 1);
      PbwElement total(spec);
      for (const auto &[m3, v] : x_d2(spec, mask, u))
        total += x_d3(spec, m3, v);
      if (!total.is_zero())
        return false;
    }
  }
  return true;
}

// Lower bound for dim HH^3 via the degree-0 X-complex: project away the
// x^/\y^/\D^ coordinate of X^3 (the only one d^2 feeds through an operator
// not defined in this setting) and count dim pi(ker d^3) - dim pi(im d^2).
// The quotient map ker/im ->> pi(ker)/pi(im) makes this a sound lower bound.
inline long hh3_lower_bound_at(const SpecPtr &spec, int N, int slack) {
  if (spec->l != 3)
    throw std::invalid_argument("hh3_lower_bound: l = 3 only");
  SliceBasis b3 = slice_basis({ComplexId::XComplex, 3, 0, N, 0}, spec);
  SliceBasis b4 = slice_basis({ComplexId::XComplex, 4, 0, N, 0}, spec);

  SparseMatrix d3(b4.dim(), b3.dim());
  for (long j = 0; j < b3.dim(); ++j) {
    const auto &[mask, term] = b3.monomials[j];
    PbwElement u(spec);
    u.add_term(term, 1);
    PbwElement img = x_d3(spec, mask, u);
    for (const auto &[tt, c] : img.terms)
      d3.set(b4.index.at({15, tt}), j, c);
  }
  SubspaceBasis K = kernel_basis(d3);

  // projection: drop the mask-7 coordinates
  auto project = [&](const SparseVec &v) {
    SparseVec out;
    for (const auto &[idx, c] : v)
      if (b3.monomials[idx].first != 7)
        out[idx] = c;
    return out;
  };
  std::vector<SparseVec> pk;
  for (const auto &v : K.vectors)
    pk.push_back(project(v));
  SubspaceBasis piK = echelonize(b3.dim(), pk);

  SliceBasis b2 = slice_basis({ComplexId::XComplex, 2, 0, N + slack, 0}, spec);
  SliceBasis b3big =
      slice_basis({ComplexId::XComplex, 3, 0, N + slack, 0}, spec);
  std::vector<SparseVec> images;
  for (long j = 0; j < b2.dim(); ++j) {
    const auto &[mask, term] = b2.monomials[j];
    PbwElement u(spec);
    u.add_term(term, 1);
    SparseVec v;
    for (const auto &[m3, e] : x_d2(spec, mask, u)) {
      if (m3 == 7)
        continue;
      for (const auto &[tt, c] : e.terms)
        v[b3big.index.at({m3, tt})] = c;
    }
    images.push_back(std::move(v));
  }
  // re-embed pi(K) into the big X^3 slab and check pi(im) <= pi(ker)
  SubspaceBasis piKbig;
  piKbig.ambient_dim = b3big.dim();
  for (const auto &v : piK.vectors) {
    SparseVec w;
    for (const auto &[idx, c] : v)
      w[b3big.index.at(b3.monomials[idx])] = c;
    piKbig.insert(std::move(w));
  }
  SubspaceBasis I = echelonize(b3big.dim(), images);
  long cap = intersection_dim(b3big.dim(), piKbig, I);
  return piKbig.dim() - cap;
}

inline std::pair<long, StabilizationCertificate>
hh3_lower_bound(const SpecPtr &spec, int N0 = 6, int slack0 = 3,
                int max_e_bound = 16) {
  auto compute = [&](int N, int s) -> std::vector<long> {
    return {hh3_lower_bound_at(spec, N, s)};
  };
  auto [dims, cert] = stabilize(compute, N0, slack0, max_e_bound);
  return {dims.empty() ? -1 : dims[0], cert};
}

// --- outer derivations (l = 3) ---------------------------------------------

// A derivation given by its values on the generators x, y, D, E.
using GeneratorImages = std::array<PbwElement, 4>;

inline PbwElement generator_element(const SpecPtr &spec, int g) {
  switch (g) {
  case 0:
    return gen_x(spec);
  case 1:
    return gen_y(spec);
  case 2:
    return gen_D(spec);
  case 3:
    return gen_E(spec);
  }
  throw std::invalid_argument("generator_element");
}

// Leibniz extension to PBW monomials.
inline PbwElement derivation_apply(const SpecPtr &spec,
                                   const GeneratorImages &im,
                                   const PbwElement &u) {
  PbwElement out(spec);
  for (const auto &[t, c] : u.terms) {
    std::array<int, 4> exps{t.a, t.b, t.c, t.m};
    for (int g = 0; g < 4; ++g) {
      for (int p = 0; p < exps[g]; ++p) {
        // prefix letters, then g^p . im[g] . g^{exps[g]-1-p}, then suffix
        PbwElement acc = pbw_one(spec);
        for (int gg = 0; gg < g; ++gg) {
          PbwElement letter = generator_element(spec, gg);
          for (int k = 0; k < exps[gg]; ++k)
            acc = multiply(acc, letter);
        }
        PbwElement letter = generator_element(spec, g);
        for (int k = 0; k < p; ++k)
          acc = multiply(acc, letter);
        acc = multiply(acc, im[g]);
        for (int k = 0; k < exps[g] - 1 - p; ++k)
          acc = multiply(acc, letter);
        for (int gg = g + 1; gg < 4; ++gg) {
          PbwElement l2 = generator_element(spec, gg);
          for (int k = 0; k < exps[gg]; ++k)
            acc = multiply(acc, l2);
        }
        out += acc * c;
      }
    }
  }
  return out;
}

// The presentation relations as (g, g', [g,g']).
inline std::vector<std::tuple<int, int, PbwElement>>
presentation_relations(const SpecPtr &spec) {
  PbwElement zero(spec);
  return {
      {1, 0, zero},
      {2, 0, zero},
      {2, 1, from_polynomial(spec, spec->F)},
      {3, 0, gen_x(spec)},
      {3, 1, gen_y(spec)},
      {3, 2, gen_D(spec) * Rational(spec->d_deg)},
  };
}

// Does the generator assignment extend to a derivation of U?  Checks that
// every presented relation is mapped to zero:
// [im(g), g'] + [g, im(g')] = im([g,g']).
inline bool derivation_check(const SpecPtr &spec, const GeneratorImages &im) {
  for (const auto &[g1, g2, val] : presentation_relations(spec)) {
    PbwElement lhs =
        commutator(im[g1], generator_element(spec, g2)) +
        commutator(generator_element(spec, g1), im[g2]);
    if (!(lhs == derivation_apply(spec, im, val)))
      return false;
  }
  return true;
}

struct OuterDerivationReport {
  long count = 0;
  bool derivations_valid = false;
  bool abelian = false;
  bool independent = false;
};

// The three outer derivations of Diff(A) for three lines: each vanishes on
// x and y, sends E to 1 and D to (F/f) dF/dy(f)-style values for the linear
// forms f in {x, y, tx+y}.
inline std::vector<GeneratorImages>
outer_derivation_generators(const SpecPtr &spec) {
  if (spec->l != 3)
    throw std::invalid_argument("outer derivations: l = 3 only");
  Rational t = spec->slopes.at(1);
  PbwElement zero(spec);
  std::vector<GeneratorImages> out;
  // f = x: (F/x) d_y(x) = 0
  out.push_back({zero, zero, zero, pbw_one(spec)});
  // f = y: F/y = tx + y
  out.push_back({zero, zero, gen_x(spec) * t + gen_y(spec), pbw_one(spec)});
  // f = tx + y: F/(tx+y) = y
  out.push_back({zero, zero, gen_y(spec), pbw_one(spec)});
  return out;
}

inline OuterDerivationReport outer_derivation_check(const SpecPtr &spec,
                                                    int N = 6) {
  auto ders = outer_derivation_generators(spec);
  OuterDerivationReport rep;
  rep.count = static_cast<long>(ders.size());

  rep.derivations_valid = true;
  for (const auto &d : ders)
    if (!derivation_check(spec, d))
      rep.derivations_valid = false;

  rep.abelian = true;
  for (size_t i = 0; i < ders.size(); ++i)
    for (size_t j = i + 1; j < ders.size(); ++j)
      for (int g = 0; g < 4; ++g) {
        PbwElement br =
            derivation_apply(spec, ders[i], ders[j][g]) -
            derivation_apply(spec, ders[j], ders[i][g]);
        if (!br.is_zero())
          rep.abelian = false;
      }

  // Independence modulo inner derivations.  The candidates are homogeneous
  // of internal degree 0, so an inner match ad_u needs u in U_0 = k[E];
  // solve sum_i lambda_i der_i(g) = [u, g] for all four generators over the
  // E-truncated slab and require lambda = 0 on every solution.
  std::map<std::pair<int, PbwTerm>, long> coords; // (generator, monomial)
  auto coord_of = [&](int g, const PbwTerm &t) {
    auto it = coords.find({g, t});
    if (it == coords.end())
      it = coords.emplace(std::make_pair(g, t), (long)coords.size()).first;
    return it->second;
  };
  long nvars = rep.count + (N + 1);
  std::vector<SparseVec> cols(nvars);
  for (size_t i = 0; i < ders.size(); ++i)
    for (int g = 0; g < 4; ++g)
      for (const auto &[t, c] : ders[i][g].terms)
        cols[i][coord_of(g, t)] += c;
  for (int p = 0; p <= N; ++p) {
    PbwElement u = pbw_monomial(spec, 0, 0, 0, p);
    for (int g = 0; g < 4; ++g) {
      PbwElement br = commutator(u, generator_element(spec, g));
      for (const auto &[t, c] : br.terms)
        cols[rep.count + p][coord_of(g, t)] -= c;
    }
  }
  long nrows = static_cast<long>(coords.size());
  SparseMatrix sys(nrows, nvars);
  for (long v = 0; v < nvars; ++v)
    for (const auto &[r, c] : cols[v])
      sys.set(r, v, c);
  SubspaceBasis null = kernel_basis(sys);
  rep.independent = true;
  for (const auto &vec : null.vectors)
    for (long i = 0; i < rep.count; ++i)
      if (vec_get(vec, i) != 0)
        rep.independent = false;
  return rep;
}

// --- eulerian windows extracted from the Hochschild models -----------------

// Matrix model of the degree-j window of H^q(S,U) with the nabla_D action,
// in stabilized representative coordinates.
inline EulerianModuleData eulerian_from_hochschild(const SpecPtr &spec, int q,
                                                   long j, int N = 6,
                                                   int slack = 3) {
  LiftingData LD = build_lifting(Theta::D, spec);
  long d = spec->d_deg;
  for (int attempt = 0; attempt < 3; ++attempt) {
    int NN = N + 2 * attempt, ss = slack + 2 * attempt;
    SliceModel src = build_slice_model(spec, q, j, NN, ss);
    SliceModel tgt =
        build_slice_model(spec, q, j + d, NN, ss, NN + 2 * ss);
    auto m = nabla(LD, src, tgt);
    if (!m)
      continue;
    EulerianModuleData out;
    out.d_deg = d;
    out.j = j;
    out.dim_src = src.reps.dim();
    out.dim_tgt = tgt.reps.dim();
    out.Dmat = *m;
    return out;
  }
  throw std::runtime_error(
      "eulerian_from_hochschild: nabla membership failed at maximum slack");
}

} // namespace lrh
