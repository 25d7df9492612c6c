#pragma once

#include "lrh/parse.hpp"
#include "lrh/pbw.hpp"
#include "lrh/slices.hpp"
#include "lrh/sparse.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrh {

// A cochain of the Koszul-induced Hochschild complex
//   U -> U x^ (+) U y^ -> U x^/\y^
// with one PBW-element component per exterior label.
struct Cochain {
  SpecPtr spec;
  int q = 0;
  std::map<int, PbwElement> comp; // label -> component

  Cochain(SpecPtr s, int q_) : spec(std::move(s)), q(q_) {
    for (int label : complex_labels(ComplexId::HochschildKoszul, q))
      comp.emplace(label, PbwElement(spec));
  }

  PbwElement &operator[](int label) { return comp.at(label); }
  const PbwElement &operator[](int label) const { return comp.at(label); }

  bool is_zero() const {
    for (const auto &[l, e] : comp)
      if (!e.is_zero())
        return false;
    return true;
  }

  Cochain &operator+=(const Cochain &o) {
    for (const auto &[l, e] : o.comp)
      comp.at(l) += e;
    return *this;
  }
  friend Cochain operator+(Cochain a, const Cochain &b) {
    a += b;
    return a;
  }
  friend Cochain operator*(const Cochain &a, const Rational &s) {
    Cochain out(a.spec, a.q);
    for (const auto &[l, e] : a.comp)
      out.comp.at(l) = e * s;
    return out;
  }
  friend Cochain operator-(const Cochain &a) { return a * Rational(-1); }
  friend bool operator==(const Cochain &a, const Cochain &b) {
    return a.q == b.q && a.comp == b.comp;
  }
};

inline Cochain cochain0(const SpecPtr &s, const PbwElement &u) {
  Cochain c(s, 0);
  c[0] = u;
  return c;
}
inline Cochain cochain1(const SpecPtr &s, const PbwElement &a,
                        const PbwElement &b) {
  Cochain c(s, 1);
  c[0] = a;
  c[1] = b;
  return c;
}
inline Cochain cochain2(const SpecPtr &s, const PbwElement &u) {
  Cochain c(s, 2);
  c[0] = u;
  return c;
}

// delta^0(u) = [x,u] x^ + [y,u] y^ ; delta^1(a x^ + b y^) = ([x,b]-[y,a]) x^/\y^.
inline Cochain delta(const Cochain &c) {
  const SpecPtr &s = c.spec;
  if (c.q == 0) {
    return cochain1(s, commutator(gen_x(s), c[0]), commutator(gen_y(s), c[0]));
  }
  if (c.q == 1) {
    return cochain2(s, commutator(gen_x(s), c[1]) - commutator(gen_y(s), c[0]));
  }
  throw std::invalid_argument("delta: position above the top of the complex");
}

inline bool is_cocycle(const Cochain &c) {
  if (c.q == 2)
    return true;
  return delta(c).is_zero();
}

inline std::string cochain_to_string(const Cochain &c) {
  std::string out;
  for (const auto &[label, e] : c.comp) {
    if (e.is_zero())
      continue;
    if (!out.empty())
      out += "  +  ";
    out += "(" + pbw_to_string(e) + ")";
    std::string name = label_name(ComplexId::HochschildKoszul, c.q, label);
    if (!name.empty())
      out += " " + name;
  }
  return out.empty() ? "0" : out;
}

// --- truncated slice model -------------------------------------------------

// Cohomology of one internal-degree slab with E-truncation.  Cocycles are
// taken from the bound-N slab (exact: the slab is a subcomplex since no map
// raises E-degree).  Boundaries hitting the slab are generated from sources
// at bound N+slack, because the differentials lower E-degree; everything is
// held in the coordinates of a larger ambient slab.
struct SliceModel {
  SpecPtr spec;
  int q = 0;
  long i = 0;
  int e_bound = 0;
  int slack = 0;

  SliceBasis small;   // bound N, cocycle side
  SliceBasis big;     // ambient, bound >= N + slack
  SubspaceBasis Z;     // cocycles, big coordinates
  SubspaceBasis Bfull; // boundaries from slack sources, big coordinates
  SubspaceBasis reps;  // Z reduced mod Bfull, echelonized

  long hdim() const { return reps.dim(); }
};

namespace detail {

inline SparseVec reindex(const SparseVec &v, const SliceBasis &from,
                         const SliceBasis &to) {
  SparseVec out;
  for (const auto &[idx, c] : v)
    out[to.index.at(from.monomials[idx])] = c;
  return out;
}

} // namespace detail

inline Cochain cochain_from_vector(const SparseVec &v, const SliceBasis &b) {
  Cochain c(b.spec, b.key.q);
  auto comps = from_vector(v, b);
  for (auto &[l, e] : comps)
    c.comp.at(l) = e;
  return c;
}

inline SparseVec cochain_to_vector(const Cochain &c, const SliceBasis &b) {
  return to_vector(c.comp, b);
}

inline SliceModel build_slice_model(const SpecPtr &spec, int q, long i, int N,
                                    int slack, int big_bound = -1) {
  if (big_bound < N + slack)
    big_bound = N + slack;
  SliceModel m;
  m.spec = spec;
  m.q = q;
  m.i = i;
  m.e_bound = N;
  m.slack = slack;
  m.small = slice_basis({ComplexId::HochschildKoszul, q, i, N, slack}, spec);
  m.big =
      slice_basis({ComplexId::HochschildKoszul, q, i, big_bound, slack}, spec);

  // cocycles
  if (q == 2) {
    std::vector<SparseVec> all;
    for (long j = 0; j < m.small.dim(); ++j) {
      SparseVec v;
      v[m.big.index.at(m.small.monomials[j])] = 1;
      all.push_back(std::move(v));
    }
    m.Z = echelonize(m.big.dim(), all);
  } else {
    SliceBasis target =
        slice_basis({ComplexId::HochschildKoszul, q + 1, i, N, slack}, spec);
    SparseMatrix d(target.dim(), m.small.dim());
    for (long j = 0; j < m.small.dim(); ++j) {
      Cochain e = cochain_from_vector(SparseVec{{j, Rational(1)}}, m.small);
      SparseVec img = cochain_to_vector(delta(e), target);
      for (const auto &[r, val] : img)
        d.set(r, j, val);
    }
    SubspaceBasis ker = kernel_basis(d);
    std::vector<SparseVec> embedded;
    for (const auto &v : ker.vectors)
      embedded.push_back(detail::reindex(v, m.small, m.big));
    m.Z = echelonize(m.big.dim(), embedded);
  }

  // boundaries from slack sources
  m.Bfull.ambient_dim = m.big.dim();
  if (q > 0) {
    SliceBasis src = slice_basis(
        {ComplexId::HochschildKoszul, q - 1, i, N + slack, slack}, spec);
    for (long j = 0; j < src.dim(); ++j) {
      Cochain e = cochain_from_vector(SparseVec{{j, Rational(1)}}, src);
      m.Bfull.insert(cochain_to_vector(delta(e), m.big));
    }
  }

  m.reps = quotient_representatives(m.big.dim(), m.Z.vectors, m.Bfull);
  return m;
}

struct CohomologyReport {
  int q = 0;
  long i = 0;
  long dim = 0;
  std::vector<Cochain> representatives;
  StabilizationCertificate certificate;
  SliceModel model; // the model at the certified parameters
};

inline CohomologyReport cohomology(int q, long i, const SpecPtr &spec,
                                   int N0 = 6, int slack0 = 3,
                                   int max_e_bound = 16) {
  auto compute = [&](int N, int s) -> std::vector<long> {
    return {build_slice_model(spec, q, i, N, s).hdim()};
  };
  auto [dims, cert] = stabilize(compute, N0, slack0, max_e_bound);

  CohomologyReport rep;
  rep.q = q;
  rep.i = i;
  rep.certificate = cert;
  int N = N0, s = slack0;
  if (cert.stable) {
    // first entry of the agreeing run of three
    const auto &e = cert.trace[cert.trace.size() - 3];
    N = e.e_bound;
    s = e.slack;
  } else if (!cert.trace.empty()) {
    N = cert.trace.back().e_bound;
    s = cert.trace.back().slack;
  }
  rep.model = build_slice_model(spec, q, i, N, s);
  rep.dim = rep.model.hdim();
  for (const auto &v : rep.model.reps.vectors)
    rep.representatives.push_back(cochain_from_vector(v, rep.model.big));
  return rep;
}

// True iff no nonzero rational combination of the given cocycles is a
// boundary, judged against the model's slack-generated boundary space.
inline bool classes_independent(const SliceModel &m,
                                const std::vector<Cochain> &cs) {
  std::vector<SparseVec> residuals;
  for (const auto &c : cs) {
    if (c.q != 2 && !is_cocycle(c))
      throw std::invalid_argument("classes_independent: input not a cocycle");
    SparseVec v = cochain_to_vector(c, m.big);
    residuals.push_back(m.Bfull.residual(v));
  }
  return span_dim(m.big.dim(), residuals) ==
         static_cast<long>(residuals.size());
}

inline bool is_boundary(const SliceModel &m, const Cochain &c) {
  return m.Bfull.contains(cochain_to_vector(c, m.big));
}

} // namespace lrh
