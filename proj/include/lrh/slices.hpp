#pragma once

#include "lrh/pbw.hpp"
#include "lrh/sparse.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrh {

enum class ComplexId { HochschildKoszul, XComplex };

// One internal-degree slab of a cochain space, E-truncated at e_bound.
struct SliceKey {
  ComplexId complex_id = ComplexId::HochschildKoszul;
  int q = 0;            // cochain position
  long internal_degree = 0;
  int e_bound = 0;      // max E-exponent N
  int slack = 0;        // extra E-degrees for boundary sources

  auto operator<=>(const SliceKey &) const = default;
};

// Exterior labels.
//  - Hochschild complex: q=0 -> {0}; q=1 -> {0: x^, 1: y^}; q=2 -> {0: x^/\y^}.
//  - X-complex: 4-bit mask over (x^, y^, D^, E^) with popcount q.
inline std::vector<int> complex_labels(ComplexId id, int q) {
  if (id == ComplexId::HochschildKoszul) {
    if (q == 0 || q == 2)
      return {0};
    if (q == 1)
      return {0, 1};
    return {};
  }
  std::vector<int> out;
  for (int mask = 0; mask < 16; ++mask) {
    int pc = __builtin_popcount(static_cast<unsigned>(mask));
    if (pc == q)
      out.push_back(mask);
  }
  return out;
}

// Internal weight carried by a dual exterior label (the degree the label
// subtracts from the tensor factor).
inline long label_weight(const AlgebraSpec &spec, ComplexId id, int q,
                         int label) {
  if (id == ComplexId::HochschildKoszul)
    return q; // x^ and y^ both weigh 1
  long w = 0;
  if (label & 1)
    w += 1; // x^
  if (label & 2)
    w += 1; // y^
  if (label & 4)
    w += spec.d_deg; // D^
  // E^ weighs 0
  return w;
}

inline std::string label_name(ComplexId id, int q, int label) {
  if (id == ComplexId::HochschildKoszul) {
    if (q == 0)
      return "";
    if (q == 1)
      return label == 0 ? "x^" : "y^";
    return "x^/\\y^";
  }
  static const char *names[4] = {"x^", "y^", "D^", "E^"};
  std::string out;
  for (int b = 0; b < 4; ++b)
    if (label & (1 << b)) {
      if (!out.empty())
        out += "/\\";
      out += names[b];
    }
  return out;
}

struct SliceBasis {
  SliceKey key;
  SpecPtr spec;
  // (label, PBW exponent tuple), graded-lexicographic within each label
  std::vector<std::pair<int, PbwTerm>> monomials;
  std::map<std::pair<int, PbwTerm>, long> index;

  long dim() const { return static_cast<long>(monomials.size()); }
};

// All monomials x^a y^b D^c E^m (x) label with
// a + b + d_deg*c = internal_degree + label weight and m <= e_bound.
inline SliceBasis slice_basis(const SliceKey &key, const SpecPtr &spec) {
  SliceBasis b;
  b.key = key;
  b.spec = spec;
  for (int label : complex_labels(key.complex_id, key.q)) {
    long target =
        key.internal_degree + label_weight(*spec, key.complex_id, key.q, label);
    if (target < 0)
      continue;
    long d = spec->d_deg;
    for (long c = 0; d * c <= target; ++c) {
      for (long a = 0; a + d * c <= target; ++a) {
        long bb = target - a - d * c;
        for (int m = 0; m <= key.e_bound; ++m) {
          PbwTerm t{static_cast<int>(a), static_cast<int>(bb),
                    static_cast<int>(c), m};
          b.index.emplace(std::make_pair(label, t),
                          static_cast<long>(b.monomials.size()));
          b.monomials.emplace_back(label, t);
        }
      }
      if (d == 0)
        break;
    }
  }
  return b;
}

// Coordinates of a labeled family of PBW elements (one per label) in a slab.
// Throws if any term falls outside the slab.
inline SparseVec to_vector(const std::map<int, PbwElement> &components,
                           const SliceBasis &b) {
  SparseVec v;
  for (const auto &[label, elem] : components) {
    for (const auto &[t, c] : elem.terms) {
      auto it = b.index.find({label, t});
      if (it == b.index.end())
        throw std::invalid_argument("to_vector: element outside slab");
      v[it->second] = c;
    }
  }
  return v;
}

inline std::map<int, PbwElement> from_vector(const SparseVec &v,
                                             const SliceBasis &b) {
  std::map<int, PbwElement> out;
  for (int label : complex_labels(b.key.complex_id, b.key.q))
    out.emplace(label, PbwElement(b.spec));
  for (const auto &[idx, c] : v) {
    if (idx < 0 || idx >= b.dim())
      throw std::out_of_range("from_vector: index outside basis");
    const auto &[label, t] = b.monomials[idx];
    out[label].add_term(t, c);
  }
  return out;
}

// --- stabilization ---------------------------------------------------------

struct StabilizationCertificate {
  struct Entry {
    int e_bound;
    int slack;
    std::vector<long> dims;
  };
  std::vector<Entry> trace;
  bool stable = false;
};

// Runs compute at (N0, s0), (N0+1, s0+1), ... until three consecutive results
// agree; those dims are returned with the trace.  Non-stabilization past
// max_e_bound yields verdict not-stable with the last dims.
inline std::pair<std::vector<long>, StabilizationCertificate>
stabilize(const std::function<std::vector<long>(int, int)> &compute,
          int e_bound0, int slack0, int max_e_bound = 16) {
  StabilizationCertificate cert;
  for (int k = 0;; ++k) {
    int n = e_bound0 + k;
    int s = slack0 + k;
    if (n > max_e_bound)
      break;
    cert.trace.push_back({n, s, compute(n, s)});
    size_t sz = cert.trace.size();
    if (sz >= 3 && cert.trace[sz - 1].dims == cert.trace[sz - 2].dims &&
        cert.trace[sz - 2].dims == cert.trace[sz - 3].dims) {
      cert.stable = true;
      return {cert.trace[sz - 3].dims, cert};
    }
  }
  cert.stable = false;
  return {cert.trace.empty() ? std::vector<long>{} : cert.trace.back().dims,
          cert};
}

} // namespace lrh
