#pragma once

#include "lrh/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace lrh {

// Sparse vector over the rationals: index -> nonzero entry.
using SparseVec = std::map<long, Rational>;

inline void vec_add_scaled(SparseVec &dst, const SparseVec &src,
                           const Rational &factor) {
  if (factor == 0)
    return;
  for (const auto &[idx, val] : src) {
    auto it = dst.find(idx);
    if (it == dst.end()) {
      dst.emplace(idx, factor * val);
    } else {
      it->second += factor * val;
      if (it->second == 0)
        dst.erase(it);
    }
  }
}

inline SparseVec vec_scaled(const SparseVec &v, const Rational &factor) {
  SparseVec out;
  if (factor == 0)
    return out;
  for (const auto &[idx, val] : v)
    out.emplace(idx, factor * val);
  return out;
}

inline Rational vec_get(const SparseVec &v, long idx) {
  auto it = v.find(idx);
  return it == v.end() ? Rational(0) : it->second;
}

struct SparseMatrix {
  long rows = 0;
  long cols = 0;
  std::vector<SparseVec> row_data; // size == rows

  SparseMatrix() = default;
  SparseMatrix(long r, long c) : rows(r), cols(c), row_data(r) {}

  void set(long r, long c, const Rational &v) {
    if (r < 0 || r >= rows || c < 0 || c >= cols)
      throw std::out_of_range("SparseMatrix::set index");
    if (v == 0)
      row_data[r].erase(c);
    else
      row_data[r][c] = v;
  }

  Rational get(long r, long c) const { return vec_get(row_data[r], c); }

  SparseVec apply(const SparseVec &x) const {
    // y = M x, with x indexed by columns.
    SparseVec y;
    for (long r = 0; r < rows; ++r) {
      Rational acc = 0;
      const SparseVec &row = row_data[r];
      if (row.size() <= x.size()) {
        for (const auto &[c, v] : row)
          acc += v * vec_get(x, c);
      } else {
        for (const auto &[c, v] : x)
          acc += v * vec_get(row, c);
      }
      if (acc != 0)
        y[r] = acc;
    }
    return y;
  }

  std::vector<SparseVec> columns() const {
    std::vector<SparseVec> cols_out(cols);
    for (long r = 0; r < rows; ++r)
      for (const auto &[c, v] : row_data[r])
        cols_out[c][r] = v;
    return cols_out;
  }
};

inline SparseMatrix mat_mul(const SparseMatrix &a, const SparseMatrix &b) {
  if (a.cols != b.rows)
    throw std::invalid_argument("mat_mul: shape mismatch");
  SparseMatrix out(a.rows, b.cols);
  for (long r = 0; r < a.rows; ++r)
    for (const auto &[k, av] : a.row_data[r])
      for (const auto &[c, bv] : b.row_data[k]) {
        Rational v = out.get(r, c) + av * bv;
        out.set(r, c, v);
      }
  return out;
}

// Row-reduced echelon basis of a subspace: pivot columns strictly increasing,
// pivot entries equal to 1, pivot columns cleared in the other vectors.
struct SubspaceBasis {
  long ambient_dim = 0;
  std::vector<SparseVec> vectors;          // in RREF order
  std::vector<long> pivots;                // pivots[k] = pivot index of vectors[k]

  long dim() const { return static_cast<long>(vectors.size()); }

  // Reduces v against the basis in place; returns the coefficient used on
  // each basis vector (RREF makes this just v[pivot_k]).
  std::vector<Rational> reduce(SparseVec &v) const {
    std::vector<Rational> coeffs(vectors.size(), Rational(0));
    for (size_t k = 0; k < vectors.size(); ++k) {
      Rational c = vec_get(v, pivots[k]);
      if (c != 0) {
        coeffs[k] = c;
        vec_add_scaled(v, vectors[k], -c);
      }
    }
    return coeffs;
  }

  SparseVec residual(const SparseVec &v) const {
    SparseVec r = v;
    reduce(r);
    return r;
  }

  bool contains(const SparseVec &v) const { return residual(v).empty(); }

  // Inserts v if independent.  Keeps full RREF.  Returns true if inserted.
  bool insert(SparseVec v) {
    reduce(v);
    if (v.empty())
      return false;
    long piv = v.begin()->first;
    Rational lead = v.begin()->second;
    if (lead != 1) {
      for (auto &[idx, val] : v)
        val /= lead;
    }
    // clear the new pivot column in existing vectors
    for (auto &w : vectors) {
      Rational c = vec_get(w, piv);
      if (c != 0)
        vec_add_scaled(w, v, -c);
    }
    auto pos = std::upper_bound(pivots.begin(), pivots.end(), piv);
    size_t at = pos - pivots.begin();
    pivots.insert(pos, piv);
    vectors.insert(vectors.begin() + at, std::move(v));
    return true;
  }
};

inline SubspaceBasis echelonize(long ambient_dim,
                                const std::vector<SparseVec> &vecs) {
  SubspaceBasis b;
  b.ambient_dim = ambient_dim;
  for (const auto &v : vecs)
    b.insert(v);
  return b;
}

// --- ratmat operations -----------------------------------------------------

// Rank by fraction-free-ish Gaussian elimination with Markowitz-style
// sparsity pivoting (intermediate swell is the dominant cost here).
inline long rank(const SparseMatrix &m) {
  std::vector<SparseVec> work = m.row_data;
  std::vector<bool> row_done(work.size(), false);
  std::vector<long> col_count(m.cols, 0);
  for (const auto &row : work)
    for (const auto &[c, v] : row)
      ++col_count[c];

  long rk = 0;
  for (;;) {
    // Markowitz: minimize (nnz(row)-1)*(nnz(col)-1) over available entries.
    long best_r = -1, best_c = -1;
    long best_score = -1;
    for (size_t r = 0; r < work.size(); ++r) {
      if (row_done[r] || work[r].empty())
        continue;
      long rn = static_cast<long>(work[r].size()) - 1;
      for (const auto &[c, v] : work[r]) {
        long score = rn * (col_count[c] - 1);
        if (best_score < 0 || score < best_score) {
          best_score = score;
          best_r = static_cast<long>(r);
          best_c = c;
        }
        if (best_score == 0)
          break;
      }
      if (best_score == 0)
        break;
    }
    if (best_r < 0)
      break;

    ++rk;
    row_done[best_r] = true;
    const SparseVec pivot_row = work[best_r];
    for (const auto &[c, v] : pivot_row)
      --col_count[c];
    Rational pivot = vec_get(pivot_row, best_c);
    for (size_t r = 0; r < work.size(); ++r) {
      if (row_done[r])
        continue;
      Rational c = vec_get(work[r], best_c);
      if (c == 0)
        continue;
      for (const auto &[cc, vv] : work[r])
        --col_count[cc];
      vec_add_scaled(work[r], pivot_row, -c / pivot);
      for (const auto &[cc, vv] : work[r])
        ++col_count[cc];
    }
  }
  return rk;
}

// Echelonized basis of the column space.
inline SubspaceBasis image_basis(const SparseMatrix &m) {
  return echelonize(m.rows, m.columns());
}

// Echelonized basis of the right null space; dim == cols - rank.
inline SubspaceBasis kernel_basis(const SparseMatrix &m) {
  SubspaceBasis row_space = echelonize(m.cols, m.row_data);
  std::vector<bool> is_pivot(m.cols, false);
  for (long p : row_space.pivots)
    is_pivot[p] = true;

  std::vector<SparseVec> gens;
  for (long f = 0; f < m.cols; ++f) {
    if (is_pivot[f])
      continue;
    SparseVec v;
    v[f] = 1;
    for (size_t k = 0; k < row_space.vectors.size(); ++k) {
      Rational c = vec_get(row_space.vectors[k], f);
      if (c != 0)
        v[row_space.pivots[k]] = -c;
    }
    gens.push_back(std::move(v));
  }
  return echelonize(m.cols, gens);
}

// Coefficients expressing v in s, if v lies in span(s).
inline std::optional<std::vector<Rational>> membership(const SparseVec &v,
                                                       const SubspaceBasis &s,
                                                       long ambient_dim) {
  if (ambient_dim != s.ambient_dim)
    throw std::invalid_argument("membership: ambient dimension mismatch");
  SparseVec r = v;
  auto coeffs = s.reduce(r);
  if (!r.empty())
    return std::nullopt;
  return coeffs;
}

inline long quotient_dim(long ambient_dim, const SubspaceBasis &sub) {
  if (sub.ambient_dim != ambient_dim)
    throw std::invalid_argument("quotient_dim: ambient dimension mismatch");
  return ambient_dim - sub.dim();
}

inline long span_dim(long ambient_dim, const std::vector<SparseVec> &vecs) {
  return echelonize(ambient_dim, vecs).dim();
}

// dim(span(a) ∩ span(b)) = dim a + dim b - dim(a+b).
inline long intersection_dim(long ambient_dim, const SubspaceBasis &a,
                             const SubspaceBasis &b) {
  SubspaceBasis sum = a;
  for (const auto &v : b.vectors)
    sum.insert(v);
  return a.dim() + b.dim() - sum.dim();
}

// Basis of span(vecs) ∩ {vectors supported on coordinates with allowed[i]}.
// Eliminate with the disallowed coordinates ordered first: rows whose pivot
// falls in the allowed block have no disallowed support.
inline SubspaceBasis
intersect_with_coordinates(long ambient_dim, const std::vector<SparseVec> &vecs,
                           const std::vector<bool> &allowed) {
  std::vector<long> perm(ambient_dim), inv(ambient_dim);
  long next = 0;
  for (long i = 0; i < ambient_dim; ++i)
    if (!allowed[i])
      perm[i] = next++;
  long boundary = next;
  for (long i = 0; i < ambient_dim; ++i)
    if (allowed[i])
      perm[i] = next++;
  for (long i = 0; i < ambient_dim; ++i)
    inv[perm[i]] = i;

  std::vector<SparseVec> permuted;
  permuted.reserve(vecs.size());
  for (const auto &v : vecs) {
    SparseVec w;
    for (const auto &[idx, val] : v)
      w[perm[idx]] = val;
    permuted.push_back(std::move(w));
  }
  SubspaceBasis ech = echelonize(ambient_dim, permuted);
  SubspaceBasis out;
  out.ambient_dim = ambient_dim;
  for (size_t k = 0; k < ech.vectors.size(); ++k) {
    if (ech.pivots[k] < boundary)
      continue;
    SparseVec w;
    for (const auto &[idx, val] : ech.vectors[k])
      w[inv[idx]] = val;
    out.insert(std::move(w));
  }
  return out;
}

// Deterministic representatives of span(zs) modulo sub: reduce each generator
// against sub, then echelonize the residuals.  The representatives remain in
// span(zs) + span(sub).
inline SubspaceBasis quotient_representatives(long ambient_dim,
                                              const std::vector<SparseVec> &zs,
                                              const SubspaceBasis &sub) {
  SubspaceBasis reps;
  reps.ambient_dim = ambient_dim;
  for (const auto &z : zs)
    reps.insert(sub.residual(z));
  return reps;
}

} // namespace lrh
