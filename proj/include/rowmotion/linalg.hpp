#pragma once

// Exact elimination on Eigen matrices with exact scalar types.

#include "rowmotion/polynomial.hpp"
#include "rowmotion/rational.hpp"

#include <vector>

namespace rowmotion {

inline bool is_zero(const Integer& x) { return x == 0; }
inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const RationalFunction& x) { return x.is_zero(); }

// Pivot size for the field elimination: smaller is preferred.
inline int pivot_weight(const Rational&) { return 0; }
inline int pivot_weight(const RationalFunction& x) { return x.weight(); }

// Fraction-free (Bareiss) row echelon form over an integral domain. Pivots are
// searched only in the first `pivot_cols` columns (all if negative); the
// remaining columns are carried along. Returns the pivot columns, one per
// nonzero row of the result.
template <class T>
std::vector<Eigen::Index> bareiss_echelon(Matrix<T>& m, Eigen::Index pivot_cols = -1) {
  using Eigen::Index;
  const Index rows = m.rows();
  const Index cols = m.cols();
  if (pivot_cols < 0 || pivot_cols > cols) pivot_cols = cols;
  std::vector<Index> pivots;
  T prev(1);
  Index r = 0;
  for (Index c = 0; c < pivot_cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const T pivot = m(r, c);
    for (Index i = r + 1; i < rows; ++i) {
      const T factor = m(i, c);
      for (Index j = c + 1; j < cols; ++j) {
        T v = pivot * m(i, j);
        if (!is_zero(factor)) v -= factor * m(r, j);
        m(i, j) = v / prev;
      }
      m(i, c) = T(0);
    }
    prev = pivot;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Rank over the fraction field of an integral domain.
template <class T>
Eigen::Index rank(Matrix<T> m) {
  return static_cast<Eigen::Index>(bareiss_echelon(m).size());
}

// Reduced row echelon form over a field, pivoting in the first `pivot_cols`
// columns and choosing, within each column, the nonzero entry of least
// pivot_weight. Returns the pivot columns.
template <class T>
std::vector<Eigen::Index> reduce_rows(Matrix<T>& m, Eigen::Index pivot_cols = -1) {
  using Eigen::Index;
  const Index rows = m.rows();
  const Index cols = m.cols();
  if (pivot_cols < 0 || pivot_cols > cols) pivot_cols = cols;
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < pivot_cols && r < rows; ++c) {
    Index best = -1;
    for (Index i = r; i < rows; ++i) {
      if (is_zero(m(i, c))) continue;
      if (best < 0 || pivot_weight(m(i, c)) < pivot_weight(m(best, c))) best = i;
    }
    if (best < 0) continue;
    if (best != r) m.row(best).swap(m.row(r));
    const T inv = T(1) / m(r, c);
    for (Index j = c; j < cols; ++j)
      if (!is_zero(m(r, j))) m(r, j) = m(r, j) * inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const T factor = m(i, c);
      for (Index j = c; j < cols; ++j)
        if (!is_zero(m(r, j))) m(i, j) = m(i, j) - factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Clears denominators of a rational vector, returning the integer vector and
// the positive common multiplier.
inline std::pair<Vector<Integer>, Integer> clear_denominators(const Vector<Rational>& v) {
  Integer den = 1;
  for (Eigen::Index k = 0; k < v.size(); ++k) den = lcm(den, denominator_of(v(k)));
  Vector<Integer> out(v.size());
  for (Eigen::Index k = 0; k < v.size(); ++k) out(k) = numerator_of(v(k) * Rational(den));
  return {out, den};
}

}  // namespace rowmotion
