#pragma once

#include "nielsen/core.hpp"

#include <limits>
#include <vector>

namespace nielsen {

/// d = u * input * v with u, v unimodular; d is diagonal, nonnegative, and each
/// diagonal entry divides the next. uInv and vInv are the exact integer inverses.
struct SmithDecomposition {
  IntMatrix d, u, v, uInv, vInv;

  Index rank() const {
    Index r = 0;
    for (Index i = 0; i < std::min(d.rows(), d.cols()); ++i)
      if (d(i, i) != 0) ++r;
    return r;
  }
};

namespace smith_detail {

inline Wide checkedAdd(Wide a, Wide b) {
  Wide r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error("matrix reduction exceeded the exact integer range");
  return r;
}

inline Wide checkedMul(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error("matrix reduction exceeded the exact integer range");
  return r;
}

inline Wide magnitude(Wide a) { return a < 0 ? -a : a; }

/// Quotient with remainder of minimal magnitude; |a - q*b| <= |b|/2.
inline Wide roundQuotient(Wide a, Wide b) {
  Wide q = a / b;
  Wide r = a - q * b;
  Wide rAbs = magnitude(r), bAbs = magnitude(b);
  if (rAbs > bAbs - rAbs) q += (r < 0) == (b < 0) ? 1 : -1;
  return q;
}

/// Dense working matrix during the reduction. Entries are kept wider than the
/// public 64-bit type because intermediate values can grow far beyond the
/// input scale; every arithmetic step is overflow-checked so range exhaustion
/// surfaces as an Error instead of silent wraparound.
class Grid {
 public:
  Grid(Index rows, Index cols)
      : rows_(rows), cols_(cols),
        cells_(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0) {}

  static Grid identity(Index n) {
    Grid g(n, n);
    for (Index i = 0; i < n; ++i) g(i, i) = 1;
    return g;
  }

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }

  Wide& operator()(Index i, Index j) {
    return cells_[static_cast<size_t>(i * cols_ + j)];
  }
  Wide operator()(Index i, Index j) const {
    return cells_[static_cast<size_t>(i * cols_ + j)];
  }

  void rowCombine(Index i, Index t, Wide q) {  // row i -= q * row t
    for (Index j = 0; j < cols_; ++j)
      (*this)(i, j) = checkedAdd((*this)(i, j), -checkedMul(q, (*this)(t, j)));
  }
  void colCombine(Index j, Index t, Wide q) {  // col j -= q * col t
    for (Index i = 0; i < rows_; ++i)
      (*this)(i, j) = checkedAdd((*this)(i, j), -checkedMul(q, (*this)(i, t)));
  }
  void rowSwap(Index a, Index b) {
    for (Index j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void colSwap(Index a, Index b) {
    for (Index i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  void rowNegate(Index i) {
    for (Index j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }
  void colNegate(Index j) {
    for (Index i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
  }

  IntMatrix toInt() const {
    constexpr Wide lo = std::numeric_limits<Int>::min();
    constexpr Wide hi = std::numeric_limits<Int>::max();
    IntMatrix m(rows_, cols_);
    for (Index i = 0; i < rows_; ++i)
      for (Index j = 0; j < cols_; ++j) {
        Wide c = (*this)(i, j);
        if (c < lo || c > hi)
          throw Error("matrix reduction result exceeds the 64-bit range");
        m(i, j) = Int(c);
      }
    return m;
  }

 private:
  Index rows_, cols_;
  std::vector<Wide> cells_;
};

}  // namespace smith_detail

/// Elimination with a globally re-selected smallest-magnitude pivot and
/// round-to-nearest quotients, which keeps coefficient growth modest on the
/// small dense inputs this library works with. Inputs whose reduction still
/// escapes the exact range are rejected with an Error rather than computed
/// approximately.
template <typename Derived>
SmithDecomposition smithNormalForm(const Eigen::MatrixBase<Derived>& input) {
  using smith_detail::Grid;
  using smith_detail::magnitude;
  using smith_detail::roundQuotient;

  const Index rows = input.rows(), cols = input.cols();
  Grid w(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) w(i, j) = static_cast<Wide>(input(i, j));
  Grid u = Grid::identity(rows), uInv = Grid::identity(rows);
  Grid v = Grid::identity(cols), vInv = Grid::identity(cols);

  auto rowSub = [&](Index i, Index t, Wide q) {  // row i -= q * row t
    w.rowCombine(i, t, q);
    u.rowCombine(i, t, q);
    uInv.colCombine(t, i, -q);  // inverse picks up: col t += q * col i
  };
  auto rowAdd = [&](Index t, Index i) {  // row t += row i
    w.rowCombine(t, i, -1);
    u.rowCombine(t, i, -1);
    uInv.colCombine(i, t, 1);  // inverse picks up: col i -= col t
  };
  auto rowSwap = [&](Index a, Index b) {
    w.rowSwap(a, b);
    u.rowSwap(a, b);
    uInv.colSwap(a, b);
  };
  auto rowNeg = [&](Index i) {
    w.rowNegate(i);
    u.rowNegate(i);
    uInv.colNegate(i);
  };
  auto colSub = [&](Index j, Index t, Wide q) {  // col j -= q * col t
    w.colCombine(j, t, q);
    v.colCombine(j, t, q);
    vInv.rowCombine(t, j, -q);  // inverse picks up: row t += q * row j
  };
  auto colSwap = [&](Index a, Index b) {
    w.colSwap(a, b);
    v.colSwap(a, b);
    vInv.rowSwap(a, b);
  };

  bool trailingZero = false;
  for (Index t = 0; t < std::min(rows, cols) && !trailingZero; ++t) {
    for (int guard = 0;; ++guard) {
      if (guard > 200000)
        throw Error("internal error: matrix reduction failed to settle");

      // smallest nonzero entry of the whole trailing block becomes the pivot;
      // re-selecting it every round soaks up small remainders early and is
      // what keeps intermediate growth in check in practice
      Index pi = -1, pj = -1;
      for (Index i = t; i < rows; ++i)
        for (Index j = t; j < cols; ++j)
          if (w(i, j) != 0 &&
              (pi < 0 || magnitude(w(i, j)) < magnitude(w(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) {
        trailingZero = true;
        break;
      }
      if (pi != t) rowSwap(pi, t);
      if (pj != t) colSwap(pj, t);

      bool dirty = false;  // some remainder survived; re-pivot and go again
      for (Index i = t + 1; i < rows; ++i) {
        if (w(i, t) == 0) continue;
        rowSub(i, t, roundQuotient(w(i, t), w(t, t)));
        if (w(i, t) != 0) dirty = true;
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (w(t, j) == 0) continue;
        colSub(j, t, roundQuotient(w(t, j), w(t, t)));
        if (w(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // the pivot must divide the whole trailing block; fold a bad row into
      // row t so the next round shrinks the pivot to the joint gcd
      Index badRow = -1;
      for (Index i = t + 1; i < rows && badRow < 0; ++i)
        for (Index j = t + 1; j < cols; ++j)
          if (w(i, j) % w(t, t) != 0) {
            badRow = i;
            break;
          }
      if (badRow < 0) break;
      rowAdd(t, badRow);
    }
    if (!trailingZero && w(t, t) < 0) rowNeg(t);
  }

  SmithDecomposition s;
  s.d = w.toInt();
  s.u = u.toInt();
  s.v = v.toInt();
  s.uInv = uInv.toInt();
  s.vInv = vInv.toInt();
  return s;
}

}  // namespace nielsen
