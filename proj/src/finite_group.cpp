#include "nielsen/finite_group.hpp"

#include <algorithm>

namespace nielsen {

FiniteGroupTable::FiniteGroupTable(Eigen::MatrixXi mult, Index maxOrder)
    : mult_(std::move(mult)) {
  const Index n = mult_.rows();
  if (n == 0) throw Error("group table must have positive order");
  if (mult_.cols() != n) throw Error("group table must be square");
  if (n > maxOrder) throw Error("group table exceeds the supported order");
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (mult_(i, j) < 0 || mult_(i, j) >= n)
        throw Error("group table entry out of range");

  // latin square: every row and column is a permutation
  for (Index i = 0; i < n; ++i) {
    std::vector<bool> row(size_t(n), false), col(size_t(n), false);
    for (Index j = 0; j < n; ++j) {
      if (row[size_t(mult_(i, j))] || col[size_t(mult_(j, i))])
        throw Error("group table rows/columns must be permutations");
      row[size_t(mult_(i, j))] = col[size_t(mult_(j, i))] = true;
    }
  }

  identity_ = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = mult_(e, x) == x && mult_(x, e) == x;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw Error("group table has no identity element");

  inverse_.assign(size_t(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (mult_(a, b) == identity_ && mult_(b, a) == identity_) {
        inverse_[size_t(a)] = b;
        break;
      }
    if (inverse_[size_t(a)] < 0) throw Error("group table element lacks an inverse");
  }

  // greedy generating set, then Light's associativity test on it
  std::vector<bool> closed(size_t(n), false);
  closed[size_t(identity_)] = true;
  Index closedCount = 1;
  std::vector<int> gens;
  while (closedCount < n) {
    int g = 0;
    while (closed[size_t(g)]) ++g;
    gens.push_back(g);
    closed[size_t(g)] = true;
    ++closedCount;
    for (bool grew = true; grew;) {
      grew = false;
      for (int x = 0; x < n; ++x) {
        if (!closed[size_t(x)]) continue;
        for (int y = 0; y < n; ++y) {
          if (!closed[size_t(y)]) continue;
          const int p = mult_(x, y);
          if (!closed[size_t(p)]) {
            closed[size_t(p)] = true;
            ++closedCount;
            grew = true;
          }
        }
      }
    }
  }
  for (int g : gens)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (mult_(mult_(a, g), b) != mult_(a, mult_(g, b)))
          throw Error("group table is not associative");
}

int AbelianEnumeration::indexOf(const GroupElement& x) const {
  if (!(x.group() == group)) throw Error("element not in the enumerated group");
  Int idx = 0, stride = 1;
  for (Index i = 0; i < group.rank(); ++i) {
    idx += x.coordinates()[i] * stride;
    stride *= group.factor(i);
  }
  return int(idx);
}

GroupElement AbelianEnumeration::elementAt(int idx) const {
  IntVector c = IntVector::Zero(group.rank());
  Int rest = idx;
  for (Index i = 0; i < group.rank(); ++i) {
    c[i] = rest % group.factor(i);
    rest /= group.factor(i);
  }
  return GroupElement(group, std::move(c));
}

AbelianEnumeration enumerateAbelian(const FgAbelianGroup& g, Index maxOrder) {
  Card n = g.order();
  if (!n.finite) throw Error("cannot tabulate an infinite group");
  if (n.value > maxOrder) throw Error("group too large to tabulate");
  const int order = int(n.value);

  std::vector<IntVector> coords(static_cast<size_t>(order));
  {
    IntVector c = IntVector::Zero(g.rank());
    for (int k = 0; k < order; ++k) {
      coords[size_t(k)] = c;
      for (Index i = 0; i < g.rank(); ++i) {
        if (++c[i] < g.factor(i)) break;
        c[i] = 0;
      }
    }
  }
  Eigen::MatrixXi mult(order, order);
  std::vector<Int> strides(size_t(g.rank()), 1);
  for (Index i = 1; i < g.rank(); ++i)
    strides[size_t(i)] = strides[size_t(i - 1)] * g.factor(i - 1);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      Int idx = 0;
      for (Index i = 0; i < g.rank(); ++i)
        idx += ((coords[size_t(a)][i] + coords[size_t(b)][i]) % g.factor(i)) *
               strides[size_t(i)];
      mult(a, b) = int(idx);
    }
  return {g, FiniteGroupTable(std::move(mult), maxOrder)};
}

}  // namespace nielsen
