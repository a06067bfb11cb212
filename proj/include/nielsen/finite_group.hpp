#pragma once

#include "nielsen/abelian.hpp"
#include "nielsen/core.hpp"

#include <vector>

namespace nielsen {

/// Finite group presented by a full multiplication table over 0..order-1.
/// Construction validates closure, the latin-square property, identity,
/// inverses, and associativity (Light's test over a greedy generating set).
class FiniteGroupTable {
 public:
  explicit FiniteGroupTable(Eigen::MatrixXi mult, Index maxOrder = 4096);

  int mul(int a, int b) const { return mult_(a, b); }
  int inv(int a) const { return inverse_[size_t(a)]; }
  int id() const { return identity_; }
  Index order() const { return mult_.rows(); }
  const Eigen::MatrixXi& table() const { return mult_; }

 private:
  Eigen::MatrixXi mult_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

/// A finite FgAbelianGroup spelled out as a table; element index is the
/// mixed-radix encoding of the reduced coordinates (index 0 = zero element).
struct AbelianEnumeration {
  FgAbelianGroup group;
  FiniteGroupTable table;

  int indexOf(const GroupElement& x) const;
  GroupElement elementAt(int idx) const;
};

AbelianEnumeration enumerateAbelian(const FgAbelianGroup& g,
                                    Index maxOrder = 4096);

}  // namespace nielsen
