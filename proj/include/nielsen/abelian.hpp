#pragma once

#include "nielsen/core.hpp"

#include <vector>

namespace nielsen {

/// Finitely generated abelian group as an invariant-factor list: a torsion
/// divisibility chain d1 | d2 | ... (each >= 2) followed by zeros, one per
/// free summand. Equality is equality of isomorphism type.
class FgAbelianGroup {
 public:
  FgAbelianGroup() = default;  // trivial group
  explicit FgAbelianGroup(std::vector<Int> factors);

  static FgAbelianGroup trivial() { return FgAbelianGroup{}; }
  static FgAbelianGroup integers() { return FgAbelianGroup({0}); }
  static FgAbelianGroup cyclic(Int n);
  static FgAbelianGroup freeAbelian(Index rank);
  /// Normalizes an arbitrary list of cyclic orders (0 = infinite) into
  /// canonical invariant factors.
  static FgAbelianGroup fromCyclicFactors(const std::vector<Int>& orders);

  const std::vector<Int>& invariantFactors() const { return factors_; }
  Index rank() const { return Index(factors_.size()); }  // generator count
  Index freeRank() const;
  Int factor(Index i) const { return factors_[size_t(i)]; }
  bool isTrivial() const { return factors_.empty(); }
  bool isFinite() const { return freeRank() == 0; }
  Card order() const;

  friend bool operator==(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<Int> factors_;
};

/// Element of an FgAbelianGroup; coordinates are kept reduced into [0, d_i)
/// on torsion generators.
class GroupElement {
 public:
  GroupElement(FgAbelianGroup group, IntVector coords);
  static GroupElement zero(const FgAbelianGroup& group);

  const FgAbelianGroup& group() const { return group_; }
  const IntVector& coordinates() const { return coords_; }
  bool isZero() const;

  GroupElement operator+(const GroupElement& other) const;
  GroupElement operator-(const GroupElement& other) const;
  GroupElement operator-() const;
  GroupElement times(Int k) const;

  friend bool operator==(const GroupElement& a, const GroupElement& b);

 private:
  FgAbelianGroup group_;
  IntVector coords_;
};

Card elementOrder(const GroupElement& x);

/// Homomorphism between FgAbelianGroups as a codomain-rank x domain-rank
/// integer matrix; construction rejects matrices that do not respect
/// generator orders (in particular torsion cannot map into a Z factor).
class GroupHom {
 public:
  GroupHom(FgAbelianGroup domain, FgAbelianGroup codomain, IntMatrix matrix);
  static GroupHom identity(const FgAbelianGroup& g);
  static GroupHom zero(FgAbelianGroup domain, FgAbelianGroup codomain);

  const FgAbelianGroup& domain() const { return domain_; }
  const FgAbelianGroup& codomain() const { return codomain_; }
  const IntMatrix& matrix() const { return matrix_; }

  GroupElement operator()(const GroupElement& x) const;
  GroupHom compose(const GroupHom& inner) const;  // *this after inner
  GroupHom operator+(const GroupHom& other) const;
  GroupHom operator-(const GroupHom& other) const;

 private:
  FgAbelianGroup domain_, codomain_;
  IntMatrix matrix_;
};

struct CokernelResult {
  FgAbelianGroup group;
  GroupHom projection;  // codomain of the input hom onto the cokernel
};
CokernelResult cokernel(const GroupHom& h);

struct KernelResult {
  FgAbelianGroup group;                  // isomorphism type of the kernel
  std::vector<GroupElement> generators;  // generating set in domain coordinates
};
KernelResult kernel(const GroupHom& h);

/// All elements of a finite group in deterministic mixed-radix order.
std::vector<GroupElement> enumerateElements(const FgAbelianGroup& g,
                                            Int cap = 1 << 20);

/// Readable name, e.g. "0", "Z", "Z/6", "Z/2 + Z/4 + Z^2".
std::string formatGroup(const FgAbelianGroup& g);

}  // namespace nielsen
