#pragma once

#include "nielsen/abelian.hpp"
#include "nielsen/finite_group.hpp"

#include <string>
#include <utility>
#include <vector>

namespace nielsen {

/// Twisted-conjugacy input: the target group as a table, plus the image pair
/// (f1(g), f2(g)) for each generator g of the source group. The source group
/// itself is never needed, only these paired images.
struct TwistedConjugacyData {
  FiniteGroupTable group;
  std::vector<std::pair<int, int>> pairs;
};

struct OrbitPartition {
  std::vector<std::vector<int>> orbits;  // each sorted, ordered by least element
  std::vector<int> orbitOf;              // element index -> orbit index
  Index count() const { return Index(orbits.size()); }
};

/// Partition of the target group into classes of theta ~ f1(g)^-1 * theta * f2(g).
OrbitPartition reidemeisterOrbits(const TwistedConjugacyData& data);

/// Abelian case: the class set is the cokernel of f1 - f2.
struct ReidemeisterAbelian {
  FgAbelianGroup group;
  Card cardinality;
  GroupHom projection;  // target group onto the class set
};
ReidemeisterAbelian reidemeisterAbelian(const GroupHom& f1, const GroupHom& f2);

/// Renders the bound chain N <= MCC <= #R; the upper bound needs target
/// dimension != 2.
struct UpperBoundReport {
  Card cardinality;
  bool requiresTargetDimNot2 = true;
  std::string text;
};
UpperBoundReport nielsenUpperBound(const Card& reidemeisterCount);

}  // namespace nielsen
