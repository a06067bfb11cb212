#include "nielsen/reidemeister.hpp"

#include "nielsen/union_find.hpp"

#include <algorithm>
#include <map>

namespace nielsen {

OrbitPartition reidemeisterOrbits(const TwistedConjugacyData& data) {
  const Index n = data.group.order();
  for (auto [a, b] : data.pairs)
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw Error("generator image index out of range");

  std::vector<Int> parent;
  union_find::init(parent, size_t(n));
  for (int t = 0; t < n; ++t)
    for (auto [a, b] : data.pairs)
      union_find::unite(parent, t,
                        data.group.mul(data.group.inv(a), data.group.mul(t, b)));

  OrbitPartition out;
  out.orbitOf.assign(size_t(n), -1);
  std::map<Int, int> rootToOrbit;
  for (int t = 0; t < n; ++t) {
    Int r = union_find::find(parent, t);
    auto [it, fresh] = rootToOrbit.try_emplace(r, int(out.orbits.size()));
    if (fresh) out.orbits.emplace_back();
    out.orbits[size_t(it->second)].push_back(t);
    out.orbitOf[size_t(t)] = it->second;
  }
  return out;  // roots are least elements, so orbit order is already canonical
}

ReidemeisterAbelian reidemeisterAbelian(const GroupHom& f1, const GroupHom& f2) {
  auto coker = cokernel(f1 - f2);
  return {coker.group, coker.group.order(), coker.projection};
}

UpperBoundReport nielsenUpperBound(const Card& reidemeisterCount) {
  UpperBoundReport r;
  r.cardinality = reidemeisterCount;
  if (!reidemeisterCount.finite) {
    r.text = "no finite upper bound from R";
  } else {
    r.text = "MCC <= " + std::to_string(reidemeisterCount.value) +
             " (valid when n != 2)";
  }
  return r;
}

}  // namespace nielsen
