#include "nielsen/circle.hpp"

namespace nielsen {

CircleMapPairClass::CircleMapPairClass(GroupHom delta) : delta_(std::move(delta)) {
  if (!(delta_.codomain() == FgAbelianGroup::integers()))
    throw Error("circle-target data needs delta with codomain Z");
}

CircleMapPairClass CircleMapPairClass::fromRow(const IntVector& deltaRow) {
  IntMatrix m(1, deltaRow.size());
  m.row(0) = deltaRow;
  return CircleMapPairClass(GroupHom(FgAbelianGroup::freeAbelian(deltaRow.size()),
                                     FgAbelianGroup::integers(), std::move(m)));
}

Int circleNielsen(const CircleMapPairClass& pair) {
  Int d = 0;
  for (Index j = 0; j < pair.delta().matrix().cols(); ++j)
    d = gcdInt(d, pair.delta().matrix()(0, j));
  return d;
}

Int circleMcc(const CircleMapPairClass& pair) { return circleNielsen(pair); }

LoosenessReport loosenessReport(const CircleMapPairClass& pair) {
  LoosenessReport r;
  r.nielsen = circleNielsen(pair);
  const bool vanish = r.nielsen == 0;
  r.homotopic = r.loose = r.nielsenZero = vanish;
  r.omegaTildeZero = r.omegaZero = r.muOmegaZero = vanish;
  return r;
}

LieGroupReport lieGroupNielsen(const GroupHom& f1, const GroupHom& f2) {
  LieGroupReport r;
  auto coker = cokernel(f1 - f2);
  r.classGroup = coker.group;
  r.classCount = coker.group.order();
  if (!r.classCount.finite) {
    r.resolved = true;  // infinitely many essential-free classes: all inessential
    r.nielsen = 0;
  } else if (f1.codomain() == FgAbelianGroup::integers()) {
    r.resolved = true;
    r.nielsen = circleNielsen(CircleMapPairClass(f1 - f2));
  }
  return r;
}

FiberTypeReport fiberType(const GroupHom& f1, const GroupHom& f2) {
  GroupHom delta = f1 - f2;
  if (!(delta.codomain() == FgAbelianGroup::integers()))
    throw Error("fiber structure is computed for circle targets only");
  FiberTypeReport r{false, kernel(delta), Card::of(1), cokernel(delta).group, ""};
  r.productWithZ = delta.matrix().isZero();
  if (r.productWithZ) {
    r.description = "M x Z";
  } else {
    r.coveringIndex = Card::infinite();  // image is d*Z, so the kernel has infinite index
    r.description = "(infinite cyclic cover of M) x " + formatGroup(r.components);
  }
  return r;
}

}  // namespace nielsen
