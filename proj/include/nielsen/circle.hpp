#pragma once

#include "nielsen/abelian.hpp"

#include <string>

namespace nielsen {

/// Homotopy data of a pair of maps into the circle: only the difference
/// homomorphism delta = f1 - f2 on first homology matters. Torsion generators
/// necessarily map to zero (enforced by GroupHom construction).
class CircleMapPairClass {
 public:
  explicit CircleMapPairClass(GroupHom delta);
  /// Free first homology Z^m with delta given by one row of integers.
  static CircleMapPairClass fromRow(const IntVector& deltaRow);

  const FgAbelianGroup& h1M() const { return delta_.domain(); }
  const GroupHom& delta() const { return delta_; }

 private:
  GroupHom delta_;
};

/// Nielsen number: the nonnegative generator d of the image of delta.
Int circleNielsen(const CircleMapPairClass& pair);

/// Minimum number of coincidence components; equals the Nielsen number here.
Int circleMcc(const CircleMapPairClass& pair);

/// Six equivalent descriptions of looseness; all hold exactly when d == 0.
struct LoosenessReport {
  Int nielsen = 0;
  bool homotopic = false;        // f1 ~ f2
  bool loose = false;            // the pair can be deformed coincidence-free
  bool nielsenZero = false;      // N(f1, f2) == 0
  bool omegaTildeZero = false;   // full path-space obstruction vanishes
  bool omegaZero = false;        // bordism obstruction vanishes
  bool muOmegaZero = false;      // its unframed image vanishes
};
LoosenessReport loosenessReport(const CircleMapPairClass& pair);

/// For Lie-group targets the Nielsen number is 0 or the full class count.
/// Resolved outright when the class set is infinite (gives 0) or the target
/// is the circle (gives d); otherwise both alternatives are reported.
struct LieGroupReport {
  bool resolved = false;
  Int nielsen = 0;            // meaningful when resolved
  FgAbelianGroup classGroup;  // coker(f1 - f2)
  Card classCount;
};
LieGroupReport lieGroupNielsen(const GroupHom& f1, const GroupHom& f2);

/// Structure of the path space E(f1, f2) over M for circle targets:
/// a disjoint union of copies of a cover of M, one per cokernel class.
struct FiberTypeReport {
  bool productWithZ = false;  // delta == 0: E is M x Z
  KernelResult kernelData;    // kernel of delta inside pi1(M)
  Card coveringIndex;         // index of that kernel (deck count of the cover)
  FgAbelianGroup components;  // coker(delta) indexes the path components
  std::string description;
};
FiberTypeReport fiberType(const GroupHom& f1, const GroupHom& f2);

}  // namespace nielsen
