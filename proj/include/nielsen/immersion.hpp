#pragma once

#include "nielsen/gamma.hpp"

#include <string>
#include <vector>

namespace nielsen {

/// Closed polygonal curve in the plane with one height per vertex and an
/// integer count of extra full turns of the normal framing. Heights
/// interpolate linearly along edges; at every self-crossing the two branch
/// heights must differ, so the lifted curve is embedded in 3-space.
///
/// Coordinates and heights are integers bounded by coordinateLimit; all
/// geometric predicates are then exact in 128-bit arithmetic. Degenerate
/// polygons are rejected, never repaired.
class FramedImmersedCurve {
 public:
  static constexpr Int coordinateLimit = 1'000'000;

  /// vertices: one row (x, y) per vertex, edges joining consecutive rows
  /// cyclically; heights: one entry per vertex.
  FramedImmersedCurve(IntMatrix vertices, IntVector heights, Int twist);

  /// Parses {"vertices": [[x, y], ...], "heights": [...], "twist": t}
  /// (twist optional, default 0).
  static FramedImmersedCurve fromJsonText(const std::string& text);
  static FramedImmersedCurve fromJsonFile(const std::string& path);

  const IntMatrix& vertices() const { return vertices_; }
  const IntVector& heights() const { return heights_; }
  Int twist() const { return twist_; }
  Index vertexCount() const { return vertices_.rows(); }

 private:
  IntMatrix vertices_;  // V x 2
  IntVector heights_;   // V entries
  Int twist_;
};

/// Exact position along an edge as a reduced fraction num/den in (0, 1).
struct EdgeParameter {
  Int num = 0;
  Int den = 1;

  double value() const { return double(num) / double(den); }
  friend bool operator==(const EdgeParameter&, const EdgeParameter&) = default;
};

/// One transverse self-crossing. Edges are indexed by their start vertex;
/// firstEdge < secondEdge in curve order. firstUnder tells whether the
/// first branch passes beneath the second, and sign is the orientation of
/// (tangent of the lower branch, tangent of the upper branch).
struct DoublePoint {
  int firstEdge = 0;
  int secondEdge = 0;
  EdgeParameter firstParam;
  EdgeParameter secondParam;
  bool firstUnder = true;
  int sign = 1;
  Eigen::Vector2d location = Eigen::Vector2d::Zero();
};

/// Throws Error unless the curve is generic: no fold-backs, no vertex on a
/// non-adjacent edge, no collinear overlap, all crossings transverse and
/// pairwise distinct, and branch heights separated at every crossing.
void validateGeneric(const FramedImmersedCurve& curve);

/// All self-crossings, sorted along the curve (by first edge, then exact
/// parameter). Validates genericity first.
std::vector<DoublePoint> doublePoints(const FramedImmersedCurve& curve);

/// Sum of crossing signs — the integer-valued half of the curve's invariant
/// pair.
Int signedDoublePointCount(const FramedImmersedCurve& curve);

/// Winding number of the tangent direction, computed exactly from the
/// direction polygon (each turn is strictly less than a half turn).
Int rotationNumber(const FramedImmersedCurve& curve);

/// Stable class of the framed curve in Z/2:
/// (rotationNumber + twist + 1) mod 2.
Int framedCurveClass(const FramedImmersedCurve& curve);

/// Packages (framedCurveClass, signedDoublePointCount) as the degree data
/// of a map from the 3-sphere to the 2-sphere: level 1 lands in the shipped
/// degree-1 stem (Z/2), level 2 in the degree-0 stem (Z).
GammaVector gammaFromCurve(const FramedImmersedCurve& curve,
                           const StableStemTable& stems);

}  // namespace nielsen
