#include "nielsen/immersion.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <utility>

namespace nielsen {

namespace {

using nlohmann::json;

struct Vec2 {
  Int x = 0;
  Int y = 0;
};

Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }

Wide cross(Vec2 a, Vec2 b) { return Wide(a.x) * b.y - Wide(a.y) * b.x; }
Wide dot(Vec2 a, Vec2 b) { return Wide(a.x) * b.x + Wide(a.y) * b.y; }

int sgn(Wide v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

/// Crossing point as an exact rational pair with a shared denominator > 0.
struct ExactPoint {
  Wide xNum = 0;
  Wide yNum = 0;
  Wide den = 1;
};

bool samePoint(const ExactPoint& a, const ExactPoint& b) {
  return a.xNum * b.den == b.xNum * a.den && a.yNum * b.den == b.yNum * a.den;
}

EdgeParameter reduceParameter(Int num, Int den) {
  const Int g = std::gcd(num, den);
  return {num / g, den / g};
}

bool parameterLess(const EdgeParameter& a, const EdgeParameter& b) {
  return Wide(a.num) * b.den < Wide(b.num) * a.den;
}

struct CurveGeometry {
  const IntMatrix& v;
  Index count;

  Vec2 vertex(Index i) const {
    const Index k = ((i % count) + count) % count;
    return {v(k, 0), v(k, 1)};
  }
  Vec2 direction(Index i) const { return vertex(i + 1) - vertex(i); }
  bool adjacentEdges(Index i, Index j) const {
    return j == i + 1 || (i == 0 && j == count - 1);
  }
};

/// Full genericity sweep; returns the crossings sorted along the curve.
std::vector<DoublePoint> analyze(const FramedImmersedCurve& curve) {
  const CurveGeometry geo{curve.vertices(), curve.vertexCount()};
  const Index n = geo.count;

  for (Index k = 0; k < n; ++k) {
    const Vec2 prev = geo.direction(k - 1 + n);
    const Vec2 next = geo.direction(k);
    if (cross(prev, next) == 0 && dot(prev, next) < 0)
      throw Error("the curve folds back onto itself at vertex " +
                  std::to_string(k));
  }

  for (Index k = 0; k < n; ++k) {
    const Vec2 point = geo.vertex(k);
    for (Index e = 0; e < n; ++e) {
      if (e == k || e == (k - 1 + n) % n) continue;
      const Vec2 a = geo.vertex(e);
      const Vec2 d = geo.direction(e);
      const Wide along = dot(point - a, d);
      if (cross(d, point - a) == 0 && along >= 0 && along <= dot(d, d))
        throw Error("vertex " + std::to_string(k) +
                    " lies on a non-adjacent edge");
    }
  }

  std::vector<DoublePoint> found;
  std::vector<ExactPoint> points;
  for (Index i = 0; i + 1 < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (geo.adjacentEdges(i, j)) continue;
      const Vec2 p = geo.vertex(i), r = geo.direction(i);
      const Vec2 q = geo.vertex(j), w = geo.direction(j);
      const Vec2 diff = q - p;

      Wide den = cross(r, w);
      if (den == 0) {
        if (cross(diff, r) != 0) continue;  // parallel, distinct lines
        const Wide length = dot(r, r);
        const Wide t0 = dot(diff, r);
        const Wide t1 = t0 + dot(w, r);
        if (std::max(t0, t1) >= 0 && std::min(t0, t1) <= length)
          throw Error("edges " + std::to_string(i) + " and " +
                      std::to_string(j) + " overlap along a common line");
        continue;
      }

      Wide tNum = cross(diff, w);
      Wide sNum = cross(diff, r);
      if (den < 0) {
        den = -den;
        tNum = -tNum;
        sNum = -sNum;
      }
      if (tNum < 0 || tNum > den || sNum < 0 || sNum > den) continue;
      if (tNum == 0 || tNum == den || sNum == 0 || sNum == den)
        throw Error("a vertex touches a non-adjacent edge");

      const Int hi0 = curve.heights()(i);
      const Int hi1 = curve.heights()((i + 1) % n);
      const Int hj0 = curve.heights()(j);
      const Int hj1 = curve.heights()((j + 1) % n);
      const Wide heightFirst = Wide(hi0) * den + tNum * (hi1 - hi0);
      const Wide heightSecond = Wide(hj0) * den + sNum * (hj1 - hj0);
      if (heightFirst == heightSecond)
        throw Error("the two branches have equal heights at a crossing");

      DoublePoint dp;
      dp.firstEdge = int(i);
      dp.secondEdge = int(j);
      dp.firstParam = reduceParameter(Int(tNum), Int(den));
      dp.secondParam = reduceParameter(Int(sNum), Int(den));
      dp.firstUnder = heightFirst < heightSecond;
      const Vec2 lower = dp.firstUnder ? r : w;
      const Vec2 upper = dp.firstUnder ? w : r;
      dp.sign = sgn(cross(lower, upper));
      const double t = double(tNum) / double(den);
      dp.location = Eigen::Vector2d(double(p.x) + t * double(r.x),
                                    double(p.y) + t * double(r.y));
      found.push_back(dp);
      points.push_back({Wide(p.x) * den + tNum * r.x,
                        Wide(p.y) * den + tNum * r.y, den});
    }
  }

  for (size_t a = 0; a < points.size(); ++a)
    for (size_t b = a + 1; b < points.size(); ++b)
      if (samePoint(points[a], points[b]))
        throw Error("three or more edges pass through one point");

  std::sort(found.begin(), found.end(),
            [](const DoublePoint& a, const DoublePoint& b) {
              if (a.firstEdge != b.firstEdge) return a.firstEdge < b.firstEdge;
              if (!(a.firstParam == b.firstParam))
                return parameterLess(a.firstParam, b.firstParam);
              return a.secondEdge < b.secondEdge;
            });
  return found;
}

}  // namespace

FramedImmersedCurve::FramedImmersedCurve(IntMatrix vertices, IntVector heights,
                                         Int twist)
    : vertices_(std::move(vertices)),
      heights_(std::move(heights)),
      twist_(twist) {
  if (vertices_.cols() != 2)
    throw Error("vertices must form a V x 2 matrix of plane coordinates");
  if (vertices_.rows() < 3)
    throw Error("a closed curve needs at least 3 vertices");
  if (heights_.size() != vertices_.rows())
    throw Error("need exactly one height per vertex");
  if (vertices_.cwiseAbs().maxCoeff() > coordinateLimit ||
      heights_.cwiseAbs().maxCoeff() > coordinateLimit)
    throw Error("coordinates and heights must stay within " +
                std::to_string(coordinateLimit) + " in magnitude");
  const Index n = vertices_.rows();
  for (Index k = 0; k < n; ++k) {
    const Index next = (k + 1) % n;
    if (vertices_(k, 0) == vertices_(next, 0) &&
        vertices_(k, 1) == vertices_(next, 1))
      throw Error("consecutive vertices must be distinct");
  }
}

FramedImmersedCurve FramedImmersedCurve::fromJsonText(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("curve file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error("curve file must hold a JSON object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw Error("curve file lacks a \"vertices\" array");
  if (!doc.contains("heights") || !doc["heights"].is_array())
    throw Error("curve file lacks a \"heights\" array");

  const json& vs = doc["vertices"];
  IntMatrix vertices(Index(vs.size()), 2);
  for (size_t i = 0; i < vs.size(); ++i) {
    const json& row = vs[i];
    if (!row.is_array() || row.size() != 2 || !row[0].is_number_integer() ||
        !row[1].is_number_integer())
      throw Error("\"vertices\" entries must be [x, y] integer pairs");
    vertices(Index(i), 0) = row[0].get<Int>();
    vertices(Index(i), 1) = row[1].get<Int>();
  }

  const json& hs = doc["heights"];
  IntVector heights(Index(hs.size()));
  for (size_t i = 0; i < hs.size(); ++i) {
    if (!hs[i].is_number_integer())
      throw Error("\"heights\" entries must be integers");
    heights(Index(i)) = hs[i].get<Int>();
  }

  Int twist = 0;
  if (doc.contains("twist")) {
    if (!doc["twist"].is_number_integer())
      throw Error("\"twist\" must be an integer");
    twist = doc["twist"].get<Int>();
  }
  return FramedImmersedCurve(std::move(vertices), std::move(heights), twist);
}

FramedImmersedCurve FramedImmersedCurve::fromJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open curve file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return fromJsonText(buf.str());
}

void validateGeneric(const FramedImmersedCurve& curve) { analyze(curve); }

std::vector<DoublePoint> doublePoints(const FramedImmersedCurve& curve) {
  return analyze(curve);
}

Int signedDoublePointCount(const FramedImmersedCurve& curve) {
  Int total = 0;
  for (const DoublePoint& dp : doublePoints(curve)) total += dp.sign;
  return total;
}

Int rotationNumber(const FramedImmersedCurve& curve) {
  validateGeneric(curve);
  const CurveGeometry geo{curve.vertices(), curve.vertexCount()};
  // Winding of the closed direction polygon around the origin, counted by
  // signed crossings of the positive x-axis; every chord stays off the
  // origin because fold-backs were rejected above.
  Int winding = 0;
  for (Index k = 0; k < geo.count; ++k) {
    const Vec2 u = geo.direction(k);
    const Vec2 v = geo.direction((k + 1) % geo.count);
    if (u.y <= 0 && v.y > 0 && cross(u, v) > 0) ++winding;
    if (v.y <= 0 && u.y > 0 && cross(u, v) < 0) --winding;
  }
  return winding;
}

Int framedCurveClass(const FramedImmersedCurve& curve) {
  return modNonneg(rotationNumber(curve) + curve.twist() + 1, 2);
}

GammaVector gammaFromCurve(const FramedImmersedCurve& curve,
                           const StableStemTable& stems) {
  const Int parity = framedCurveClass(curve);
  const Int signedCount = signedDoublePointCount(curve);
  std::map<Int, GroupElement> components;
  components.emplace(1, GroupElement(stems.stem(1),
                                     IntVector::Constant(1, parity)));
  components.emplace(2, GroupElement(stems.stem(0),
                                     IntVector::Constant(1, signedCount)));
  return GammaVector(3, 2, components, stems);
}

}  // namespace nielsen
