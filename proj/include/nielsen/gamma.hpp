#pragma once

#include "nielsen/stems.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace nielsen {

/// Largest level carrying degree data for a source of dimension m mapping to
/// a sphere of dimension n >= 2: floor((m-1)/(n-1)).
Int levelBound(Int m, Int n);

/// Degree of the stable stem housing level k: m - 1 - k*(n-1).
Int stemDegree(Int m, Int n, Int k);

/// Whether the theory forces 2*v_k = 0 at this level: (k even and n odd) or
/// (n even and k = 3 or 0 mod 4).
bool torsionForced(Int n, Int k);

/// Per-level degree data for a pair of maps into the n-sphere: one stable-stem
/// element for every level 1..levelBound whose stem degree has shipped data.
/// Levels whose stem degree falls outside the shipped table are implicitly
/// zero; supplying explicit data there is rejected.
class GammaVector {
 public:
  GammaVector(Int m, Int n, const std::map<Int, GroupElement>& components,
              const StableStemTable& stems);
  static GammaVector zero(Int m, Int n, const StableStemTable& stems);

  Int sourceDim() const { return m_; }
  Int targetDim() const { return n_; }
  Int levels() const;  // levelBound(m, n)
  bool hasData(Int k) const { return components_.count(k) != 0; }
  const GroupElement& component(Int k) const;
  bool isZero() const;

  friend bool operator==(const GammaVector& a, const GammaVector& b);

  /// Multiplies component k by sign(k) in {+1, -1}; the three symmetry
  /// actions and the pairing formula are built on this.
  template <typename SignOfLevel>
  GammaVector mapSigns(SignOfLevel sign) const {
    GammaVector out = *this;
    for (auto& [k, elt] : out.components_)
      if (sign(k) < 0) elt = -elt;
    return out;
  }

 private:
  GammaVector(Int m, Int n) : m_(m), n_(n) {}

  Int m_, n_;
  std::map<Int, GroupElement> components_;

  friend GammaVector pairingDifference(const GammaVector&, const GammaVector&);
};

/// Level-k obstruction of a map pair from their degree data:
/// w_k = d1_k - (-1)^{k(n-1)} d2_k.
GammaVector pairingDifference(const GammaVector& d1, const GammaVector& d2);

/// 0 if every level vanishes (the pair is loosenable by small deformation at
/// the obstruction level), else 1 — the Nielsen count for sphere targets.
Int nielsenSpheres(const GammaVector& w);

/// Composition with a reflection of the target: component k scales by (-1)^k.
GammaVector reflectionAction(const GammaVector& v);
/// Composition with the antipodal map: component k scales by (-1)^{k(n+1)}.
GammaVector antipodalAction(const GammaVector& v);
/// Loop-direction reversal: component k scales by -(-1)^{k+(n-1)*C(k-1,2)}.
GammaVector involutionAction(const GammaVector& v);

enum class InjectivityVerdict { Injective, NotInjective, Unknown };

struct InjectivityRecord {
  Int m = 0, n = 0;
  InjectivityVerdict verdict = InjectivityVerdict::Unknown;
  std::string source;  // which rule or database family decided the verdict
};

/// Shipped database deciding whether the stabilized level invariant is
/// injective at dimensions (m, n): range rules give Injective, the curated
/// exception list gives NotInjective, everything else is Unknown.
class GammaInjectivityDb {
 public:
  GammaInjectivityDb(std::set<Int> whiteheadExcludedN,
                     std::set<std::pair<Int, Int>> sporadicPairs,
                     Int familyMinN, Int familyMaxN);

  static GammaInjectivityDb loadDefault();  // <data dir>/gamma_db.json
  static GammaInjectivityDb fromJsonFile(const std::string& path);
  static GammaInjectivityDb fromJsonText(const std::string& text);

  InjectivityRecord decide(Int m, Int n) const;

 private:
  std::set<Int> whiteheadExcludedN_;
  std::set<std::pair<Int, Int>> sporadicPairs_;
  Int familyMinN_, familyMaxN_;
};

/// True when m < 2n - 2; there the minimal coincidence count provably equals
/// the Nielsen number, and verdicts are annotated accordingly.
bool weckenRange(Int m, Int n);

struct MccReport {
  std::optional<Int> value;  // 0 or 1 when decided; nullopt means unknown
  Int nielsen = 0;           // nielsenSpheres(pairingDifference(d1, d2))
  InjectivityRecord injectivity;
  bool weckenApplies = false;
  std::vector<std::string> caveats;  // nonempty whenever value is unknown
};

/// Minimal-coincidence-count verdict for a pair of sphere maps given their
/// degree data. Decides 0/1 outright when the database certifies injectivity;
/// otherwise only the lower bound from a nonzero Nielsen number decides, and
/// a vanishing Nielsen number yields an explicit unknown.
MccReport minimalCoincidenceSpheres(const GammaVector& d1,
                                    const GammaVector& d2,
                                    const GammaInjectivityDb& db);

}  // namespace nielsen
