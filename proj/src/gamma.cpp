#include "nielsen/gamma.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace nielsen {

using nlohmann::json;

Int levelBound(Int m, Int n) {
  if (n < 2) throw Error("target dimension must be at least 2");
  if (m < 1) throw Error("source dimension must be at least 1");
  return (m - 1) / (n - 1);
}

Int stemDegree(Int m, Int n, Int k) { return m - 1 - k * (n - 1); }

bool torsionForced(Int n, Int k) {
  if (n < 2 || k < 1) throw Error("torsion predicate needs n >= 2, k >= 1");
  if (k % 2 == 0 && n % 2 == 1) return true;
  return n % 2 == 0 && (k % 4 == 3 || k % 4 == 0);
}

GammaVector::GammaVector(Int m, Int n,
                         const std::map<Int, GroupElement>& components,
                         const StableStemTable& stems)
    : m_(m), n_(n) {
  const Int bound = levelBound(m, n);
  for (const auto& [k, elt] : components) {
    if (k < 1 || k > bound)
      throw Error("level " + std::to_string(k) + " is outside 1.." +
                  std::to_string(bound));
    const Int degree = stemDegree(m, n, k);
    if (!stems.has(degree))
      throw Error("no stem data shipped for degree " + std::to_string(degree) +
                  " (level " + std::to_string(k) + ")");
    if (!(elt.group() == stems.stem(degree)))
      throw Error("component at level " + std::to_string(k) +
                  " lies in the wrong group; expected " +
                  formatGroup(stems.stem(degree)));
    if (torsionForced(n, k) && !elt.times(2).isZero())
      throw Error("component at level " + std::to_string(k) +
                  " must have order at most 2 at these dimensions");
  }
  for (Int k = 1; k <= bound; ++k) {
    const Int degree = stemDegree(m, n, k);
    if (!stems.has(degree)) continue;  // implicitly zero beyond the table
    auto it = components.find(k);
    components_.emplace(k, it != components.end()
                               ? it->second
                               : GroupElement::zero(stems.stem(degree)));
  }
}

GammaVector GammaVector::zero(Int m, Int n, const StableStemTable& stems) {
  return GammaVector(m, n, {}, stems);
}

Int GammaVector::levels() const { return levelBound(m_, n_); }

const GroupElement& GammaVector::component(Int k) const {
  auto it = components_.find(k);
  if (it == components_.end())
    throw Error("no component data at level " + std::to_string(k));
  return it->second;
}

bool GammaVector::isZero() const {
  for (const auto& [k, elt] : components_)
    if (!elt.isZero()) return false;
  return true;
}

bool operator==(const GammaVector& a, const GammaVector& b) {
  return a.m_ == b.m_ && a.n_ == b.n_ && a.components_ == b.components_;
}

GammaVector pairingDifference(const GammaVector& d1, const GammaVector& d2) {
  if (d1.m_ != d2.m_ || d1.n_ != d2.n_)
    throw Error("degree data of the two maps live at different dimensions");
  if (d1.components_.size() != d2.components_.size())
    throw Error("degree data built against different stem tables");
  GammaVector out(d1.m_, d1.n_);
  for (const auto& [k, elt] : d1.components_) {
    auto it = d2.components_.find(k);
    if (it == d2.components_.end())
      throw Error("degree data built against different stem tables");
    const Int sign = signPow(k * (d1.n_ - 1));
    out.components_.emplace(k, elt - it->second.times(sign));
  }
  return out;
}

Int nielsenSpheres(const GammaVector& w) { return w.isZero() ? 0 : 1; }

GammaVector reflectionAction(const GammaVector& v) {
  return v.mapSigns([](Int k) { return signPow(k); });
}

GammaVector antipodalAction(const GammaVector& v) {
  const Int n = v.targetDim();
  return v.mapSigns([n](Int k) { return signPow(k * (n + 1)); });
}

GammaVector involutionAction(const GammaVector& v) {
  const Int n = v.targetDim();
  return v.mapSigns(
      [n](Int k) { return -signPow(k + (n - 1) * binom2(k - 1)); });
}

GammaInjectivityDb::GammaInjectivityDb(
    std::set<Int> whiteheadExcludedN, std::set<std::pair<Int, Int>> sporadicPairs,
    Int familyMinN, Int familyMaxN)
    : whiteheadExcludedN_(std::move(whiteheadExcludedN)),
      sporadicPairs_(std::move(sporadicPairs)),
      familyMinN_(familyMinN),
      familyMaxN_(familyMaxN) {
  if (familyMinN_ > familyMaxN_)
    throw Error("empty family range in the injectivity database");
}

InjectivityRecord GammaInjectivityDb::decide(Int m, Int n) const {
  if (n < 2) throw Error("target dimension must be at least 2");
  if (m < 1) throw Error("source dimension must be at least 1");
  InjectivityRecord rec;
  rec.m = m;
  rec.n = n;
  if (m < 2 * n - 1) {
    rec.verdict = InjectivityVerdict::Injective;
    rec.source = "stable_range";
  } else if (m - n <= 3) {
    rec.verdict = InjectivityVerdict::Injective;
    rec.source = "low_codimension";
  } else if (m == 2 * n - 1 && n % 2 == 1 && whiteheadExcludedN_.count(n) == 0) {
    rec.verdict = InjectivityVerdict::NotInjective;
    rec.source = "whitehead_square";
  } else if (sporadicPairs_.count({m, n}) != 0) {
    rec.verdict = InjectivityVerdict::NotInjective;
    rec.source = "sporadic_pairs";
  } else if (m == 10 + n && n >= familyMinN_ && n <= familyMaxN_) {
    rec.verdict = InjectivityVerdict::NotInjective;
    rec.source = "codimension_ten_family";
  } else {
    rec.verdict = InjectivityVerdict::Unknown;
    rec.source = "outside_database";
  }
  return rec;
}

GammaInjectivityDb GammaInjectivityDb::fromJsonText(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("injectivity database is not valid JSON: ") +
                e.what());
  }
  if (!doc.is_object() || !doc.contains("not_injective"))
    throw Error("injectivity database lacks the \"not_injective\" section");
  const json& ni = doc["not_injective"];

  std::set<Int> excluded;
  for (const auto& v : ni.at("whitehead_square_excluded_n"))
    excluded.insert(v.get<Int>());
  std::set<std::pair<Int, Int>> sporadic;
  for (const auto& p : ni.at("sporadic_pairs")) {
    if (!p.is_array() || p.size() != 2)
      throw Error("sporadic_pairs entries must be [m, n] pairs");
    sporadic.emplace(p[0].get<Int>(), p[1].get<Int>());
  }
  const json& fam = ni.at("codimension_ten_family_n");
  return GammaInjectivityDb(std::move(excluded), std::move(sporadic),
                            fam.at("min").get<Int>(), fam.at("max").get<Int>());
}

GammaInjectivityDb GammaInjectivityDb::fromJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open injectivity database: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return fromJsonText(buf.str());
}

GammaInjectivityDb GammaInjectivityDb::loadDefault() {
  return fromJsonFile(dataDirectory() + "/gamma_db.json");
}

bool weckenRange(Int m, Int n) {
  if (m < 1 || n < 1) throw Error("dimensions must be positive");
  return m < 2 * n - 2;
}

MccReport minimalCoincidenceSpheres(const GammaVector& d1,
                                    const GammaVector& d2,
                                    const GammaInjectivityDb& db) {
  MccReport report;
  const GammaVector difference = pairingDifference(d1, d2);
  report.nielsen = nielsenSpheres(difference);
  report.injectivity = db.decide(d1.sourceDim(), d1.targetDim());
  report.weckenApplies = weckenRange(d1.sourceDim(), d1.targetDim());

  if (report.injectivity.verdict == InjectivityVerdict::Injective) {
    report.value = (d1 == antipodalAction(d2)) ? 0 : 1;
    return report;
  }
  if (report.nielsen == 1) {
    // at least one essential class regardless of injectivity
    report.value = 1;
    return report;
  }
  report.value = std::nullopt;
  report.caveats.push_back(
      "the Nielsen count vanishes but the pair may still fail to be loose; "
      "injectivity of the stabilized level invariant is " +
      std::string(report.injectivity.verdict == InjectivityVerdict::NotInjective
                      ? "known to fail"
                      : "not known") +
      " at these dimensions");
  return report;
}

}  // namespace nielsen
