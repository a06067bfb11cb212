#include "nielsen/orientation.hpp"

namespace nielsen {

namespace {

void requireCharacter(const GroupHom& h, const char* name) {
  if (!(h.codomain() == FgAbelianGroup::cyclic(2)))
    throw Error(std::string(name) + " must take values in Z/2");
}

/// Element-index map that must be a homomorphism between group tables.
void requireTableHom(const FiniteGroupTable& domain,
                     const FiniteGroupTable& target, const std::vector<int>& f,
                     const char* name) {
  if (Int(f.size()) != domain.order())
    throw Error(std::string(name) + " must map every domain element");
  for (int x : f)
    if (x < 0 || Int(x) >= target.order())
      throw Error(std::string(name) + " maps outside the target group");
  for (int a = 0; a < domain.order(); ++a)
    for (int b = 0; b < domain.order(); ++b)
      if (f[size_t(domain.mul(a, b))] != target.mul(f[size_t(a)], f[size_t(b)]))
        throw Error(std::string(name) + " is not a homomorphism");
}

void requireTableCharacter(const FiniteGroupTable& domain,
                           const std::vector<int>& w, const char* name) {
  if (Int(w.size()) != domain.order())
    throw Error(std::string(name) + " must map every domain element");
  for (int x : w)
    if (x != 0 && x != 1)
      throw Error(std::string(name) + " must take values in {0, 1}");
  for (int a = 0; a < domain.order(); ++a)
    for (int b = 0; b < domain.order(); ++b)
      if (w[size_t(domain.mul(a, b))] != (w[size_t(a)] + w[size_t(b)]) % 2)
        throw Error(std::string(name) + " is not a homomorphism into Z/2");
}

}  // namespace

AbelianOrientationData::AbelianOrientationData(GroupHom f1Arg, GroupHom f2Arg,
                                               GroupHom w1MArg,
                                               GroupHom w1NPulledArg)
    : f1(std::move(f1Arg)),
      f2(std::move(f2Arg)),
      w1M(std::move(w1MArg)),
      w1NPulled(std::move(w1NPulledArg)) {
  if (!(f1.domain() == f2.domain()) || !(f1.domain() == w1M.domain()) ||
      !(f1.domain() == w1NPulled.domain()))
    throw Error("orientation data must share one source group");
  if (!(f1.codomain() == f2.codomain()))
    throw Error("the two induced maps must share their target group");
  requireCharacter(w1M, "source orientation character");
  requireCharacter(w1NPulled, "pulled-back target orientation character");
}

GroupHom orientationCharacter(const AbelianOrientationData& data) {
  return data.w1M + data.w1NPulled;
}

CoefficientGroup coefficientGroupAbelian(const AbelianOrientationData& data) {
  const GroupHom character = orientationCharacter(data);
  const KernelResult ker = kernel(data.f2 - data.f1);
  for (const GroupElement& generator : ker.generators)
    if (!character(generator).isZero()) return CoefficientGroup::ModTwo;
  return CoefficientGroup::Integers;
}

ClassOrientationData::ClassOrientationData(FiniteGroupTable domain,
                                           FiniteGroupTable target,
                                           std::vector<int> f1,
                                           std::vector<int> f2,
                                           std::vector<int> w1M,
                                           std::vector<int> w1NPulled)
    : domain_(std::move(domain)),
      target_(std::move(target)),
      f1_(std::move(f1)),
      f2_(std::move(f2)),
      w1M_(std::move(w1M)),
      w1NPulled_(std::move(w1NPulled)) {
  requireTableHom(domain_, target_, f1_, "first induced map");
  requireTableHom(domain_, target_, f2_, "second induced map");
  requireTableCharacter(domain_, w1M_, "source orientation character");
  requireTableCharacter(domain_, w1NPulled_,
                        "pulled-back target orientation character");
}

CoefficientGroup coefficientGroupClass(const ClassOrientationData& data,
                                       int theta) {
  const FiniteGroupTable& target = data.target();
  if (theta < 0 || Int(theta) >= target.order())
    throw Error("class representative is outside the target group");
  const int thetaInv = target.inv(theta);
  for (int g = 0; g < data.domain().order(); ++g) {
    const bool inStabilizer =
        data.f2(g) == target.mul(thetaInv, target.mul(data.f1(g), theta));
    if (inStabilizer && data.w1M(g) != data.w1NPulled(g))
      return CoefficientGroup::ModTwo;
  }
  return CoefficientGroup::Integers;
}

ClassCoefficientReport classCoefficientDecomposition(
    const ClassOrientationData& data) {
  TwistedConjugacyData twisted{data.target(), {}};
  for (int g = 0; g < data.domain().order(); ++g)
    twisted.pairs.emplace_back(data.f1(g), data.f2(g));

  ClassCoefficientReport report;
  report.orbits = reidemeisterOrbits(twisted);
  for (const auto& orbit : report.orbits.orbits)
    report.coefficient.push_back(
        coefficientGroupClass(data, int(orbit.front())));
  return report;
}

}  // namespace nielsen
