#pragma once

#include "nielsen/abelian.hpp"
#include "nielsen/reidemeister.hpp"

#include <vector>

namespace nielsen {

/// Coefficient group carrying the index of a coincidence class: full integer
/// counts, or counts that only survive modulo 2.
enum class CoefficientGroup { Integers, ModTwo };

/// Orientation bookkeeping for a map pair with abelian fundamental groups:
/// the induced maps f1, f2 plus the two first Stiefel-Whitney homs of the
/// source and of the pulled-back target, both valued in Z/2.
struct AbelianOrientationData {
  GroupHom f1, f2;
  GroupHom w1M, w1NPulled;

  AbelianOrientationData(GroupHom f1Arg, GroupHom f2Arg, GroupHom w1MArg,
                         GroupHom w1NPulledArg);
};

/// Orientation character of the coincidence problem: pointwise sum mod 2 of
/// the source character and the pulled-back target character.
GroupHom orientationCharacter(const AbelianOrientationData& data);

/// Integers iff the orientation character vanishes on the kernel of f2 - f1;
/// for abelian targets the verdict is the same for every class.
CoefficientGroup coefficientGroupAbelian(const AbelianOrientationData& data);

/// Same data with finite fundamental groups in multiplication-table form;
/// maps are element-index tables validated as homomorphisms, characters are
/// 0/1 tables validated as homomorphisms into Z/2.
class ClassOrientationData {
 public:
  ClassOrientationData(FiniteGroupTable domain, FiniteGroupTable target,
                       std::vector<int> f1, std::vector<int> f2,
                       std::vector<int> w1M, std::vector<int> w1NPulled);

  const FiniteGroupTable& domain() const { return domain_; }
  const FiniteGroupTable& target() const { return target_; }
  int f1(int g) const { return f1_[size_t(g)]; }
  int f2(int g) const { return f2_[size_t(g)]; }
  int w1M(int g) const { return w1M_[size_t(g)]; }
  int w1NPulled(int g) const { return w1NPulled_[size_t(g)]; }

 private:
  FiniteGroupTable domain_, target_;
  std::vector<int> f1_, f2_, w1M_, w1NPulled_;
};

/// Integers iff the two characters agree on the stabilizer
/// {g : f2(g) = theta^-1 * f1(g) * theta} of the selected class.
CoefficientGroup coefficientGroupClass(const ClassOrientationData& data,
                                       int theta);

/// Twisted-conjugacy classes of the target joined with the per-class
/// coefficient verdicts: coefficient[i] belongs to orbits.orbits[i].
struct ClassCoefficientReport {
  OrbitPartition orbits;
  std::vector<CoefficientGroup> coefficient;
};
ClassCoefficientReport classCoefficientDecomposition(
    const ClassOrientationData& data);

}  // namespace nielsen
