#include "nielsen/crosscheck.hpp"

#include "nielsen/circle.hpp"
#include "nielsen/finite_group.hpp"
#include "nielsen/reidemeister.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace nielsen {

namespace {

Int randInt(std::mt19937_64& rng, Int lo, Int hi) {
  return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

}  // namespace

std::vector<FgAbelianGroup> finiteAbelianGroupsUpTo(Int maxOrder) {
  if (maxOrder < 1) throw Error("maximum group order must be positive");
  std::vector<FgAbelianGroup> out;
  std::vector<Int> chain;
  auto extend = [&](auto&& self, Int product) -> void {
    out.push_back(FgAbelianGroup(chain));
    Int step = chain.empty() ? 1 : chain.back();
    Int first = chain.empty() ? 2 : chain.back();
    for (Int d = first; d <= maxOrder / product; d += step) {
      chain.push_back(d);
      self(self, product * d);
      chain.pop_back();
    }
  };
  extend(extend, 1);
  std::sort(out.begin(), out.end(),
            [](const FgAbelianGroup& a, const FgAbelianGroup& b) {
              if (a.order().value != b.order().value)
                return a.order().value < b.order().value;
              return a.invariantFactors() < b.invariantFactors();
            });
  return out;
}

GroupHom randomEndomorphism(const FgAbelianGroup& g, std::mt19937_64& rng) {
  if (!g.isFinite()) throw Error("random endomorphisms require a finite group");
  Index r = g.rank();
  IntMatrix m(r, r);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < r; ++j) {
      Int gij = std::gcd(g.factor(i), g.factor(j));
      m(i, j) = (g.factor(i) / gij) * randInt(rng, 0, gij - 1);
    }
  return GroupHom(g, g, m);
}

TorusCrosscheckReport torusAgainstOracle(Int trials, std::uint64_t seed,
                                         Int resolution) {
  if (trials < 1) throw Error("trial count must be positive");
  std::mt19937_64 rng(seed);
  TorusCrosscheckReport report;
  report.trials.reserve(size_t(trials));
  for (Int t = 0; t < trials; ++t) {
    Index m = Index(randInt(rng, 1, 3));
    IntVector a(m), b(m);
    do {
      for (Index i = 0; i < m; ++i) a(i) = randInt(rng, -6, 6);
      for (Index i = 0; i < m; ++i) b(i) = randInt(rng, -6, 6);
    } while ((a.array() == b.array()).all());

    TorusMapSpec spec;
    spec.a = a;
    spec.b = b;
    spec.resolution = resolution;
    OracleReport oracle = stabilizedComponents(spec);
    Int formula = circleNielsen(CircleMapPairClass::fromRow(a - b));

    TorusTrialRecord record;
    record.a = std::move(a);
    record.b = std::move(b);
    record.formula = formula;
    record.oracle = oracle;
    record.match = oracle.stabilized && oracle.components == formula;
    report.allMatch = report.allMatch && record.match;
    report.trials.push_back(std::move(record));
  }
  return report;
}

ClassSetCrosscheckReport orbitsAgainstCokernels(Int maxOrder, Int pairsPerGroup,
                                                std::uint64_t seed) {
  if (pairsPerGroup < 1) throw Error("pair count must be positive");
  std::mt19937_64 rng(seed);
  ClassSetCrosscheckReport report;
  std::vector<FgAbelianGroup> groups = finiteAbelianGroupsUpTo(maxOrder);
  report.groupCount = Int(groups.size());
  for (const FgAbelianGroup& g : groups) {
    AbelianEnumeration enumeration = enumerateAbelian(g);
    std::vector<GroupElement> elements = enumerateElements(g);
    for (Int p = 0; p < pairsPerGroup; ++p) {
      GroupHom f1 = randomEndomorphism(g, rng);
      GroupHom f2 = randomEndomorphism(g, rng);

      TwistedConjugacyData data{enumeration.table, {}};
      data.pairs.reserve(elements.size());
      for (const GroupElement& x : elements)
        data.pairs.emplace_back(enumeration.indexOf(f1(x)),
                                enumeration.indexOf(f2(x)));

      ClassSetTrialRecord record;
      record.group = formatGroup(g);
      record.orbitCount = Int(reidemeisterOrbits(data).count());
      record.cokernelCount = reidemeisterAbelian(f1, f2).cardinality.value;
      record.match = record.orbitCount == record.cokernelCount;
      report.allMatch = report.allMatch && record.match;
      report.trials.push_back(std::move(record));
    }
  }
  return report;
}

}  // namespace nielsen
