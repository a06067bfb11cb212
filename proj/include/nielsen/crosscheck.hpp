#pragma once

#include "nielsen/abelian.hpp"
#include "nielsen/torus_oracle.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace nielsen {

/// Randomized agreement sweeps pitting closed-form counts against the
/// independent brute-force oracles. Each sweep is fully determined by its
/// seed, so reports are reproducible.

/// One torus trial: closed formula vs grid component counting.
struct TorusTrialRecord {
  IntVector a, b;
  Int formula = 0;
  OracleReport oracle;
  bool match = false;
};

struct TorusCrosscheckReport {
  std::vector<TorusTrialRecord> trials;
  bool allMatch = true;
};

/// Draws `trials` random map pairs on tori of dimension 1..3 (coefficient
/// rows with entries in [-6, 6], redrawn until the rows differ) and compares
/// the closed-form class count with stabilized grid component counting at the
/// given resolution.
TorusCrosscheckReport torusAgainstOracle(Int trials, std::uint64_t seed,
                                         Int resolution = 512);

/// One class-set trial on a finite abelian group: twisted-conjugacy orbit
/// enumeration over the multiplication table vs the cokernel cardinality.
struct ClassSetTrialRecord {
  std::string group;
  Int orbitCount = 0;
  Int cokernelCount = 0;
  bool match = false;
};

struct ClassSetCrosscheckReport {
  std::vector<ClassSetTrialRecord> trials;
  Int groupCount = 0;
  bool allMatch = true;
};

/// Enumerates every finite abelian group of order <= maxOrder, draws
/// `pairsPerGroup` random endomorphism pairs on each, and compares the orbit
/// count of the twisted-conjugacy action with the cokernel cardinality.
ClassSetCrosscheckReport orbitsAgainstCokernels(Int maxOrder, Int pairsPerGroup,
                                                std::uint64_t seed);

/// All isomorphism types of finite abelian groups of order <= maxOrder as
/// invariant-factor chains, ordered by (order, factors).
std::vector<FgAbelianGroup> finiteAbelianGroupsUpTo(Int maxOrder);

/// Uniform random endomorphism of a finite abelian group: entry (i, j) is a
/// uniform multiple of d_i / gcd(d_i, d_j), so generator orders are
/// respected and every valid entry is reachable.
GroupHom randomEndomorphism(const FgAbelianGroup& g, std::mt19937_64& rng);

}  // namespace nielsen
