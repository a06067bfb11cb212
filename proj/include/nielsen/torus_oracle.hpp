#pragma once

#include "nielsen/core.hpp"

#include <cstdint>
#include <vector>

namespace nielsen {

/// Pair of straight-line circle-valued maps on the m-torus (m <= 3), given
/// by their integer coefficient vectors: x maps to a.x mod 1 and b.x mod 1.
/// The oracle rasterizes the set where the two maps agree.
struct TorusMapSpec {
  IntVector a;
  IntVector b;
  Int resolution = 256;

  static constexpr Int minResolution = 64;
  static constexpr Int maxResolution = 1024;
  static constexpr Index maxDimension = 3;
  static constexpr Int maxCells = Int(1) << 27;
  static constexpr Int coefficientLimit = 1'000'000;
};

/// Throws Error unless the vectors match in length 1..3, the resolution is a
/// power of two within bounds, the grid fits the cell budget, and the
/// coefficients stay within coefficientLimit.
void validateSpec(const TorusMapSpec& spec);

/// One bit per grid cell, row-major with the last axis fastest; a set bit
/// means the cell center lies within the Lipschitz slack of a coincidence.
class CoincidenceGrid {
 public:
  CoincidenceGrid(Index dimension, Int resolution);

  Index dimension() const { return dimension_; }
  Int resolution() const { return resolution_; }
  Int cellCount() const { return cells_; }
  bool marked(Int flat) const {
    return (bits_[size_t(flat >> 6)] >> (flat & 63)) & 1;
  }
  void setMarked(Int flat) { bits_[size_t(flat >> 6)] |= 1ull << (flat & 63); }
  Int markedCount() const;
  const std::vector<std::uint64_t>& words() const { return bits_; }

 private:
  Index dimension_;
  Int resolution_;
  Int cells_;
  std::vector<std::uint64_t> bits_;
};

/// Cells whose center x satisfies dist((a-b).x mod 1, 0) <= L/(2*resolution),
/// with L the sum of |a_i - b_i|; this mask always covers the true
/// coincidence set, so components can merge spuriously but never split.
CoincidenceGrid coincidenceMask(const TorusMapSpec& spec);

/// Connected components of the marked cells under face adjacency with torus
/// wraparound.
Int countComponents(const CoincidenceGrid& grid);

struct OracleReport {
  Int components = 0;        // count at the requested resolution
  Int coarseComponents = 0;  // count at half the resolution
  bool stabilized = false;   // the two counts agree
};

/// Runs the mask at resolution/2 and at the full resolution; the answer is
/// trusted only when the two component counts agree.
OracleReport stabilizedComponents(const TorusMapSpec& spec);

}  // namespace nielsen
