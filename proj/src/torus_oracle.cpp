#include "nielsen/torus_oracle.hpp"

#include "nielsen/union_find.hpp"

#include <algorithm>
#include <bit>
#include <thread>

namespace nielsen {

namespace {

IntVector difference(const TorusMapSpec& spec) { return spec.a - spec.b; }

Int lipschitzBound(const IntVector& c) { return c.cwiseAbs().sum(); }

Int powInt(Int base, Index exponent) {
  Int out = 1;
  for (Index i = 0; i < exponent; ++i) out *= base;
  return out;
}

/// Fills one contiguous range of rows (a row = one run of the last axis);
/// rows start on word boundaries because the resolution is a multiple of 64.
void fillRows(CoincidenceGrid& grid, const IntVector& c, Int rowBegin,
              Int rowEnd) {
  const Int res = grid.resolution();
  const Int twoR = 2 * res;
  const Index m = grid.dimension();
  const Int bound = lipschitzBound(c);
  const Int step = modNonneg(2 * c(m - 1), twoR);
  for (Int row = rowBegin; row < rowEnd; ++row) {
    // decode the leading m-1 indices of this row (base res, axis 0 slowest)
    Int start = c(m - 1);  // last axis begins at cell center (2*0 + 1)/(2R)
    Int rest = row;
    for (Index axis = m - 2; axis >= 0; --axis) {
      start += c(axis) * (2 * (rest % res) + 1);
      rest /= res;
    }
    Int t = modNonneg(start, twoR);
    Int flat = row * res;
    for (Int j = 0; j < res; ++j, ++flat) {
      if (std::min(t, twoR - t) <= bound) grid.setMarked(flat);
      t += step;
      if (t >= twoR) t -= twoR;
    }
  }
}

CoincidenceGrid maskAtResolution(const IntVector& c, Index dimension,
                                 Int resolution) {
  CoincidenceGrid grid(dimension, resolution);
  const Int rows = grid.cellCount() / resolution;

  unsigned hardware = std::thread::hardware_concurrency();
  Int workers = std::min<Int>(rows, std::clamp<Int>(Int(hardware), 1, 8));
  // rows must start on word boundaries for lock-free slab writes
  if (resolution % 64 != 0) workers = 1;
  if (workers <= 1) {
    fillRows(grid, c, 0, rows);
    return grid;
  }
  std::vector<std::thread> pool;
  const Int slab = (rows + workers - 1) / workers;
  for (Int w = 0; w < workers; ++w) {
    const Int begin = w * slab;
    const Int end = std::min(rows, begin + slab);
    if (begin >= end) break;
    pool.emplace_back(fillRows, std::ref(grid), std::cref(c), begin, end);
  }
  for (auto& worker : pool) worker.join();
  return grid;
}

}  // namespace

void validateSpec(const TorusMapSpec& spec) {
  if (spec.a.size() != spec.b.size())
    throw Error("the two coefficient vectors must have the same length");
  const Index m = spec.a.size();
  if (m < 1 || m > TorusMapSpec::maxDimension)
    throw Error("torus dimension must be between 1 and " +
                std::to_string(TorusMapSpec::maxDimension));
  if (spec.a.cwiseAbs().maxCoeff() > TorusMapSpec::coefficientLimit ||
      spec.b.cwiseAbs().maxCoeff() > TorusMapSpec::coefficientLimit)
    throw Error("coefficients must stay within " +
                std::to_string(TorusMapSpec::coefficientLimit) +
                " in magnitude");
  const Int res = spec.resolution;
  if (res < TorusMapSpec::minResolution || res > TorusMapSpec::maxResolution ||
      (res & (res - 1)) != 0)
    throw Error("resolution must be a power of two between " +
                std::to_string(TorusMapSpec::minResolution) + " and " +
                std::to_string(TorusMapSpec::maxResolution));
  if (powInt(res, m) > TorusMapSpec::maxCells)
    throw Error("grid of " + std::to_string(res) + "^" + std::to_string(m) +
                " cells exceeds the supported budget");
}

CoincidenceGrid::CoincidenceGrid(Index dimension, Int resolution)
    : dimension_(dimension),
      resolution_(resolution),
      cells_(powInt(resolution, dimension)),
      bits_(size_t((cells_ + 63) / 64), 0) {}

Int CoincidenceGrid::markedCount() const {
  Int total = 0;
  for (const std::uint64_t word : bits_) total += std::popcount(word);
  return total;
}

CoincidenceGrid coincidenceMask(const TorusMapSpec& spec) {
  validateSpec(spec);
  return maskAtResolution(difference(spec), spec.a.size(), spec.resolution);
}

Int countComponents(const CoincidenceGrid& grid) {
  const Int cells = grid.cellCount();
  const Int occupied = grid.markedCount();
  if (occupied == 0) return 0;
  if (occupied == cells) return 1;  // the whole torus, which is connected

  // occupancy rank: number of marked cells strictly before each word
  const auto& words = grid.words();
  std::vector<Int> before(words.size() + 1, 0);
  for (size_t w = 0; w < words.size(); ++w)
    before[w + 1] = before[w] + std::popcount(words[w]);
  auto rankOf = [&](Int flat) {
    const std::uint64_t below = words[size_t(flat >> 6)]
                                << (63 - (flat & 63)) >> (63 - (flat & 63));
    return before[size_t(flat >> 6)] + std::popcount(below) - 1;
  };

  const Index m = grid.dimension();
  const Int res = grid.resolution();
  std::vector<Int> stride(size_t(m), 1);
  for (Index axis = m - 2; axis >= 0; --axis)
    stride[size_t(axis)] = stride[size_t(axis) + 1] * res;

  std::vector<std::int64_t> parent;
  union_find::init(parent, size_t(occupied));
  for (size_t w = 0; w < words.size(); ++w) {
    std::uint64_t word = words[w];
    while (word != 0) {
      const Int flat = Int(w) * 64 + std::countr_zero(word);
      word &= word - 1;
      for (Index axis = 0; axis < m; ++axis) {
        const Int s = stride[size_t(axis)];
        const bool wraps = (flat / s) % res == res - 1;
        const Int neighbor = wraps ? flat - (res - 1) * s : flat + s;
        if (grid.marked(neighbor))
          union_find::unite(parent, rankOf(flat), rankOf(neighbor));
      }
    }
  }

  Int components = 0;
  for (size_t i = 0; i < parent.size(); ++i)
    if (parent[i] == std::int64_t(i)) ++components;
  return components;
}

OracleReport stabilizedComponents(const TorusMapSpec& spec) {
  validateSpec(spec);
  const IntVector c = difference(spec);
  const Index m = spec.a.size();
  OracleReport report;
  report.coarseComponents =
      countComponents(maskAtResolution(c, m, spec.resolution / 2));
  report.components =
      countComponents(maskAtResolution(c, m, spec.resolution));
  report.stabilized = report.components == report.coarseComponents;
  return report;
}

}  // namespace nielsen
