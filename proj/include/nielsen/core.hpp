#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace nielsen {

using Int = std::int64_t;
using Wide = __int128;

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

/// Thrown for every rejected input; the CLI maps it to exit code 1.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Cardinality of a group or element order: a positive count or infinite.
struct Card {
  bool finite = true;
  Int value = 1;  // meaningful only when finite

  static Card infinite() { return {false, 0}; }
  static Card of(Int n) { return {true, n}; }
  friend bool operator==(const Card& a, const Card& b) {
    return a.finite == b.finite && (!a.finite || a.value == b.value);
  }
};

inline Int gcdInt(Int a, Int b) { return std::gcd(a, b); }

inline Int lcmChecked(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  Int g = std::gcd(a, b);
  Wide r = Wide(a / g) * Wide(b);
  if (r > (Wide(1) << 62)) throw Error("order overflow");
  return Int(r < 0 ? -r : r);
}

/// Quotient with remainder of minimal magnitude; |a - q*b| <= |b|/2.
inline Int roundDiv(Int a, Int b) {
  Int q = a / b;
  Int r = a - q * b;
  if (2 * std::abs(r) > std::abs(b)) q += (r < 0) == (b < 0) ? 1 : -1;
  return q;
}

/// Canonical representative of a mod n in [0, n); n == 0 leaves a unchanged.
inline Int modNonneg(Int a, Int n) {
  if (n == 0) return a;
  Int r = a % n;
  return r < 0 ? r + n : r;
}

inline Int binom2(Int k) { return k * (k - 1) / 2; }

inline int signPow(Int exponent) { return exponent % 2 == 0 ? 1 : -1; }

}  // namespace nielsen
