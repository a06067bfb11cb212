#pragma once

#include "nielsen/abelian.hpp"
#include "nielsen/core.hpp"
#include "nielsen/finite_group.hpp"

#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace testsupport {

using nielsen::FgAbelianGroup;
using nielsen::GroupHom;
using nielsen::Index;
using nielsen::Int;
using nielsen::IntMatrix;
using nielsen::IntVector;
using nielsen::Wide;

inline Int randInt(std::mt19937_64& rng, Int lo, Int hi) {
  return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

// fraction-free elimination; exact for the small matrices used in tests
inline Wide detBareiss(const IntMatrix& m) {
  const Index n = m.rows();
  if (n != m.cols()) throw nielsen::Error("determinant needs a square matrix");
  if (n == 0) return 1;
  std::vector<std::vector<Wide>> a(size_t(n), std::vector<Wide>(size_t(n), 0));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) a[size_t(i)][size_t(j)] = m(i, j);
  Wide sign = 1, prev = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (a[size_t(k)][size_t(k)] == 0) {
      Index swap = -1;
      for (Index i = k + 1; i < n; ++i)
        if (a[size_t(i)][size_t(k)] != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      std::swap(a[size_t(k)], a[size_t(swap)]);
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j)
        a[size_t(i)][size_t(j)] =
            (a[size_t(i)][size_t(j)] * a[size_t(k)][size_t(k)] -
             a[size_t(i)][size_t(k)] * a[size_t(k)][size_t(j)]) /
            prev;
    prev = a[size_t(k)][size_t(k)];
  }
  return sign * a[size_t(n - 1)][size_t(n - 1)];
}

inline IntMatrix randomMatrix(std::mt19937_64& rng, Index rows, Index cols,
                              Int bound) {
  IntMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = randInt(rng, -bound, bound);
  return m;
}

inline IntMatrix randomUnimodular(std::mt19937_64& rng, Index n, int steps = 12) {
  IntMatrix m = IntMatrix::Identity(n, n);
  if (n < 1) return m;
  for (int s = 0; s < steps; ++s) {
    Index i = randInt(rng, 0, n - 1), j = randInt(rng, 0, n - 1);
    switch (randInt(rng, 0, 2)) {
      case 0:
        if (i != j) m.row(i) += randInt(rng, -3, 3) * m.row(j);
        break;
      case 1:
        m.row(i).swap(m.row(j));
        break;
      default:
        m.row(i) *= -1;
    }
  }
  return m;
}

// every isomorphism type of finite abelian group with order <= maxOrder
inline std::vector<FgAbelianGroup> allFiniteAbelianUpTo(Int maxOrder) {
  auto partitions = [](int e) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxPart) -> void {
      if (rest == 0) {
        out.push_back(cur);
        return;
      }
      for (int p = std::min(rest, maxPart); p >= 1; --p) {
        cur.push_back(p);
        self(self, rest - p, p);
        cur.pop_back();
      }
    };
    rec(rec, e, e);
    return out;
  };

  std::vector<FgAbelianGroup> out;
  for (Int o = 1; o <= maxOrder; ++o) {
    std::map<Int, int> primes;
    Int rest = o;
    for (Int p = 2; p * p <= rest; ++p)
      while (rest % p == 0) {
        ++primes[p];
        rest /= p;
      }
    if (rest > 1) ++primes[rest];

    std::vector<std::vector<std::vector<int>>> choices;  // per prime
    std::vector<Int> primeList;
    for (auto& [p, e] : primes) {
      primeList.push_back(p);
      choices.push_back(partitions(e));
    }
    std::vector<size_t> pick(choices.size(), 0);
    while (true) {
      size_t k = 0;
      for (size_t i = 0; i < choices.size(); ++i)
        k = std::max(k, choices[i][pick[i]].size());
      std::vector<Int> factors;
      for (size_t j = 0; j < k; ++j) {  // j = 0 is the smallest factor
        Int f = 1;
        for (size_t i = 0; i < choices.size(); ++i) {
          const auto& lambda = choices[i][pick[i]];  // non-increasing
          const size_t idx = k - 1 - j;
          const int exp = idx < lambda.size() ? lambda[idx] : 0;
          for (int t = 0; t < exp; ++t) f *= primeList[i];
        }
        if (f > 1) factors.push_back(f);
      }
      out.emplace_back(std::move(factors));

      size_t i = 0;
      for (; i < pick.size(); ++i) {
        if (++pick[i] < choices[i].size()) break;
        pick[i] = 0;
      }
      if (i == pick.size()) break;
    }
  }
  return out;
}

// uniform valid hom: entry (i,j) ranges over the multiples of ei/gcd(ei, dj)
inline GroupHom randomHom(std::mt19937_64& rng, const FgAbelianGroup& dom,
                          const FgAbelianGroup& cod, Int freeBound = 4) {
  IntMatrix m(cod.rank(), dom.rank());
  for (Index i = 0; i < cod.rank(); ++i)
    for (Index j = 0; j < dom.rank(); ++j) {
      const Int dj = dom.factor(j), ei = cod.factor(i);
      if (ei == 0)
        m(i, j) = dj == 0 ? randInt(rng, -freeBound, freeBound) : 0;
      else if (dj == 0)
        m(i, j) = randInt(rng, 0, ei - 1);
      else {
        const Int g = nielsen::gcdInt(ei, dj);
        m(i, j) = (ei / g) * randInt(rng, 0, g - 1);
      }
    }
  return GroupHom(dom, cod, std::move(m));
}

// S3 as permutations of {0,1,2} with a fixed listing:
// 0:id 1:(01) 2:(02) 3:(12) 4:(012) 5:(021); mul(a,b) applies a, then b.
// The sign character under this listing is {0,1,1,1,0,0}.
inline nielsen::FiniteGroupTable symmetricGroup3() {
  const int perms[6][3] = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                           {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  auto indexOf = [&](const int p[3]) {
    for (int k = 0; k < 6; ++k)
      if (perms[k][0] == p[0] && perms[k][1] == p[1] && perms[k][2] == p[2])
        return k;
    return -1;
  };
  Eigen::MatrixXi mult(6, 6);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      int comp[3];
      for (int x = 0; x < 3; ++x) comp[x] = perms[b][perms[a][x]];
      mult(a, b) = indexOf(comp);
    }
  return nielsen::FiniteGroupTable(std::move(mult));
}

inline Eigen::MatrixXi cyclicTable(int n) {
  Eigen::MatrixXi mult(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mult(a, b) = (a + b) % n;
  return mult;
}

struct CommandResult {
  int exitCode;
  std::string output;
};

inline CommandResult runCommand(const std::string& cmd) {
  std::string full = cmd + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) throw nielsen::Error("popen failed");
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

}  // namespace testsupport
