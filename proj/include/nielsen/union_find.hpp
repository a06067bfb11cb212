#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace nielsen::union_find {

inline void init(std::vector<std::int64_t>& parent, std::size_t n) {
  parent.resize(n);
  std::iota(parent.begin(), parent.end(), std::int64_t(0));
}

inline std::int64_t find(std::vector<std::int64_t>& parent, std::int64_t x) {
  while (parent[std::size_t(x)] != x) {
    parent[std::size_t(x)] = parent[std::size_t(parent[std::size_t(x)])];
    x = parent[std::size_t(x)];
  }
  return x;
}

// the smaller root wins, so representatives are the least orbit elements
inline void unite(std::vector<std::int64_t>& parent, std::int64_t a,
                  std::int64_t b) {
  a = find(parent, a);
  b = find(parent, b);
  if (a == b) return;
  if (b < a) std::swap(a, b);
  parent[std::size_t(b)] = a;
}

}  // namespace nielsen::union_find
