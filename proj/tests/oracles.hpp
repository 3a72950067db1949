#pragma once

// Brute-force reference computations shared by the test binaries. They work
// from raw element maps and plain loops and avoid the library's own tables.

#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "catquant/category.hpp"

namespace oracle {

using Map = std::vector<std::size_t>;

inline Map compose(const Map& g, const Map& f) {
  Map out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = g[f[i]];
  return out;
}

/// Every function {0..n-1} → {0..m-1}, by counting in base m.
inline std::vector<Map> all_functions(std::size_t n, std::size_t m) {
  std::vector<Map> out;
  Map f(n, 0);
  while (true) {
    out.push_back(f);
    std::size_t i = n;
    while (i > 0 && ++f[i - 1] == m) f[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

/// x <= y given as the set of (x, y) pairs of a reflexive relation closed by hand.
inline bool monotone(const std::set<std::pair<std::size_t, std::size_t>>& src,
                     const std::set<std::pair<std::size_t, std::size_t>>& dst, const Map& f) {
  for (auto [x, y] : src)
    if (!dst.count({f[x], f[y]})) return false;
  return true;
}

inline std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

/// Number of (f, g, h) composable triples where the table disagrees with
/// itself on associativity, counted straight off compose().
inline std::size_t associativity_failures(const catquant::FiniteCategory& cat) {
  using catquant::ArrowId;
  std::size_t bad = 0;
  const std::size_t n = cat.arrow_count();
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t h = 0; h < n; ++h) {
        const ArrowId F{f}, G{g}, H{h};
        if (cat.cod(F) != cat.dom(G) || cat.cod(G) != cat.dom(H)) continue;
        auto gf = cat.compose(G, F);
        auto hg = cat.compose(H, G);
        if (!gf || !hg) continue;
        auto l = cat.compose(H, *gf);
        auto r = cat.compose(*hg, F);
        if (l != r) ++bad;
      }
  return bad;
}

}  // namespace oracle
