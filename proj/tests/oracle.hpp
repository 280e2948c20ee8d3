#pragma once

// Brute-force references for the tests. Deliberately naive and independent
// of the library's solvers and validator: plain tuples and nested loops.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Quad = std::array<int, 4>;  // n, w, s, e
constexpr int kVoid = -1;

inline bool grid_ok(const std::vector<Quad>& tiles, const std::vector<int>& g, int h, int w) {
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c) {
      const int a = g[r * w + c];
      if (a < 0) continue;
      if (c + 1 < w) {
        const int b = g[r * w + c + 1];
        if (b >= 0 && tiles[a][3] != tiles[b][1]) return false;
      }
      if (r + 1 < h) {
        const int b = g[(r + 1) * w + c];
        if (b >= 0 && tiles[a][2] != tiles[b][0]) return false;
      }
    }
  return true;
}

/// Visits every assignment in tiles ∪ {VOID} (or tiles only when
/// allow_void is false). The callback returns false to stop.
inline void enumerate(int n_tiles, int cells, bool allow_void,
                      const std::function<bool(const std::vector<int>&)>& f) {
  const int lo = allow_void ? -1 : 0;
  std::vector<int> g(static_cast<std::size_t>(cells), lo);
  while (true) {
    if (!f(g)) return;
    int i = 0;
    while (i < cells && g[i] == n_tiles - 1) g[i++] = lo;
    if (i == cells) return;
    ++g[i];
  }
}

inline int max_cover(const std::vector<Quad>& tiles, int h, int w) {
  int best = 0;
  enumerate(static_cast<int>(tiles.size()), h * w, true, [&](const std::vector<int>& g) {
    if (!grid_ok(tiles, g, h, w)) return true;
    int placed = 0;
    for (int v : g) placed += v >= 0;
    best = std::max(best, placed);
    return best < h * w;
  });
  return best;
}

inline bool full_tiling_exists(const std::vector<Quad>& tiles, int h, int w) {
  bool found = false;
  enumerate(static_cast<int>(tiles.size()), h * w, false, [&](const std::vector<int>& g) {
    found = grid_ok(tiles, g, h, w);
    return !found;
  });
  return found;
}

/// Minimum voids in one row. north[c] / south[c] list admissible colors,
/// empty meaning anything; blocked cells must stay void.
inline int row_min_voids(const std::vector<Quad>& tiles, int w,
                         const std::vector<std::set<int>>& north,
                         const std::vector<std::set<int>>& south,
                         const std::vector<bool>& blocked) {
  int best = w;
  enumerate(static_cast<int>(tiles.size()), w, true, [&](const std::vector<int>& g) {
    int voids = 0;
    for (int c = 0; c < w; ++c) {
      const int k = g[c];
      if (k < 0) {
        ++voids;
        continue;
      }
      if (blocked[c]) return true;
      if (!north[c].empty() && !north[c].count(tiles[k][0])) return true;
      if (!south[c].empty() && !south[c].count(tiles[k][2])) return true;
      if (c + 1 < w && g[c + 1] >= 0 && tiles[k][3] != tiles[g[c + 1]][1]) return true;
    }
    best = std::min(best, voids);
    return true;
  });
  return best;
}

/// Random duplicate-free set with n_tiles tiles over n_colors colors.
inline std::vector<Quad> random_set(std::mt19937_64& rng, int n_colors, int n_tiles) {
  std::uniform_int_distribution<int> col(0, n_colors - 1);
  std::set<Quad> seen;
  std::vector<Quad> out;
  const int cap = n_colors * n_colors * n_colors * n_colors;
  while (static_cast<int>(out.size()) < std::min(n_tiles, cap)) {
    Quad q{col(rng), col(rng), col(rng), col(rng)};
    if (seen.insert(q).second) out.push_back(q);
  }
  return out;
}

}  // namespace oracle
