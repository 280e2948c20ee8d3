#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "wangtiler/extensions.hpp"
#include "wangtiler/tileset.hpp"

namespace wangtiler {

enum class SolveStatus : std::uint8_t { kValid, kInfeasible, kCapped };

std::string_view status_name(SolveStatus s);

struct SolveStats {
  std::uint64_t states = 0;  ///< frontier states stored
  std::uint64_t nodes = 0;   ///< search nodes expanded
};

struct SolveResult {
  SolveStatus status = SolveStatus::kInfeasible;
  std::optional<Tiling> witness;
  SolveStats stats;
};

inline constexpr std::size_t kDefaultStateCap = std::size_t{1} << 22;

/// Row-by-row frontier dynamic program. Supports ForceTile, ForbidTile,
/// ForceEdgeColor, ForbidEdgeColor and PeriodicFixed; other extensions throw
/// std::invalid_argument, as does state_cap == 0.
SolveResult solve_decision(const TileSet& ts, int height, int width,
                           std::span<const Extension> constraints = {},
                           std::size_t state_cap = kDefaultStateCap);

struct TorusDims {
  int height = 0;
  int width = 0;
  std::uint64_t count = 0;  ///< labeled periodic tilings of this shape
};

struct TorusResult {
  int min_area = 0;
  int height = 0;  ///< first shape with a solution, by ascending height
  int width = 0;
  std::uint64_t count = 0;         ///< summed over every shape of min_area
  std::vector<TorusDims> shapes;   ///< every shape of min_area with count > 0
  std::vector<Tiling> witnesses;   ///< at most max_witnesses, shape order
};

/// Searches shapes by ascending area, then ascending height, for tilings
/// whose opposite boundaries match. Counts saturate at UINT64_MAX.
/// Throws std::runtime_error if a shape exceeds the state cap.
std::optional<TorusResult> smallest_torus(const TileSet& ts, int max_area,
                                          std::size_t max_witnesses = 64,
                                          std::size_t state_cap = kDefaultStateCap);

struct PackOptions {
  bool periodic = true;
  std::chrono::milliseconds deadline{10'000};
  /// Pick the open cell with the fewest candidates instead of row-major order.
  bool most_constrained = true;
};

/// Uses every tile exactly once. Throws std::invalid_argument unless
/// |ts| == height * width.
SolveResult pack_tiles(const TileSet& ts, int height, int width, const PackOptions& options = {});

struct CoverOracleResult {
  int best = 0;
  Tiling witness;
  std::uint64_t nodes = 0;
};

/// Exhaustive branch and bound over tiles and VOID per cell. Throws
/// std::runtime_error once more than node_budget nodes are expanded.
CoverOracleResult max_cover_oracle(const TileSet& ts, int height, int width,
                                   std::uint64_t node_budget = 100'000'000);

}  // namespace wangtiler
