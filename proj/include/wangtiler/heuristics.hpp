#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "wangtiler/tileset.hpp"

namespace wangtiler {

struct DagEdge {
  int from = 0;
  int to = 0;
  std::int64_t cost = 0;
  TileId tile = -1;  ///< -1 for source, terminal and void edges
};

/// Layered DAG for one row of `width` cells. Vertex layout: source 0; color
/// layer j (0..width) holds vertices 1 + j(C+1) + c; the void vertex after
/// layer j (j < width) is 1 + j(C+1) + C; the terminal is last. Index order
/// is a topological order.
class LayeredDag {
 public:
  LayeredDag(int width, int num_colors);

  int width() const { return width_; }
  int num_colors() const { return colors_; }
  int source() const { return 0; }
  int terminal() const { return num_vertices() - 1; }
  int color_vertex(int layer, Color c) const { return 1 + layer * (colors_ + 1) + c; }
  int void_vertex(int layer) const { return 1 + layer * (colors_ + 1) + colors_; }
  int num_vertices() const { return 2 + width_ + colors_ + width_ * colors_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<DagEdge>& edges() const { return edges_; }

  void add_edge(DagEdge e);

  /// Single-source shortest path over the construction order. Ties go to the
  /// incoming edge inserted first. Returns edge indices source to terminal,
  /// or nullopt when the terminal is unreachable.
  std::optional<std::vector<int>> shortest_path(std::int64_t* cost = nullptr) const;

 private:
  int width_;
  int colors_;
  std::vector<DagEdge> edges_;
};

/// The unpruned, unweighted-by-penalty row DAG: source edges, tile edges
/// (one per tile per layer) and void edges with unit cost scaled by
/// PenaltyScheme::void_cost.
LayeredDag build_row_dag(const TileSet& ts, int width);

/// Costs in integer units of 1/(2(W+1)) so that sums are exact: a void costs
/// 2(W+1), a tile stranding one vertical neighbor 1, both neighbors 2.
struct PenaltyScheme {
  int width = 1;

  std::int64_t void_cost() const { return 2 * (static_cast<std::int64_t>(width) + 1); }
  std::int64_t eps_half() const { return 1; }
  std::int64_t eps_full() const { return 2; }
  /// Cost in units of one void.
  double to_real(std::int64_t cost) const {
    return static_cast<double>(cost) / static_cast<double>(void_cost());
  }
};

/// Constraint on the color of one tile edge. Hard sets prune tiles, soft
/// sets only add a penalty.
struct EdgeRequirement {
  enum class Kind : std::uint8_t { kWildcard, kHard, kSoft };
  Kind kind = Kind::kWildcard;
  std::vector<char> allowed;  ///< indexed by color, for kHard and kSoft

  static EdgeRequirement wildcard() { return {}; }
  static EdgeRequirement hard(int num_colors, std::span<const Color> colors);
  static EdgeRequirement soft(std::vector<char> allowed);
  bool admits(Color c) const { return kind == Kind::kWildcard || allowed[static_cast<std::size_t>(c)]; }
};

struct RowProblem {
  /// One entry per cell, or empty for all-wildcard.
  std::vector<EdgeRequirement> north;
  std::vector<EdgeRequirement> south;
  /// Cells where no tile may be placed; empty for none.
  std::vector<char> blocked;
  /// Shuffles edge insertion order when set.
  std::mt19937_64* rng = nullptr;
};

struct RowCover {
  std::vector<Cell> row;
  std::int64_t cost = 0;  ///< in PenaltyScheme units
  int voids = 0;
};

/// Maximum row cover by shortest path. Throws std::invalid_argument for
/// width < 1 or mismatched requirement lengths.
RowCover max_row_cover(const TileSet& ts, int width, const RowProblem& problem = {});

enum class Bound : std::uint8_t { kNone, kHalf, kTwoThirds };
std::string_view bound_name(Bound b);

struct CoverRun {
  Tiling tiling;
  int placed = 0;
  int iterations = 0;
  std::uint64_t seed = 0;
  Bound bound = Bound::kNone;  ///< proven guarantee for this tile set
};

enum class InitAlgorithm : std::uint8_t { kSimple, kHalf, kTwoThirds };
std::string_view init_name(InitAlgorithm a);
InitAlgorithm parse_init(std::string_view text);

struct ImproveOptions {
  /// Penalize stranded void neighbors during the improvement sweeps.
  bool sweep_penalties = true;
};

CoverRun alg1_simple(const TileSet& ts, int height, int width, std::uint64_t seed);
CoverRun alg2_half(const TileSet& ts, int height, int width, std::uint64_t seed);
CoverRun alg3_twothirds(const TileSet& ts, int height, int width, std::uint64_t seed);
/// Alternating column and row sweeps while the void count strictly drops.
CoverRun alg4_improve(const TileSet& ts, int height, int width, InitAlgorithm init,
                      std::uint64_t seed, const ImproveOptions& options = {});

/// Row order used by alg3_twothirds, 0-based, with revisits.
std::vector<int> twothirds_row_order(int height);

Bound half_bound(const TileSet& ts);
Bound twothirds_bound(const TileSet& ts);

}  // namespace wangtiler
