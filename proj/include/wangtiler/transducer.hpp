#pragma once

#include <string>
#include <vector>

#include "wangtiler/tileset.hpp"

namespace wangtiler {

enum class Orientation : std::uint8_t {
  kHorizontal,  ///< arc w -(s|n)-> e; paths are valid rows
  kDual,        ///< arc n -(e|w)-> s; paths are valid columns
};

struct Arc {
  Color from = 0;
  Color to = 0;
  Color input = 0;
  Color output = 0;
  TileId tile = 0;

  bool operator==(const Arc&) const = default;
};

/// Multigraph over colors with exactly one arc per tile, arc i <-> tile i.
struct TransducerGraph {
  int num_states = 0;
  Orientation orientation = Orientation::kHorizontal;
  std::vector<Arc> arcs;
};

TransducerGraph build_transducer(const TileSet& ts, Orientation orientation);

struct ParallelArcs {
  Color from = 0;
  Color to = 0;
  std::vector<int> arcs;  ///< indices into TransducerGraph::arcs, ascending

  bool operator==(const ParallelArcs&) const = default;
};

/// Every ordered state pair joined by two or more arcs, sorted by (from, to).
std::vector<ParallelArcs> parallel_arcs(const TransducerGraph& g);

/// True iff each state with an incident arc lies on a directed cycle.
bool all_states_on_cycles(const TransducerGraph& g);

/// True iff some walk of exactly `length` arcs exists (a valid row of that
/// many tiles, for the horizontal graph).
bool admits_walk(const TransducerGraph& g, int length);

/// For each state, the states reachable by walks of exactly `steps` arcs.
/// Result is row-major [from * num_states + to].
std::vector<char> reachability(const TransducerGraph& g, int steps);

/// Graphviz rendering with arcs labeled "input|output".
std::string to_dot(const TransducerGraph& g, const std::string& name = "transducer");

/// Outcome of a Wang-to-corner translation. `bijective` is reported, never
/// assumed; `witnesses` lists the parallel arcs that break it.
struct Translation {
  std::vector<CornerTile> corners;  ///< deduplicated, lexicographically sorted
  int num_colors = 0;
  int matched_pairs = 0;            ///< ordered tile pairs that produced a corner
  bool bijective = false;
  std::vector<ParallelArcs> witnesses;
};

/// For every ordered pair (p, q) with east(p) == west(q) emits the corner
/// tile (n_p, s_p, s_q, n_q).
Translation translate_horizontal(const TileSet& ts);

/// translate_horizontal applied to the set rotated by 90 degrees, where the
/// rotated tile is (n, w, s, e) := (w, s, e, n) of the original.
Translation translate_vertical(const TileSet& ts);

/// The 90-degree rotation used by translate_vertical.
TileSet rotated(const TileSet& ts);

}  // namespace wangtiler
