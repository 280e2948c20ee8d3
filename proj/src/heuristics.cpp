#include "wangtiler/heuristics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "wangtiler/transducer.hpp"

namespace wangtiler {

LayeredDag::LayeredDag(int width, int num_colors) : width_(width), colors_(num_colors) {
  if (width < 1) throw std::invalid_argument("row width must be at least 1");
  if (num_colors < 1) throw std::invalid_argument("need at least one color");
}

void LayeredDag::add_edge(DagEdge e) { edges_.push_back(e); }

std::optional<std::vector<int>> LayeredDag::shortest_path(std::int64_t* cost) const {
  const auto n = static_cast<std::size_t>(num_vertices());
  // Incoming edges grouped by head, insertion order kept within a group.
  std::vector<int> start(n + 1, 0);
  for (const DagEdge& e : edges_) ++start[static_cast<std::size_t>(e.to) + 1];
  std::partial_sum(start.begin(), start.end(), start.begin());
  std::vector<int> incoming(edges_.size());
  std::vector<int> fill(start.begin(), start.end() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i)
    incoming[static_cast<std::size_t>(fill[static_cast<std::size_t>(edges_[i].to)]++)] =
        static_cast<int>(i);

  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> dist(n, kInf);
  std::vector<int> pred(n, -1);
  dist[0] = 0;
  for (std::size_t v = 1; v < n; ++v) {
    for (int i = start[v]; i < start[v + 1]; ++i) {
      const DagEdge& e = edges_[static_cast<std::size_t>(incoming[static_cast<std::size_t>(i)])];
      const std::int64_t d = dist[static_cast<std::size_t>(e.from)];
      if (d == kInf) continue;
      if (d + e.cost < dist[v]) {
        dist[v] = d + e.cost;
        pred[v] = incoming[static_cast<std::size_t>(i)];
      }
    }
  }
  const auto t = static_cast<std::size_t>(terminal());
  if (dist[t] == kInf) return std::nullopt;
  if (cost) *cost = dist[t];
  std::vector<int> path;
  for (int v = terminal(); v != source();) {
    const int e = pred[static_cast<std::size_t>(v)];
    path.push_back(e);
    v = edges_[static_cast<std::size_t>(e)].from;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

EdgeRequirement EdgeRequirement::hard(int num_colors, std::span<const Color> colors) {
  EdgeRequirement r;
  r.kind = Kind::kHard;
  r.allowed.assign(static_cast<std::size_t>(num_colors), 0);
  for (Color c : colors) r.allowed[static_cast<std::size_t>(c)] = 1;
  return r;
}

EdgeRequirement EdgeRequirement::soft(std::vector<char> allowed) {
  EdgeRequirement r;
  r.kind = Kind::kSoft;
  r.allowed = std::move(allowed);
  return r;
}

namespace {

// Fisher-Yates with plain modulo so sequences match across standard libraries.
template <class T>
void shuffle(std::vector<T>& v, std::mt19937_64* rng) {
  if (!rng) return;
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>((*rng)() % i);
    std::swap(v[i - 1], v[j]);
  }
}

std::vector<int> iota_vec(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

LayeredDag make_dag(const TileSet& ts, int width, const RowProblem& p) {
  const int nc = ts.num_colors();
  const PenaltyScheme ps{width};
  LayeredDag g(width, nc);
  for (Color c = 0; c < nc; ++c) g.add_edge({g.source(), g.color_vertex(0, c), 0, -1});
  for (int j = 0; j < width; ++j) {
    const auto cell = static_cast<std::size_t>(j);
    const bool blocked = !p.blocked.empty() && p.blocked[cell];
    const EdgeRequirement* north = p.north.empty() ? nullptr : &p.north[cell];
    const EdgeRequirement* south = p.south.empty() ? nullptr : &p.south[cell];
    std::vector<int> order = iota_vec(ts.size());
    shuffle(order, p.rng);
    if (!blocked) {
      for (int k : order) {
        const Tile& t = ts[k];
        int stranded = 0;
        bool pruned = false;
        for (auto [req, color] : {std::pair{north, t.north}, std::pair{south, t.south}}) {
          if (!req || req->admits(color)) continue;
          if (req->kind == EdgeRequirement::Kind::kHard) pruned = true;
          else ++stranded;
        }
        if (pruned) continue;
        const std::int64_t cost = stranded == 0 ? 0 : stranded == 1 ? ps.eps_half() : ps.eps_full();
        g.add_edge({g.color_vertex(j, t.west), g.color_vertex(j + 1, t.east), cost, k});
      }
    }
    std::vector<int> into_void = iota_vec(nc);
    shuffle(into_void, p.rng);
    for (int c : into_void) g.add_edge({g.color_vertex(j, c), g.void_vertex(j), ps.void_cost(), -1});
    for (Color c = 0; c < nc; ++c) g.add_edge({g.void_vertex(j), g.color_vertex(j + 1, c), 0, -1});
  }
  std::vector<int> last = iota_vec(nc);
  shuffle(last, p.rng);
  for (int c : last) g.add_edge({g.color_vertex(width, c), g.terminal(), 0, -1});
  return g;
}

}  // namespace

LayeredDag build_row_dag(const TileSet& ts, int width) { return make_dag(ts, width, RowProblem{}); }

RowCover max_row_cover(const TileSet& ts, int width, const RowProblem& problem) {
  if (width < 1) throw std::invalid_argument("row width must be at least 1");
  const auto w = static_cast<std::size_t>(width);
  if ((!problem.north.empty() && problem.north.size() != w) ||
      (!problem.south.empty() && problem.south.size() != w) ||
      (!problem.blocked.empty() && problem.blocked.size() != w))
    throw std::invalid_argument("row constraints must have one entry per cell");
  RowCover out;
  out.row.assign(w, kVoid);
  if (ts.empty()) {
    out.voids = width;
    out.cost = PenaltyScheme{width}.void_cost() * width;
    return out;
  }
  const LayeredDag g = make_dag(ts, width, problem);
  const auto path = g.shortest_path(&out.cost);
  // Void edges are never pruned, so the terminal is always reachable.
  for (int e : *path) {
    const DagEdge& edge = g.edges()[static_cast<std::size_t>(e)];
    if (edge.tile < 0) continue;
    const int layer = (edge.from - 1) / (ts.num_colors() + 1);
    out.row[static_cast<std::size_t>(layer)] = edge.tile;
  }
  out.voids = static_cast<int>(std::count(out.row.begin(), out.row.end(), kVoid));
  return out;
}

std::string_view bound_name(Bound b) {
  switch (b) {
    case Bound::kNone: return "none";
    case Bound::kHalf: return "1/2";
    case Bound::kTwoThirds: return "2/3";
  }
  return "?";
}

std::string_view init_name(InitAlgorithm a) {
  switch (a) {
    case InitAlgorithm::kSimple: return "simple";
    case InitAlgorithm::kHalf: return "half";
    case InitAlgorithm::kTwoThirds: return "twothirds";
  }
  return "?";
}

InitAlgorithm parse_init(std::string_view text) {
  if (text == "simple" || text == "1") return InitAlgorithm::kSimple;
  if (text == "half" || text == "2") return InitAlgorithm::kHalf;
  if (text == "twothirds" || text == "3") return InitAlgorithm::kTwoThirds;
  throw std::invalid_argument("unknown initial algorithm '" + std::string(text) + "'");
}

Bound half_bound(const TileSet& ts) {
  return admits_walk(build_transducer(ts, Orientation::kHorizontal), 2) ? Bound::kHalf
                                                                        : Bound::kNone;
}

Bound twothirds_bound(const TileSet& ts) {
  if (ts.empty()) return Bound::kNone;
  return all_states_on_cycles(build_transducer(ts, Orientation::kHorizontal)) &&
                 all_states_on_cycles(build_transducer(ts, Orientation::kDual))
             ? Bound::kTwoThirds
             : Bound::kNone;
}

std::vector<int> twothirds_row_order(int height) {
  // 1-based: 1, then b+3, b+2, b+1, b+2 for b = 1, 4, 7, ...
  std::vector<int> order{0};
  for (int b = 1; b + 1 <= height; b += 3)
    for (int i : {b + 3, b + 2, b + 1, b + 2})
      if (i <= height) order.push_back(i - 1);
  return order;
}

namespace {

struct LineOptions {
  bool penalties = true;
  int dual_depth = 0;  ///< > 0: north side soft set from the row dual_depth+1 above
  bool block_odd = false;  ///< no tiles at odd 0-based columns
};

// Per-grid data reused across line solves.
class GridSolver {
 public:
  explicit GridSolver(const TileSet& ts) : ts_(ts) {
    const auto nc = static_cast<std::size_t>(ts.num_colors());
    has_south_.assign(nc, 0);
    has_north_.assign(nc, 0);
    for (const Tile& t : ts.tiles()) {
      has_south_[static_cast<std::size_t>(t.south)] = 1;
      has_north_[static_cast<std::size_t>(t.north)] = 1;
    }
    const TransducerGraph dual = build_transducer(ts, Orientation::kDual);
    reach1_ = reachability(dual, 1);
    reach2_ = reachability(dual, 2);
  }

  const TileSet& tiles() const { return ts_; }

  void solve_row(Tiling& t, int r, const LineOptions& o, std::mt19937_64& rng) const {
    const int h = t.height();
    const int w = t.width();
    const int nc = ts_.num_colors();
    RowProblem p;
    p.rng = &rng;
    p.north.resize(static_cast<std::size_t>(w));
    p.south.resize(static_cast<std::size_t>(w));
    if (o.block_odd) {
      p.blocked.assign(static_cast<std::size_t>(w), 0);
      for (int c = 1; c < w; c += 2) p.blocked[static_cast<std::size_t>(c)] = 1;
    }
    for (int c = 0; c < w; ++c) {
      auto& north = p.north[static_cast<std::size_t>(c)];
      auto& south = p.south[static_cast<std::size_t>(c)];
      if (r > 0) {
        if (const Cell& above = t.at(r - 1, c)) {
          const Color s = ts_[*above].south;
          north = EdgeRequirement::hard(nc, std::span<const Color>(&s, 1));
        } else if (o.dual_depth > 0) {
          const int src = r - 1 - o.dual_depth;
          if (src >= 0 && t.at(src, c)) {
            const auto& reach = o.dual_depth == 1 ? reach1_ : reach2_;
            const auto from = static_cast<std::size_t>(ts_[*t.at(src, c)].south);
            const auto n = static_cast<std::size_t>(nc);
            north = EdgeRequirement::soft(
                std::vector<char>(reach.begin() + static_cast<std::ptrdiff_t>(from * n),
                                  reach.begin() + static_cast<std::ptrdiff_t>((from + 1) * n)));
          }
        } else if (o.penalties) {
          north = EdgeRequirement::soft(has_south_);
        }
      }
      if (r + 1 < h) {
        if (const Cell& below = t.at(r + 1, c)) {
          const Color n = ts_[*below].north;
          south = EdgeRequirement::hard(nc, std::span<const Color>(&n, 1));
        } else if (o.penalties) {
          south = EdgeRequirement::soft(has_north_);
        }
      }
    }
    const RowCover cover = max_row_cover(ts_, w, p);
    for (int c = 0; c < w; ++c) t.at(r, c) = cover.row[static_cast<std::size_t>(c)];
  }

 private:
  const TileSet& ts_;
  std::vector<char> has_south_, has_north_;
  std::vector<char> reach1_, reach2_;
};

void check_grid(int h, int w) {
  if (h < 1 || w < 1) throw std::invalid_argument("grid dimensions must be at least 1x1");
}

Tiling run_simple(const GridSolver& g, int h, int w, std::mt19937_64& rng) {
  Tiling t(h, w);
  for (int r = 0; r < h; ++r) g.solve_row(t, r, {}, rng);
  return t;
}

Tiling run_half(const GridSolver& g, int h, int w, std::mt19937_64& rng) {
  Tiling t(h, w);
  // 1-based order 1, 3, 2, 5, 4, ...
  std::vector<int> order{1};
  for (int i = 3; i - 1 <= h; i += 2) {
    if (i <= h) order.push_back(i);
    order.push_back(i - 1);
  }
  for (int i : order) {
    LineOptions o;
    if (i % 2 == 1) o.dual_depth = 1;
    g.solve_row(t, i - 1, o, rng);
  }
  return t;
}

Tiling run_twothirds(const GridSolver& g, int h, int w, std::mt19937_64& rng) {
  Tiling t(h, w);
  std::vector<char> visited(static_cast<std::size_t>(h), 0);
  for (int r : twothirds_row_order(h)) {
    const int i = r + 1;
    LineOptions o;
    if (i % 3 == 1) {
      o.dual_depth = 2;
    } else if (i % 3 == 0 && !visited[static_cast<std::size_t>(r)]) {
      o.dual_depth = 1;
      o.block_odd = true;
    }
    g.solve_row(t, r, o, rng);
    visited[static_cast<std::size_t>(r)] = 1;
  }
  return t;
}

CoverRun finish(Tiling t, std::uint64_t seed, Bound bound, int iterations = 0) {
  CoverRun run;
  run.placed = t.placed();
  run.tiling = std::move(t);
  run.seed = seed;
  run.bound = bound;
  run.iterations = iterations;
  return run;
}

}  // namespace

CoverRun alg1_simple(const TileSet& ts, int height, int width, std::uint64_t seed) {
  check_grid(height, width);
  std::mt19937_64 rng(seed);
  return finish(run_simple(GridSolver(ts), height, width, rng), seed, Bound::kNone);
}

CoverRun alg2_half(const TileSet& ts, int height, int width, std::uint64_t seed) {
  check_grid(height, width);
  std::mt19937_64 rng(seed);
  return finish(run_half(GridSolver(ts), height, width, rng), seed, half_bound(ts));
}

CoverRun alg3_twothirds(const TileSet& ts, int height, int width, std::uint64_t seed) {
  check_grid(height, width);
  std::mt19937_64 rng(seed);
  return finish(run_twothirds(GridSolver(ts), height, width, rng), seed, twothirds_bound(ts));
}

CoverRun alg4_improve(const TileSet& ts, int height, int width, InitAlgorithm init,
                      std::uint64_t seed, const ImproveOptions& options) {
  check_grid(height, width);
  std::mt19937_64 rng(seed);
  const GridSolver rows(ts);
  const TileSet reflected = ts.reflected();
  const GridSolver columns(reflected);

  Tiling t;
  Bound bound = Bound::kNone;
  switch (init) {
    case InitAlgorithm::kSimple: t = run_simple(rows, height, width, rng); break;
    case InitAlgorithm::kHalf:
      t = run_half(rows, height, width, rng);
      bound = half_bound(ts);
      break;
    case InitAlgorithm::kTwoThirds:
      t = run_twothirds(rows, height, width, rng);
      bound = twothirds_bound(ts);
      break;
  }

  LineOptions sweep;
  sweep.penalties = options.sweep_penalties;
  int voids_old = std::numeric_limits<int>::max();
  bool by_columns = true;
  int iterations = 0;
  while (voids_old - t.voids() > 0) {
    voids_old = t.voids();
    if (by_columns) {
      Tiling tt = t.transposed();
      for (int c = 0; c < width; ++c) columns.solve_row(tt, c, sweep, rng);
      t = tt.transposed();
    } else {
      for (int r = 0; r < height; ++r) rows.solve_row(t, r, sweep, rng);
    }
    by_columns = !by_columns;
    ++iterations;
  }
  return finish(std::move(t), seed, bound, iterations);
}

}  // namespace wangtiler
