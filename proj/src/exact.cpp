#include "wangtiler/exact.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace wangtiler {

std::string_view status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::kValid: return "VALID";
    case SolveStatus::kInfeasible: return "INFEASIBLE";
    case SolveStatus::kCapped: return "CAPPED";
  }
  return "?";
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max()
                                                            : a + b;
}

struct CapExceeded {};

// Frontier over rows. A state is the south colors of the last row, prefixed
// by the first row's north colors when rows wrap. Keys pack each color into
// two bytes.
class Frontier {
 public:
  struct Options {
    bool wrap_rows = false;
    bool wrap_columns = false;
    bool all_parents = false;
    std::size_t state_cap = kDefaultStateCap;
  };

  Frontier(const TileSet& ts, int h, int w, Options opt, std::vector<std::vector<char>> allowed)
      : ts_(ts), h_(h), w_(w), opt_(opt), allowed_(std::move(allowed)) {
    if (ts.num_colors() > 0xFFFF) throw std::invalid_argument("too many colors for the frontier");
    const auto nc = static_cast<std::size_t>(ts.num_colors());
    by_nw_.resize(nc * nc);
    by_n_.resize(nc);
    by_w_.resize(nc);
    for (TileId k = 0; k < ts.size(); ++k) {
      const Tile& t = ts[k];
      by_nw_[static_cast<std::size_t>(t.north) * nc + static_cast<std::size_t>(t.west)].push_back(k);
      by_n_[static_cast<std::size_t>(t.north)].push_back(k);
      by_w_[static_cast<std::size_t>(t.west)].push_back(k);
      all_.push_back(k);
    }
  }

  /// Returns false when the cap was hit.
  bool run() {
    layers_.assign(static_cast<std::size_t>(h_), Layer{});
    try {
      for (int r = 0; r < h_; ++r) {
        Layer& next = layers_[static_cast<std::size_t>(r)];
        if (r == 0) {
          expand(r, -1, next);
        } else {
          const Layer& prev = layers_[static_cast<std::size_t>(r - 1)];
          for (std::size_t s = 0; s < prev.keys.size(); ++s) expand(r, static_cast<int>(s), next);
        }
        if (next.keys.empty()) break;
      }
    } catch (const CapExceeded&) {
      return false;
    }
    return true;
  }

  bool feasible() const { return !layers_.back().keys.empty(); }
  std::uint64_t states() const { return stored_; }
  std::uint64_t nodes() const { return nodes_; }

  std::uint64_t count() const {
    std::uint64_t total = 0;
    for (std::uint64_t c : layers_.back().count) total = sat_add(total, c);
    return total;
  }

  Tiling first_witness() const {
    Tiling t(h_, w_);
    int s = 0;
    for (int r = h_ - 1; r >= 0; --r) {
      const Layer& layer = layers_[static_cast<std::size_t>(r)];
      const Parent& p = layer.parents[static_cast<std::size_t>(s)].front();
      write_row(t, r, layer, p.row);
      s = p.prev;
    }
    return t;
  }

  /// Every solution up to `limit`, requires all_parents.
  std::vector<Tiling> witnesses(std::size_t limit) const {
    std::vector<Tiling> out;
    Tiling t(h_, w_);
    std::function<void(int, int)> walk = [&](int r, int s) {
      if (out.size() >= limit) return;
      if (r < 0) {
        out.push_back(t);
        return;
      }
      const Layer& layer = layers_[static_cast<std::size_t>(r)];
      for (const Parent& p : layer.parents[static_cast<std::size_t>(s)]) {
        write_row(t, r, layer, p.row);
        walk(r - 1, p.prev);
        if (out.size() >= limit) return;
      }
    };
    const Layer& last = layers_.back();
    for (std::size_t s = 0; s < last.keys.size() && out.size() < limit; ++s)
      walk(h_ - 1, static_cast<int>(s));
    return out;
  }

 private:
  struct Parent {
    int prev;  ///< state index in the previous layer, -1 for the first row
    int row;   ///< offset into Layer::rows
  };
  struct Layer {
    std::unordered_map<std::string, int> index;
    std::vector<std::string> keys;
    std::vector<std::vector<Parent>> parents;
    std::vector<std::uint64_t> count;
    std::vector<TileId> rows;
  };

  static Color key_color(const std::string& key, std::size_t i) {
    return static_cast<Color>((static_cast<unsigned char>(key[2 * i]) << 8) |
                              static_cast<unsigned char>(key[2 * i + 1]));
  }
  static void push_color(std::string& key, Color c) {
    key.push_back(static_cast<char>((c >> 8) & 0xFF));
    key.push_back(static_cast<char>(c & 0xFF));
  }

  void write_row(Tiling& t, int r, const Layer& layer, int row) const {
    for (int c = 0; c < w_; ++c)
      t.at(r, c) = layer.rows[static_cast<std::size_t>(row + c)];
  }

  const std::vector<TileId>& candidates(int north, int west) const {
    const auto nc = static_cast<std::size_t>(ts_.num_colors());
    if (north >= 0 && west >= 0)
      return by_nw_[static_cast<std::size_t>(north) * nc + static_cast<std::size_t>(west)];
    if (north >= 0) return by_n_[static_cast<std::size_t>(north)];
    if (west >= 0) return by_w_[static_cast<std::size_t>(west)];
    return all_;
  }

  void expand(int r, int prev_state, Layer& next) {
    const Layer* prev = prev_state >= 0 ? &layers_[static_cast<std::size_t>(r - 1)] : nullptr;
    const std::string* prev_key =
        prev ? &prev->keys[static_cast<std::size_t>(prev_state)] : nullptr;
    // With wrapped rows the previous key is first_north ++ south.
    const std::size_t south_at = opt_.wrap_rows ? static_cast<std::size_t>(w_) : 0;
    const std::uint64_t in_count = prev ? prev->count[static_cast<std::size_t>(prev_state)] : 1;
    const bool last = r == h_ - 1;
    const std::uint64_t node_cap = 64 * static_cast<std::uint64_t>(opt_.state_cap);

    std::vector<TileId> row(static_cast<std::size_t>(w_));
    std::function<void(int, int)> dfs = [&](int c, int west) {
      if (++nodes_ > node_cap) throw CapExceeded{};
      if (c == w_) {
        if (opt_.wrap_columns && ts_[row.back()].east != ts_[row.front()].west) return;
        std::string key;
        if (opt_.wrap_rows) {
          if (prev_key) key.append(*prev_key, 0, 2 * static_cast<std::size_t>(w_));
          else
            for (TileId k : row) push_color(key, ts_[k].north);
        }
        for (TileId k : row) push_color(key, ts_[k].south);
        if (last && opt_.wrap_rows) {
          const std::size_t n = 2 * static_cast<std::size_t>(w_);
          if (key.compare(0, n, key, n, n) != 0) return;
        }
        auto [it, fresh] = next.index.try_emplace(key, static_cast<int>(next.keys.size()));
        const auto s = static_cast<std::size_t>(it->second);
        if (fresh) {
          if (++stored_ > opt_.state_cap) throw CapExceeded{};
          next.keys.push_back(key);
          next.parents.emplace_back();
          next.count.push_back(0);
        }
        next.count[s] = sat_add(next.count[s], in_count);
        if (fresh || opt_.all_parents) {
          const int offset = static_cast<int>(next.rows.size());
          next.rows.insert(next.rows.end(), row.begin(), row.end());
          next.parents[s].push_back(Parent{prev_state, offset});
        }
        return;
      }
      const int north = prev_key ? key_color(*prev_key, south_at + static_cast<std::size_t>(c)) : -1;
      const auto& mask = allowed_[static_cast<std::size_t>(r * w_ + c)];
      for (TileId k : candidates(north, west)) {
        if (!mask.empty() && !mask[static_cast<std::size_t>(k)]) continue;
        row[static_cast<std::size_t>(c)] = k;
        dfs(c + 1, ts_[k].east);
      }
    };
    dfs(0, -1);
  }

  const TileSet& ts_;
  int h_, w_;
  Options opt_;
  std::vector<std::vector<char>> allowed_;
  std::vector<std::vector<TileId>> by_nw_, by_n_, by_w_;
  std::vector<TileId> all_;
  std::vector<Layer> layers_;
  std::uint64_t stored_ = 0;
  std::uint64_t nodes_ = 0;
};

void check_dims(int h, int w) {
  if (h < 1 || w < 1) throw std::invalid_argument("grid dimensions must be at least 1x1");
}

}  // namespace

SolveResult solve_decision(const TileSet& ts, int height, int width,
                           std::span<const Extension> constraints, std::size_t state_cap) {
  check_dims(height, width);
  if (state_cap == 0) throw std::invalid_argument("state cap must be positive");
  if (ts.empty()) return SolveResult{};

  const auto cells = static_cast<std::size_t>(height) * static_cast<std::size_t>(width);
  std::vector<std::vector<char>> allowed(cells);
  auto mask = [&](int r, int c) -> std::vector<char>& {
    auto& m = allowed[static_cast<std::size_t>(r) * static_cast<std::size_t>(width) +
                      static_cast<std::size_t>(c)];
    if (m.empty()) m.assign(static_cast<std::size_t>(ts.size()), 1);
    return m;
  };
  Frontier::Options opt;
  opt.state_cap = state_cap;
  for (const Extension& ext : constraints) {
    check_extension(ext, ts, height, width);
    std::visit(overloaded{
                   [&](const ForceTile& e) {
                     auto& m = mask(e.row, e.col);
                     for (TileId k = 0; k < ts.size(); ++k)
                       if (k != e.tile) m[static_cast<std::size_t>(k)] = 0;
                   },
                   [&](const ForbidTile& e) { mask(e.row, e.col)[static_cast<std::size_t>(e.tile)] = 0; },
                   [&](const ForceEdgeColor& e) {
                     auto& m = mask(e.row, e.col);
                     for (TileId k = 0; k < ts.size(); ++k)
                       if (ts[k].color(e.side) != e.color) m[static_cast<std::size_t>(k)] = 0;
                   },
                   [&](const ForbidEdgeColor& e) {
                     auto& m = mask(e.row, e.col);
                     for (TileId k = 0; k < ts.size(); ++k)
                       if (ts[k].color(e.side) == e.color) m[static_cast<std::size_t>(k)] = 0;
                   },
                   [&](const PeriodicFixed&) { opt.wrap_rows = opt.wrap_columns = true; },
                   [&](const auto& e) {
                     throw std::invalid_argument("solve_decision does not support '" +
                                                 describe(Extension{e}) + "'");
                   },
               },
               ext);
  }

  // Sweep along the longer side so the frontier stays narrow. Masks are by
  // tile id, which reflection keeps.
  const bool transpose = width > height;
  std::optional<TileSet> reflected;
  if (transpose) {
    std::vector<std::vector<char>> t(cells);
    for (int r = 0; r < height; ++r)
      for (int c = 0; c < width; ++c)
        t[static_cast<std::size_t>(c) * static_cast<std::size_t>(height) + static_cast<std::size_t>(r)] =
            std::move(allowed[static_cast<std::size_t>(r) * static_cast<std::size_t>(width) +
                              static_cast<std::size_t>(c)]);
    allowed = std::move(t);
    reflected = ts.reflected();
  }
  Frontier f(transpose ? *reflected : ts, transpose ? width : height, transpose ? height : width,
             opt, std::move(allowed));
  SolveResult out;
  const bool finished = f.run();
  out.stats = SolveStats{f.states(), f.nodes()};
  if (!finished) {
    out.status = SolveStatus::kCapped;
  } else if (f.feasible()) {
    out.status = SolveStatus::kValid;
    out.witness = transpose ? f.first_witness().transposed() : f.first_witness();
  } else {
    out.status = SolveStatus::kInfeasible;
  }
  return out;
}

std::optional<TorusResult> smallest_torus(const TileSet& ts, int max_area,
                                          std::size_t max_witnesses, std::size_t state_cap) {
  if (max_area < 1) throw std::invalid_argument("max_area must be positive");
  if (ts.empty()) return std::nullopt;
  Frontier::Options opt;
  opt.wrap_rows = opt.wrap_columns = true;
  opt.all_parents = true;
  opt.state_cap = state_cap;
  for (int area = 1; area <= max_area; ++area) {
    TorusResult res;
    for (int h = 1; h <= area; ++h) {
      if (area % h != 0) continue;
      const int w = area / h;
      Frontier f(ts, h, w, opt, std::vector<std::vector<char>>(static_cast<std::size_t>(area)));
      if (!f.run())
        throw std::runtime_error("torus search hit the state cap at " + std::to_string(h) + "x" +
                                 std::to_string(w));
      if (!f.feasible()) continue;
      const std::uint64_t n = f.count();
      if (res.shapes.empty()) {
        res.height = h;
        res.width = w;
      }
      res.shapes.push_back(TorusDims{h, w, n});
      res.count = sat_add(res.count, n);
      for (Tiling& t : f.witnesses(max_witnesses - std::min(max_witnesses, res.witnesses.size())))
        res.witnesses.push_back(std::move(t));
    }
    if (!res.shapes.empty()) {
      res.min_area = area;
      return res;
    }
  }
  return std::nullopt;
}

namespace {

class Packer {
 public:
  Packer(const TileSet& ts, int h, int w, const PackOptions& opt)
      : ts_(ts), h_(h), w_(w), opt_(opt),
        grid_(static_cast<std::size_t>(h * w), -1),
        used_(static_cast<std::size_t>(ts.size()), 0),
        start_(std::chrono::steady_clock::now()) {}

  SolveResult run() {
    SolveResult out;
    bool found = false;
    try {
      found = search(0);
    } catch (const CapExceeded&) {
      out.status = SolveStatus::kCapped;
      out.stats.nodes = nodes_;
      return out;
    }
    out.stats.nodes = nodes_;
    if (!found) {
      out.status = SolveStatus::kInfeasible;
      return out;
    }
    out.status = SolveStatus::kValid;
    Tiling t(h_, w_);
    for (int r = 0; r < h_; ++r)
      for (int c = 0; c < w_; ++c) t.at(r, c) = grid_[idx(r, c)];
    out.witness = std::move(t);
    return out;
  }

 private:
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(w_) + static_cast<std::size_t>(c);
  }

  // Neighbor cell across `side`, or -1 when outside a non-periodic grid.
  int neighbor(int r, int c, Side side) const {
    int nr = r, nc = c;
    switch (side) {
      case Side::kNorth: --nr; break;
      case Side::kSouth: ++nr; break;
      case Side::kWest: --nc; break;
      case Side::kEast: ++nc; break;
    }
    if (nr < 0 || nr >= h_ || nc < 0 || nc >= w_) {
      if (!opt_.periodic) return -1;
      nr = (nr + h_) % h_;
      nc = (nc + w_) % w_;
    }
    return static_cast<int>(idx(nr, nc));
  }

  static Side opposite(Side s) {
    switch (s) {
      case Side::kNorth: return Side::kSouth;
      case Side::kSouth: return Side::kNorth;
      case Side::kWest: return Side::kEast;
      case Side::kEast: return Side::kWest;
    }
    return s;
  }

  bool fits(TileId k, int r, int c) const {
    const int self = static_cast<int>(idx(r, c));
    for (Side s : {Side::kNorth, Side::kWest, Side::kSouth, Side::kEast}) {
      const int n = neighbor(r, c, s);
      if (n < 0) continue;
      const TileId other = n == self ? k : grid_[static_cast<std::size_t>(n)];
      if (other < 0) continue;
      if (ts_[k].color(s) != ts_[other].color(opposite(s))) return false;
    }
    return true;
  }

  // Candidate count, stopping once it reaches `stop`.
  int count_candidates(int r, int c, int stop) const {
    int n = 0;
    for (TileId k = 0; k < ts_.size() && n < stop; ++k)
      if (!used_[static_cast<std::size_t>(k)] && fits(k, r, c)) ++n;
    return n;
  }

  bool has_placed_neighbor(int r, int c) const {
    for (Side s : {Side::kNorth, Side::kWest, Side::kSouth, Side::kEast}) {
      const int n = neighbor(r, c, s);
      if (n >= 0 && grid_[static_cast<std::size_t>(n)] >= 0) return true;
    }
    return false;
  }

  // Picks the next cell; returns false if some open cell has no candidate.
  bool choose(int& out_r, int& out_c) const {
    out_r = out_c = -1;
    if (!opt_.most_constrained) {
      for (int r = 0; r < h_; ++r)
        for (int c = 0; c < w_; ++c)
          if (grid_[idx(r, c)] < 0) {
            out_r = r;
            out_c = c;
            return true;
          }
      return true;
    }
    int best = std::numeric_limits<int>::max();
    int first_r = -1, first_c = -1;
    for (int r = 0; r < h_; ++r)
      for (int c = 0; c < w_; ++c) {
        if (grid_[idx(r, c)] >= 0) continue;
        if (first_r < 0) {
          first_r = r;
          first_c = c;
        }
        if (!has_placed_neighbor(r, c)) continue;
        const int n = count_candidates(r, c, best);
        if (n < best) {
          best = n;
          out_r = r;
          out_c = c;
          if (n == 0) return false;
        }
      }
    if (out_r < 0) {
      out_r = first_r;
      out_c = first_c;
    }
    return true;
  }

  bool forward_ok(int r, int c) const {
    for (Side s : {Side::kNorth, Side::kWest, Side::kSouth, Side::kEast}) {
      const int n = neighbor(r, c, s);
      if (n < 0 || grid_[static_cast<std::size_t>(n)] >= 0) continue;
      if (count_candidates(n / w_, n % w_, 1) == 0) return false;
    }
    return true;
  }

  bool search(int depth) {
    if (depth == h_ * w_) return true;
    if ((++nodes_ & 0xFF) == 0 && std::chrono::steady_clock::now() - start_ > opt_.deadline)
      throw CapExceeded{};
    int r, c;
    if (!choose(r, c)) return false;
    for (TileId k = 0; k < ts_.size(); ++k) {
      if (used_[static_cast<std::size_t>(k)] || !fits(k, r, c)) continue;
      grid_[idx(r, c)] = k;
      used_[static_cast<std::size_t>(k)] = 1;
      if (forward_ok(r, c) && search(depth + 1)) return true;
      grid_[idx(r, c)] = -1;
      used_[static_cast<std::size_t>(k)] = 0;
    }
    return false;
  }

  const TileSet& ts_;
  int h_, w_;
  PackOptions opt_;
  std::vector<TileId> grid_;
  std::vector<char> used_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SolveResult pack_tiles(const TileSet& ts, int height, int width, const PackOptions& options) {
  check_dims(height, width);
  if (ts.size() != height * width)
    throw std::invalid_argument("packing needs exactly " + std::to_string(height * width) +
                                " tiles, the set has " + std::to_string(ts.size()));
  return Packer(ts, height, width, options).run();
}

CoverOracleResult max_cover_oracle(const TileSet& ts, int height, int width,
                                   std::uint64_t node_budget) {
  check_dims(height, width);
  const int cells = height * width;
  std::vector<int> grid(static_cast<std::size_t>(cells), -1);
  CoverOracleResult out;
  out.witness = Tiling(height, width);
  std::uint64_t nodes = 0;

  std::function<void(int, int)> dfs = [&](int i, int placed) {
    if (++nodes > node_budget)
      throw std::runtime_error("max_cover_oracle exceeded its budget of " +
                               std::to_string(node_budget) + " nodes");
    if (placed + (cells - i) <= out.best) return;
    if (i == cells) {
      out.best = placed;
      for (int j = 0; j < cells; ++j)
        out.witness.at(j / width, j % width) =
            grid[static_cast<std::size_t>(j)] < 0 ? kVoid : Cell{grid[static_cast<std::size_t>(j)]};
      return;
    }
    const int r = i / width, c = i % width;
    const int west = c > 0 ? grid[static_cast<std::size_t>(i - 1)] : -1;
    const int north = r > 0 ? grid[static_cast<std::size_t>(i - width)] : -1;
    for (TileId k = 0; k < ts.size(); ++k) {
      if (west >= 0 && ts[west].east != ts[k].west) continue;
      if (north >= 0 && ts[north].south != ts[k].north) continue;
      grid[static_cast<std::size_t>(i)] = k;
      dfs(i + 1, placed + 1);
      if (out.best == cells) return;
    }
    grid[static_cast<std::size_t>(i)] = -1;
    dfs(i + 1, placed);
  };
  dfs(0, 0);
  out.nodes = nodes;
  return out;
}

}  // namespace wangtiler
