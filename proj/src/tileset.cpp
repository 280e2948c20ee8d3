#include "wangtiler/tileset.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>
#include <string>

namespace wangtiler {

std::string_view side_name(Side side) {
  switch (side) {
    case Side::kNorth: return "n";
    case Side::kWest: return "w";
    case Side::kSouth: return "s";
    case Side::kEast: return "e";
  }
  return "?";
}

Color Tile::color(Side side) const {
  switch (side) {
    case Side::kNorth: return north;
    case Side::kWest: return west;
    case Side::kSouth: return south;
    case Side::kEast: return east;
  }
  return north;
}

TileSet::TileSet(std::vector<Tile> tiles, int num_colors, std::string name)
    : tiles_(std::move(tiles)), num_colors_(num_colors), name_(std::move(name)) {
  if (num_colors_ < 1) throw std::invalid_argument("tile set needs at least one color");
  std::set<Tile> seen;
  for (std::size_t k = 0; k < tiles_.size(); ++k) {
    const Tile& t = tiles_[k];
    for (Color c : {t.north, t.west, t.south, t.east}) {
      if (c < 0 || c >= num_colors_) {
        throw std::invalid_argument("tile " + std::to_string(k) + " uses color " +
                                    std::to_string(c) + " outside alphabet of size " +
                                    std::to_string(num_colors_));
      }
    }
    if (!seen.insert(t).second) {
      throw std::invalid_argument("duplicate tile at index " + std::to_string(k));
    }
  }
}

TileSet TileSet::from_tiles(std::vector<Tile> tiles, std::string name) {
  Color top = 0;
  for (const Tile& t : tiles) top = std::max({top, t.north, t.west, t.south, t.east});
  return TileSet(std::move(tiles), top + 1, std::move(name));
}

TileSet TileSet::reflected() const {
  std::vector<Tile> out;
  out.reserve(tiles_.size());
  for (const Tile& t : tiles_) out.push_back(Tile{t.west, t.north, t.east, t.south});
  return TileSet(std::move(out), num_colors_, name_);
}

Tiling::Tiling(int height, int width) : Tiling(height, width, {}) {}

Tiling::Tiling(int height, int width, std::vector<Cell> cells)
    : height_(height), width_(width), cells_(std::move(cells)) {
  if (height < 1 || width < 1) throw std::invalid_argument("tiling dimensions must be positive");
  const auto n = static_cast<std::size_t>(height) * static_cast<std::size_t>(width);
  if (cells_.empty()) cells_.assign(n, kVoid);
  if (cells_.size() != n) throw std::invalid_argument("cell count does not match dimensions");
}

int Tiling::placed() const {
  return static_cast<int>(std::count_if(cells_.begin(), cells_.end(),
                                        [](const Cell& c) { return c.has_value(); }));
}

Tiling Tiling::transposed() const {
  Tiling out(width_, height_);
  for (int r = 0; r < height_; ++r)
    for (int c = 0; c < width_; ++c) out.at(c, r) = at(r, c);
  return out;
}

ValidityReport validate_tiling(const TileSet& ts, const Tiling& tiling) {
  for (const Cell& cell : tiling.cells()) {
    if (cell && (*cell < 0 || *cell >= ts.size())) {
      throw std::invalid_argument("tiling references tile " + std::to_string(*cell) +
                                  " but the tile set has " + std::to_string(ts.size()) +
                                  " tiles");
    }
  }
  ValidityReport report;
  for (int r = 0; r < tiling.height(); ++r) {
    for (int c = 0; c < tiling.width(); ++c) {
      const Cell& here = tiling.at(r, c);
      if (!here) continue;
      if (c + 1 < tiling.width()) {
        const Cell& right = tiling.at(r, c + 1);
        if (right && ts[*here].east != ts[*right].west)
          report.mismatches.push_back({r, c, Axis::kHorizontal});
      }
      if (r + 1 < tiling.height()) {
        const Cell& below = tiling.at(r + 1, c);
        if (below && ts[*here].south != ts[*below].north)
          report.mismatches.push_back({r, c, Axis::kVertical});
      }
    }
  }
  report.is_valid = report.mismatches.empty();
  return report;
}

bool has_periodic_boundary(const TileSet& ts, const Tiling& tiling) {
  const int h = tiling.height();
  const int w = tiling.width();
  for (const Cell& cell : tiling.cells())
    if (!cell) return false;
  for (int c = 0; c < w; ++c)
    if (ts[*tiling.at(0, c)].north != ts[*tiling.at(h - 1, c)].south) return false;
  for (int r = 0; r < h; ++r)
    if (ts[*tiling.at(r, 0)].west != ts[*tiling.at(r, w - 1)].east) return false;
  return true;
}

TileSet corner_to_wang(std::span<const CornerTile> corners, int n_vc, std::string name) {
  if (n_vc < 1) throw std::domain_error("corner alphabet size must be positive");
  std::vector<Tile> tiles;
  tiles.reserve(corners.size());
  for (const CornerTile& ct : corners) {
    for (Color c : {ct.nw, ct.sw, ct.se, ct.ne}) {
      if (c < 0 || c >= n_vc) {
        throw std::domain_error("corner color " + std::to_string(c) + " outside alphabet of size " +
                                std::to_string(n_vc));
      }
    }
    tiles.push_back(Tile{ct.nw + ct.ne * n_vc, ct.nw + ct.sw * n_vc, ct.sw + ct.se * n_vc,
                         ct.ne + ct.se * n_vc});
  }
  return TileSet(std::move(tiles), n_vc * n_vc, std::move(name));
}

TileSet complete_stochastic_set(int n_c) {
  if (n_c < 1) throw std::domain_error("complete tile set needs at least one color");
  std::vector<Tile> tiles;
  tiles.reserve(static_cast<std::size_t>(n_c) * n_c * n_c * n_c);
  for (Color n = 0; n < n_c; ++n)
    for (Color w = 0; w < n_c; ++w)
      for (Color s = 0; s < n_c; ++s)
        for (Color e = 0; e < n_c; ++e) tiles.push_back(Tile{n, w, s, e});
  return TileSet(std::move(tiles), n_c, "complete" + std::to_string(n_c));
}

namespace {

// Ammann's 16 tiles read off the transducer arcs w -(s|n)-> e.
constexpr Tile kAmmann16[] = {
    {0, 0, 1, 1}, {4, 0, 3, 0}, {2, 1, 5, 1}, {4, 1, 2, 0}, {3, 1, 5, 0}, {2, 2, 3, 3},
    {5, 2, 3, 2}, {3, 2, 3, 4}, {1, 2, 1, 5}, {5, 5, 2, 2}, {3, 3, 4, 4}, {1, 3, 0, 5},
    {2, 5, 2, 3}, {2, 3, 4, 3}, {1, 4, 0, 2}, {0, 4, 0, 3},
};

constexpr Tile kFig3[] = {{0, 1, 1, 0}, {0, 1, 0, 1}, {1, 0, 0, 1}};

constexpr Tile kFinite1[] = {
    {1, 3, 1, 1}, {2, 3, 2, 1}, {0, 0, 1, 0}, {1, 0, 2, 3},
    {2, 1, 2, 0}, {2, 1, 0, 1}, {1, 3, 1, 0},
};

// Row-major reading of the two rows of eight tiles.
constexpr Tile kFinite2[] = {
    {11, 2, 11, 6}, {11, 4, 14, 6}, {14, 7, 11, 5},  {14, 8, 14, 1},
    {11, 8, 14, 0}, {14, 9, 14, 5}, {13, 8, 15, 2},  {15, 9, 15, 7},
    {15, 7, 13, 7}, {15, 6, 15, 4}, {10, 5, 15, 7},  {15, 6, 10, 8},
    {12, 5, 15, 9}, {10, 1, 12, 8}, {10, 0, 10, 8},  {12, 5, 10, 3},
};

template <std::size_t N>
TileSet make_set(const Tile (&tiles)[N], int num_colors, std::string name) {
  return TileSet(std::vector<Tile>(std::begin(tiles), std::end(tiles)), num_colors,
                 std::move(name));
}

}  // namespace

TileSet builtin_set(std::string_view name) {
  if (name == "fig3") return make_set(kFig3, 2, "fig3");
  if (name == "finite1") return make_set(kFinite1, 4, "finite1");
  if (name == "finite2") return make_set(kFinite2, 16, "finite2");
  if (name == "ammann16") return make_set(kAmmann16, 6, "ammann16");
  throw std::out_of_range("unknown built-in tile set '" + std::string(name) + "'");
}

std::vector<std::string> builtin_set_names() { return {"fig3", "finite1", "finite2", "ammann16"}; }

std::optional<TileSet> named_set(std::string_view name) {
  constexpr std::string_view kComplete = "complete:";
  if (name.starts_with(kComplete)) {
    std::string_view digits = name.substr(kComplete.size());
    int n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || n < 1) return std::nullopt;
    return complete_stochastic_set(n);
  }
  for (const std::string& known : builtin_set_names())
    if (known == name) return builtin_set(name);
  return std::nullopt;
}

}  // namespace wangtiler
