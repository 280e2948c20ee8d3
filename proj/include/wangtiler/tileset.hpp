#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wangtiler {

/// Index into a tile set's color alphabet, always dense and 0-based.
using Color = std::int32_t;

/// Position of a tile inside its TileSet.
using TileId = std::int32_t;

/// A grid cell either holds a tile id or is VOID (std::nullopt).
using Cell = std::optional<TileId>;

inline constexpr Cell kVoid = std::nullopt;

enum class Side : std::uint8_t { kNorth, kWest, kSouth, kEast };

std::string_view side_name(Side side);

/// Edge-colored, non-rotatable unit square. Field order follows (n, w, s, e).
struct Tile {
  Color north = 0;
  Color west = 0;
  Color south = 0;
  Color east = 0;

  Color color(Side side) const;

  auto operator<=>(const Tile&) const = default;
};

/// Corner-colored square. Field order follows (nw, sw, se, ne).
struct CornerTile {
  Color nw = 0;
  Color sw = 0;
  Color se = 0;
  Color ne = 0;

  auto operator<=>(const CornerTile&) const = default;
};

/// Ordered, duplicate-free collection of tiles over a dense color alphabet.
/// Immutable once constructed.
class TileSet {
 public:
  /// Throws std::invalid_argument on duplicate tiles, negative colors,
  /// an empty alphabet or colors outside `num_colors`.
  TileSet(std::vector<Tile> tiles, int num_colors, std::string name = {});

  /// Alphabet size inferred as max color + 1.
  static TileSet from_tiles(std::vector<Tile> tiles, std::string name = {});

  const std::vector<Tile>& tiles() const { return tiles_; }
  const Tile& operator[](TileId id) const { return tiles_[static_cast<std::size_t>(id)]; }
  int size() const { return static_cast<int>(tiles_.size()); }
  bool empty() const { return tiles_.empty(); }
  int num_colors() const { return num_colors_; }
  const std::string& name() const { return name_; }

  /// Reflection along the major diagonal: (n, w, s, e) -> (w, n, e, s).
  /// Columns of a tiling become rows of the reflected set; ids are kept.
  TileSet reflected() const;

  bool operator==(const TileSet& other) const {
    return tiles_ == other.tiles_ && num_colors_ == other.num_colors_;
  }

 private:
  std::vector<Tile> tiles_;
  int num_colors_ = 0;
  std::string name_;
};

/// Rectangular grid of cells, row 0 at the top. Void-aware.
class Tiling {
 public:
  Tiling() = default;
  /// All cells start VOID. Throws std::invalid_argument unless both dims >= 1.
  Tiling(int height, int width);
  Tiling(int height, int width, std::vector<Cell> cells);

  int height() const { return height_; }
  int width() const { return width_; }

  const Cell& at(int row, int col) const { return cells_[index(row, col)]; }
  Cell& at(int row, int col) { return cells_[index(row, col)]; }

  std::span<const Cell> cells() const { return cells_; }
  std::span<const Cell> row(int r) const {
    return std::span<const Cell>(cells_).subspan(static_cast<std::size_t>(r) * width_, width_);
  }

  int placed() const;
  int voids() const { return height_ * width_ - placed(); }

  /// Swaps rows and columns. Paired with TileSet::reflected() it maps
  /// column problems onto row problems.
  Tiling transposed() const;

  bool operator==(const Tiling&) const = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(col);
  }

  int height_ = 0;
  int width_ = 0;
  std::vector<Cell> cells_;
};

enum class Axis : std::uint8_t {
  kHorizontal,  ///< (row, col) against (row, col + 1)
  kVertical,    ///< (row, col) against (row + 1, col)
};

struct Mismatch {
  int row = 0;
  int col = 0;
  Axis axis = Axis::kHorizontal;

  auto operator<=>(const Mismatch&) const = default;
};

struct ValidityReport {
  bool is_valid = true;
  std::vector<Mismatch> mismatches;
};

/// Checks edge matching between every pair of adjacent non-VOID cells.
/// Throws std::invalid_argument if the tiling references ids outside `ts`.
ValidityReport validate_tiling(const TileSet& ts, const Tiling& tiling);

/// Opposite boundaries carry identical colors: first-row north equals
/// last-row south, first-column west equals last-column east. Requires a
/// tiling without VOID cells.
bool has_periodic_boundary(const TileSet& ts, const Tiling& tiling);

/// Encodes each corner tile as a Wang tile over n_vc^2 colors by pairing
/// corner colors along each edge. Throws std::domain_error if a corner
/// color is out of range.
TileSet corner_to_wang(std::span<const CornerTile> corners, int n_vc, std::string name = {});

/// All n_c^4 tiles in lexicographic (n, w, s, e) order.
TileSet complete_stochastic_set(int n_c);

/// One of "fig3", "finite1", "finite2", "ammann16". Throws std::out_of_range
/// for unknown names.
TileSet builtin_set(std::string_view name);

std::vector<std::string> builtin_set_names();

/// Resolves a built-in name or "complete:<n>"; std::nullopt otherwise.
std::optional<TileSet> named_set(std::string_view name);

}  // namespace wangtiler
