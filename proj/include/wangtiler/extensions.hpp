#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wangtiler/tileset.hpp"

namespace wangtiler {

// Extra constraints layered on top of a formulation. Coordinates are
// 0-based (row, col); LP names and the CLI syntax use 1-based coordinates.

struct ForceTile { int row, col; TileId tile; };
struct ForbidTile { int row, col; TileId tile; };
struct SameTile { int row, col, other_row, other_col; };
struct DifferentTile { int row, col, other_row, other_col; };
struct ForceEdgeColor { int row, col; Side side; Color color; };
struct ForbidEdgeColor { int row, col; Side side; Color color; };
struct EqualEdgeColors { int row, col; Side side; int other_row, other_col; Side other_side; };
struct DifferentEdgeColors { int row, col; Side side; int other_row, other_col; Side other_side; };
/// Opposite boundaries of the fixed domain carry equal colors.
struct PeriodicFixed {};
/// Periodicity of the (unknown) occupied rectangle in the max_rect model.
struct PeriodicVariable {};
/// Replaces the objective by minimizing the number of placed tiles.
struct SmallestObjective {};
/// Each tile of the set is used exactly once.
struct Packing {};

using Extension =
    std::variant<ForceTile, ForbidTile, SameTile, DifferentTile, ForceEdgeColor, ForbidEdgeColor,
                 EqualEdgeColors, DifferentEdgeColors, PeriodicFixed, PeriodicVariable,
                 SmallestObjective, Packing>;

/// Parses the CLI form, e.g. "force:1,2,0", "color:1,1,n,3", "periodic".
/// Coordinates in the text are 1-based. Throws std::invalid_argument.
Extension parse_extension(std::string_view text);

std::string describe(const Extension& ext);

/// Throws std::invalid_argument if coordinates, tile ids or colors fall
/// outside the h x w grid or the tile set.
void check_extension(const Extension& ext, const TileSet& ts, int height, int width);

}  // namespace wangtiler
