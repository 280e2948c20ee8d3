#pragma once

#include <string>
#include <vector>

#include "wangtiler/tileset.hpp"

namespace wangtiler {

enum class DrawMode : std::uint8_t {
  kEdgeTriangles,  ///< four triangles per cell, one per edge color
  kCornerSquares,  ///< four quadrants per cell from pair-encoded corner colors
};

struct RenderStyle {
  int cell_px = 40;
  /// CSS colors by index. Empty selects a generated palette.
  std::vector<std::string> palette;
  DrawMode mode = DrawMode::kEdgeTriangles;
  bool show_ids = false;
  /// Corner alphabet size for kCornerSquares; the Wang colors must be
  /// nw + ne * n, nw + sw * n, sw + se * n, ne + se * n as corner_to_wang emits.
  int corner_colors = 0;
};

/// Evenly spaced hues, deterministic.
std::vector<std::string> default_palette(int n);

/// Throws std::invalid_argument if the palette is shorter than the alphabet
/// it has to cover or the tiling references unknown tiles.
std::string render_svg(const TileSet& ts, const Tiling& tiling, const RenderStyle& style = {});

}  // namespace wangtiler
