#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "wangtiler/tileset.hpp"

namespace wangtiler {

// Text formats. Blank lines and lines starting with '#' are ignored.
//
//   tile set    optional "colors <n>" header, then one "n w s e" per line
//   corner set  optional "corners <n>" header, then one "nw sw se ne" per line
//   tiling      "tiling <h> <w>" header, then h lines of w entries (id or '.')
//
// Without a header, the colors found in the file are compacted to a dense
// 0-based alphabet preserving their order. With a header the values are
// kept as written and must lie below the pinned size.

struct CornerSet {
  std::vector<CornerTile> tiles;
  int num_colors = 0;
};

TileSet parse_tileset(std::string_view text, std::string name = {});
std::string format_tileset(const TileSet& ts);

CornerSet parse_corner_set(std::string_view text);
std::string format_corner_set(const CornerSet& cs);

Tiling parse_tiling(std::string_view text);
std::string format_tiling(const Tiling& tiling);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

/// Built-in name, "complete:<n>", or a path to a tile set file.
TileSet load_tileset(std::string_view name_or_path);

}  // namespace wangtiler
