#pragma once

#include <vector>

#include "oracle.hpp"
#include "wangtiler/tileset.hpp"

inline wangtiler::TileSet to_tileset(const std::vector<oracle::Quad>& q, int n_colors) {
  std::vector<wangtiler::Tile> tiles;
  for (const auto& t : q) tiles.push_back({t[0], t[1], t[2], t[3]});
  return wangtiler::TileSet(std::move(tiles), n_colors);
}

inline std::vector<oracle::Quad> to_quads(const wangtiler::TileSet& ts) {
  std::vector<oracle::Quad> out;
  for (const auto& t : ts.tiles()) out.push_back({t.north, t.west, t.south, t.east});
  return out;
}

inline std::vector<int> to_ints(const wangtiler::Tiling& t) {
  std::vector<int> out;
  for (const auto& c : t.cells()) out.push_back(c ? *c : oracle::kVoid);
  return out;
}
