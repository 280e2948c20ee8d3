#include "wangtiler/io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace wangtiler {
namespace {

struct Line {
  int number = 0;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++number;
    Line line{number, {}};
    std::size_t pos = 0;
    while (pos < raw.size()) {
      while (pos < raw.size() && std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
      const std::size_t start = pos;
      while (pos < raw.size() && !std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
      if (pos > start) line.tokens.push_back(raw.substr(start, pos - start));
    }
    if (line.tokens.empty() || line.tokens.front().starts_with('#')) continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw std::invalid_argument("line " + std::to_string(line) + ": " + what);
}

int parse_int(std::string_view token, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    fail(line, "expected an integer, got '" + std::string(token) + "'");
  return value;
}

// Shared reader for the four-column tile and corner formats.
struct QuadFile {
  std::vector<std::array<int, 4>> rows;
  int pinned_colors = 0;  // 0 when no header
};

QuadFile read_quads(std::string_view text, std::string_view header_keyword) {
  QuadFile out;
  for (const Line& line : tokenize(text)) {
    if (line.tokens.front() == header_keyword) {
      if (line.tokens.size() != 2) fail(line.number, "malformed header");
      if (!out.rows.empty()) fail(line.number, "header must precede the tiles");
      out.pinned_colors = parse_int(line.tokens[1], line.number);
      if (out.pinned_colors < 1) fail(line.number, "alphabet size must be positive");
      continue;
    }
    if (line.tokens.size() != 4) fail(line.number, "expected four color codes");
    std::array<int, 4> quad{};
    for (std::size_t i = 0; i < 4; ++i) {
      quad[i] = parse_int(line.tokens[i], line.number);
      if (quad[i] < 0) fail(line.number, "color codes must be non-negative");
      if (out.pinned_colors > 0 && quad[i] >= out.pinned_colors)
        fail(line.number, "color exceeds the pinned alphabet size");
    }
    out.rows.push_back(quad);
  }
  return out;
}

// Maps the colors in use onto 0..k-1 unless the alphabet was pinned.
int densify(QuadFile& file) {
  if (file.pinned_colors > 0) return file.pinned_colors;
  std::map<int, int> dense;
  for (const auto& q : file.rows)
    for (int c : q) dense.emplace(c, 0);
  int next = 0;
  for (auto& [color, index] : dense) index = next++;
  for (auto& q : file.rows)
    for (int& c : q) c = dense[c];
  return std::max(next, 1);
}

}  // namespace

TileSet parse_tileset(std::string_view text, std::string name) {
  QuadFile file = read_quads(text, "colors");
  const int colors = densify(file);
  std::vector<Tile> tiles;
  tiles.reserve(file.rows.size());
  for (const auto& q : file.rows) tiles.push_back(Tile{q[0], q[1], q[2], q[3]});
  return TileSet(std::move(tiles), colors, std::move(name));
}

std::string format_tileset(const TileSet& ts) {
  std::ostringstream out;
  if (!ts.name().empty()) out << "# " << ts.name() << '\n';
  out << "colors " << ts.num_colors() << '\n';
  for (const Tile& t : ts.tiles())
    out << t.north << ' ' << t.west << ' ' << t.south << ' ' << t.east << '\n';
  return out.str();
}

CornerSet parse_corner_set(std::string_view text) {
  QuadFile file = read_quads(text, "corners");
  CornerSet out;
  out.num_colors = densify(file);
  for (const auto& q : file.rows) out.tiles.push_back(CornerTile{q[0], q[1], q[2], q[3]});
  return out;
}

std::string format_corner_set(const CornerSet& cs) {
  std::ostringstream out;
  out << "corners " << cs.num_colors << '\n';
  for (const CornerTile& t : cs.tiles)
    out << t.nw << ' ' << t.sw << ' ' << t.se << ' ' << t.ne << '\n';
  return out.str();
}

Tiling parse_tiling(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw std::invalid_argument("empty tiling file");
  const Line& header = lines.front();
  if (header.tokens.size() != 3 || header.tokens[0] != "tiling")
    fail(header.number, "expected 'tiling <h> <w>'");
  const int h = parse_int(header.tokens[1], header.number);
  const int w = parse_int(header.tokens[2], header.number);
  if (h < 1 || w < 1) fail(header.number, "dimensions must be positive");
  if (static_cast<int>(lines.size()) != h + 1)
    fail(header.number, "expected " + std::to_string(h) + " rows");
  Tiling tiling(h, w);
  for (int r = 0; r < h; ++r) {
    const Line& line = lines[static_cast<std::size_t>(r) + 1];
    if (static_cast<int>(line.tokens.size()) != w)
      fail(line.number, "expected " + std::to_string(w) + " entries");
    for (int c = 0; c < w; ++c) {
      std::string_view tok = line.tokens[static_cast<std::size_t>(c)];
      if (tok == ".") continue;
      const int id = parse_int(tok, line.number);
      if (id < 0) fail(line.number, "tile ids must be non-negative");
      tiling.at(r, c) = id;
    }
  }
  return tiling;
}

std::string format_tiling(const Tiling& tiling) {
  std::ostringstream out;
  out << "tiling " << tiling.height() << ' ' << tiling.width() << '\n';
  for (int r = 0; r < tiling.height(); ++r) {
    for (int c = 0; c < tiling.width(); ++c) {
      if (c) out << ' ';
      const Cell& cell = tiling.at(r, c);
      if (cell) out << *cell; else out << '.';
    }
    out << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::filesystem::filesystem_error("cannot open", path,
                                            std::make_error_code(std::errc::no_such_file_or_directory));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::filesystem::filesystem_error("cannot write", path,
                                            std::make_error_code(std::errc::io_error));
  out << text;
}

TileSet load_tileset(std::string_view name_or_path) {
  if (auto set = named_set(name_or_path)) return *std::move(set);
  const std::filesystem::path path(name_or_path);
  if (!std::filesystem::exists(path))
    throw std::out_of_range("'" + std::string(name_or_path) +
                            "' is neither a built-in set nor an existing file");
  return parse_tileset(read_text_file(path), path.stem().string());
}

}  // namespace wangtiler
