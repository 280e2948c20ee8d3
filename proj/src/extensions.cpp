#include "wangtiler/extensions.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace wangtiler {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = s.find(sep);
    out.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) break;
    s = s.substr(pos + 1);
  }
  return out;
}

[[noreturn]] void bad(std::string_view text, const std::string& why) {
  throw std::invalid_argument("extension '" + std::string(text) + "': " + why);
}

int number(std::string_view token, std::string_view text) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    bad(text, "'" + std::string(token) + "' is not an integer");
  return v;
}

Side side_of(std::string_view token, std::string_view text) {
  if (token == "n") return Side::kNorth;
  if (token == "w") return Side::kWest;
  if (token == "s") return Side::kSouth;
  if (token == "e") return Side::kEast;
  bad(text, "side must be one of n, w, s, e");
}

void check_cell(int row, int col, int height, int width, const std::string& what) {
  if (row < 0 || row >= height || col < 0 || col >= width)
    throw std::invalid_argument(what + ": cell (" + std::to_string(row + 1) + "," +
                                std::to_string(col + 1) + ") outside the " +
                                std::to_string(height) + "x" + std::to_string(width) + " grid");
}

}  // namespace

Extension parse_extension(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view kind = text.substr(0, colon);
  std::vector<std::string_view> args;
  if (colon != std::string_view::npos) args = split(text.substr(colon + 1), ',');
  auto expect = [&](std::size_t n) {
    if (args.size() != n) bad(text, "expected " + std::to_string(n) + " arguments");
  };
  auto at = [&](std::size_t i) { return number(args[i], text); };
  // 1-based in text, 0-based in memory.
  auto rc = [&](std::size_t i) {
    const int v = at(i);
    if (v < 1) bad(text, "coordinates start at 1");
    return v - 1;
  };

  if (kind == "periodic") { expect(0); return PeriodicFixed{}; }
  if (kind == "periodic-var") { expect(0); return PeriodicVariable{}; }
  if (kind == "smallest") { expect(0); return SmallestObjective{}; }
  if (kind == "packing") { expect(0); return Packing{}; }
  if (kind == "force") { expect(3); return ForceTile{rc(0), rc(1), at(2)}; }
  if (kind == "forbid") { expect(3); return ForbidTile{rc(0), rc(1), at(2)}; }
  if (kind == "same") { expect(4); return SameTile{rc(0), rc(1), rc(2), rc(3)}; }
  if (kind == "diff") { expect(4); return DifferentTile{rc(0), rc(1), rc(2), rc(3)}; }
  if (kind == "color") {
    expect(4);
    return ForceEdgeColor{rc(0), rc(1), side_of(args[2], text), at(3)};
  }
  if (kind == "nocolor") {
    expect(4);
    return ForbidEdgeColor{rc(0), rc(1), side_of(args[2], text), at(3)};
  }
  if (kind == "samecolor") {
    expect(6);
    return EqualEdgeColors{rc(0), rc(1), side_of(args[2], text), rc(3), rc(4),
                           side_of(args[5], text)};
  }
  if (kind == "diffcolor") {
    expect(6);
    return DifferentEdgeColors{rc(0), rc(1), side_of(args[2], text), rc(3), rc(4),
                               side_of(args[5], text)};
  }
  bad(text, "unknown kind '" + std::string(kind) + "'");
}

std::string describe(const Extension& ext) {
  std::ostringstream out;
  auto cell = [&](int r, int c) { out << r + 1 << ',' << c + 1; };
  std::visit(overloaded{
                 [&](const ForceTile& e) { out << "force:"; cell(e.row, e.col); out << ',' << e.tile; },
                 [&](const ForbidTile& e) { out << "forbid:"; cell(e.row, e.col); out << ',' << e.tile; },
                 [&](const SameTile& e) { out << "same:"; cell(e.row, e.col); out << ','; cell(e.other_row, e.other_col); },
                 [&](const DifferentTile& e) { out << "diff:"; cell(e.row, e.col); out << ','; cell(e.other_row, e.other_col); },
                 [&](const ForceEdgeColor& e) { out << "color:"; cell(e.row, e.col); out << ',' << side_name(e.side) << ',' << e.color; },
                 [&](const ForbidEdgeColor& e) { out << "nocolor:"; cell(e.row, e.col); out << ',' << side_name(e.side) << ',' << e.color; },
                 [&](const EqualEdgeColors& e) {
                   out << "samecolor:"; cell(e.row, e.col); out << ',' << side_name(e.side) << ',';
                   cell(e.other_row, e.other_col); out << ',' << side_name(e.other_side);
                 },
                 [&](const DifferentEdgeColors& e) {
                   out << "diffcolor:"; cell(e.row, e.col); out << ',' << side_name(e.side) << ',';
                   cell(e.other_row, e.other_col); out << ',' << side_name(e.other_side);
                 },
                 [&](const PeriodicFixed&) { out << "periodic"; },
                 [&](const PeriodicVariable&) { out << "periodic-var"; },
                 [&](const SmallestObjective&) { out << "smallest"; },
                 [&](const Packing&) { out << "packing"; },
             },
             ext);
  return out.str();
}

void check_extension(const Extension& ext, const TileSet& ts, int height, int width) {
  const std::string what = describe(ext);
  auto tile = [&](TileId k) {
    if (k < 0 || k >= ts.size()) throw std::invalid_argument(what + ": unknown tile id");
  };
  auto color = [&](Color c) {
    if (c < 0 || c >= ts.num_colors()) throw std::invalid_argument(what + ": unknown color");
  };
  auto cell = [&](int r, int c) { check_cell(r, c, height, width, what); };
  std::visit(overloaded{
                 [&](const ForceTile& e) { cell(e.row, e.col); tile(e.tile); },
                 [&](const ForbidTile& e) { cell(e.row, e.col); tile(e.tile); },
                 [&](const SameTile& e) { cell(e.row, e.col); cell(e.other_row, e.other_col); },
                 [&](const DifferentTile& e) { cell(e.row, e.col); cell(e.other_row, e.other_col); },
                 [&](const ForceEdgeColor& e) { cell(e.row, e.col); color(e.color); },
                 [&](const ForbidEdgeColor& e) { cell(e.row, e.col); color(e.color); },
                 [&](const EqualEdgeColors& e) { cell(e.row, e.col); cell(e.other_row, e.other_col); },
                 [&](const DifferentEdgeColors& e) { cell(e.row, e.col); cell(e.other_row, e.other_col); },
                 [](const auto&) {},
             },
             ext);
}

}  // namespace wangtiler
