#include <doctest.h>

#include <set>
#include <stdexcept>

#include "wangtiler/exact.hpp"
#include "wangtiler/io.hpp"
#include "wangtiler/render.hpp"
#include "wangtiler/transducer.hpp"

using namespace wangtiler;

namespace {

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

std::set<std::string> fills(const std::string& svg) {
  std::set<std::string> out;
  const std::string key = "<polygon points=";
  for (auto at = svg.find(key); at != std::string::npos; at = svg.find(key, at + 1)) {
    const auto f = svg.find("fill=\"", at) + 6;
    out.insert(svg.substr(f, svg.find('"', f) - f));
  }
  return out;
}

}  // namespace

TEST_CASE("one tile, four distinct triangles") {
  const TileSet ts = TileSet::from_tiles({{0, 1, 2, 3}});
  const std::string svg = render_svg(ts, Tiling(1, 1, {0}));
  CHECK(count(svg, "<polygon") == 4);
  CHECK(fills(svg).size() == 4);
  RenderStyle small;
  small.palette = {"red", "blue"};
  CHECK_THROWS_AS(render_svg(ts, Tiling(1, 1, {0}), small), std::invalid_argument);
}

TEST_CASE("void cells are hatched") {
  const std::string svg = render_svg(builtin_set("fig3"), Tiling(2, 2));
  CHECK(count(svg, "url(#void)") == 4);
  CHECK(count(svg, "<polygon") == 0);
}

TEST_CASE("rendering is deterministic and honors options") {
  const TileSet ts = builtin_set("finite1");
  const Tiling t(1, 2, {0, 1});
  RenderStyle s;
  s.show_ids = true;
  s.cell_px = 10;
  const std::string a = render_svg(ts, t, s);
  CHECK(a == render_svg(ts, t, s));
  CHECK(a.find("width=\"20\" height=\"10\"") != std::string::npos);
  CHECK(count(a, "<text") == 2);
  CHECK_THROWS_AS(render_svg(ts, Tiling(1, 1, {9})), std::invalid_argument);
}

TEST_CASE("ammann torus witness snapshot") {
  const Translation tr = translate_horizontal(builtin_set("ammann16"));
  const TileSet ts = corner_to_wang(tr.corners, tr.num_colors);
  const auto torus = smallest_torus(ts, 6, 1);
  REQUIRE(torus.has_value());
  const Tiling& t = torus->witnesses.front();
  REQUIRE(validate_tiling(ts, t).is_valid);
  RenderStyle s;
  s.mode = DrawMode::kCornerSquares;
  s.corner_colors = tr.num_colors;
  const std::string svg = render_svg(ts, t, s);
  CHECK(svg == read_text_file(WANGTILER_TEST_DATA "/ammann_torus.svg"));
  CHECK(render_svg(ts, t) == read_text_file(WANGTILER_TEST_DATA "/ammann_torus_edges.svg"));
}
