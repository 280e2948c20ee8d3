#include "wangtiler/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace wangtiler {

std::vector<std::string> default_palette(int n) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) {
    // Golden-angle hue steps keep neighbours in index apart.
    const double hue = std::fmod(i * 137.508, 360.0);
    const int light = 45 + 15 * (i % 3);
    char buf[40];
    std::snprintf(buf, sizeof buf, "hsl(%.1f,70%%,%d%%)", hue, light);
    out.emplace_back(buf);
  }
  return out;
}

std::string render_svg(const TileSet& ts, const Tiling& tiling, const RenderStyle& style) {
  if (style.cell_px < 1) throw std::invalid_argument("cell size must be positive");
  int needed = ts.num_colors();
  if (style.mode == DrawMode::kCornerSquares) {
    if (style.corner_colors < 1 || style.corner_colors * style.corner_colors < ts.num_colors())
      throw std::invalid_argument("corner mode needs corner_colors^2 >= the Wang alphabet");
    needed = style.corner_colors;
  }
  const std::vector<std::string> palette =
      style.palette.empty() ? default_palette(needed) : style.palette;
  if (static_cast<int>(palette.size()) < needed)
    throw std::invalid_argument("palette has " + std::to_string(palette.size()) +
                                " entries but " + std::to_string(needed) + " colors are used");

  const int px = style.cell_px;
  const int width = tiling.width() * px;
  const int height = tiling.height() * px;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<defs><pattern id=\"void\" width=\"8\" height=\"8\" patternUnits=\"userSpaceOnUse\">"
         "<rect width=\"8\" height=\"8\" fill=\"#fff\"/>"
         "<path d=\"M0,8 L8,0\" stroke=\"#888\" stroke-width=\"1\"/></pattern></defs>\n";
  auto fill = [&](Color c) -> const std::string& { return palette[static_cast<std::size_t>(c)]; };

  for (int r = 0; r < tiling.height(); ++r) {
    for (int c = 0; c < tiling.width(); ++c) {
      const int x0 = c * px, y0 = r * px, x1 = x0 + px, y1 = y0 + px;
      const Cell& cell = tiling.at(r, c);
      if (!cell) {
        out << "<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << px << "\" height=\"" << px
            << "\" fill=\"url(#void)\" stroke=\"#444\" stroke-width=\"1\"/>\n";
        continue;
      }
      if (*cell < 0 || *cell >= ts.size())
        throw std::invalid_argument("tiling references unknown tile " + std::to_string(*cell));
      const Tile& t = ts[*cell];
      out << "<g>";
      if (style.mode == DrawMode::kEdgeTriangles) {
        const double cx = x0 + px / 2.0, cy = y0 + px / 2.0;
        auto tri = [&](int ax, int ay, int bx, int by, Color col) {
          out << "<polygon points=\"" << ax << ',' << ay << ' ' << bx << ',' << by << ' ' << cx
              << ',' << cy << "\" fill=\"" << fill(col) << "\"/>";
        };
        tri(x0, y0, x1, y0, t.north);
        tri(x0, y0, x0, y1, t.west);
        tri(x0, y1, x1, y1, t.south);
        tri(x1, y0, x1, y1, t.east);
      } else {
        const int n = style.corner_colors;
        const int half = px / 2;
        auto quad = [&](int x, int y, int w, int h, Color col) {
          out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w << "\" height=\"" << h
              << "\" fill=\"" << fill(col) << "\"/>";
        };
        quad(x0, y0, half, half, t.north % n);
        quad(x0 + half, y0, px - half, half, t.north / n);
        quad(x0, y0 + half, half, px - half, t.south % n);
        quad(x0 + half, y0 + half, px - half, px - half, t.south / n);
      }
      out << "<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << px << "\" height=\"" << px
          << "\" fill=\"none\" stroke=\"#222\" stroke-width=\"1\"/>";
      if (style.show_ids)
        out << "<text x=\"" << x0 + px / 2 << "\" y=\"" << y0 + px / 2
            << "\" font-size=\"" << std::max(6, px / 3)
            << "\" text-anchor=\"middle\" dominant-baseline=\"central\">" << *cell << "</text>";
      out << "</g>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace wangtiler
