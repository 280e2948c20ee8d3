#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <optional>
#include <vector>

#include "wangtiler/exact.hpp"
#include "wangtiler/heuristics.hpp"
#include "wangtiler/ilp.hpp"
#include "wangtiler/io.hpp"
#include "wangtiler/render.hpp"
#include "wangtiler/transducer.hpp"

namespace py = pybind11;
using namespace wangtiler;

namespace {

using Grid = std::vector<std::vector<std::optional<int>>>;

Grid to_grid(const Tiling& t) {
  Grid g(static_cast<std::size_t>(t.height()));
  for (int r = 0; r < t.height(); ++r)
    for (const Cell& c : t.row(r)) g[static_cast<std::size_t>(r)].push_back(c);
  return g;
}

Tiling from_grid(const Grid& g) {
  if (g.empty() || g.front().empty()) throw std::invalid_argument("tiling must be at least 1x1");
  const int h = static_cast<int>(g.size());
  const int w = static_cast<int>(g.front().size());
  Tiling t(h, w);
  for (int r = 0; r < h; ++r) {
    if (static_cast<int>(g[static_cast<std::size_t>(r)].size()) != w)
      throw std::invalid_argument("ragged tiling");
    for (int c = 0; c < w; ++c) t.at(r, c) = g[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  return t;
}

std::vector<Extension> parse_all(const std::vector<std::string>& texts) {
  std::vector<Extension> out;
  for (const auto& s : texts) out.push_back(parse_extension(s));
  return out;
}

}  // namespace

PYBIND11_MODULE(_wangtiler, m) {
  m.doc() = "Bounded Wang tiling solvers and heuristics";

  py::class_<Tile>(m, "Tile")
      .def(py::init<Color, Color, Color, Color>(), py::arg("north"), py::arg("west"),
           py::arg("south"), py::arg("east"))
      .def_readonly("north", &Tile::north)
      .def_readonly("west", &Tile::west)
      .def_readonly("south", &Tile::south)
      .def_readonly("east", &Tile::east)
      .def("__eq__", [](const Tile& a, const Tile& b) { return a == b; })
      .def("__repr__", [](const Tile& t) {
        return "Tile(" + std::to_string(t.north) + ", " + std::to_string(t.west) + ", " +
               std::to_string(t.south) + ", " + std::to_string(t.east) + ")";
      });

  py::class_<TileSet>(m, "TileSet")
      .def(py::init<std::vector<Tile>, int, std::string>(), py::arg("tiles"),
           py::arg("num_colors"), py::arg("name") = "")
      .def_property_readonly("tiles", &TileSet::tiles)
      .def_property_readonly("num_colors", &TileSet::num_colors)
      .def_property_readonly("name", &TileSet::name)
      .def("reflected", &TileSet::reflected)
      .def("__len__", &TileSet::size)
      .def("__getitem__", [](const TileSet& ts, int k) {
        if (k < 0 || k >= ts.size()) throw py::index_error();
        return ts[k];
      });

  m.def("builtin_set", [](const std::string& n) { return builtin_set(n); });
  m.def("builtin_set_names", &builtin_set_names);
  m.def("complete_stochastic_set", &complete_stochastic_set, py::arg("num_colors"));
  m.def("load_tileset", [](const std::string& n) { return load_tileset(n); });
  m.def("parse_tileset", [](const std::string& t) { return parse_tileset(t); });
  m.def("format_tileset", &format_tileset);
  m.def("corner_to_wang",
        [](const std::vector<std::array<int, 4>>& corners, int n) {
          std::vector<CornerTile> ct;
          for (const auto& c : corners) ct.push_back({c[0], c[1], c[2], c[3]});
          return corner_to_wang(ct, n);
        },
        py::arg("corners"), py::arg("num_colors"));

  m.def("is_valid", [](const TileSet& ts, const Grid& g) {
    return validate_tiling(ts, from_grid(g)).is_valid;
  });

  m.def("parallel_arcs", [](const TileSet& ts, bool dual) {
    const auto g = build_transducer(ts, dual ? Orientation::kDual : Orientation::kHorizontal);
    py::list out;
    for (const ParallelArcs& p : parallel_arcs(g)) {
      py::list labels;
      for (int i : p.arcs)
        labels.append(py::make_tuple(g.arcs[static_cast<std::size_t>(i)].input,
                                     g.arcs[static_cast<std::size_t>(i)].output));
      out.append(py::make_tuple(p.from, p.to, labels));
    }
    return out;
  }, py::arg("tileset"), py::arg("dual") = false);

  m.def("solve", [](const TileSet& ts, int h, int w, const std::vector<std::string>& ext) {
    const SolveResult r = solve_decision(ts, h, w, parse_all(ext));
    py::dict d;
    d["status"] = std::string(status_name(r.status));
    d["tiling"] = r.witness ? py::cast(to_grid(*r.witness)) : py::none();
    d["states"] = r.stats.states;
    return d;
  }, py::arg("tileset"), py::arg("height"), py::arg("width"),
     py::arg("extensions") = std::vector<std::string>{});

  m.def("smallest_torus", [](const TileSet& ts, int max_area) -> py::object {
    const auto r = smallest_torus(ts, max_area);
    if (!r) return py::none();
    py::dict d;
    d["min_area"] = r->min_area;
    d["height"] = r->height;
    d["width"] = r->width;
    d["count"] = r->count;
    py::list wit;
    for (const Tiling& t : r->witnesses) wit.append(to_grid(t));
    d["witnesses"] = wit;
    return d;
  }, py::arg("tileset"), py::arg("max_area"));

  m.def("cover", [](const TileSet& ts, int h, int w, int alg, bool improve, std::uint64_t seed) {
    CoverRun r;
    if (improve) {
      const InitAlgorithm init = alg == 1   ? InitAlgorithm::kSimple
                                 : alg == 2 ? InitAlgorithm::kHalf
                                            : InitAlgorithm::kTwoThirds;
      r = alg4_improve(ts, h, w, init, seed);
    } else if (alg == 1) {
      r = alg1_simple(ts, h, w, seed);
    } else if (alg == 2) {
      r = alg2_half(ts, h, w, seed);
    } else if (alg == 3) {
      r = alg3_twothirds(ts, h, w, seed);
    } else {
      throw std::invalid_argument("alg must be 1, 2 or 3");
    }
    py::dict d;
    d["placed"] = r.placed;
    d["bound"] = std::string(bound_name(r.bound));
    d["seed"] = r.seed;
    d["tiling"] = to_grid(r.tiling);
    return d;
  }, py::arg("tileset"), py::arg("height"), py::arg("width"), py::arg("alg") = 1,
     py::arg("improve") = true, py::arg("seed") = 1);

  m.def("emit_lp", [](const TileSet& ts, int h, int w, const std::string& f,
                      const std::vector<std::string>& ext) {
    return emit_lp(build_model(ModelSpec{ts, h, w, parse_formulation(f), parse_all(ext)}));
  }, py::arg("tileset"), py::arg("height"), py::arg("width"),
     py::arg("formulation") = "decision", py::arg("extensions") = std::vector<std::string>{});

  m.def("render_svg", [](const TileSet& ts, const Grid& g, int cell_px) {
    RenderStyle s;
    s.cell_px = cell_px;
    return render_svg(ts, from_grid(g), s);
  }, py::arg("tileset"), py::arg("tiling"), py::arg("cell_px") = 40);
}
