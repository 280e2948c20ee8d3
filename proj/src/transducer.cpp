#include "wangtiler/transducer.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace wangtiler {

TransducerGraph build_transducer(const TileSet& ts, Orientation orientation) {
  TransducerGraph g;
  g.num_states = ts.num_colors();
  g.orientation = orientation;
  g.arcs.reserve(static_cast<std::size_t>(ts.size()));
  for (TileId k = 0; k < ts.size(); ++k) {
    const Tile& t = ts[k];
    if (orientation == Orientation::kHorizontal)
      g.arcs.push_back(Arc{t.west, t.east, t.south, t.north, k});
    else
      g.arcs.push_back(Arc{t.north, t.south, t.east, t.west, k});
  }
  return g;
}

std::vector<ParallelArcs> parallel_arcs(const TransducerGraph& g) {
  std::map<std::pair<Color, Color>, std::vector<int>> groups;
  for (std::size_t i = 0; i < g.arcs.size(); ++i)
    groups[{g.arcs[i].from, g.arcs[i].to}].push_back(static_cast<int>(i));
  std::vector<ParallelArcs> out;
  for (auto& [key, ids] : groups)
    if (ids.size() >= 2) out.push_back(ParallelArcs{key.first, key.second, std::move(ids)});
  return out;
}

namespace {

// Tarjan's strongly connected components, iterative.
std::vector<int> scc_ids(const TransducerGraph& g) {
  const int n = g.num_states;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const Arc& a : g.arcs) adj[static_cast<std::size_t>(a.from)].push_back(a.to);

  std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0),
      comp(static_cast<std::size_t>(n), -1);
  std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  int counter = 0;
  int components = 0;

  struct Frame {
    int v;
    std::size_t next;
  };
  for (int root = 0; root < n; ++root) {
    if (index[static_cast<std::size_t>(root)] >= 0) continue;
    std::vector<Frame> call{{root, 0}};
    index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = counter++;
    stack.push_back(root);
    on_stack[static_cast<std::size_t>(root)] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto v = static_cast<std::size_t>(f.v);
      if (f.next < adj[v].size()) {
        const int w = adj[v][f.next++];
        const auto wi = static_cast<std::size_t>(w);
        if (index[wi] < 0) {
          index[wi] = low[wi] = counter++;
          stack.push_back(w);
          on_stack[wi] = 1;
          call.push_back({w, 0});
        } else if (on_stack[wi]) {
          low[v] = std::min(low[v], index[wi]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = 0;
          comp[static_cast<std::size_t>(w)] = components;
        } while (w != f.v);
        ++components;
      }
      const int done = f.v;
      call.pop_back();
      if (!call.empty()) {
        const auto parent = static_cast<std::size_t>(call.back().v);
        low[parent] = std::min(low[parent], low[static_cast<std::size_t>(done)]);
      }
    }
  }
  return comp;
}

}  // namespace

bool all_states_on_cycles(const TransducerGraph& g) {
  const std::vector<int> comp = scc_ids(g);
  const auto n = static_cast<std::size_t>(g.num_states);
  std::vector<int> comp_size(n, 0);
  for (int c : comp) ++comp_size[static_cast<std::size_t>(c)];
  std::vector<char> incident(n, 0), self_loop(n, 0);
  for (const Arc& a : g.arcs) {
    incident[static_cast<std::size_t>(a.from)] = incident[static_cast<std::size_t>(a.to)] = 1;
    if (a.from == a.to) self_loop[static_cast<std::size_t>(a.from)] = 1;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!incident[v]) continue;
    if (comp_size[static_cast<std::size_t>(comp[v])] < 2 && !self_loop[v]) return false;
  }
  return true;
}

std::vector<char> reachability(const TransducerGraph& g, int steps) {
  const auto n = static_cast<std::size_t>(g.num_states);
  std::vector<char> reach(n * n, 0);
  for (std::size_t v = 0; v < n; ++v) reach[v * n + v] = 1;
  for (int s = 0; s < steps; ++s) {
    std::vector<char> next(n * n, 0);
    for (std::size_t from = 0; from < n; ++from)
      for (const Arc& a : g.arcs)
        if (reach[from * n + static_cast<std::size_t>(a.from)])
          next[from * n + static_cast<std::size_t>(a.to)] = 1;
    reach = std::move(next);
  }
  return reach;
}

bool admits_walk(const TransducerGraph& g, int length) {
  if (length <= 0) return true;
  const std::vector<char> reach = reachability(g, length);
  return std::any_of(reach.begin(), reach.end(), [](char c) { return c != 0; });
}

std::string to_dot(const TransducerGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=LR;\n";
  for (int v = 0; v < g.num_states; ++v) out << "  " << v << ";\n";
  for (const Arc& a : g.arcs)
    out << "  " << a.from << " -> " << a.to << " [label=\"" << a.input << '|' << a.output
        << "\", tile=" << a.tile << "];\n";
  out << "}\n";
  return out.str();
}

namespace {

Translation translate(const TileSet& ts, const TransducerGraph& witness_graph) {
  Translation out;
  out.num_colors = ts.num_colors();
  for (const Tile& p : ts.tiles()) {
    for (const Tile& q : ts.tiles()) {
      if (p.east != q.west) continue;
      ++out.matched_pairs;
      out.corners.push_back(CornerTile{p.north, p.south, q.south, q.north});
    }
  }
  std::sort(out.corners.begin(), out.corners.end());
  out.corners.erase(std::unique(out.corners.begin(), out.corners.end()), out.corners.end());
  out.witnesses = parallel_arcs(witness_graph);
  out.bijective = out.witnesses.empty();
  return out;
}

}  // namespace

TileSet rotated(const TileSet& ts) {
  std::vector<Tile> out;
  out.reserve(static_cast<std::size_t>(ts.size()));
  for (const Tile& t : ts.tiles()) out.push_back(Tile{t.west, t.south, t.east, t.north});
  return TileSet(std::move(out), ts.num_colors(), ts.name());
}

Translation translate_horizontal(const TileSet& ts) {
  // Corners forget the vertical edge colors, so tiles must be identified by
  // (north, south) alone: parallel arcs in the dual graph break that.
  return translate(ts, build_transducer(ts, Orientation::kDual));
}

Translation translate_vertical(const TileSet& ts) {
  return translate(rotated(ts), build_transducer(ts, Orientation::kHorizontal));
}

}  // namespace wangtiler
