#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "support.hpp"
#include "wangtiler/transducer.hpp"

using namespace wangtiler;

namespace {

std::multiset<std::tuple<int, int, int, int>> arc_set(const TransducerGraph& g) {
  std::multiset<std::tuple<int, int, int, int>> out;
  for (const Arc& a : g.arcs) out.insert({a.from, a.to, a.input, a.output});
  return out;
}

}  // namespace

TEST_CASE("fig3 transducers") {
  const TileSet ts = builtin_set("fig3");
  const auto h = build_transducer(ts, Orientation::kHorizontal);
  CHECK(h.num_states == 2);
  CHECK(arc_set(h) == std::multiset<std::tuple<int, int, int, int>>{
                          {1, 0, 1, 0}, {1, 1, 0, 0}, {0, 1, 0, 1}});
  const auto d = build_transducer(ts, Orientation::kDual);
  // Arc n -(e|w)-> s.
  CHECK(arc_set(d) == std::multiset<std::tuple<int, int, int, int>>{
                          {0, 1, 0, 1}, {0, 0, 1, 1}, {1, 0, 1, 0}});
  CHECK(parallel_arcs(h).empty());
  CHECK(all_states_on_cycles(h));
}

TEST_CASE("single tile gives one self-loop") {
  const TileSet ts = complete_stochastic_set(1);
  for (auto o : {Orientation::kHorizontal, Orientation::kDual}) {
    const auto g = build_transducer(ts, o);
    REQUIRE(g.arcs.size() == 1);
    CHECK(g.arcs[0] == Arc{0, 0, 0, 0, 0});
  }
}

TEST_CASE("arc count equals tile count and dual is the reflected horizontal") {
  for (const auto& name : builtin_set_names()) {
    const TileSet ts = builtin_set(name);
    const auto d = build_transducer(ts, Orientation::kDual);
    const auto r = build_transducer(ts.reflected(), Orientation::kHorizontal);
    CHECK(d.arcs.size() == static_cast<std::size_t>(ts.size()));
    CHECK(d.arcs == r.arcs);
  }
}

TEST_CASE("parallel arcs") {
  const auto am = build_transducer(builtin_set("ammann16"), Orientation::kHorizontal);
  const auto par = parallel_arcs(am);
  const auto it = std::find_if(par.begin(), par.end(),
                               [](const ParallelArcs& p) { return p.from == 1 && p.to == 0; });
  REQUIRE(it != par.end());
  REQUIRE(it->arcs.size() == 2);
  std::set<std::pair<int, int>> labels;
  for (int i : it->arcs) labels.insert({am.arcs[i].input, am.arcs[i].output});
  CHECK(labels == std::set<std::pair<int, int>>{{2, 4}, {5, 3}});

  const auto c2 = build_transducer(complete_stochastic_set(2), Orientation::kHorizontal);
  const auto pc = parallel_arcs(c2);
  CHECK(pc.size() == 4);
  for (const auto& p : pc) CHECK(p.arcs.size() == 4);
}

TEST_CASE("cycle criterion") {
  CHECK_FALSE(all_states_on_cycles(
      build_transducer(TileSet::from_tiles({{0, 0, 1, 1}}), Orientation::kHorizontal)));
  const TileSet am = builtin_set("ammann16");
  CHECK(all_states_on_cycles(build_transducer(am, Orientation::kHorizontal)));
  CHECK(all_states_on_cycles(build_transducer(am, Orientation::kDual)));
  // Unused colors are ignored.
  const TileSet iso({{0, 0, 0, 0}}, 3);
  CHECK(all_states_on_cycles(build_transducer(iso, Orientation::kHorizontal)));
}

TEST_CASE("walks and reachability") {
  const auto g = build_transducer(TileSet::from_tiles({{0, 0, 1, 1}}), Orientation::kHorizontal);
  CHECK(admits_walk(g, 1));
  CHECK_FALSE(admits_walk(g, 2));
  const auto r1 = reachability(g, 1);
  CHECK(r1 == std::vector<char>{0, 1, 0, 0});
  CHECK(to_dot(g).find("0 -> 1") != std::string::npos);
}

TEST_CASE("translations") {
  const TileSet one = complete_stochastic_set(1);
  const auto th = translate_horizontal(one);
  REQUIRE(th.corners.size() == 1);
  CHECK(th.corners[0] == CornerTile{0, 0, 0, 0});
  CHECK(translate_vertical(one).corners == th.corners);

  // fig3: count ordered pairs with east(p) == west(q) by hand.
  const TileSet fig3 = builtin_set("fig3");
  std::set<std::array<int, 4>> expect;
  int pairs = 0;
  for (const Tile& p : fig3.tiles())
    for (const Tile& q : fig3.tiles())
      if (p.east == q.west) {
        ++pairs;
        expect.insert({p.north, p.south, q.south, q.north});
      }
  const auto tf = translate_horizontal(fig3);
  CHECK(tf.matched_pairs == pairs);
  CHECK(tf.corners.size() == expect.size());

  const TileSet am = builtin_set("ammann16");
  const auto ah = translate_horizontal(am);
  const auto av = translate_vertical(am);
  CHECK(ah.corners.size() == av.corners.size());
  CHECK_FALSE(ah.bijective);
  CHECK_FALSE(ah.witnesses.empty());
  CHECK(rotated(am)[0] == Tile{am[0].west, am[0].south, am[0].east, am[0].north});
}

TEST_CASE("horizontal translation is injective without dual parallel arcs") {
  // Every set of up to 4 tiles over 2 colors.
  const TileSet all = complete_stochastic_set(2);
  int checked = 0;
  for (unsigned mask = 1; mask < (1u << 16); ++mask) {
    if (std::popcount(mask) > 4) continue;
    std::vector<Tile> tiles;
    for (int k = 0; k < 16; ++k)
      if (mask >> k & 1u) tiles.push_back(all[k]);
    const TileSet ts(std::move(tiles), 2);
    if (!parallel_arcs(build_transducer(ts, Orientation::kDual)).empty()) continue;
    const auto t = translate_horizontal(ts);
    CHECK(static_cast<int>(t.corners.size()) == t.matched_pairs);
    ++checked;
  }
  CHECK(checked > 0);
}
