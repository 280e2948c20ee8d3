#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "support.hpp"
#include "wangtiler/exact.hpp"
#include "wangtiler/transducer.hpp"

using namespace wangtiler;

TEST_CASE("fig3 2x2 is tileable") {
  const TileSet ts = builtin_set("fig3");
  CHECK(oracle::full_tiling_exists(to_quads(ts), 2, 2));
  const SolveResult r = solve_decision(ts, 2, 2);
  REQUIRE(r.status == SolveStatus::kValid);
  CHECK(validate_tiling(ts, *r.witness).is_valid);
  CHECK(r.witness->placed() == 4);
}

TEST_CASE("forced tile on 1x1") {
  const TileSet ts = builtin_set("finite2");
  for (TileId k = 0; k < ts.size(); ++k) {
    const std::vector<Extension> bc{ForceTile{0, 0, k}};
    const SolveResult r = solve_decision(ts, 1, 1, bc);
    REQUIRE(r.status == SolveStatus::kValid);
    CHECK(r.witness->at(0, 0) == k);
  }
}

TEST_CASE("boundary conditions are honored") {
  const TileSet ts = builtin_set("finite2");
  for (auto [h, w] : {std::pair{3, 4}, std::pair{3, 7}}) {
    // Constraints read off a known solution are satisfiable.
    const SolveResult base = solve_decision(ts, h, w);
    REQUIRE(base.status == SolveStatus::kValid);
    const Tiling& b = *base.witness;
    const TileId other = (*b.at(0, 0) + 1) % ts.size();
    const Color north = ts[*b.at(0, 3)].north;
    const std::vector<Extension> bc{ForceTile{1, 2, *b.at(1, 2)}, ForbidTile{0, 0, other},
                                    ForceEdgeColor{2, 0, Side::kWest, ts[*b.at(2, 0)].west},
                                    ForbidEdgeColor{0, 3, Side::kNorth, (north + 1) % ts.num_colors()}};
    const SolveResult r = solve_decision(ts, h, w, bc);
    REQUIRE(r.status == SolveStatus::kValid);
    const Tiling& t = *r.witness;
    CHECK(t.height() == h);
    CHECK(validate_tiling(ts, t).is_valid);
    CHECK(t.at(1, 2) == b.at(1, 2));
    CHECK(t.at(0, 0) != other);
    CHECK(ts[*t.at(2, 0)].west == ts[*b.at(2, 0)].west);
    CHECK(ts[*t.at(0, 3)].north != (north + 1) % ts.num_colors());

    // Forbidding every tile at one cell leaves nothing.
    std::vector<Extension> none;
    for (TileId k = 0; k < ts.size(); ++k) none.push_back(ForbidTile{1, 1, k});
    CHECK(solve_decision(ts, h, w, none).status == SolveStatus::kInfeasible);
  }
}

TEST_CASE("unsupported constraints and bad caps") {
  const TileSet ts = builtin_set("fig3");
  const std::vector<Extension> pair{SameTile{0, 0, 0, 1}};
  CHECK_THROWS_AS(solve_decision(ts, 1, 2, pair), std::invalid_argument);
  CHECK_THROWS_AS(solve_decision(ts, 1, 2, {}, 0), std::invalid_argument);
  CHECK(solve_decision(builtin_set("finite1"), 12, 12, {}, 10).status == SolveStatus::kCapped);
}

TEST_CASE("decision agrees with the brute-force oracle") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> colors(1, 3), tiles(1, 6);
  for (int trial = 0; trial < 150; ++trial) {
    const int nc = colors(rng);
    const auto quads = oracle::random_set(rng, nc, tiles(rng));
    const TileSet ts = to_tileset(quads, nc);
    for (int h = 1; h <= 9; ++h)
      for (int w = 1; h * w <= 9; ++w) {
        const SolveResult r = solve_decision(ts, h, w);
        const bool expect = oracle::max_cover(quads, h, w) == h * w;
        CHECK((r.status == SolveStatus::kValid) == expect);
        CHECK(r.status != SolveStatus::kCapped);
        if (r.witness) CHECK(oracle::grid_ok(quads, to_ints(*r.witness), h, w));
      }
  }
}

TEST_CASE("periodic decision matches the oracle") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 80; ++trial) {
    const auto quads = oracle::random_set(rng, 2, 5);
    const TileSet ts = to_tileset(quads, 2);
    const std::vector<Extension> bc{PeriodicFixed{}};
    for (int h = 1; h <= 3; ++h)
      for (int w = 1; w <= 3; ++w) {
        bool expect = false;
        oracle::enumerate(ts.size(), h * w, false, [&](const std::vector<int>& g) {
          if (!oracle::grid_ok(quads, g, h, w)) return true;
          bool ok = true;
          for (int c = 0; c < w; ++c) ok &= quads[g[c]][0] == quads[g[(h - 1) * w + c]][2];
          for (int r = 0; r < h; ++r) ok &= quads[g[r * w]][1] == quads[g[r * w + w - 1]][3];
          expect = ok;
          return !ok;
        });
        const SolveResult r = solve_decision(ts, h, w, bc);
        CHECK((r.status == SolveStatus::kValid) == expect);
        if (r.witness) CHECK(has_periodic_boundary(ts, *r.witness));
      }
  }
}

TEST_CASE("finite1 infeasibility and its smallest shape") {
  const TileSet ts = builtin_set("finite1");
  CHECK(solve_decision(ts, 8, 5).status == SolveStatus::kInfeasible);
  CHECK(solve_decision(ts, 5, 8).status == SolveStatus::kValid);
  CHECK(solve_decision(ts, 7, 5).status == SolveStatus::kValid);
  CHECK(solve_decision(ts, 10, 10).status == SolveStatus::kInfeasible);
}

TEST_CASE("smallest torus") {
  const auto one = smallest_torus(complete_stochastic_set(1), 4);
  REQUIRE(one.has_value());
  CHECK(one->min_area == 1);
  CHECK(one->count == 1);

  // fig3 tile 1 = (0,1,0,1) wraps onto itself both ways.
  const TileSet fig3 = builtin_set("fig3");
  const auto f = smallest_torus(fig3, 12);
  REQUIRE(f.has_value());
  CHECK(f->min_area == 1);
  CHECK(f->count == 1);

  CHECK_FALSE(smallest_torus(TileSet::from_tiles({{0, 0, 1, 1}}), 9).has_value());
}

TEST_CASE("torus count matches exhaustive enumeration") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto quads = oracle::random_set(rng, 3, 6);
    const TileSet ts = to_tileset(quads, 3);
    const auto r = smallest_torus(ts, 6, 1000);
    int area = 0;
    std::uint64_t count = 0;
    for (int a = 1; a <= 6 && count == 0; ++a)
      for (int h = 1; h <= a; ++h) {
        if (a % h) continue;
        const int w = a / h;
        oracle::enumerate(ts.size(), a, false, [&](const std::vector<int>& g) {
          // Torus: every cell matches its east and south neighbor cyclically.
          for (int i = 0; i < h; ++i)
            for (int j = 0; j < w; ++j) {
              const auto& t = quads[g[i * w + j]];
              if (t[3] != quads[g[i * w + (j + 1) % w]][1]) return true;
              if (t[2] != quads[g[((i + 1) % h) * w + j]][0]) return true;
            }
          ++count;
          area = a;
          return true;
        });
      }
    if (count == 0) {
      CHECK_FALSE(r.has_value());
      continue;
    }
    REQUIRE(r.has_value());
    CHECK(r->min_area == area);
    CHECK(r->count == count);
    CHECK(r->witnesses.size() == std::min<std::uint64_t>(count, 1000));
  }
}

TEST_CASE("torus witnesses tile a 2x2 repetition") {
  const Translation tr = translate_horizontal(builtin_set("ammann16"));
  const TileSet ts = corner_to_wang(tr.corners, tr.num_colors);
  const auto r = smallest_torus(ts, 12);
  REQUIRE(r.has_value());
  CHECK(r->min_area == 6);
  CHECK(r->count == 12);
  CHECK(r->witnesses.size() == 12);
  for (const Tiling& t : r->witnesses) {
    CHECK(has_periodic_boundary(ts, t));
    Tiling big(2 * t.height(), 2 * t.width());
    for (int i = 0; i < big.height(); ++i)
      for (int j = 0; j < big.width(); ++j) big.at(i, j) = t.at(i % t.height(), j % t.width());
    CHECK(validate_tiling(ts, big).is_valid);
  }
}

TEST_CASE("packing uses each tile once") {
  for (bool mrv : {true, false}) {
    PackOptions opt;
    opt.most_constrained = mrv;
    const TileSet c2 = complete_stochastic_set(2);
    const SolveResult r = pack_tiles(c2, 4, 4, opt);
    REQUIRE(r.status == SolveStatus::kValid);
    std::vector<int> ids = to_ints(*r.witness);
    std::sort(ids.begin(), ids.end());
    for (int k = 0; k < 16; ++k) CHECK(ids[k] == k);
    CHECK(validate_tiling(c2, *r.witness).is_valid);
    CHECK(has_periodic_boundary(c2, *r.witness));
  }
  CHECK_THROWS_AS(pack_tiles(TileSet::from_tiles({{0, 0, 0, 0}, {1, 1, 1, 1}}), 1, 1),
                  std::invalid_argument);
  // Two tiles that cannot sit side by side.
  const SolveResult no = pack_tiles(TileSet::from_tiles({{0, 0, 0, 0}, {1, 1, 1, 1}}), 1, 2);
  CHECK(no.status == SolveStatus::kInfeasible);
}

TEST_CASE("max cover oracle") {
  CHECK(max_cover_oracle(builtin_set("fig3"), 2, 2).best == 4);
  const auto deg = max_cover_oracle(TileSet::from_tiles({{0, 0, 1, 1}}), 1, 2);
  CHECK(deg.best == 1);
  CHECK(deg.witness.placed() == 1);
  CHECK(max_cover_oracle(builtin_set("finite1"), 1, 1).best == 1);
  CHECK_THROWS_AS(max_cover_oracle(builtin_set("finite2"), 4, 4, 50), std::runtime_error);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const auto quads = oracle::random_set(rng, 3, 5);
    const TileSet ts = to_tileset(quads, 3);
    const auto r = max_cover_oracle(ts, 2, 3);
    CHECK(r.best == oracle::max_cover(quads, 2, 3));
    CHECK(validate_tiling(ts, r.witness).is_valid);
    CHECK(r.witness.placed() == r.best);
  }
}
