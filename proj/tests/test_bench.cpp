#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

#include "wangtiler/bench.hpp"

using namespace wangtiler;

TEST_CASE("benchmark aggregates") {
  BenchConfig cfg;
  cfg.sets = {"complete:2", "finite1"};
  cfg.sizes = {{8, 8}};
  cfg.algorithms = {BenchAlgorithm::parse("alg1"), BenchAlgorithm::parse("alg4:half")};
  cfg.seeds = 6;
  cfg.base_seed = 10;
  cfg.threads = 3;
  const BenchReport rep = run_benchmark(cfg);
  REQUIRE(rep.entries.size() == 4);
  const BenchEntry& c2 = rep.entries[1];
  CHECK(c2.set == "complete:2");
  CHECK(c2.algorithm == "alg4:half");
  CHECK(c2.avg_placed == 64.0);
  const BenchEntry& f1 = rep.entries[2];
  CHECK(f1.num_tiles == 7);
  CHECK(f1.runs.size() == 6);
  int lo = 64, hi = 0;
  double sum = 0;
  for (std::size_t i = 0; i < f1.runs.size(); ++i) {
    CHECK(f1.runs[i].seed == 10 + i);
    lo = std::min(lo, f1.runs[i].placed);
    hi = std::max(hi, f1.runs[i].placed);
    sum += f1.runs[i].placed;
  }
  CHECK(f1.min_placed == lo);
  CHECK(f1.max_placed == hi);
  CHECK(f1.avg_placed == doctest::Approx(sum / 6));

  // Thread count does not change the numbers.
  cfg.threads = 1;
  const BenchReport serial = run_benchmark(cfg);
  for (std::size_t e = 0; e < rep.entries.size(); ++e)
    for (std::size_t i = 0; i < 6; ++i)
      CHECK(serial.entries[e].runs[i].placed == rep.entries[e].runs[i].placed);

  const auto doc = nlohmann::json::parse(report_json(rep));
  CHECK(doc["schema"] == "wangtiler.bench/1");
  CHECK(doc["entries"][2]["runs"][0].contains("millis"));
  CHECK(report_text(rep).find("finite1 (7/4)") != std::string::npos);
}

TEST_CASE("benchmark edge cases") {
  BenchConfig cfg;
  cfg.sets = {"fig3"};
  CHECK(run_benchmark(cfg).entries.empty());
  cfg.sets = {"unknown-set"};
  cfg.sizes = {{2, 2}};
  CHECK_THROWS_AS(run_benchmark(cfg), std::out_of_range);
  CHECK_THROWS_AS(BenchAlgorithm::parse("alg2:simple"), std::invalid_argument);
  CHECK_THROWS_AS(BenchAlgorithm::parse("alg9"), std::invalid_argument);
  CHECK(BenchAlgorithm::parse("alg4:twothirds").name() == "alg4:twothirds");
}
