#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wangtiler/heuristics.hpp"
#include "wangtiler/tileset.hpp"

namespace wangtiler {

/// "alg1", "alg2", "alg3", or "alg4:<init>" with init simple|half|twothirds.
struct BenchAlgorithm {
  int number = 4;
  InitAlgorithm init = InitAlgorithm::kSimple;

  static BenchAlgorithm parse(std::string_view text);
  std::string name() const;
  CoverRun run(const TileSet& ts, int height, int width, std::uint64_t seed,
               const ImproveOptions& options = {}) const;
};

struct BenchSize {
  int height = 0;
  int width = 0;
};

struct BenchConfig {
  std::vector<std::string> sets;  ///< built-in names, complete:<n>, or file paths
  std::vector<BenchSize> sizes;
  std::vector<BenchAlgorithm> algorithms{BenchAlgorithm{}};
  int seeds = 100;
  std::uint64_t base_seed = 0;  ///< run i uses base_seed + i
  unsigned threads = 0;         ///< 0 picks hardware concurrency
  ImproveOptions improve;
};

struct BenchRun {
  int placed = 0;
  Bound bound = Bound::kNone;
  std::uint64_t seed = 0;
  double millis = 0.0;
};

struct BenchEntry {
  std::string set;
  int num_tiles = 0;
  int num_colors = 0;
  BenchSize size;
  std::string algorithm;
  std::vector<BenchRun> runs;  ///< in seed order
  int min_placed = 0;
  int max_placed = 0;
  double avg_placed = 0.0;
  double mean_millis = 0.0;
};

struct BenchReport {
  std::vector<BenchEntry> entries;
};

/// Throws std::out_of_range for unknown set names.
BenchReport run_benchmark(const BenchConfig& config);

std::string report_text(const BenchReport& report);
/// Schema "wangtiler.bench/1".
std::string report_json(const BenchReport& report);

}  // namespace wangtiler
