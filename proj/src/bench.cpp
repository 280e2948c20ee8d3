#include "wangtiler/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "wangtiler/io.hpp"

namespace wangtiler {

BenchAlgorithm BenchAlgorithm::parse(std::string_view text) {
  BenchAlgorithm a;
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  if (head == "alg1") a.number = 1;
  else if (head == "alg2") a.number = 2;
  else if (head == "alg3") a.number = 3;
  else if (head == "alg4") a.number = 4;
  else throw std::invalid_argument("unknown algorithm '" + std::string(text) + "'");
  if (colon != std::string_view::npos) {
    if (a.number != 4) throw std::invalid_argument("only alg4 takes an initial algorithm");
    a.init = parse_init(text.substr(colon + 1));
  }
  return a;
}

std::string BenchAlgorithm::name() const {
  std::string n = "alg" + std::to_string(number);
  if (number == 4) n += ":" + std::string(init_name(init));
  return n;
}

CoverRun BenchAlgorithm::run(const TileSet& ts, int height, int width, std::uint64_t seed,
                             const ImproveOptions& options) const {
  switch (number) {
    case 1: return alg1_simple(ts, height, width, seed);
    case 2: return alg2_half(ts, height, width, seed);
    case 3: return alg3_twothirds(ts, height, width, seed);
    default: return alg4_improve(ts, height, width, init, seed, options);
  }
}

BenchReport run_benchmark(const BenchConfig& config) {
  BenchReport report;
  if (config.seeds < 0) throw std::invalid_argument("seed count must be non-negative");
  unsigned threads = config.threads ? config.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, threads);

  for (const std::string& name : config.sets) {
    const TileSet ts = load_tileset(name);
    for (const BenchSize& size : config.sizes) {
      for (const BenchAlgorithm& alg : config.algorithms) {
        BenchEntry entry;
        entry.set = name;
        entry.num_tiles = ts.size();
        entry.num_colors = ts.num_colors();
        entry.size = size;
        entry.algorithm = alg.name();
        entry.runs.resize(static_cast<std::size_t>(config.seeds));

        std::atomic<int> next{0};
        auto worker = [&] {
          for (int i = next++; i < config.seeds; i = next++) {
            const std::uint64_t seed = config.base_seed + static_cast<std::uint64_t>(i);
            const auto t0 = std::chrono::steady_clock::now();
            const CoverRun run = alg.run(ts, size.height, size.width, seed, config.improve);
            const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
            entry.runs[static_cast<std::size_t>(i)] = BenchRun{run.placed, run.bound, seed, dt.count()};
          }
        };
        const unsigned n = std::min<unsigned>(threads, static_cast<unsigned>(std::max(config.seeds, 1)));
        if (n <= 1) {
          worker();
        } else {
          std::vector<std::thread> pool;
          for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
          for (auto& th : pool) th.join();
        }

        if (!entry.runs.empty()) {
          entry.min_placed = entry.runs.front().placed;
          entry.max_placed = entry.runs.front().placed;
          double sum = 0.0, ms = 0.0;
          for (const BenchRun& r : entry.runs) {
            entry.min_placed = std::min(entry.min_placed, r.placed);
            entry.max_placed = std::max(entry.max_placed, r.placed);
            sum += r.placed;
            ms += r.millis;
          }
          entry.avg_placed = sum / static_cast<double>(entry.runs.size());
          entry.mean_millis = ms / static_cast<double>(entry.runs.size());
        }
        report.entries.push_back(std::move(entry));
      }
    }
  }
  return report;
}

std::string report_text(const BenchReport& report) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-16s %-8s %-16s %6s %6s %9s %6s %10s\n", "set (T/C)", "size",
                "algorithm", "runs", "min", "avg", "max", "mean ms");
  out << line;
  for (const BenchEntry& e : report.entries) {
    const std::string set = e.set + " (" + std::to_string(e.num_tiles) + "/" +
                            std::to_string(e.num_colors) + ")";
    const std::string size = std::to_string(e.size.height) + "x" + std::to_string(e.size.width);
    std::snprintf(line, sizeof line, "%-16s %-8s %-16s %6zu %6d %9.2f %6d %10.3f\n", set.c_str(),
                  size.c_str(), e.algorithm.c_str(), e.runs.size(), e.min_placed, e.avg_placed,
                  e.max_placed, e.mean_millis);
    out << line;
  }
  return out.str();
}

std::string report_json(const BenchReport& report) {
  nlohmann::json doc;
  doc["schema"] = "wangtiler.bench/1";
  doc["entries"] = nlohmann::json::array();
  for (const BenchEntry& e : report.entries) {
    nlohmann::json runs = nlohmann::json::array();
    for (const BenchRun& r : e.runs)
      runs.push_back({{"placed", r.placed},
                      {"bound", std::string(bound_name(r.bound))},
                      {"seed", r.seed},
                      {"millis", r.millis}});
    doc["entries"].push_back({{"set", e.set},
                              {"tiles", e.num_tiles},
                              {"colors", e.num_colors},
                              {"height", e.size.height},
                              {"width", e.size.width},
                              {"algorithm", e.algorithm},
                              {"runs", std::move(runs)},
                              {"min", e.min_placed},
                              {"avg", e.avg_placed},
                              {"max", e.max_placed},
                              {"mean_millis", e.mean_millis}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace wangtiler
