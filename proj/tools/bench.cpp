// Compares the serial reference search evaluator against the OpenMP one on
// the same workload and confirms the reports match.

#include <chrono>
#include <cstdio>
#include <string>

#include "inddom/search.hpp"

namespace {

template <typename F>
double timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  inddom::SearchConfig config;
  config.seed = 7;
  config.count = argc > 1 ? std::stol(argv[1]) : 200;
  config.max_n = 7;
  config.max_weight = 3;
  config.mode = inddom::SearchMode::Pair;

  std::string serial_json, parallel_json;
  double ts = timed([&] { serial_json = inddom::run_search_serial(config).to_json(); });
  double tp = timed([&] { parallel_json = inddom::run_search_parallel(config).to_json(); });

  std::printf("instances: %ld\n", config.count);
  std::printf("serial:    %.3f s\n", ts);
  std::printf("parallel:  %.3f s  (speedup %.2fx)\n", tp, ts / tp);
  if (serial_json != parallel_json) {
    std::printf("MISMATCH: parallel report differs from serial reference\n");
    return 1;
  }
  std::printf("reports identical\n");
  return 0;
}
