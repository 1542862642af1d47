#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "inddom/instance.hpp"
#include "inddom/rational.hpp"

namespace inddom {

enum class SearchMode { Pair, Partition };

struct SearchConfig {
  std::uint64_t seed = 0;
  long count = 1;
  int max_n = 6;
  long edge_prob_num = 1;
  long edge_prob_den = 2;
  long max_weight = 3;
  SearchMode mode = SearchMode::Pair;
  std::uint64_t cap = 1u << 20;
};

struct Violation {
  long index = 0;
  std::string inequality;
  std::string lhs;  // exact rational, lhs < rhs is what broke
  std::string rhs;
  std::string instance_json;
};

struct SearchReport {
  long tested = 0;
  std::vector<Violation> violations;
  // checks passed per statement, e.g. "conjecture8", "theorem10"
  std::map<std::string, long> tallies;

  std::string to_json() const;
};

// Counter-based deterministic generation: the instance depends on
// (seed, index, config) only, so any evaluation order gives the same report.
Instance random_instance(std::uint64_t seed, long index,
                         const SearchConfig& config);

// Serial reference evaluator.
SearchReport run_search_serial(const SearchConfig& config);
// OpenMP evaluator; produces a report byte-identical to the serial one.
SearchReport run_search_parallel(const SearchConfig& config);

}  // namespace inddom
