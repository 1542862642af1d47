#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "inddom/graph.hpp"

namespace inddom {

struct CapExceeded : std::runtime_error {
  std::uint64_t count;
  explicit CapExceeded(std::uint64_t c)
      : std::runtime_error("independent-set count exceeds cap (" +
                           std::to_string(c) + ")"),
        count(c) {}
};

inline constexpr std::uint64_t kDefaultColumnCap = 1u << 20;

// All independent sets of a graph in canonical order: by size, then
// lexicographically. Closed down by construction (contains the empty set and
// every subset of every member).
using IndependentFamily = std::vector<VertexSet>;

bool is_independent(const Graph& g, const VertexSet& s);

IndependentFamily enumerate_independent_sets(
    const Graph& g, std::uint64_t cap = kDefaultColumnCap);

struct MwisResult {
  VertexSet set;
  long value = 0;
};

// Exact max-weight independent set by branch and bound: branch on the
// highest-degree remaining vertex, bound by the remaining positive weight.
// Ties go to the lexicographically smallest set.
MwisResult max_weight_independent_set(const Graph& g, const WeightVector& w);

}  // namespace inddom
