#pragma once

#include <optional>
#include <string>

#include "inddom/graph.hpp"

namespace inddom {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One problem instance as read from an instance file. The second graph and
// the partition are optional; weights default to all ones.
struct Instance {
  Graph graph;
  std::optional<Graph> second_graph;
  std::optional<Partition> partition;
  WeightVector weights;
};

Instance parse_instance(const std::string& json_text);
Instance load_instance(const std::string& path);
std::string instance_to_json(const Instance& inst);

}  // namespace inddom
