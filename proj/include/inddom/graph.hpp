#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace inddom {

using Vertex = int;
using VertexSet = std::set<Vertex>;

struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Simple undirected graph on vertices 0..n-1. Adjacency is stored as a
// per-vertex sorted set; symmetry and absence of loops are construction
// invariants.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<size_t>(n)) {
    if (n < 0) throw ModelError("vertex count must be non-negative");
  }

  int n() const { return static_cast<int>(adj_.size()); }

  const VertexSet& neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[static_cast<size_t>(v)];
  }

  bool has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[static_cast<size_t>(u)].count(v) > 0;
  }

  void add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw ModelError("self-loop at vertex " + std::to_string(u));
    adj_[static_cast<size_t>(u)].insert(v);
    adj_[static_cast<size_t>(v)].insert(u);
  }

  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n(); ++u)
      for (Vertex v : adj_[static_cast<size_t>(u)])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n())
      throw ModelError("vertex id out of range: " + std::to_string(v));
  }

 private:
  std::vector<VertexSet> adj_;
};

// Ordered sequence of pairwise disjoint non-empty vertex blocks.
class Partition {
 public:
  Partition() = default;
  Partition(std::vector<VertexSet> blocks, int n);

  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<VertexSet>& blocks() const { return blocks_; }
  const VertexSet& block(int j) const { return blocks_.at(static_cast<size_t>(j)); }

  // Index j with v in V_j, or -1 when v is uncovered.
  int block_of(Vertex v) const { return block_of_.at(static_cast<size_t>(v)); }

  // True when the blocks cover [0, n) exactly.
  bool is_full() const { return covered_ == n_; }

 private:
  std::vector<VertexSet> blocks_;
  std::vector<int> block_of_;
  int n_ = 0;
  int covered_ = 0;
};

// Per-vertex non-negative integer weights.
struct WeightVector {
  std::vector<long> w;

  WeightVector() = default;
  explicit WeightVector(std::vector<long> weights) : w(std::move(weights)) {
    for (long x : w)
      if (x < 0) throw ModelError("negative weight");
  }
  static WeightVector ones(int n) {
    return WeightVector(std::vector<long>(static_cast<size_t>(n), 1));
  }

  int size() const { return static_cast<int>(w.size()); }
  long operator[](Vertex v) const { return w.at(static_cast<size_t>(v)); }

  long total(const VertexSet& s) const {
    long t = 0;
    for (Vertex v : s) t += (*this)[v];
    return t;
  }
};

Graph build_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);
Graph complement(const Graph& g);

VertexSet neighborhood(const Graph& g, Vertex v, bool closed);
VertexSet neighborhood(const Graph& g, const VertexSet& d, bool closed);

// Induced subgraph plus the map from new ids back to originals.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original_id;
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Disjoint union of cliques, one per block.
Graph partition_graph(const Partition& p, int n);

}  // namespace inddom
