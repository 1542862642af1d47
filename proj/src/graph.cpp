#include "inddom/graph.hpp"

#include <algorithm>
#include <map>

namespace inddom {

Partition::Partition(std::vector<VertexSet> blocks, int n)
    : blocks_(std::move(blocks)), block_of_(static_cast<size_t>(n), -1), n_(n) {
  if (blocks_.empty()) throw ModelError("partition needs at least one block");
  for (size_t j = 0; j < blocks_.size(); ++j) {
    if (blocks_[j].empty())
      throw ModelError("empty block at index " + std::to_string(j));
    for (Vertex v : blocks_[j]) {
      if (v < 0 || v >= n)
        throw ModelError("block vertex out of range: " + std::to_string(v));
      if (block_of_[static_cast<size_t>(v)] != -1)
        throw ModelError("vertex " + std::to_string(v) + " in two blocks");
      block_of_[static_cast<size_t>(v)] = static_cast<int>(j);
      ++covered_;
    }
  }
}

Graph build_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph complement(const Graph& g) {
  Graph c(g.n());
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

VertexSet neighborhood(const Graph& g, Vertex v, bool closed) {
  VertexSet out = g.neighbors(v);
  if (closed) out.insert(v);
  return out;
}

VertexSet neighborhood(const Graph& g, const VertexSet& d, bool closed) {
  VertexSet out;
  for (Vertex v : d) {
    const VertexSet& nv = g.neighbors(v);
    out.insert(nv.begin(), nv.end());
    if (closed) out.insert(v);
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  InducedSubgraph out;
  std::map<Vertex, Vertex> new_id;
  for (Vertex v : s) {
    g.check_vertex(v);
    new_id[v] = static_cast<Vertex>(out.original_id.size());
    out.original_id.push_back(v);
  }
  out.graph = Graph(static_cast<int>(s.size()));
  for (Vertex u : s)
    for (Vertex v : g.neighbors(u))
      if (u < v && s.count(v)) out.graph.add_edge(new_id[u], new_id[v]);
  return out;
}

Graph partition_graph(const Partition& p, int n) {
  if (!p.is_full())
    throw ModelError("partition graph requires a full partition");
  Graph h(n);
  for (const VertexSet& blk : p.blocks())
    for (Vertex u : blk)
      for (Vertex v : blk)
        if (u < v) h.add_edge(u, v);
  return h;
}

}  // namespace inddom
