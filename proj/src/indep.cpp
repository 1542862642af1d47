#include "inddom/indep.hpp"

#include <algorithm>

namespace inddom {

bool is_independent(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    g.check_vertex(v);
    for (Vertex u : g.neighbors(v))
      if (u > v && s.count(u)) return false;
  }
  return true;
}

namespace {

// Canonical order: smaller sets first, lexicographic within a size.
bool canonical_less(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void extend(const Graph& g, Vertex from, VertexSet& current,
            IndependentFamily& out, std::uint64_t cap) {
  if (out.size() >= cap) throw CapExceeded(cap);
  out.push_back(current);
  for (Vertex v = from; v < g.n(); ++v) {
    bool ok = true;
    for (Vertex u : g.neighbors(v))
      if (current.count(u)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    current.insert(v);
    extend(g, v + 1, current, out, cap);
    current.erase(v);
  }
}

}  // namespace

IndependentFamily enumerate_independent_sets(const Graph& g,
                                             std::uint64_t cap) {
  IndependentFamily out;
  VertexSet current;
  extend(g, 0, current, out, cap);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

namespace {

struct MwisSearch {
  const Graph& g;
  const WeightVector& w;
  VertexSet best;
  long best_value = 0;
  VertexSet current;
  long current_value = 0;

  void offer() {
    if (current_value > best_value ||
        (current_value == best_value && canonical_less(current, best))) {
      best = current;
      best_value = current_value;
    }
  }

  void recurse(VertexSet remaining) {
    offer();
    long potential = 0;
    for (Vertex v : remaining)
      if (w[v] > 0) potential += w[v];
    if (current_value + potential < best_value) return;
    if (remaining.empty()) return;

    Vertex pick = -1;
    int best_deg = -1;
    for (Vertex v : remaining) {
      int d = 0;
      for (Vertex u : g.neighbors(v))
        if (remaining.count(u)) ++d;
      if (d > best_deg) {
        best_deg = d;
        pick = v;
      }
    }
    // include first
    VertexSet incl = remaining;
    incl.erase(pick);
    for (Vertex u : g.neighbors(pick)) incl.erase(u);
    current.insert(pick);
    current_value += w[pick];
    recurse(std::move(incl));
    current.erase(pick);
    current_value -= w[pick];

    VertexSet excl = remaining;
    excl.erase(pick);
    recurse(std::move(excl));
  }
};

}  // namespace

MwisResult max_weight_independent_set(const Graph& g, const WeightVector& w) {
  if (w.size() != g.n()) throw ModelError("weight vector length mismatch");
  MwisSearch s{g, w};
  VertexSet all;
  for (Vertex v = 0; v < g.n(); ++v) all.insert(v);
  s.recurse(std::move(all));
  return {s.best, s.best_value};
}

}  // namespace inddom
