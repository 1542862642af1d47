#include "inddom/params.hpp"

#include <algorithm>
#include <stdexcept>

namespace inddom {

namespace {

struct CheckFailure : std::logic_error {
  using std::logic_error::logic_error;
};

void require(bool ok, const char* what) {
  if (!ok) throw CheckFailure(std::string("witness validation failed: ") + what);
}

std::vector<std::vector<int>> neighborhood_matrix(const Graph& g, bool closed) {
  std::vector<std::vector<int>> rows(
      static_cast<size_t>(g.n()), std::vector<int>(static_cast<size_t>(g.n()), 0));
  for (Vertex v = 0; v < g.n(); ++v) {
    for (Vertex u : g.neighbors(v)) rows[static_cast<size_t>(v)][static_cast<size_t>(u)] = 1;
    if (closed) rows[static_cast<size_t>(v)][static_cast<size_t>(v)] = 1;
  }
  return rows;
}

long apply_row(const std::vector<int>& row, const std::vector<long>& f) {
  long s = 0;
  for (size_t j = 0; j < row.size(); ++j) s += row[j] * f[j];
  return s;
}

ParamResult cover_param(const std::vector<std::vector<int>>& rows,
                        const std::vector<long>& demands,
                        const RationalVector& costs = {}) {
  CoverResult cr = integer_cover_min(rows, demands, costs);
  ParamResult res;
  if (!cr.feasible) {
    res.feasible = false;
    return res;
  }
  res.value = cr.value;
  for (size_t i = 0; i < rows.size(); ++i)
    require(apply_row(rows[i], cr.solution) >= demands[i], "cover demand");
  res.witness_f = cr.solution;
  LPOutcome relax = cover_lp_relaxation(rows, demands, costs);
  if (relax.status == LPStatus::Optimal && relax.value != res.value)
    res.relaxed_value = relax.value;
  return res;
}

}  // namespace

ParamResult alpha_w(const Graph& g, const WeightVector& w) {
  MwisResult mw = max_weight_independent_set(g, w);
  require(is_independent(g, mw.set), "alpha witness independent");
  require(w.total(mw.set) == mw.value, "alpha witness value");
  ParamResult res;
  res.value = mw.value;
  res.witness_set = mw.set;
  return res;
}

ParamResult gamma_w(const Graph& g, const WeightVector& w) {
  if (w.size() != g.n()) throw ModelError("weight vector length mismatch");
  return cover_param(neighborhood_matrix(g, /*closed=*/true), w.w);
}

ParamResult gamma_tilde(const Graph& g) {
  return cover_param(neighborhood_matrix(g, /*closed=*/false),
                     std::vector<long>(static_cast<size_t>(g.n()), 1));
}

ParamResult alpha_cap_w(const Graph& g, const Graph& h, const WeightVector& w,
                        std::uint64_t cap) {
  if (g.n() != h.n()) throw ModelError("graphs must share a vertex set");
  // Enumerate one family, membership-test in the other graph.
  IndependentFamily fam = enumerate_independent_sets(g, cap);
  ParamResult res;
  res.value = 0;
  res.witness_set = VertexSet{};
  for (const VertexSet& s : fam) {
    if (!is_independent(h, s)) continue;
    long v = w.total(s);
    if (Rational(v) > res.value) {
      res.value = v;
      res.witness_set = s;
    }
  }
  require(is_independent(g, *res.witness_set) && is_independent(h, *res.witness_set),
          "joint witness independent");
  return res;
}

ParamResult alpha_cap_star_w(const Graph& g, const Graph& h,
                             const WeightVector& w, std::uint64_t cap) {
  if (g.n() != h.n()) throw ModelError("graphs must share a vertex set");
  const int n = g.n();
  IndependentFamily fg = enumerate_independent_sets(g, cap);
  IndependentFamily fh = enumerate_independent_sets(h, cap);
  const int a = static_cast<int>(fg.size());
  const int b = static_cast<int>(fh.size());
  // Variables: lambda_I (columns of g), mu_J (columns of h), x_v.
  const int vars = a + b + n;
  LPModel model;
  model.sense = Sense::Max;
  model.objective.assign(static_cast<size_t>(vars), Rational(0));
  for (Vertex v = 0; v < n; ++v)
    model.objective[static_cast<size_t>(a + b + v)] = w[v];

  RationalVector row(static_cast<size_t>(vars), Rational(0));
  for (int i = 0; i < a; ++i) row[static_cast<size_t>(i)] = 1;
  model.add_row(row, Relation::EQ, Rational(1));
  std::fill(row.begin(), row.end(), Rational(0));
  for (int j = 0; j < b; ++j) row[static_cast<size_t>(a + j)] = 1;
  model.add_row(row, Relation::EQ, Rational(1));
  for (Vertex v = 0; v < n; ++v) {
    std::fill(row.begin(), row.end(), Rational(0));
    for (int i = 0; i < a; ++i)
      if (fg[static_cast<size_t>(i)].count(v)) row[static_cast<size_t>(i)] = 1;
    row[static_cast<size_t>(a + b + v)] = -1;
    model.add_row(row, Relation::EQ, Rational(0));
    std::fill(row.begin(), row.end(), Rational(0));
    for (int j = 0; j < b; ++j)
      if (fh[static_cast<size_t>(j)].count(v)) row[static_cast<size_t>(a + j)] = 1;
    row[static_cast<size_t>(a + b + v)] = -1;
    model.add_row(row, Relation::EQ, Rational(0));
  }

  LPOutcome out = simplex_solve(model);
  require(out.status == LPStatus::Optimal, "joint polytope LP optimal");
  require(check_strong_duality(model, out).empty(), "joint polytope LP certificate");
  ParamResult res;
  res.value = out.value;
  RationalVector x(static_cast<size_t>(n));
  for (Vertex v = 0; v < n; ++v)
    x[static_cast<size_t>(v)] = out.primal[static_cast<size_t>(a + b + v)];
  res.witness_vertex_vector = std::move(x);
  return res;
}

ParamResult gamma_cup_w(const Graph& g, const Graph& h, const WeightVector& w) {
  if (g.n() != h.n()) throw ModelError("graphs must share a vertex set");
  const int n = g.n();
  auto ng = neighborhood_matrix(g, true);
  auto nh = neighborhood_matrix(h, true);
  std::vector<std::vector<int>> rows(static_cast<size_t>(n),
                                     std::vector<int>(static_cast<size_t>(2 * n), 0));
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u = 0; u < n; ++u) {
      rows[static_cast<size_t>(v)][static_cast<size_t>(u)] = ng[static_cast<size_t>(v)][static_cast<size_t>(u)];
      rows[static_cast<size_t>(v)][static_cast<size_t>(n + u)] = nh[static_cast<size_t>(v)][static_cast<size_t>(u)];
    }
  ParamResult res = cover_param(rows, w.w);
  if (res.feasible && res.witness_f) {
    std::vector<long> f1(res.witness_f->begin(), res.witness_f->begin() + n);
    std::vector<long> f2(res.witness_f->begin() + n, res.witness_f->end());
    res.witness_pair = {std::move(f1), std::move(f2)};
    res.witness_f.reset();
  }
  return res;
}

namespace {

bool partial_transversal_ok(const Partition& p, const VertexSet& s) {
  std::vector<int> hits(static_cast<size_t>(p.block_count()), 0);
  for (Vertex v : s) {
    int j = p.block_of(v);
    if (j < 0 || ++hits[static_cast<size_t>(j)] > 1) return false;
  }
  return true;
}

}  // namespace

ParamResult nu_w(const Graph& g, const Partition& p, const WeightVector& w,
                 std::uint64_t cap) {
  if (!p.is_full()) throw ModelError("full partition required");
  IndependentFamily fam = enumerate_independent_sets(g, cap);
  ParamResult res;
  res.value = 0;
  res.witness_set = VertexSet{};
  for (const VertexSet& s : fam) {
    if (!partial_transversal_ok(p, s)) continue;
    long v = w.total(s);
    if (Rational(v) > res.value) {
      res.value = v;
      res.witness_set = s;
    }
  }
  require(is_independent(g, *res.witness_set), "partial IT independent");
  require(partial_transversal_ok(p, *res.witness_set), "partial IT block hits");
  return res;
}

NuStarData nu_star_w_full(const Graph& g, const Partition& p,
                          const WeightVector& w, std::uint64_t cap) {
  if (!p.is_full()) throw ModelError("full partition required");
  NuStarData data;
  data.family = enumerate_independent_sets(g, cap);
  const int cols = static_cast<int>(data.family.size());
  const int m = p.block_count();

  LPModel& model = data.model;
  model.sense = Sense::Max;
  model.objective.resize(static_cast<size_t>(cols));
  for (int i = 0; i < cols; ++i)
    model.objective[static_cast<size_t>(i)] =
        w.total(data.family[static_cast<size_t>(i)]);
  for (int j = 0; j < m; ++j) {
    RationalVector row(static_cast<size_t>(cols), Rational(0));
    for (int i = 0; i < cols; ++i) {
      int hits = 0;
      for (Vertex v : data.family[static_cast<size_t>(i)])
        if (p.block_of(v) == j) ++hits;
      if (hits) row[static_cast<size_t>(i)] = hits;
    }
    model.add_row(std::move(row), Relation::LE, Rational(1));
  }
  model.add_row(RationalVector(static_cast<size_t>(cols), Rational(1)),
                Relation::LE, Rational(1));  // unit-mass row, dual y_0

  data.outcome = simplex_solve(model);
  require(data.outcome.status == LPStatus::Optimal, "nu* LP optimal");
  require(check_strong_duality(model, data.outcome).empty(), "nu* LP certificate");

  // Convex-combination form: identical program with the mass row an equality.
  LPModel eq1 = model;
  eq1.rows.back().rel = Relation::EQ;
  LPOutcome eq1_out = simplex_solve(eq1);
  require(eq1_out.status == LPStatus::Optimal, "nu* convex form optimal");
  data.eq1_value = eq1_out.value;
  return data;
}

ParamResult nu_star_w(const Graph& g, const Partition& p,
                      const WeightVector& w, std::uint64_t cap) {
  NuStarData data = nu_star_w_full(g, p, w, cap);
  ParamResult res;
  res.value = data.value();
  RationalVector x(static_cast<size_t>(g.n()), Rational(0));
  for (size_t i = 0; i < data.family.size(); ++i)
    for (Vertex v : data.family[i])
      x[static_cast<size_t>(v)] += data.outcome.primal[i];
  res.witness_vertex_vector = std::move(x);
  return res;
}

namespace {

// Rows of the collective-domination covering program for (G, partition):
// row v has the m block columns (1 at j(v)) then the n vertex columns
// (closed neighborhood of v).
std::vector<std::vector<int>> partition_cover_rows(const Graph& g,
                                                   const Partition& p) {
  const int n = g.n();
  const int m = p.block_count();
  auto nb = neighborhood_matrix(g, true);
  std::vector<std::vector<int>> rows(
      static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(m + n), 0));
  for (Vertex v = 0; v < n; ++v) {
    rows[static_cast<size_t>(v)][static_cast<size_t>(p.block_of(v))] = 1;
    for (Vertex u = 0; u < n; ++u)
      rows[static_cast<size_t>(v)][static_cast<size_t>(m + u)] =
          nb[static_cast<size_t>(v)][static_cast<size_t>(u)];
  }
  return rows;
}

ParamResult partition_cover_param(const Graph& g, const Partition& p,
                                  const WeightVector& w,
                                  const Rational& vertex_cost) {
  if (!p.is_full()) throw ModelError("full partition required");
  if (w.size() != g.n()) throw ModelError("weight vector length mismatch");
  const int m = p.block_count();
  RationalVector costs(static_cast<size_t>(m + g.n()), Rational(1));
  for (int j = 0; j < g.n(); ++j)
    costs[static_cast<size_t>(m + j)] = vertex_cost;
  ParamResult res = cover_param(partition_cover_rows(g, p), w.w, costs);
  if (res.feasible && res.witness_f) {
    std::vector<long> gb(res.witness_f->begin(), res.witness_f->begin() + m);
    std::vector<long> fv(res.witness_f->begin() + m, res.witness_f->end());
    res.witness_pair = {std::move(gb), std::move(fv)};
    res.witness_f.reset();
  }
  return res;
}

}  // namespace

ParamResult gamma_w_partition(const Graph& g, const Partition& p,
                              const WeightVector& w) {
  return partition_cover_param(g, p, w, Rational(1));
}

ParamResult tau_w(const Graph& g, const Partition& p, const WeightVector& w) {
  return partition_cover_param(g, p, w, Rational(1, 2));
}

namespace {

bool it_exists(const Graph& g, const Partition& p, size_t j, VertexSet& chosen) {
  if (j == static_cast<size_t>(p.block_count())) return true;
  for (Vertex v : p.block(static_cast<int>(j))) {
    bool ok = true;
    for (Vertex u : g.neighbors(v))
      if (chosen.count(u)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    chosen.insert(v);
    if (it_exists(g, p, j + 1, chosen)) return true;
    chosen.erase(v);
  }
  return false;
}

}  // namespace

TheoremConditionReport check_theorem_conditions(const Graph& g,
                                                const Partition& p,
                                                std::uint64_t cap) {
  if (!p.is_full()) throw ModelError("full partition required");
  const int m = p.block_count();
  if (m > 20) throw ModelError("too many blocks for subset enumeration");
  TheoremConditionReport rep;

  std::optional<Rational> best_total_slack, best_dom_slack;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    VertexSet vs;
    std::vector<int> subset;
    for (int j = 0; j < m; ++j)
      if (mask & (1u << j)) {
        subset.push_back(j);
        vs.insert(p.block(j).begin(), p.block(j).end());
      }
    const long k = static_cast<long>(subset.size());
    InducedSubgraph sub = induced_subgraph(g, vs);

    ParamResult gt = gamma_tilde(sub.graph);
    if (gt.feasible) {
      Rational slack = gt.value - Rational(2 * k - 1);
      if (slack < 0) rep.total_domination_hypothesis = false;
      if (!best_total_slack || slack < *best_total_slack) {
        best_total_slack = slack;
        rep.tightest_total = subset;
      }
    }
    ParamResult ga = gamma_w(sub.graph, WeightVector::ones(sub.graph.n()));
    Rational slack = ga.value - Rational(k);
    if (slack < 0) rep.domination_hypothesis = false;
    if (!best_dom_slack || slack < *best_dom_slack) {
      best_dom_slack = slack;
      rep.tightest_domination = subset;
    }
  }

  VertexSet chosen;
  rep.it_exists = it_exists(g, p, 0, chosen);
  NuStarData ns = nu_star_w_full(g, p, WeightVector::ones(g.n()), cap);
  rep.fractional_it_exists = ns.value() == Rational(m);
  return rep;
}

}  // namespace inddom
