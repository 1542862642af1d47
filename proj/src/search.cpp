#include "inddom/search.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <json.hpp>

#include "inddom/duality.hpp"
#include "inddom/params.hpp"

namespace inddom {

namespace {

// splitmix64; platform-independent so reports are stable everywhere.
struct Rng {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
};

std::vector<std::uint64_t> bell_numbers(int n) {
  // Bell triangle
  std::vector<std::uint64_t> bell{1};
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t x : row) next.push_back(next.back() + x);
    row = std::move(next);
    bell.push_back(row.front());
  }
  return bell;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// Uniform set partition of `items` by the Bell-number recursion: the block
// of the first element gets k-1 companions with probability proportional to
// C(n-1, k-1) * B(n-k).
void random_set_partition(Rng& rng, std::vector<Vertex> items,
                          const std::vector<std::uint64_t>& bell,
                          std::vector<VertexSet>& out) {
  if (items.empty()) return;
  const int n = static_cast<int>(items.size());
  std::uint64_t roll = rng.below(bell[static_cast<size_t>(n)]);
  int k = 1;
  for (; k <= n; ++k) {
    std::uint64_t weight =
        binomial(n - 1, k - 1) * bell[static_cast<size_t>(n - k)];
    if (roll < weight) break;
    roll -= weight;
  }
  // choose k-1 companions from items[1..]
  std::vector<Vertex> rest(items.begin() + 1, items.end());
  VertexSet block{items.front()};
  for (int c = 0; c < k - 1; ++c) {
    size_t at = rng.below(rest.size());
    block.insert(rest[at]);
    rest.erase(rest.begin() + static_cast<long>(at));
  }
  out.push_back(std::move(block));
  random_set_partition(rng, std::move(rest), bell, out);
}

Graph random_graph(Rng& rng, int n, long pnum, long pden) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (static_cast<long>(rng.below(static_cast<std::uint64_t>(pden))) < pnum)
        g.add_edge(u, v);
  return g;
}

struct InstanceOutcome {
  std::vector<Violation> violations;
  std::map<std::string, long> tallies;

  void check(long index, const std::string& name, const Rational& lhs,
             const Rational& rhs, const Instance& inst) {
    if (lhs >= rhs) {
      ++tallies[name];
      return;
    }
    Violation v;
    v.index = index;
    v.inequality = name;
    v.lhs = rat_to_string(lhs);
    v.rhs = rat_to_string(rhs);
    v.instance_json = instance_to_json(inst);
    violations.push_back(std::move(v));
  }
};

bool is_partition_graph(const Graph& g) {
  // disjoint union of cliques: adjacency is transitive
  for (Vertex v = 0; v < g.n(); ++v)
    for (Vertex u : g.neighbors(v))
      for (Vertex t : g.neighbors(u))
        if (t != v && !g.has_edge(v, t)) return false;
  return true;
}

InstanceOutcome evaluate_instance(long index, const Instance& inst,
                                  const SearchConfig& config) {
  InstanceOutcome out;
  const Graph& g = inst.graph;
  const WeightVector& w = inst.weights;

  if (config.mode == SearchMode::Pair) {
    const Graph& h = *inst.second_graph;
    ParamResult lhs = alpha_cap_star_w(g, h, w, config.cap);
    ParamResult rhs = gamma_cup_w(g, h, w);
    out.check(index, "conjecture8", lhs.value, rhs.value, inst);
    WeightVector ones = WeightVector::ones(g.n());
    ParamResult lhs1 = alpha_cap_star_w(g, h, ones, config.cap);
    ParamResult rhs1 = gamma_cup_w(g, h, ones);
    out.check(index, "theorem3", lhs1.value, rhs1.value, inst);
    if (is_partition_graph(g) && is_partition_graph(h)) {
      ParamResult ac = alpha_cap_w(g, h, ones, config.cap);
      if (ac.value == rhs1.value)
        ++out.tallies["theorem2"];
      else {
        Violation v;
        v.index = index;
        v.inequality = "theorem2";
        v.lhs = rat_to_string(ac.value);
        v.rhs = rat_to_string(rhs1.value);
        v.instance_json = instance_to_json(inst);
        out.violations.push_back(std::move(v));
      }
    }
  } else {
    const Partition& p = *inst.partition;
    NuStarData ns = nu_star_w_full(g, p, w, config.cap);
    ParamResult gp = gamma_w_partition(g, p, w);
    out.check(index, "theorem13", ns.value(), gp.value, inst);
    DominationCertificate cert = build_domination_certificate(g, p, w, config.cap);
    if (verify_certificate(g, p, w, cert, ns.value()).empty())
      ++out.tallies["theorem13_certificate"];
    ParamResult nu = nu_w(g, p, w, config.cap);
    ParamResult tau = tau_w(g, p, w);
    out.check(index, "theorem10", nu.value, tau.value, inst);
    GreedyCertificate greedy = greedy_alpha_ge_gamma(g, w);
    ParamResult aw = alpha_w(g, w);
    ParamResult gw = gamma_w(g, w);
    if (gw.value <= Rational(greedy.f_size()) &&
        Rational(greedy.f_size()) <= Rational(w.total(greedy.independent)) &&
        Rational(w.total(greedy.independent)) <= aw.value)
      ++out.tallies["lemma9"];
    else
      out.check(index, "lemma9", aw.value, gw.value, inst);
  }
  return out;
}

}  // namespace

Instance random_instance(std::uint64_t seed, long index,
                         const SearchConfig& config) {
  // one independent stream per (seed, index)
  Rng rng{seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(index) + 1};
  rng.next();
  const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(config.max_n)));

  Instance inst;
  inst.graph = random_graph(rng, n, config.edge_prob_num, config.edge_prob_den);
  if (config.mode == SearchMode::Pair) {
    inst.second_graph =
        random_graph(rng, n, config.edge_prob_num, config.edge_prob_den);
  } else {
    // Bell numbers fit in 64 bits through n = 24; max_n is far below that.
    static const std::vector<std::uint64_t> bell = bell_numbers(20);
    std::vector<Vertex> items(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) items[static_cast<size_t>(i)] = i;
    std::vector<VertexSet> blocks;
    random_set_partition(rng, std::move(items), bell, blocks);
    inst.partition = Partition(std::move(blocks), n);
  }
  std::vector<long> w(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    w[static_cast<size_t>(i)] = static_cast<long>(
        rng.below(static_cast<std::uint64_t>(config.max_weight) + 1));
  inst.weights = WeightVector(std::move(w));
  return inst;
}

namespace {

SearchReport assemble(const SearchConfig& config,
                      std::vector<InstanceOutcome>& results) {
  SearchReport rep;
  rep.tested = config.count;
  for (InstanceOutcome& r : results) {
    for (auto& [k, v] : r.tallies) rep.tallies[k] += v;
    for (Violation& v : r.violations) rep.violations.push_back(std::move(v));
  }
  return rep;
}

}  // namespace

SearchReport run_search_serial(const SearchConfig& config) {
  std::vector<InstanceOutcome> results(static_cast<size_t>(config.count));
  for (long i = 0; i < config.count; ++i)
    results[static_cast<size_t>(i)] =
        evaluate_instance(i, random_instance(config.seed, i, config), config);
  return assemble(config, results);
}

SearchReport run_search_parallel(const SearchConfig& config) {
  std::vector<InstanceOutcome> results(static_cast<size_t>(config.count));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long i = 0; i < config.count; ++i)
    results[static_cast<size_t>(i)] =
        evaluate_instance(i, random_instance(config.seed, i, config), config);
  return assemble(config, results);
}

std::string SearchReport::to_json() const {
  nlohmann::json j;
  j["tested"] = tested;
  nlohmann::json viols = nlohmann::json::array();
  for (const Violation& v : violations) {
    nlohmann::json jv;
    jv["index"] = v.index;
    jv["inequality"] = v.inequality;
    jv["lhs"] = v.lhs;
    jv["rhs"] = v.rhs;
    jv["instance"] = nlohmann::json::parse(v.instance_json);
    viols.push_back(jv);
  }
  j["violations"] = viols;
  j["tallies"] = tallies;
  return j.dump();
}

}  // namespace inddom
