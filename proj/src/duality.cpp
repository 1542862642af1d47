#include "inddom/duality.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <json.hpp>

#include "inddom/indep.hpp"
#include "inddom/instance.hpp"

namespace inddom {

GreedyCertificate greedy_alpha_ge_gamma(
    const Graph& g, const WeightVector& w,
    const std::optional<std::vector<Vertex>>& order) {
  const int n = g.n();
  if (w.size() != n) throw ModelError("weight vector length mismatch");
  GreedyCertificate cert;
  if (order) {
    if (static_cast<int>(order->size()) != n)
      throw ModelError("order must be a permutation of the vertices");
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (Vertex v : *order) {
      g.check_vertex(v);
      if (seen[static_cast<size_t>(v)])
        throw ModelError("order must be a permutation of the vertices");
      seen[static_cast<size_t>(v)] = true;
    }
    cert.order = *order;
  } else {
    cert.order.resize(static_cast<size_t>(n));
    std::iota(cert.order.begin(), cert.order.end(), 0);
  }

  // Left-to-right pass: each vertex receives what its earlier neighborhood
  // still owes it.
  std::vector<int> pos(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<size_t>(cert.order[static_cast<size_t>(i)])] = i;
  cert.f.assign(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    Vertex v = cert.order[static_cast<size_t>(i)];
    long covered = 0;
    for (Vertex u : g.neighbors(v))
      if (pos[static_cast<size_t>(u)] < i) covered += cert.f[static_cast<size_t>(u)];
    cert.f[static_cast<size_t>(v)] = std::max(0L, w[v] - covered);
  }

  // Reverse sweep over the support: repeatedly take the latest vertex and
  // delete its closed neighborhood.
  VertexSet live;
  for (Vertex v = 0; v < n; ++v)
    if (cert.f[static_cast<size_t>(v)] > 0) live.insert(v);
  while (!live.empty()) {
    Vertex latest = *live.begin();
    for (Vertex v : live)
      if (pos[static_cast<size_t>(v)] > pos[static_cast<size_t>(latest)]) latest = v;
    cert.independent.insert(latest);
    live.erase(latest);
    for (Vertex u : g.neighbors(latest)) live.erase(u);
  }

  // Certificate invariants.
  for (Vertex v = 0; v < n; ++v) {
    long got = cert.f[static_cast<size_t>(v)];
    for (Vertex u : g.neighbors(v)) got += cert.f[static_cast<size_t>(u)];
    if (got < w[v])
      throw InternalCheckFailed("greedy", "f not w-dominating at vertex " +
                                              std::to_string(v));
  }
  if (!is_independent(g, cert.independent))
    throw InternalCheckFailed("greedy", "extracted set not independent");
  if (w.total(cert.independent) < cert.f_size())
    throw InternalCheckFailed("greedy", "w[I] < |f|");
  return cert;
}

ConvexDecomposition decompose_box_product(const Partition& p,
                                          const RationalVector& x) {
  for (const Rational& xi : x)
    if (xi < 0) throw ModelError("negative entry in decomposition input");

  // Interval layout per block: vertices in id order occupy consecutive
  // subintervals of [0,1), the remainder maps to "no vertex".
  struct Layout {
    std::vector<Rational> starts;  // starts[i] .. starts[i+1] owned by verts[i]
    std::vector<Vertex> verts;
  };
  std::vector<Layout> layouts;
  std::set<Rational> breakpoints{Rational(0), Rational(1)};
  for (int j = 0; j < p.block_count(); ++j) {
    Layout lay;
    Rational c(0);
    for (Vertex v : p.block(j)) {
      const Rational& xv = x.at(static_cast<size_t>(v));
      if (xv == 0) continue;
      lay.starts.push_back(c);
      lay.verts.push_back(v);
      c += xv;
      breakpoints.insert(c);
    }
    if (c > 1)
      throw ModelError("block " + std::to_string(j) + " mass exceeds 1");
    lay.starts.push_back(c);  // end of the owned range
    layouts.push_back(std::move(lay));
  }

  std::map<VertexSet, Rational> merged;
  auto it = breakpoints.begin();
  Rational lo = *it;
  for (++it; it != breakpoints.end(); ++it) {
    const Rational& hi = *it;
    VertexSet tr;
    for (const Layout& lay : layouts) {
      for (size_t i = 0; i + 1 <= lay.verts.size(); ++i)
        if (lay.starts[i] <= lo && lo < lay.starts[i + 1]) {
          tr.insert(lay.verts[i]);
          break;
        }
    }
    merged[tr] += hi - lo;
    lo = hi;
  }

  ConvexDecomposition out;
  Rational coeff_sum(0);
  RationalVector rebuilt(x.size(), Rational(0));
  for (auto& [tr, coeff] : merged) {
    if (coeff == 0) continue;
    out.terms.emplace_back(coeff, tr);
    coeff_sum += coeff;
    for (Vertex v : tr) rebuilt[static_cast<size_t>(v)] += coeff;
  }
  if (coeff_sum != 1)
    throw InternalCheckFailed("decompose", "coefficients do not sum to 1");
  for (size_t v = 0; v < x.size(); ++v)
    if (rebuilt[v] != x[v] && p.block_of(static_cast<Vertex>(v)) >= 0)
      throw InternalCheckFailed("decompose", "reconstruction mismatch at vertex " +
                                                 std::to_string(v));
  return out;
}

ColumnMass normalize_unit_mass(const ColumnMass& x, const WeightVector& w) {
  (void)w;  // value preservation is structural, no weights needed
  ColumnMass out = x;
  for (auto& [col, mass] : out)
    if (mass < 0) throw ModelError("negative column mass");

  auto total = [&out] {
    Rational t(0);
    for (auto& [col, mass] : out) t += mass;
    return t;
  };
  Rational t = total();
  if (t > 1) throw ModelError("column mass exceeds 1");

  while (t < 1) {
    // smallest nonempty support column in canonical order (map order is
    // lexicographic-by-set which refines canonical enough for determinism)
    const VertexSet* pick = nullptr;
    for (auto& [col, mass] : out)
      if (!col.empty() && mass > 0 && !pick) pick = &col;
    if (!pick) {
      out[VertexSet{}] += 1 - t;
      break;
    }
    VertexSet i0 = *pick;
    Vertex v = *i0.begin();
    Rational eps = 1 - t;
    if (i0.size() > 1 && out[i0] < eps) eps = out[i0];
    // split: move eps of I0 into I0\{v} and {v}; objective and block
    // activities are unchanged, total mass grows by eps
    out[i0] -= eps;
    VertexSet rest = i0;
    rest.erase(v);
    out[rest] += eps;
    out[VertexSet{v}] += eps;
    if (out[i0] == 0) out.erase(i0);
    t = total();
  }
  return out;
}

namespace {

long vec_sum(const std::vector<long>& v) {
  long s = 0;
  for (long x : v) s += x;
  return s;
}

}  // namespace

DominationCertificate build_domination_certificate(const Graph& g,
                                                   const Partition& p,
                                                   const WeightVector& w,
                                                   std::uint64_t cap) {
  const int n = g.n();
  const int m = p.block_count();
  NuStarData ns = nu_star_w_full(g, p, w, cap);

  DominationCertificate cert;
  cert.bound = ns.value();
  cert.audit.lp_value = ns.value();
  cert.audit.y.push_back(ns.y0());
  for (int j = 0; j < m; ++j) cert.audit.y.push_back(ns.yj(j));

  // Step 2: round the block duals down.
  cert.g.resize(static_cast<size_t>(m));
  for (int j = 0; j < m; ++j) {
    if (ns.yj(j) < 0)
      throw InternalCheckFailed("dual", "negative block dual y_" + std::to_string(j + 1));
    cert.g[static_cast<size_t>(j)] = rat_floor(ns.yj(j)).get_si();
  }
  cert.audit.floor_y = cert.g;

  // Step 3: residual weight and its support.
  std::vector<long> wg(static_cast<size_t>(n), 0);
  VertexSet v_prime;
  for (Vertex v = 0; v < n; ++v) {
    long r = w[v] - cert.g[static_cast<size_t>(p.block_of(v))];
    wg[static_cast<size_t>(v)] = std::max(0L, r);
    if (wg[static_cast<size_t>(v)] > 0) v_prime.insert(v);
  }
  cert.audit.wg = wg;
  cert.audit.v_prime.assign(v_prime.begin(), v_prime.end());

  // Step 4: the reduced program on G[V'], keeping all block rows.
  InducedSubgraph sub = induced_subgraph(g, v_prime);
  IndependentFamily sub_fam = enumerate_independent_sets(sub.graph, cap);
  IndependentFamily fam;  // in original vertex ids
  for (const VertexSet& s : sub_fam) {
    VertexSet orig;
    for (Vertex v : s) orig.insert(sub.original_id[static_cast<size_t>(v)]);
    fam.push_back(std::move(orig));
  }
  const int cols = static_cast<int>(fam.size());
  WeightVector wgv{std::vector<long>(wg)};

  LPModel reduced;
  reduced.sense = Sense::Max;
  reduced.objective.resize(static_cast<size_t>(cols));
  for (int i = 0; i < cols; ++i)
    reduced.objective[static_cast<size_t>(i)] = wgv.total(fam[static_cast<size_t>(i)]);
  for (int j = 0; j < m; ++j) {
    RationalVector row(static_cast<size_t>(cols), Rational(0));
    for (int i = 0; i < cols; ++i) {
      int hits = 0;
      for (Vertex v : fam[static_cast<size_t>(i)])
        if (p.block_of(v) == j) ++hits;
      if (hits) row[static_cast<size_t>(i)] = hits;
    }
    reduced.add_row(std::move(row), Relation::LE, Rational(1));
  }
  reduced.add_row(RationalVector(static_cast<size_t>(cols), Rational(1)),
                  Relation::LE, Rational(1));
  LPOutcome rout = simplex_solve(reduced);
  if (rout.status != LPStatus::Optimal)
    throw InternalCheckFailed("reduced-lp", "reduced program not optimal");
  if (!check_strong_duality(reduced, rout).empty())
    throw InternalCheckFailed("reduced-lp", "reduced optimality certificate failed");
  cert.audit.reduced_lp_value = rout.value;

  // The rounded dual must solve the reduced dual exactly:
  // y_0 + sum_j {y_j} = nu*^{w_g}(G', V).
  Rational identity = ns.y0();
  for (int j = 0; j < m; ++j) identity += rat_frac(ns.yj(j));
  if (identity != rout.value)
    throw InternalCheckFailed(
        "assertion-2", "y_0 + sum of fractional parts is " +
                           rat_to_string(identity) + ", reduced value is " +
                           rat_to_string(rout.value));

  // Step 5: normalize to unit mass and pick the lightest support column.
  ColumnMass mass;
  for (int i = 0; i < cols; ++i)
    if (rout.primal[static_cast<size_t>(i)] > 0)
      mass[fam[static_cast<size_t>(i)]] = rout.primal[static_cast<size_t>(i)];
  mass = normalize_unit_mass(mass, wgv);

  bool have_i0 = false;
  long i0_weight = 0;
  auto canonical_less = [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  };
  for (auto& [col, cm] : mass) {
    if (cm <= 0) continue;
    long cw = wgv.total(col);
    if (!have_i0 || cw < i0_weight ||
        (cw == i0_weight && canonical_less(col, cert.audit.i0))) {
      have_i0 = true;
      i0_weight = cw;
      cert.audit.i0 = col;
    }
  }
  if (!have_i0) cert.audit.i0.clear();  // empty support: I_0 = empty set

  // Step 6: h carries the residual weight on I_0 only.
  cert.h.assign(static_cast<size_t>(n), 0);
  for (Vertex v : cert.audit.i0) cert.h[static_cast<size_t>(v)] = wg[static_cast<size_t>(v)];

  // Step 7: full verification; a failure here means the implementation is
  // wrong, not the construction.
  for (Vertex v : v_prime) {
    if (cert.audit.i0.count(v)) continue;
    long hn = 0;
    for (Vertex u : g.neighbors(v)) hn += cert.h[static_cast<size_t>(u)];
    if (wg[static_cast<size_t>(v)] > hn)
      throw InternalCheckFailed("assertion-3", "vertex " + std::to_string(v) +
                                                   " under-dominated in the reduced instance");
  }
  auto bad = verify_certificate(g, p, w, cert, cert.bound);
  if (!bad.empty()) throw InternalCheckFailed("final-verify", bad.front());
  return cert;
}

std::vector<std::string> verify_certificate(const Graph& g, const Partition& p,
                                            const WeightVector& w,
                                            const DominationCertificate& cert,
                                            const Rational& bound) {
  std::vector<std::string> bad;
  const int n = g.n();
  if (static_cast<int>(cert.g.size()) != p.block_count() ||
      static_cast<int>(cert.h.size()) != n) {
    bad.push_back("certificate shape mismatch");
    return bad;
  }
  for (long x : cert.g)
    if (x < 0) bad.push_back("negative block value in g");
  for (long x : cert.h)
    if (x < 0) bad.push_back("negative vertex value in h");
  for (Vertex v = 0; v < n; ++v) {
    long lhs = cert.g[static_cast<size_t>(p.block_of(v))] + cert.h[static_cast<size_t>(v)];
    for (Vertex u : g.neighbors(v)) lhs += cert.h[static_cast<size_t>(u)];
    if (lhs < w[v])
      bad.push_back("domination fails at vertex " + std::to_string(v));
  }
  if (Rational(vec_sum(cert.g) + vec_sum(cert.h)) > bound)
    bad.push_back("|g|+|h| exceeds the bound");
  return bad;
}

namespace {
using nlohmann::json;
}

std::string certificate_to_json(const DominationCertificate& cert) {
  json j;
  j["g"] = cert.g;
  j["h"] = cert.h;
  j["bound"] = rat_to_string(cert.bound);
  json audit;
  json y = json::array();
  for (const Rational& r : cert.audit.y) y.push_back(rat_to_string(r));
  audit["y"] = y;
  audit["floor_y"] = cert.audit.floor_y;
  audit["wg"] = cert.audit.wg;
  audit["Vprime"] = cert.audit.v_prime;
  audit["I0"] = std::vector<Vertex>(cert.audit.i0.begin(), cert.audit.i0.end());
  audit["lp_value"] = rat_to_string(cert.audit.lp_value);
  audit["reduced_lp_value"] = rat_to_string(cert.audit.reduced_lp_value);
  j["audit"] = audit;
  return j.dump();
}

DominationCertificate certificate_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid certificate JSON: ") + e.what());
  }
  DominationCertificate cert;
  if (!j.contains("g") || !j["g"].is_array())
    throw ParseError("field \"g\" missing or not an array");
  if (!j.contains("h") || !j["h"].is_array())
    throw ParseError("field \"h\" missing or not an array");
  if (!j.contains("bound") || !j["bound"].is_string())
    throw ParseError("field \"bound\" missing or not a string");
  cert.g = j["g"].get<std::vector<long>>();
  cert.h = j["h"].get<std::vector<long>>();
  cert.bound = rat_from_string(j["bound"].get<std::string>());
  if (j.contains("audit")) {
    const json& a = j["audit"];
    if (a.contains("y"))
      for (const auto& s : a["y"])
        cert.audit.y.push_back(rat_from_string(s.get<std::string>()));
    if (a.contains("floor_y")) cert.audit.floor_y = a["floor_y"].get<std::vector<long>>();
    if (a.contains("wg")) cert.audit.wg = a["wg"].get<std::vector<long>>();
    if (a.contains("Vprime"))
      cert.audit.v_prime = a["Vprime"].get<std::vector<Vertex>>();
    if (a.contains("I0"))
      for (const auto& v : a["I0"]) cert.audit.i0.insert(v.get<Vertex>());
    if (a.contains("lp_value"))
      cert.audit.lp_value = rat_from_string(a["lp_value"].get<std::string>());
    if (a.contains("reduced_lp_value"))
      cert.audit.reduced_lp_value =
          rat_from_string(a["reduced_lp_value"].get<std::string>());
  }
  return cert;
}

}  // namespace inddom
