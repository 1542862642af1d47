#pragma once

#include <optional>
#include <utility>

#include "inddom/cover.hpp"
#include "inddom/graph.hpp"
#include "inddom/indep.hpp"
#include "inddom/lp.hpp"

namespace inddom {

// Result of a parameter computation. The witness field matching the
// parameter kind is set; witnesses are revalidated on construction, so a
// returned result is always self-consistent.
struct ParamResult {
  bool feasible = true;
  Rational value;
  std::optional<VertexSet> witness_set;
  std::optional<RationalVector> witness_vertex_vector;
  std::optional<std::vector<long>> witness_f;
  // (function on blocks / first graph, function on vertices / second graph)
  std::optional<std::pair<std::vector<long>, std::vector<long>>> witness_pair;
  // Set when the real-relaxed reading of a covering parameter differs from
  // the integral one.
  std::optional<Rational> relaxed_value;
};

ParamResult alpha_w(const Graph& g, const WeightVector& w);

// Weighted domination: min |f| with f[N(v)] >= w(v) for every v.
ParamResult gamma_w(const Graph& g, const WeightVector& w);
// Total domination (open neighborhoods), unit weights. Infeasible when the
// graph has an isolated vertex.
ParamResult gamma_tilde(const Graph& g);

ParamResult alpha_cap_w(const Graph& g, const Graph& h, const WeightVector& w,
                        std::uint64_t cap = kDefaultColumnCap);
ParamResult alpha_cap_star_w(const Graph& g, const Graph& h,
                             const WeightVector& w,
                             std::uint64_t cap = kDefaultColumnCap);
ParamResult gamma_cup_w(const Graph& g, const Graph& h, const WeightVector& w);

ParamResult nu_w(const Graph& g, const Partition& p, const WeightVector& w,
                 std::uint64_t cap = kDefaultColumnCap);

// Everything the fractional partial-IT linear program produces: the column
// family, the model (block rows first, unit-mass row last), the outcome with
// its dual, and the value of the convex-combination form (mass row forced to
// equality) for the equality cross-check.
struct NuStarData {
  IndependentFamily family;
  LPModel model;
  LPOutcome outcome;
  Rational eq1_value;

  Rational value() const { return outcome.value; }
  int block_rows() const { return static_cast<int>(model.rows.size()) - 1; }
  // y_0 is the dual of the mass row; y_1..y_m the block rows.
  Rational y0() const { return outcome.dual.back(); }
  Rational yj(int j) const { return outcome.dual[static_cast<size_t>(j)]; }
};

NuStarData nu_star_w_full(const Graph& g, const Partition& p,
                          const WeightVector& w,
                          std::uint64_t cap = kDefaultColumnCap);
ParamResult nu_star_w(const Graph& g, const Partition& p,
                      const WeightVector& w,
                      std::uint64_t cap = kDefaultColumnCap);

ParamResult gamma_w_partition(const Graph& g, const Partition& p,
                              const WeightVector& w);
ParamResult tau_w(const Graph& g, const Partition& p, const WeightVector& w);

struct SubsetCondition {
  std::vector<int> subset;  // block indices
  Rational gamma;           // +inf modelled by feasible=false
  bool gamma_feasible = true;
  Rational gamma_tilde;
  bool gamma_tilde_feasible = true;
};

// Hypothesis checks over every subset of blocks, plus existence oracles for
// integral and fractional ITs.
struct TheoremConditionReport {
  bool total_domination_hypothesis = true;  // gt(G[V_I]) >= 2|I|-1 for all I
  bool domination_hypothesis = true;        // g(G[V_I]) >= |I| for all I
  std::vector<int> tightest_total;
  std::vector<int> tightest_domination;
  bool it_exists = false;
  bool fractional_it_exists = false;
};

TheoremConditionReport check_theorem_conditions(
    const Graph& g, const Partition& p,
    std::uint64_t cap = kDefaultColumnCap);

}  // namespace inddom
