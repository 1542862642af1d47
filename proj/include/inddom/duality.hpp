#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "inddom/graph.hpp"
#include "inddom/params.hpp"

namespace inddom {

// Witness for alpha^w >= gamma^w on a single graph: a w-dominating function
// f and an independent set I with w[I] >= |f|, built by the left-to-right
// greedy pass and the reverse extraction sweep.
struct GreedyCertificate {
  std::vector<long> f;
  VertexSet independent;
  std::vector<Vertex> order;

  long f_size() const {
    long s = 0;
    for (long x : f) s += x;
    return s;
  }
};

GreedyCertificate greedy_alpha_ge_gamma(
    const Graph& g, const WeightVector& w,
    const std::optional<std::vector<Vertex>>& order = std::nullopt);

// Convex decomposition of a box-constrained vector into partial-transversal
// indicators: coefficients sum to 1 and reproduce the input exactly.
struct ConvexDecomposition {
  std::vector<std::pair<Rational, VertexSet>> terms;
};

ConvexDecomposition decompose_box_product(const Partition& p,
                                          const RationalVector& x);

// Mass assignment over independent-set columns.
using ColumnMass = std::map<VertexSet, Rational>;

// Rescales a feasible column mass to total exactly 1 while preserving the
// objective value and every block-row activity.
ColumnMass normalize_unit_mass(const ColumnMass& x, const WeightVector& w);

struct InternalCheckFailed : std::runtime_error {
  std::string step;
  InternalCheckFailed(std::string step_, const std::string& detail)
      : std::runtime_error("internal check failed at " + step_ + ": " + detail),
        step(std::move(step_)) {}
};

// Integral pair (g on blocks, h on vertices) with g(j(v)) + h[N(v)] >= w(v)
// for every vertex and |g| + |h| <= nu*^w(G, V). The audit record makes the
// dual-rounding run replayable.
struct DominationCertificate {
  std::vector<long> g;
  std::vector<long> h;
  Rational bound;  // nu*^w value the certificate is measured against

  struct Audit {
    RationalVector y;  // y_0 first, then y_1..y_m
    std::vector<long> floor_y;
    std::vector<long> wg;
    std::vector<Vertex> v_prime;
    VertexSet i0;
    Rational lp_value;
    Rational reduced_lp_value;
  } audit;
};

DominationCertificate build_domination_certificate(
    const Graph& g, const Partition& p, const WeightVector& w,
    std::uint64_t cap = kDefaultColumnCap);

// Independent re-check of a certificate against an instance; trusts nothing
// from the solver. Empty report means valid.
std::vector<std::string> verify_certificate(const Graph& g, const Partition& p,
                                            const WeightVector& w,
                                            const DominationCertificate& cert,
                                            const Rational& bound);

std::string certificate_to_json(const DominationCertificate& cert);
DominationCertificate certificate_from_json(const std::string& text);

}  // namespace inddom
