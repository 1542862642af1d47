#pragma once

#include <string>
#include <vector>

#include "inddom/rational.hpp"

namespace inddom {

enum class Sense { Max, Min };
enum class Relation { LE, EQ, GE };

struct LPRow {
  RationalVector coeffs;
  Relation rel = Relation::LE;
  Rational rhs;
};

// max/min c'x subject to the rows, x >= 0. All data exact rationals.
struct LPModel {
  Sense sense = Sense::Max;
  RationalVector objective;
  std::vector<LPRow> rows;

  int num_vars() const { return static_cast<int>(objective.size()); }
  void add_row(RationalVector coeffs, Relation rel, Rational rhs) {
    rows.push_back({std::move(coeffs), rel, std::move(rhs)});
  }
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPOutcome {
  LPStatus status = LPStatus::Infeasible;
  Rational value;
  RationalVector primal;
  RationalVector dual;  // one entry per constraint row
};

// Two-phase primal simplex on the dense tableau, Bland's anti-cycling rule,
// fixed variable order. Deterministic: identical models give identical
// outcomes, including the dual.
LPOutcome simplex_solve(const LPModel& model);

// Re-checks an Optimal outcome from scratch: primal feasibility, dual
// feasibility, equal objective values, complementary slackness. Returns the
// violated conditions; empty means the pair is a valid optimality certificate.
std::vector<std::string> check_strong_duality(const LPModel& model,
                                              const LPOutcome& out);

}  // namespace inddom
