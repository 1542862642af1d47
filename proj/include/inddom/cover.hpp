#pragma once

#include <vector>

#include "inddom/lp.hpp"

namespace inddom {

// min sum_j cost_j * f_j over integer f >= 0 with rows * f >= demands,
// entries of rows in {0,1}. Costs default to all ones.
struct CoverResult {
  bool feasible = false;
  Rational value;
  std::vector<long> solution;
};

CoverResult integer_cover_min(const std::vector<std::vector<int>>& rows,
                              const std::vector<long>& demands,
                              const RationalVector& costs = {});

// LP relaxation value of the same program (used when reporting the gap
// between the integral and relaxed readings).
LPOutcome cover_lp_relaxation(const std::vector<std::vector<int>>& rows,
                              const std::vector<long>& demands,
                              const RationalVector& costs = {});

}  // namespace inddom
