#include "inddom/cover.hpp"

#include <cassert>
#include <stdexcept>

namespace inddom {

namespace {

struct Bounds {
  std::vector<long> lo;
  std::vector<long> hi;  // -1 = unbounded
};

LPModel make_model(const std::vector<std::vector<int>>& rows,
                   const std::vector<long>& demands,
                   const RationalVector& costs, const Bounds* bounds) {
  const int m = static_cast<int>(rows.size());
  const int k = m > 0 ? static_cast<int>(rows[0].size()) : 0;
  LPModel model;
  model.sense = Sense::Min;
  model.objective = costs;
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != k)
      throw std::invalid_argument("ragged coverage matrix");
    RationalVector c(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j)
      c[static_cast<size_t>(j)] = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    model.add_row(std::move(c), Relation::GE,
                  Rational(demands[static_cast<size_t>(i)]));
  }
  if (bounds) {
    for (int j = 0; j < k; ++j) {
      RationalVector c(static_cast<size_t>(k), Rational(0));
      c[static_cast<size_t>(j)] = 1;
      if (bounds->lo[static_cast<size_t>(j)] > 0)
        model.add_row(c, Relation::GE, Rational(bounds->lo[static_cast<size_t>(j)]));
      if (bounds->hi[static_cast<size_t>(j)] >= 0)
        model.add_row(c, Relation::LE, Rational(bounds->hi[static_cast<size_t>(j)]));
    }
  }
  return model;
}

struct Search {
  const std::vector<std::vector<int>>& rows;
  const std::vector<long>& demands;
  const RationalVector& costs;
  int k;
  bool have_best = false;
  Rational best_value;
  std::vector<long> best;

  Rational value_of(const std::vector<long>& f) const {
    Rational v(0);
    for (int j = 0; j < k; ++j)
      v += costs[static_cast<size_t>(j)] * Rational(f[static_cast<size_t>(j)]);
    return v;
  }

  bool feasible_int(const std::vector<long>& f) const {
    for (size_t i = 0; i < rows.size(); ++i) {
      long got = 0;
      for (int j = 0; j < k; ++j)
        got += rows[i][static_cast<size_t>(j)] * f[static_cast<size_t>(j)];
      if (got < demands[i]) return false;
    }
    return true;
  }

  void offer(const std::vector<long>& f) {
    Rational v = value_of(f);
    if (!have_best || v < best_value) {
      have_best = true;
      best_value = v;
      best = f;
    }
  }

  void explore(Bounds bounds) {
    LPOutcome lp = simplex_solve(make_model(rows, demands, costs, &bounds));
    if (lp.status != LPStatus::Optimal) return;  // node infeasible
    if (have_best && lp.value >= best_value) return;

    // Round the LP point up; within this node's box that is always an
    // integer-feasible cover, giving an incumbent.
    std::vector<long> rounded(static_cast<size_t>(k));
    int frac_at = -1;
    for (int j = 0; j < k; ++j) {
      const Rational& x = lp.primal[static_cast<size_t>(j)];
      mpz_class fl = rat_floor(x);
      bool integral = Rational(fl) == x;
      rounded[static_cast<size_t>(j)] =
          fl.get_si() + (integral ? 0 : 1);
      if (!integral && frac_at < 0) frac_at = j;
    }
    if (frac_at < 0) {
      offer(rounded);  // LP optimum integral: node solved exactly
      return;
    }
    if (feasible_int(rounded)) offer(rounded);

    long split = rat_floor(lp.primal[static_cast<size_t>(frac_at)]).get_si();
    // down branch first
    Bounds down = bounds;
    down.hi[static_cast<size_t>(frac_at)] = split;
    explore(std::move(down));
    Bounds up = bounds;
    up.lo[static_cast<size_t>(frac_at)] = split + 1;
    explore(std::move(up));
  }
};

}  // namespace

LPOutcome cover_lp_relaxation(const std::vector<std::vector<int>>& rows,
                              const std::vector<long>& demands,
                              const RationalVector& costs) {
  const int k = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  RationalVector c = costs;
  if (c.empty()) c.assign(static_cast<size_t>(k), Rational(1));
  return simplex_solve(make_model(rows, demands, c, nullptr));
}

CoverResult integer_cover_min(const std::vector<std::vector<int>>& rows,
                              const std::vector<long>& demands,
                              const RationalVector& costs) {
  const int k = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  RationalVector c = costs;
  if (c.empty()) c.assign(static_cast<size_t>(k), Rational(1));
  for (const Rational& cj : c)
    if (cj <= 0) throw std::invalid_argument("cover costs must be positive");

  CoverResult res;
  // Unsatisfiable row: positive demand, no covering column.
  for (size_t i = 0; i < rows.size(); ++i) {
    if (demands[i] <= 0) continue;
    bool any = false;
    for (int j = 0; j < k; ++j) any = any || rows[i][static_cast<size_t>(j)] != 0;
    if (!any) return res;
  }

  Search s{rows, demands, c, k};
  Bounds root{std::vector<long>(static_cast<size_t>(k), 0),
              std::vector<long>(static_cast<size_t>(k), -1)};
  s.explore(std::move(root));
  if (!s.have_best) return res;
  res.feasible = true;
  res.value = s.best_value;
  res.solution = s.best;
  return res;
}

}  // namespace inddom
