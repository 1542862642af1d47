#include "inddom/lp.hpp"

#include <cassert>
#include <stdexcept>

namespace inddom {

namespace {

// Tableau for maximization in the form max c'x, rows normalized to rhs >= 0.
// Column layout: structural | slack/surplus | artificial. Every row owns a
// unit column (slack for LE, artificial for GE/EQ) from which its dual value
// is read at optimality.
class Tableau {
 public:
  Tableau(const LPModel& model, const RationalVector& cost)
      : n_(model.num_vars()), m_(static_cast<int>(model.rows.size())) {
    row_sign_.assign(static_cast<size_t>(m_), 1);
    std::vector<Relation> rel(static_cast<size_t>(m_));
    for (int i = 0; i < m_; ++i) {
      const LPRow& r = model.rows[static_cast<size_t>(i)];
      if (static_cast<int>(r.coeffs.size()) != n_)
        throw std::invalid_argument("LP row length mismatch");
      rel[static_cast<size_t>(i)] = r.rel;
      if (r.rhs < 0) {
        row_sign_[static_cast<size_t>(i)] = -1;
        if (r.rel == Relation::LE)
          rel[static_cast<size_t>(i)] = Relation::GE;
        else if (r.rel == Relation::GE)
          rel[static_cast<size_t>(i)] = Relation::LE;
      }
    }

    // Assign extra columns.
    slack_col_.assign(static_cast<size_t>(m_), -1);
    art_col_.assign(static_cast<size_t>(m_), -1);
    int next = n_;
    for (int i = 0; i < m_; ++i)
      if (rel[static_cast<size_t>(i)] != Relation::EQ)
        slack_col_[static_cast<size_t>(i)] = next++;
    for (int i = 0; i < m_; ++i)
      if (rel[static_cast<size_t>(i)] != Relation::LE)
        art_col_[static_cast<size_t>(i)] = next++;
    cols_ = next;

    a_.assign(static_cast<size_t>(m_),
              RationalVector(static_cast<size_t>(cols_)));
    b_.assign(static_cast<size_t>(m_), Rational(0));
    basis_.assign(static_cast<size_t>(m_), -1);
    is_artificial_.assign(static_cast<size_t>(cols_), false);

    for (int i = 0; i < m_; ++i) {
      const LPRow& r = model.rows[static_cast<size_t>(i)];
      int s = row_sign_[static_cast<size_t>(i)];
      for (int j = 0; j < n_; ++j)
        a_[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            s * r.coeffs[static_cast<size_t>(j)];
      b_[static_cast<size_t>(i)] = s * r.rhs;
      int sc = slack_col_[static_cast<size_t>(i)];
      if (sc >= 0)
        a_[static_cast<size_t>(i)][static_cast<size_t>(sc)] =
            rel[static_cast<size_t>(i)] == Relation::LE ? 1 : -1;
      int ac = art_col_[static_cast<size_t>(i)];
      if (ac >= 0) {
        a_[static_cast<size_t>(i)][static_cast<size_t>(ac)] = 1;
        is_artificial_[static_cast<size_t>(ac)] = true;
        basis_[static_cast<size_t>(i)] = ac;
      } else {
        basis_[static_cast<size_t>(i)] = sc;
      }
    }

    cost_ = cost;
    cost_.resize(static_cast<size_t>(cols_), Rational(0));
  }

  // Phase 1: drive the artificial sum to zero. Returns false if infeasible.
  bool phase1() {
    RationalVector pcost(static_cast<size_t>(cols_), Rational(0));
    bool any = false;
    for (int j = 0; j < cols_; ++j)
      if (is_artificial_[static_cast<size_t>(j)]) {
        pcost[static_cast<size_t>(j)] = -1;
        any = true;
      }
    if (!any) {
      build_objective_row(cost_);
      return true;
    }
    build_objective_row(pcost);
    run(pcost, /*allow_artificial=*/true);
    Rational art_sum = objective_value(pcost);
    if (art_sum != 0) return false;
    // Pivot basic artificials out where possible.
    for (int i = 0; i < m_; ++i) {
      int bv = basis_[static_cast<size_t>(i)];
      if (!is_artificial_[static_cast<size_t>(bv)]) continue;
      for (int j = 0; j < cols_; ++j) {
        if (is_artificial_[static_cast<size_t>(j)]) continue;
        if (a_[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0) {
          pivot(i, j);
          break;
        }
      }
    }
    build_objective_row(cost_);
    return true;
  }

  // Phase 2. Returns false on unboundedness.
  bool phase2() { return run(cost_, /*allow_artificial=*/false); }

  Rational objective_value(const RationalVector& cost) const {
    Rational v(0);
    for (int i = 0; i < m_; ++i)
      v += cost[static_cast<size_t>(basis_[static_cast<size_t>(i)])] *
           b_[static_cast<size_t>(i)];
    return v;
  }

  RationalVector primal() const {
    RationalVector x(static_cast<size_t>(n_), Rational(0));
    for (int i = 0; i < m_; ++i) {
      int bv = basis_[static_cast<size_t>(i)];
      if (bv < n_) x[static_cast<size_t>(bv)] = b_[static_cast<size_t>(i)];
    }
    return x;
  }

  // y_i = c_B B^{-1} e_i. Every row owns a unit column with +1 at that row
  // and zero cost (slack for LE rows, artificial otherwise), whose reduced
  // cost c_j - z_j equals -y_i in the normalized system.
  RationalVector dual() const {
    RationalVector y(static_cast<size_t>(m_), Rational(0));
    for (int i = 0; i < m_; ++i) {
      int uc = art_col_[static_cast<size_t>(i)];
      if (uc < 0) uc = slack_col_[static_cast<size_t>(i)];
      y[static_cast<size_t>(i)] =
          -red_[static_cast<size_t>(uc)] * row_sign_[static_cast<size_t>(i)];
    }
    return y;
  }

 private:
  void build_objective_row(const RationalVector& cost) {
    red_ = cost;
    for (int i = 0; i < m_; ++i) {
      const Rational& cb =
          cost[static_cast<size_t>(basis_[static_cast<size_t>(i)])];
      if (cb == 0) continue;
      for (int j = 0; j < cols_; ++j)
        red_[static_cast<size_t>(j)] -=
            cb * a_[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
  }

  void pivot(int r, int c) {
    RationalVector& row = a_[static_cast<size_t>(r)];
    Rational piv = row[static_cast<size_t>(c)];
    assert(piv != 0);
    for (int j = 0; j < cols_; ++j) row[static_cast<size_t>(j)] /= piv;
    b_[static_cast<size_t>(r)] /= piv;
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      Rational f = a_[static_cast<size_t>(i)][static_cast<size_t>(c)];
      if (f == 0) continue;
      for (int j = 0; j < cols_; ++j)
        a_[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
            f * row[static_cast<size_t>(j)];
      b_[static_cast<size_t>(i)] -= f * b_[static_cast<size_t>(r)];
    }
    Rational f = red_[static_cast<size_t>(c)];
    if (f != 0)
      for (int j = 0; j < cols_; ++j)
        red_[static_cast<size_t>(j)] -= f * row[static_cast<size_t>(j)];
    basis_[static_cast<size_t>(r)] = c;
  }

  // Bland: entering = lowest-index improving column, leaving = min ratio
  // with lowest basic index on ties. Returns false iff unbounded.
  bool run(const RationalVector& cost, bool allow_artificial) {
    (void)cost;
    for (;;) {
      int enter = -1;
      for (int j = 0; j < cols_; ++j) {
        if (!allow_artificial && is_artificial_[static_cast<size_t>(j)])
          continue;
        if (red_[static_cast<size_t>(j)] > 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int i = 0; i < m_; ++i) {
        const Rational& aij =
            a_[static_cast<size_t>(i)][static_cast<size_t>(enter)];
        if (aij <= 0) continue;
        Rational ratio = b_[static_cast<size_t>(i)] / aij;
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[static_cast<size_t>(i)] <
                                  basis_[static_cast<size_t>(leave)])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  int n_, m_, cols_ = 0;
  std::vector<RationalVector> a_;
  RationalVector b_, red_, cost_;
  std::vector<int> basis_, slack_col_, art_col_, row_sign_;
  std::vector<bool> is_artificial_;
};

}  // namespace

LPOutcome simplex_solve(const LPModel& model) {
  // Internally always maximize; a Min model is solved as Max of -c with the
  // value and duals negated back.
  const bool minimize = model.sense == Sense::Min;
  RationalVector cost = model.objective;
  if (minimize)
    for (Rational& c : cost) c = -c;

  Tableau t(model, cost);
  LPOutcome out;
  if (!t.phase1()) {
    out.status = LPStatus::Infeasible;
    return out;
  }
  if (!t.phase2()) {
    out.status = LPStatus::Unbounded;
    return out;
  }
  out.status = LPStatus::Optimal;
  out.primal = t.primal();
  out.value = 0;
  for (int j = 0; j < model.num_vars(); ++j)
    out.value += cost[static_cast<size_t>(j)] * out.primal[static_cast<size_t>(j)];
  out.dual = t.dual();
  if (minimize) {
    out.value = -out.value;
    for (Rational& y : out.dual) y = -y;
  }
  return out;
}

std::vector<std::string> check_strong_duality(const LPModel& model,
                                              const LPOutcome& out) {
  std::vector<std::string> bad;
  if (out.status != LPStatus::Optimal) {
    bad.push_back("outcome not Optimal");
    return bad;
  }
  const int n = model.num_vars();
  const int m = static_cast<int>(model.rows.size());
  if (static_cast<int>(out.primal.size()) != n ||
      static_cast<int>(out.dual.size()) != m) {
    bad.push_back("primal/dual vector length mismatch");
    return bad;
  }
  const bool maximize = model.sense == Sense::Max;

  for (int j = 0; j < n; ++j)
    if (out.primal[static_cast<size_t>(j)] < 0)
      bad.push_back("primal variable " + std::to_string(j) + " negative");

  RationalVector activity(static_cast<size_t>(m), Rational(0));
  for (int i = 0; i < m; ++i) {
    const LPRow& r = model.rows[static_cast<size_t>(i)];
    for (int j = 0; j < n; ++j)
      activity[static_cast<size_t>(i)] +=
          r.coeffs[static_cast<size_t>(j)] * out.primal[static_cast<size_t>(j)];
    const Rational& act = activity[static_cast<size_t>(i)];
    bool ok = r.rel == Relation::LE   ? act <= r.rhs
              : r.rel == Relation::GE ? act >= r.rhs
                                      : act == r.rhs;
    if (!ok) bad.push_back("primal row " + std::to_string(i) + " violated");
  }

  // Dual sign constraints. For a max program: LE rows need y >= 0, GE rows
  // y <= 0, EQ free. Mirrored for min.
  for (int i = 0; i < m; ++i) {
    const Relation rel = model.rows[static_cast<size_t>(i)].rel;
    const Rational& y = out.dual[static_cast<size_t>(i)];
    bool ok = true;
    if (rel == Relation::LE) ok = maximize ? y >= 0 : y <= 0;
    if (rel == Relation::GE) ok = maximize ? y <= 0 : y >= 0;
    if (!ok) bad.push_back("dual sign on row " + std::to_string(i));
  }

  // Dual constraints: A'y >= c (max) / A'y <= c (min), with slackness.
  for (int j = 0; j < n; ++j) {
    Rational lhs(0);
    for (int i = 0; i < m; ++i)
      lhs += model.rows[static_cast<size_t>(i)].coeffs[static_cast<size_t>(j)] *
             out.dual[static_cast<size_t>(i)];
    const Rational& cj = model.objective[static_cast<size_t>(j)];
    bool feas = maximize ? lhs >= cj : lhs <= cj;
    if (!feas) bad.push_back("dual constraint " + std::to_string(j) + " violated");
    if (out.primal[static_cast<size_t>(j)] > 0 && lhs != cj)
      bad.push_back("complementary slackness: variable " + std::to_string(j) +
                    " positive but dual constraint slack");
  }
  for (int i = 0; i < m; ++i)
    if (out.dual[static_cast<size_t>(i)] != 0 &&
        activity[static_cast<size_t>(i)] !=
            model.rows[static_cast<size_t>(i)].rhs)
      bad.push_back("complementary slackness: row " + std::to_string(i) +
                    " has nonzero dual but slack");

  Rational primal_value(0);
  for (int j = 0; j < n; ++j)
    primal_value += model.objective[static_cast<size_t>(j)] *
                    out.primal[static_cast<size_t>(j)];
  Rational dual_value(0);
  for (int i = 0; i < m; ++i)
    dual_value += model.rows[static_cast<size_t>(i)].rhs *
                  out.dual[static_cast<size_t>(i)];
  if (primal_value != out.value) bad.push_back("value mismatch: primal");
  if (dual_value != out.value) bad.push_back("value mismatch: dual");
  return bad;
}

}  // namespace inddom
