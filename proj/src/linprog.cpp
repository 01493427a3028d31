#include "lotsize/linprog.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace lotsize::lp {

int LinearProgram::add_var(std::string n, double lo, double hi, double c) {
  name.push_back(std::move(n));
  lb.push_back(lo);
  ub.push_back(hi);
  obj.push_back(c);
  return int(obj.size()) - 1;
}

void LinearProgram::add_row(std::vector<std::pair<int, double>> a, Rel rel,
                            double rhs) {
  rows.push_back(Row{std::move(a), rel, rhs});
}

namespace {

constexpr double kZeroTol = 1e-9;    // reduced-cost optimality tolerance
constexpr double kPivotTol = 1e-10;  // smallest usable pivot element
constexpr double kRatioTie = 1e-9;
constexpr double kPhase1Tol = 1e-7;

enum class VState : unsigned char { basic, at_lower, at_upper, nb_free };

// Dense bounded-variable simplex working state. Columns: structural vars,
// then one slack per row, then phase-1 artificials.
struct Tableau {
  int m = 0;       // rows
  int ncols = 0;   // total columns
  std::vector<double> tab;   // m * ncols, row-major: B^{-1} A
  std::vector<double> z;     // reduced costs, per column
  std::vector<double> cost;  // current phase cost, per column
  std::vector<double> lo, hi;
  std::vector<VState> state;
  std::vector<double> nbval;  // value of nonbasic columns
  std::vector<int> basis;     // per row: basic column
  std::vector<double> xB;     // per row: value of the basic column
  int iterations = 0;
  bool parallel = false;

  double& at(int i, int j) { return tab[size_t(i) * ncols + j]; }
  double at(int i, int j) const { return tab[size_t(i) * ncols + j]; }

  double value_of(int j) const {
    if (state[j] == VState::basic) {
      for (int i = 0; i < m; ++i)
        if (basis[i] == j) return xB[i];
    }
    return nbval[j];
  }

  double objective() const {
    double v = 0;
    for (int j = 0; j < ncols; ++j)
      if (cost[j] != 0 && state[j] != VState::basic) v += cost[j] * nbval[j];
    for (int i = 0; i < m; ++i) v += cost[basis[i]] * xB[i];
    return v;
  }

  void reset_reduced_costs() {
    z = cost;
    for (int i = 0; i < m; ++i) {
      const double cb = cost[basis[i]];
      if (cb == 0) continue;
      const double* row = &tab[size_t(i) * ncols];
      for (int j = 0; j < ncols; ++j) z[j] -= cb * row[j];
    }
  }

  // Eliminates column q around row r and swaps q into the basis; the leaving
  // variable parks at the bound given by `leaving_state`.
  void pivot(int r, int q, double entering_value, VState leaving_state) {
    double* prow = &tab[size_t(r) * ncols];
    const double piv = prow[q];
    const double inv = 1.0 / piv;
    for (int j = 0; j < ncols; ++j) prow[j] *= inv;
    prow[q] = 1.0;  // kill roundoff on the pivot column

    const int rows = m, n = ncols;
#pragma omp parallel for schedule(static) if (parallel && size_t(rows) * n > 64 * 1024)
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      double* row = &tab[size_t(i) * n];
      const double f = row[q];
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) row[j] -= f * prow[j];
      row[q] = 0.0;
    }
    const double zq = z[q];
    if (zq != 0) {
      for (int j = 0; j < ncols; ++j) z[j] -= zq * prow[j];
      z[q] = 0.0;
    }

    const int leaving = basis[r];
    state[leaving] = leaving_state;
    nbval[leaving] = leaving_state == VState::at_upper ? hi[leaving]
                                                       : lo[leaving];
    basis[r] = q;
    state[q] = VState::basic;
    xB[r] = entering_value;
  }
};

struct PricingPick {
  int col = -1;
  int dir = 0;
};

PricingPick price(const Tableau& t, bool bland) {
  PricingPick best;
  double best_viol = kZeroTol;
  for (int j = 0; j < t.ncols; ++j) {
    const VState s = t.state[j];
    if (s == VState::basic) continue;
    if (t.hi[j] - t.lo[j] <= 0 && s != VState::nb_free) continue;  // fixed
    double viol = 0;
    int dir = 0;
    if (s == VState::at_lower && t.z[j] < -kZeroTol) {
      viol = -t.z[j];
      dir = +1;
    } else if (s == VState::at_upper && t.z[j] > kZeroTol) {
      viol = t.z[j];
      dir = -1;
    } else if (s == VState::nb_free && std::abs(t.z[j]) > kZeroTol) {
      viol = std::abs(t.z[j]);
      dir = t.z[j] < 0 ? +1 : -1;
    } else {
      continue;
    }
    if (bland) return {j, dir};
    if (viol > best_viol) {
      best_viol = viol;
      best = {j, dir};
    }
  }
  return best;
}

enum class StepResult { stepped, optimal, unbounded };

StepResult simplex_step(Tableau& t, bool bland, int& consecutive_degenerate) {
  const PricingPick pick = price(t, bland);
  if (pick.col < 0) return StepResult::optimal;
  const int q = pick.col;
  const double d = pick.dir;

  // Ratio test: how far can the entering column move before it hits its own
  // opposite bound or drives a basic variable to one of its bounds.
  double limit = kInf;
  if (std::isfinite(t.hi[q]) && std::isfinite(t.lo[q]))
    limit = t.hi[q] - t.lo[q];
  int leave_row = -1;
  double leave_alpha = 0;
  for (int i = 0; i < t.m; ++i) {
    const double alpha = t.at(i, q);
    if (std::abs(alpha) <= kPivotTol) continue;
    const double g = -d * alpha;  // basic value change per unit of movement
    const int b = t.basis[i];
    double room;
    if (g > 0)
      room = std::isfinite(t.hi[b]) ? (t.hi[b] - t.xB[i]) / g : kInf;
    else
      room = std::isfinite(t.lo[b]) ? (t.lo[b] - t.xB[i]) / g : kInf;
    if (room < 0) room = 0;  // tolerate slight bound violations
    if (room < limit - kRatioTie) {
      limit = room;
      leave_row = i;
      leave_alpha = alpha;
    } else if (leave_row >= 0 && room < limit + kRatioTie) {
      const bool better =
          bland ? t.basis[i] < t.basis[leave_row]
                : std::abs(alpha) > std::abs(leave_alpha) + kPivotTol;
      if (better) {
        leave_row = i;
        leave_alpha = alpha;
      }
    }
  }

  if (!std::isfinite(limit)) return StepResult::unbounded;
  consecutive_degenerate = limit <= kRatioTie ? consecutive_degenerate + 1 : 0;

  if (leave_row < 0) {
    // Bound flip: the entering column crosses to its other bound.
    const double step = d * limit;
    for (int i = 0; i < t.m; ++i) {
      const double alpha = t.at(i, q);
      if (alpha != 0) t.xB[i] -= step * alpha;
    }
    t.state[q] = t.state[q] == VState::at_lower ? VState::at_upper
                                                : VState::at_lower;
    t.nbval[q] = t.state[q] == VState::at_upper ? t.hi[q] : t.lo[q];
    return StepResult::stepped;
  }

  const double step = d * limit;
  for (int i = 0; i < t.m; ++i) {
    if (i == leave_row) continue;
    const double alpha = t.at(i, q);
    if (alpha != 0) t.xB[i] -= step * alpha;
  }
  const double g_leaving = -d * leave_alpha;
  t.pivot(leave_row, q, t.nbval[q] + step,
          g_leaving > 0 ? VState::at_upper : VState::at_lower);
  return StepResult::stepped;
}

// Runs pricing/ratio/pivot until optimal, unbounded, or out of iterations.
StepResult run_simplex(Tableau& t, int max_iterations) {
  int degenerate = 0;
  const int bland_after = 2 * (t.m + t.ncols);
  while (true) {
    const bool bland = degenerate > bland_after;
    const StepResult r = simplex_step(t, bland, degenerate);
    if (r != StepResult::stepped) return r;
    if (++t.iterations > max_iterations)
      throw IterationLimit(t.objective());
  }
}

void check_well_formed(const LinearProgram& lp) {
  const int n = lp.num_vars();
  for (int j = 0; j < n; ++j) {
    if (std::isnan(lp.lb[j]) || std::isnan(lp.ub[j]) ||
        !std::isfinite(lp.obj[j]))
      throw std::invalid_argument("linear program: bad bound or objective");
  }
  for (const auto& row : lp.rows) {
    if (!std::isfinite(row.rhs))
      throw std::invalid_argument("linear program: non-finite rhs");
    for (auto [j, a] : row.a) {
      if (j < 0 || j >= n)
        throw std::invalid_argument("linear program: bad variable index");
      if (!std::isfinite(a))
        throw std::invalid_argument("linear program: non-finite coefficient");
    }
  }
}

}  // namespace

LpSolution solve(const LinearProgram& lp, const SolveOptions& opts) {
  check_well_formed(lp);
  const int n = lp.num_vars();
  const double sgn = lp.sense == Sense::maximize ? -1.0 : 1.0;

  LpSolution sol;
  for (int j = 0; j < n; ++j)
    if (lp.lb[j] > lp.ub[j] + kCheckTol) {
      sol.status = Status::infeasible;
      return sol;
    }

  // Keep only rows with coefficients; an empty row is either trivially true
  // or proves infeasibility outright.
  std::vector<int> kept;
  for (int i = 0; i < lp.num_rows(); ++i) {
    const auto& row = lp.rows[i];
    bool empty = true;
    for (auto [j, a] : row.a)
      if (a != 0) empty = false;
    if (!empty) {
      kept.push_back(i);
      continue;
    }
    const bool ok = row.rel == Rel::le   ? row.rhs >= -kCheckTol
                    : row.rel == Rel::ge ? row.rhs <= kCheckTol
                                         : std::abs(row.rhs) <= kCheckTol;
    if (!ok) {
      sol.status = Status::infeasible;
      return sol;
    }
  }
  const int m = int(kept.size());

  Tableau t;
  t.m = m;
  t.ncols = n + m;
  t.parallel = opts.exec == Exec::parallel;
  t.tab.assign(size_t(m) * t.ncols, 0.0);
  t.lo.assign(lp.lb.begin(), lp.lb.end());
  t.hi.assign(lp.ub.begin(), lp.ub.end());
  t.cost.assign(t.ncols, 0.0);
  t.state.assign(t.ncols, VState::at_lower);
  t.nbval.assign(t.ncols, 0.0);
  t.basis.assign(m, -1);
  t.xB.assign(m, 0.0);
  t.lo.resize(t.ncols);
  t.hi.resize(t.ncols);

  for (int i = 0; i < m; ++i) {
    const auto& row = lp.rows[kept[i]];
    for (auto [j, a] : row.a) t.at(i, j) += a;
    const int s = n + i;
    t.at(i, s) = 1.0;
    switch (row.rel) {
      case Rel::le: t.lo[s] = 0; t.hi[s] = kInf; break;
      case Rel::ge: t.lo[s] = -kInf; t.hi[s] = 0; break;
      case Rel::eq: t.lo[s] = 0; t.hi[s] = 0; break;
    }
  }

  // Nonbasic starting point: the finite bound nearest zero, or zero for free
  // columns.
  for (int j = 0; j < t.ncols; ++j) {
    if (std::isfinite(t.lo[j])) {
      t.state[j] = VState::at_lower;
      t.nbval[j] = t.lo[j];
    } else if (std::isfinite(t.hi[j])) {
      t.state[j] = VState::at_upper;
      t.nbval[j] = t.hi[j];
    } else {
      t.state[j] = VState::nb_free;
      t.nbval[j] = 0.0;
    }
  }

  // Initial basis: the row's slack when the residual fits its bounds,
  // otherwise a fresh artificial column scaled to enter at |residual|.
  std::vector<double> residual(m, 0.0);
  for (int i = 0; i < m; ++i) {
    double r = lp.rows[kept[i]].rhs;
    for (auto [j, a] : lp.rows[kept[i]].a) r -= a * t.nbval[j];
    residual[i] = r;
  }
  std::vector<int> artificial;
  for (int i = 0; i < m; ++i) {
    const int s = n + i;
    const double r = residual[i];
    const bool slack_ok = (t.lo[s] <= 0 && t.hi[s] >= 0) &&
                          r >= t.lo[s] - 1e-11 && r <= t.hi[s] + 1e-11;
    if (slack_ok) {
      t.basis[i] = s;
      t.state[s] = VState::basic;
      t.xB[i] = r;
    } else {
      artificial.push_back(i);
    }
  }
  if (!artificial.empty()) {
    const int old_cols = t.ncols;
    const int extra = int(artificial.size());
    std::vector<double> wide(size_t(m) * (old_cols + extra), 0.0);
    for (int i = 0; i < m; ++i)
      std::copy_n(&t.tab[size_t(i) * old_cols], old_cols,
                  &wide[size_t(i) * (old_cols + extra)]);
    t.tab = std::move(wide);
    t.ncols = old_cols + extra;
    t.lo.resize(t.ncols, 0.0);
    t.hi.resize(t.ncols, kInf);
    t.cost.resize(t.ncols, 0.0);
    t.state.resize(t.ncols, VState::at_lower);
    t.nbval.resize(t.ncols, 0.0);
    for (int k = 0; k < extra; ++k) {
      const int i = artificial[k];
      const int col = old_cols + k;
      const double sign = residual[i] >= 0 ? 1.0 : -1.0;
      t.at(i, col) = sign;
      if (sign < 0) {  // normalize the basic column to +1
        double* row = &t.tab[size_t(i) * t.ncols];
        for (int j = 0; j < t.ncols; ++j) row[j] = -row[j];
      }
      t.basis[i] = col;
      t.state[col] = VState::basic;
      t.xB[i] = std::abs(residual[i]);
    }
  }

  const int max_iter = opts.max_iterations > 0
                           ? opts.max_iterations
                           : 20000 + 100 * (t.m + t.ncols);

  if (!artificial.empty()) {
    for (int k = 0; k < int(artificial.size()); ++k)
      t.cost[n + m + k] = 1.0;
    t.reset_reduced_costs();
    const StepResult r = run_simplex(t, max_iter);
    (void)r;  // a sum of nonnegative columns cannot be unbounded below
    double infeas = 0;
    for (int j = n + m; j < t.ncols; ++j) infeas += t.value_of(j);
    if (infeas > kPhase1Tol) {
      sol.status = Status::infeasible;
      sol.iterations = t.iterations;
      return sol;
    }
    // Drive leftover artificials out of the basis where possible; rows that
    // resist are redundant and keep a frozen zero column.
    for (int i = 0; i < m; ++i) {
      if (t.basis[i] < n + m) continue;
      int q = -1;
      for (int j = 0; j < n + m; ++j)
        if (t.state[j] != VState::basic && std::abs(t.at(i, j)) > 1e-7) {
          q = j;
          break;
        }
      if (q >= 0) t.pivot(i, q, t.nbval[q], VState::at_lower);
    }
    for (int j = n + m; j < t.ncols; ++j) {
      t.lo[j] = t.hi[j] = 0.0;
      t.cost[j] = 0.0;
      if (t.state[j] != VState::basic) {
        t.state[j] = VState::at_lower;
        t.nbval[j] = 0.0;
      }
    }
  }

  for (int j = 0; j < n; ++j) t.cost[j] = sgn * lp.obj[j];
  for (int j = n; j < t.ncols; ++j) t.cost[j] = 0.0;
  t.reset_reduced_costs();
  const StepResult r2 = run_simplex(t, max_iter);
  sol.iterations = t.iterations;
  if (r2 == StepResult::unbounded) {
    sol.status = Status::unbounded;
    return sol;
  }

  sol.status = Status::optimal;
  sol.x.assign(n, 0.0);
  for (int j = 0; j < n; ++j) sol.x[j] = t.nbval[j];
  for (int i = 0; i < m; ++i)
    if (t.basis[i] < n) sol.x[t.basis[i]] = t.xB[i];
  double obj = 0;
  for (int j = 0; j < n; ++j) obj += lp.obj[j] * sol.x[j];
  sol.objective = obj;
  sol.y.assign(lp.num_rows(), 0.0);
  for (int i = 0; i < m; ++i) sol.y[kept[i]] = -sgn * t.z[n + i];
  return sol;
}

}  // namespace lotsize::lp
