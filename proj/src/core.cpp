#include "lotsize/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lotsize/linprog.hpp"

namespace lotsize {

int Budget::gamma_d() const {
  if (kind != Kind::discrete)
    throw std::invalid_argument("budget is not discrete");
  return int(std::llround(value));
}

double Budget::gamma_c() const {
  if (kind != Kind::continuous)
    throw std::invalid_argument("budget is not continuous");
  return value;
}

ProductionPlan ProductionPlan::from_amounts(std::vector<double> amounts) {
  ProductionPlan p;
  p.x = std::move(amounts);
  p.X.resize(p.x.size());
  std::partial_sum(p.x.begin(), p.x.end(), p.X.begin());
  return p;
}

ProductionPlan ProductionPlan::from_cumulative(
    const std::vector<double>& cumulative) {
  std::vector<double> amounts(cumulative.size());
  std::adjacent_difference(cumulative.begin(), cumulative.end(),
                           amounts.begin());
  return from_amounts(std::move(amounts));
}

double f_I(int t, int T, double X_t, double D_t, double X_T,
           const CostParams& c) {
  double v = c.c_i * (X_t - D_t);
  if (t == T) v += c.c_p * X_T - c.b_p * D_t;
  return v;
}

double f_B(int t, int T, double X_t, double D_t, double X_T,
           const CostParams& c) {
  double v = c.c_b * (D_t - X_t);
  if (t == T) v += c.c_p * X_T - c.b_p * X_t;
  return v;
}

AffineInX f_I_affine(int t, int T, double D, const CostParams& c) {
  if (t < T) return {c.c_i, -c.c_i * D};
  return {c.c_i + c.c_p, -(c.c_i + c.b_p) * D};
}

AffineInX f_B_affine(int t, int T, double D, const CostParams& c) {
  if (t < T) return {-c.c_b, c.c_b * D};
  return {c.c_p - c.c_b - c.b_p, c.c_b * D};
}

double plan_cost(const ProductionPlan& plan, const Scenario& scenario,
                 const Instance& inst) {
  const int T = inst.T;
  if (plan.periods() != T || scenario.periods() != T)
    throw std::invalid_argument("plan/scenario length does not match horizon");
  const double X_T = plan.cum(T);
  double total = 0;
  for (int t = 1; t <= T; ++t) {
    const double fi = f_I(t, T, plan.cum(t), scenario.at(t), X_T, inst.costs);
    const double fb = f_B(t, T, plan.cum(t), scenario.at(t), X_T, inst.costs);
    total += std::max(fi, fb);
  }
  return total;
}

namespace {

bool feasible_set_nonempty(const Instance& inst) {
  lp::LinearProgram m;
  std::vector<int> xv(inst.T), Xv(inst.T);
  for (int t = 1; t <= inst.T; ++t)
    xv[t - 1] = m.add_var("x" + std::to_string(t), inst.feasible.l_at(t),
                          inst.feasible.u_at(t), 0.0);
  for (int t = 1; t <= inst.T; ++t)
    Xv[t - 1] = m.add_var("X" + std::to_string(t), inst.feasible.L_at(t),
                          inst.feasible.U_at(t), 0.0);
  for (int t = 1; t <= inst.T; ++t) {
    std::vector<std::pair<int, double>> row{{Xv[t - 1], 1.0}};
    for (int i = 1; i <= t; ++i) row.emplace_back(xv[i - 1], -1.0);
    m.add_row(std::move(row), lp::Rel::eq, 0.0);
  }
  return lp::solve(m).status == lp::Status::optimal;
}

}  // namespace

std::vector<std::string> validate(const Instance& inst) {
  std::vector<std::string> out;
  auto bad = [&](const std::string& msg) { out.push_back(msg); };

  if (inst.T < 1) {
    bad("horizon must be at least 1");
    return out;
  }
  auto finite_nonneg = [](double v) { return std::isfinite(v) && v >= 0; };
  if (!finite_nonneg(inst.costs.c_p) || !finite_nonneg(inst.costs.c_i) ||
      !finite_nonneg(inst.costs.c_b) || !finite_nonneg(inst.costs.b_p))
    bad("cost rates must be finite and nonnegative");

  if (int(inst.d_hat.size()) != inst.T || int(inst.delta.size()) != inst.T) {
    bad("d_hat/delta length does not match horizon");
    return out;
  }
  for (int t = 1; t <= inst.T; ++t) {
    if (!std::isfinite(inst.dhat(t)) || inst.dhat(t) < -kCheckTol)
      bad("nominal cumulative demand negative at t=" + std::to_string(t));
    if (t < inst.T && inst.dhat(t) > inst.dhat(t + 1) + kCheckTol)
      bad("nominal cumulative demand decreases at t=" + std::to_string(t));
    if (!std::isfinite(inst.dev(t)) || inst.dev(t) < -kCheckTol)
      bad("deviation negative at t=" + std::to_string(t));
    if (inst.dev(t) > inst.dhat(t) + kCheckTol)
      bad("deviation exceeds nominal demand at t=" + std::to_string(t));
  }

  if (inst.budget.kind == Budget::Kind::discrete) {
    double g = inst.budget.value;
    if (std::abs(g - std::llround(g)) > kCheckTol || g < -kCheckTol ||
        g > inst.T + kCheckTol)
      bad("discrete budget must be an integer in [0, T]");
  } else if (!(inst.budget.value >= 0) ||
             !std::isfinite(inst.budget.value)) {
    bad("continuous budget must be finite and nonnegative");
  }

  const auto& fs = inst.feasible;
  for (const auto* v : {&fs.l, &fs.u, &fs.L, &fs.U})
    if (!v->empty() && int(v->size()) != inst.T)
      bad("capacity array length does not match horizon");
  if (out.empty()) {
    for (int t = 1; t <= inst.T; ++t) {
      if (fs.l_at(t) < -kCheckTol || fs.L_at(t) < -kCheckTol)
        bad("capacity lower bound negative at t=" + std::to_string(t));
      if (fs.l_at(t) > fs.u_at(t) + kCheckTol)
        bad("per-period capacity bounds crossed at t=" + std::to_string(t));
      if (fs.L_at(t) > fs.U_at(t) + kCheckTol)
        bad("cumulative capacity bounds crossed at t=" + std::to_string(t));
    }
  }

  if (out.empty() && !feasible_set_nonempty(inst))
    bad("feasible production set is empty");
  return out;
}

bool is_non_overlapping(const Instance& inst) {
  for (int t = 1; t < inst.T; ++t)
    if (inst.dhat(t) + inst.dev(t) >
        inst.dhat(t + 1) - inst.dev(t + 1) + kCheckTol)
      return false;
  return true;
}

std::vector<double> candidate_values(const Instance& inst, int k) {
  if (k < 1 || k > inst.T)
    throw std::invalid_argument("candidate_values: period out of range");
  const double lo = inst.dhat(k) - inst.dev(k);
  const double hi = inst.dhat(k) + inst.dev(k);
  std::vector<double> vals;
  vals.reserve(3 * inst.T);
  for (int t = 1; t <= inst.T; ++t)
    for (double v : {inst.dhat(t) - inst.dev(t), inst.dhat(t),
                     inst.dhat(t) + inst.dev(t)})
      if (v >= lo - kCheckTol && v <= hi + kCheckTol) vals.push_back(v);
  std::sort(vals.begin(), vals.end());
  std::vector<double> out;
  for (double v : vals)
    if (out.empty() || v - out.back() > kCheckTol) out.push_back(v);
  return out;
}

}  // namespace lotsize
