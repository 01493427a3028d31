#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

// Domain types and cost primitives for robust capacitated single-item lot
// sizing with backordering under budgeted cumulative-demand uncertainty.
//
// Conventions used throughout the library:
//  - periods are 1-based in function arguments (t in [1, T]), storage is
//    0-based std::vector;
//  - demands are *cumulative*: D_t is total demand over periods 1..t;
//  - money/unit quantities are doubles; 1e-9 is the tolerance for invariant
//    checks, 1e-6 for cross-solver equality.

namespace lotsize {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kCheckTol = 1e-9;   // invariant / dedup tolerance
inline constexpr double kSolverTol = 1e-6;  // cross-solver equality tolerance

// Kernel execution mode: serial is the reference implementation, parallel
// uses OpenMP. Both must produce identical results (tests rely on it).
enum class Exec { serial, parallel };

// Thrown when a model's feasible production set is empty.
struct InfeasibleModel : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CostParams {
  double c_p = 0;  // production cost per unit
  double c_i = 0;  // inventory (carrying) cost per unit and period
  double c_b = 0;  // backorder cost per unit and period
  double b_p = 0;  // selling price per unit
};

// Per-period capacities l_t <= x_t <= u_t and cumulative capacities
// L_t <= X_t <= U_t. Empty vectors mean the default side: 0 below,
// unbounded above.
struct FeasibleSet {
  std::vector<double> l, u, L, U;

  double l_at(int t) const { return l.empty() ? 0.0 : l[t - 1]; }
  double u_at(int t) const { return u.empty() ? kInf : u[t - 1]; }
  double L_at(int t) const { return L.empty() ? 0.0 : L[t - 1]; }
  double U_at(int t) const { return U.empty() ? kInf : U[t - 1]; }
};

// Uncertainty budget: either a count of periods whose cumulative demand may
// deviate (discrete), or a bound on the total absolute deviation
// (continuous).
struct Budget {
  enum class Kind { discrete, continuous };
  Kind kind = Kind::discrete;
  double value = 0;

  static Budget discrete(int gamma_d) { return {Kind::discrete, double(gamma_d)}; }
  static Budget continuous(double gamma_c) { return {Kind::continuous, gamma_c}; }
  int gamma_d() const;      // throws unless kind == discrete
  double gamma_c() const;   // throws unless kind == continuous
};

struct Instance {
  int T = 0;
  CostParams costs;
  FeasibleSet feasible;
  std::vector<double> d_hat;  // nominal cumulative demands, nondecreasing
  std::vector<double> delta;  // maximum deviations, 0 <= delta_t <= d_hat_t
  Budget budget;

  double dhat(int t) const { return d_hat[t - 1]; }
  double dev(int t) const { return delta[t - 1]; }
};

// Production amounts x_t and their running sums X_t. X is always the exact
// prefix sum of x.
struct ProductionPlan {
  std::vector<double> x;
  std::vector<double> X;

  static ProductionPlan from_amounts(std::vector<double> amounts);
  static ProductionPlan from_cumulative(const std::vector<double>& cumulative);
  double cum(int t) const { return X[t - 1]; }
  int periods() const { return int(x.size()); }
};

// A realization of the cumulative demands: nonnegative and nondecreasing.
struct Scenario {
  std::vector<double> d;

  double at(int t) const { return d[t - 1]; }
  int periods() const { return int(d.size()); }
};

// Worst-case evaluation result: the maximizing scenario and its cost.
struct AdvResult {
  Scenario scenario;
  double value = 0;
  std::string method;
};

struct SolveDiag {
  std::string method;
  std::string status = "optimal";
  int rows = 0;
  int cols = 0;
  int iterations = 0;  // simplex pivots, or outer iterations for decompose
};

// Robust plan computation result: the plan, its worst-case cost, and solver
// diagnostics.
struct MinMaxResult {
  ProductionPlan plan;
  double value = 0;
  SolveDiag diag;
};

// Per-period cost branches. The period cost is max{f_I, f_B}: f_I prices the
// carried inventory X_t - D_t, f_B the backlog D_t - X_t; the last period
// additionally pays for all production and sells min{X_T, D_T}.
// f_I is nonincreasing in D_t, f_B nondecreasing.
double f_I(int t, int T, double X_t, double D_t, double X_T, const CostParams& c);
double f_B(int t, int T, double X_t, double D_t, double X_T, const CostParams& c);

// f_I and f_B are affine in the cumulative production; LP builders need the
// coefficient/constant split for a fixed demand value D.
struct AffineInX {
  double coef = 0;  // multiplies X_t (t < T) or X_T (t = T)
  double cst = 0;
};
AffineInX f_I_affine(int t, int T, double D, const CostParams& c);
AffineInX f_B_affine(int t, int T, double D, const CostParams& c);

// Total cost of a plan under a fixed scenario: sum over periods of
// max{f_I, f_B}. Throws std::invalid_argument on length mismatch.
double plan_cost(const ProductionPlan& plan, const Scenario& scenario,
                 const Instance& inst);

// Checks all instance invariants plus nonemptiness of the feasible production
// set (one LP feasibility solve). Returns human-readable violations; empty
// means valid.
std::vector<std::string> validate(const Instance& inst);

// True iff consecutive demand intervals cannot intersect:
// d_hat_t + delta_t <= d_hat_{t+1} - delta_{t+1} for all t (boundary contact
// allowed). In that case any box scenario is automatically nondecreasing.
bool is_non_overlapping(const Instance& inst);

// Candidate values for the k-th cumulative demand in a vertex scenario: the
// three-point set {d_hat_t - delta_t, d_hat_t, d_hat_t + delta_t} over all t,
// clipped to the k-th interval. Sorted, deduplicated (tolerance 1e-9).
std::vector<double> candidate_values(const Instance& inst, int k);

}  // namespace lotsize
