#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lotsize/core.hpp"

// Self-contained dense LP solver: two-phase primal simplex with individual
// variable bounds (including free and fixed variables). Every LP-based
// formulation in the library, and the branch-and-bound relaxations, run
// through solve() below.

namespace lotsize::lp {

enum class Sense { minimize, maximize };
enum class Rel { le, ge, eq };
enum class Status { optimal, infeasible, unbounded };

struct LinearProgram {
  Sense sense = Sense::minimize;
  std::vector<std::string> name;
  std::vector<double> lb, ub, obj;
  struct Row {
    std::vector<std::pair<int, double>> a;  // (variable index, coefficient)
    Rel rel = Rel::le;
    double rhs = 0;
  };
  std::vector<Row> rows;

  int add_var(std::string n, double lo, double hi, double c);
  void add_row(std::vector<std::pair<int, double>> a, Rel rel, double rhs);
  int num_vars() const { return int(obj.size()); }
  int num_rows() const { return int(rows.size()); }
};

struct LpSolution {
  Status status = Status::optimal;
  double objective = 0;
  std::vector<double> x;  // primal values, one per variable
  std::vector<double> y;  // row duals (sign convention of a minimization)
  int iterations = 0;
};

// Thrown when the pivot budget is exhausted; carries the objective value of
// the best basis reached.
struct IterationLimit : std::runtime_error {
  double best_bound;
  explicit IterationLimit(double bound)
      : std::runtime_error("simplex iteration limit exceeded"),
        best_bound(bound) {}
};

struct SolveOptions {
  int max_iterations = 0;          // 0 = automatic (scales with LP size)
  Exec exec = Exec::parallel;      // parallel only kicks in for large tableaus
};

// Deterministic: identical input yields identical output. Dantzig pricing
// with a Bland fallback after 2*(rows+cols) consecutive degenerate pivots.
// Throws std::invalid_argument on malformed input (bad indices, NaN,
// crossed bounds are reported as infeasible, not an error).
LpSolution solve(const LinearProgram& lp, const SolveOptions& opts = {});

}  // namespace lotsize::lp
