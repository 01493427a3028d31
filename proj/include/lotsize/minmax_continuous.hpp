#pragma once

#include <vector>

#include "lotsize/core.hpp"

// Robust plan computation under the continuous budget. Non-overlapping
// integral instances: the dual longest-path LP over budget layers with the
// production variables linked in. Everything else: scenario-generation
// decomposition (master LP over a growing scenario pool, branch-and-bound
// adversary as the separation step).

namespace lotsize::continuous {

struct DecompositionState {
  double lb = -kInf;
  double ub = kInf;
  std::vector<Scenario> pool;
  std::vector<std::pair<double, double>> history;  // (lb, ub) per iteration
  int iterations = 0;
  ProductionPlan incumbent;
  bool converged = false;
  bool duplicate_stop = false;  // adversary returned an already-pooled scenario
};

// Node potentials over the (period, budget spent) grid; two rows per
// transition (one per cost branch). Requires non-overlap and integral
// gamma_c / delta_t, else throws std::invalid_argument pointing to decompose.
MinMaxResult minmax_nonoverlap_lp(const Instance& inst);

// Master-adversary loop: pool starts at the nominal scenario; each round
// solves the pooled robust LP (lb), evaluates its plan with adv_general_bb
// (ub), and adds the worst-case scenario until ub - lb <= epsilon. A repeated
// scenario (tolerance 1e-9) stops the loop with the gap flagged; max_iter is
// the hard cap.
MinMaxResult decompose(const Instance& inst, double epsilon = 1e-6,
                       int max_iter = 200, DecompositionState* out = nullptr);

}  // namespace lotsize::continuous
