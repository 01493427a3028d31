#pragma once

#include <cstdint>
#include <vector>

#include "lotsize/core.hpp"
#include "lotsize/linprog.hpp"

// Worst-case evaluation under the continuous budget: the total absolute
// deviation of the cumulative demands is capped by gamma_c. Non-overlapping
// instances with integral data reduce to a longest path over budget layers
// (pseudopolynomial DP); the general case is solved exactly by
// branch-and-bound on a big-M MIP. Also hosts the Subset-Sum hard-instance
// generator used to exercise the NP-hard corner.

namespace lotsize::continuous {

// Piecewise description of the deviation gain c_t on [0, delta_t]: the max of
// two increasing affine branches minus the nominal max, so convex, c_t(0)=0,
// at most one interior breakpoint.
struct DeviationCost {
  int t = 0;
  std::vector<double> breaks;  // {0, [crossing], delta_t}
  std::vector<double> slopes;  // one per segment
};

DeviationCost deviation_profile(const ProductionPlan& plan,
                                const Instance& inst, int t);

// Gain of spending deviation budget d on period t: best of pushing the
// demand down (carry branch) or up (backorder branch), relative to nominal.
// Throws std::domain_error outside [0, delta_t].
double deviation_cost(const ProductionPlan& plan, const Instance& inst, int t,
                      double d);

// Pseudopolynomial DP for non-overlapping instances with integral gamma_c and
// delta_t: states (period, budget spent), transitions spend 0..delta_t.
// Throws std::invalid_argument on non-integral data (use adv_general_bb).
AdvResult adv_nonoverlap_dp(const ProductionPlan& plan, const Instance& inst,
                            Exec exec = Exec::parallel);

// Subset-Sum reduction: n periods, nominal demands t*sum(a), deviations a_t,
// budget b, and a plan half a step above each nominal. The worst case reaches
// exactly b iff some subset of a sums to b. Always non-overlapping.
std::pair<Instance, ProductionPlan> subset_sum_instance(
    const std::vector<std::int64_t>& a, std::int64_t b);

// Big-M MIP for the general case: signed deviations, absolute-value
// surrogates for the budget row, monotonicity rows, and a binary per period
// selecting the active cost branch.
struct MipModel {
  lp::LinearProgram relax;     // LP relaxation; gamma columns get unit bounds
  std::vector<int> delta_var;  // column of each signed deviation
  std::vector<int> gamma_var;  // column of each branch binary
  std::vector<double> big_m;
};

MipModel build_adv_mip(const ProductionPlan& plan, const Instance& inst);

// Exact optimum of the MIP by best-first branch-and-bound on the branch
// binaries (branch on the one nearest 0.5); leaves are plain LPs. Handles
// overlap and fractional data.
AdvResult adv_general_bb(const ProductionPlan& plan, const Instance& inst);

}  // namespace lotsize::continuous
