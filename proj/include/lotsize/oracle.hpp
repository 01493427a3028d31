#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lotsize/core.hpp"

// Independent cross-checks: the original five-variable-family LP for the
// deterministic problem, exhaustive enumerations for both budget kinds, a
// grid search for tiny robust instances, and the seeded random-instance
// generator the property tests run on. Deliberately shares no algorithmic
// code with the solvers it verifies.

namespace lotsize::oracle {

struct OracleReport {
  std::string pair;            // "solver vs oracle" being compared
  std::string instance_digest;
  double max_discrepancy = 0;
  std::string witness;         // description of the worst input
};

// Deterministic optimum for a fixed scenario, solved as the original LP over
// production, inventory, backorder, and sales variables.
struct DetLpResult {
  ProductionPlan plan;
  double value = 0;
  std::vector<double> inventory, backorder, sales;
};
DetLpResult det_lp_optimum(const Instance& inst, const Scenario& scenario);

// Exhaustive max over monotone candidate-value scenarios with at most
// gamma_d deviations. Guarded to T <= 8.
AdvResult brute_adv_discrete(const ProductionPlan& plan, const Instance& inst,
                             Exec exec = Exec::parallel);

enum class BruteMode {
  integral,  // enumerate integral deviation vectors (T <= 6)
  pattern,   // solve one LP per branch pattern, 2^T of them (T <= 10)
};
AdvResult brute_adv_continuous(const ProductionPlan& plan,
                               const Instance& inst, BruteMode mode,
                               Exec exec = Exec::parallel);

// Grid search over plans, each scored by the matching brute adversary; an
// upper bound on the robust optimum within grid resolution. Guarded to
// T <= 3.
std::pair<ProductionPlan, double> brute_minmax(const Instance& inst,
                                               double grid_step);

// All vertex scenarios with at most max_dev deviating periods (monotone
// selections from the candidate sets). Used to feed master_minmax.
std::vector<Scenario> enumerate_vertex_scenarios(const Instance& inst,
                                                 int max_dev,
                                                 std::size_t cap = 200000);

// Finite-scenario robust LP: minimize the worst cost over an explicit
// scenario list. With the full vertex pool this equals the true robust
// optimum on discrete instances.
MinMaxResult master_minmax(const Instance& inst,
                           const std::vector<Scenario>& pool);

// Seeded random instances per test regime. Demands are cumulative sums of
// positive uniforms; deviations respect the regime; minmax regimes keep
// per-period capacity finite so the robust LPs stay bounded.
struct GenConfig {
  int T = 4;
  Budget::Kind kind = Budget::Kind::discrete;
  bool non_overlapping = true;
  bool integral = false;      // integral demands, deviations, and budget
  bool with_capacity = false; // finite per-period capacity (minmax regimes)
};
Instance random_instance(GenConfig cfg, std::uint64_t seed);

// A nonnegative plan drawn at the demand scale, feasible for the instance.
ProductionPlan random_plan(const Instance& inst, std::uint64_t seed);

}  // namespace lotsize::oracle
