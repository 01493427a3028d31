#pragma once

#include <vector>

#include "lotsize/core.hpp"

// Worst-case evaluation under the discrete budget: at most gamma_d cumulative
// demands may leave their nominal values. Non-overlapping instances reduce to
// picking the gamma_d most profitable deviations; general instances become a
// budget-constrained longest path in a layered DAG over the candidate demand
// values.

namespace lotsize::discrete {

// Layered DAG for the budgeted longest-path reduction. Layer 0 holds the
// source, layers 1..T one node per candidate demand value, layer T+1 the
// sink. An arc into layer k costs the period-k cost of its head value and
// weighs 1 iff the head deviates from nominal; sink arcs are free.
struct LayeredGraph {
  struct Node {
    int layer = 0;
    double demand = 0;  // meaningless for source/sink
  };
  struct Arc {
    int from = 0, to = 0;
    double cost = 0;
    int weight = 0;  // 1 iff head demand != nominal demand of its layer
  };
  int T = 0;
  int budget = 0;  // path weight bound W = gamma_d
  std::vector<Node> nodes;
  std::vector<std::vector<int>> layer;  // node ids per layer, 0..T+1
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> in;  // arc ids entering each node

  int source() const { return layer.front().front(); }
  int sink() const { return layer.back().front(); }
};

// Gain of deviating period t all the way to its interval endpoint, relative
// to staying nominal: max at the endpoints minus max at nominal. Always >= 0.
std::vector<double> adv_coefficients(const ProductionPlan& plan,
                                     const Instance& inst);

// O(T log T) selection for non-overlapping instances: deviate the periods
// with the gamma_d largest strictly positive coefficients (ties -> lower
// period), each to the endpoint whose branch dominates (+delta on ties).
AdvResult adv_nonoverlap(const ProductionPlan& plan, const Instance& inst);

// Candidate-value layers, monotonicity arcs (demand of tail <= demand of
// head), connectivity-pruned from both ends.
LayeredGraph build_rlp_graph(const ProductionPlan& plan, const Instance& inst);

// Budget-constrained longest path over build_rlp_graph via DP on
// (layer, node, budget used); works for overlapping instances too.
AdvResult adv_general_dp(const ProductionPlan& plan, const Instance& inst,
                         Exec exec = Exec::parallel);

}  // namespace lotsize::discrete
