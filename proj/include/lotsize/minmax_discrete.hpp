#pragma once

#include <vector>

#include "lotsize/core.hpp"
#include "lotsize/adv_discrete.hpp"

// Robust plan computation under the discrete budget. Non-overlapping
// instances: a compact LP obtained by dualizing the inner selection problem.
// General instances: split every layered-graph node by budget-used, then take
// the dual of the longest-path LP over the split graph, with the production
// variables linked in.

namespace lotsize::discrete {

// Budget-expanded copy of LayeredGraph: node (u, j) means "at u having spent
// j units of budget". An arc of weight w maps to (u, j) -> (head, j + w) for
// every j with j + w <= gamma_d. Nodes unreachable from the source copy or
// disconnected from the sink are pruned.
struct SplitGraph {
  struct Node {
    int layer = 0;
    int used = 0;
    double demand = 0;
  };
  struct Arc {
    int from = 0, to = 0;
    int period = 0;      // layer of the head; T+1 for sink arcs
    double demand = 0;   // head demand value (defines the cost rows)
    double cost = 0;     // numeric cost when built with a plan, else 0
  };
  int T = 0;
  int budget = 0;
  std::vector<Node> nodes;
  std::vector<std::vector<int>> layer;  // 0..T+1
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> in;

  int source() const { return layer.front().front(); }
  int sink() const { return layer.back().front(); }
};

// Compact robust LP for non-overlapping instances: per-period epigraph
// variables for the nominal cost, dual multipliers (alpha, gamma_t) of the
// budget selection, and the production variables.
MinMaxResult minmax_nonoverlap_lp(const Instance& inst);

// Builds the split graph. With a plan, arcs carry numeric costs (usable by
// split_longest_path); without one, costs stay symbolic via (period, demand)
// and the graph only feeds the LP builder.
SplitGraph build_split_graph(const Instance& inst,
                             const ProductionPlan* plan = nullptr);

// Plain DAG longest path over numeric arc costs; equals the budgeted DP value
// when the arcs were priced with the same plan.
double split_longest_path(const SplitGraph& g);

// Dual of the longest-path LP over the split graph: one potential per node,
// two rows per arc (one per cost branch), production linked in. Minimizes the
// sink potential = the worst-case cost of the chosen plan.
MinMaxResult minmax_general_lp(const Instance& inst);

}  // namespace lotsize::discrete
