#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "critgraph/graph.hpp"
#include "critgraph/rational.hpp"
#include "critgraph/structure.hpp"

namespace critgraph {

// Per-vertex initial charge (k-1)d(v) - (k-2)(k+1) - epsilon, exact.
std::vector<Rational> initial_charge(const Graph& g, int k, const Rational& epsilon);

// Charge a degree-d vertex sends each of r receivers: (5d - 28 - eps)/r.
// k = 6 throughout the discharging engine.
Rational psi(int d, int r, const Rational& epsilon);

struct DischargeParams {
  Rational epsilon = make_rational(1, 105);
  int stage2_round_cap = 0;  // 0: default to |V| rounds
  bool check_order_independence = false;  // re-run stage 2 reversed and compare
};

// The engine consumes upward/downward classification and the cluster
// partition through hooks, so synthetic annotations can stand in for the
// structure module in tests.
struct DischargeHooks {
  std::vector<VertexSet> clusters;  // partition of the degree-5 vertices
  // direction(x, y) for degree-5 x adjacent to degree-6/7 y.
  std::function<NeighborDirection(int x, int y)> direction;
  bool budget_exhausted = false;  // set when the classification was truncated

  static DischargeHooks from_structure(const Graph& g, const StructureCaps& caps);
};

struct Transfer {
  int stage = 0;
  std::string rule;
  int from = -1;                // -1 for bookkeeping rows (rule 4 debit, rule 6)
  std::vector<int> receivers;
  Rational amount;              // per receiver
};

struct ChargeLedger {
  int n = 0;
  Rational epsilon;
  // charges[i][v] = charge of v after stage i, i = 0..6.
  std::vector<std::vector<Rational>> charges;
  std::vector<Transfer> transfers;
  std::vector<VertexSet> clusters;  // the partition the run used
  std::vector<int> reserved;
  std::vector<int> set_a, set_b;
  int stage2_rounds = 0;
  bool conserved = false;
  bool partial = false;             // structure hooks ran out of budget
  std::vector<std::string> flags;   // irregular configurations, skipped rules

  Rational total() const;
  Rational stage_sum(int stage, const VertexSet& s) const;
  std::string to_json(const Graph& g) const;
};

// Runs the six-stage engine: stage 1 (degree >= 8 release), stage 2 (rounds
// of the two trigger rules to a fixpoint, happiness guarded per transfer),
// stage 3 (remaining release for degrees >= 7 and 6), the accounting of the
// unsatisfied-component vertex set A and its reserved neighborhood B, then
// the three global rules. Exact rationals everywhere; conservation is
// asserted per stage.
ChargeLedger run_discharge(const Graph& g, const DischargeParams& params,
                           const DischargeHooks& hooks);

struct ComponentSatisfaction {
  VertexSet vertices;
  D5Shape shape;
  std::vector<Rational> stage_sums;        // sums after stages 0..6
  std::vector<bool> satisfied_by_stage;    // sum >= 0 per stage
  std::vector<bool> happy_by_stage;        // sum >= 2 + 2*epsilon per stage
  bool satisfied = false;                  // final verdict
  bool happy = false;
};

std::vector<ComponentSatisfaction> component_satisfaction(const ChargeLedger& ledger,
                                                          const Graph& g);

// Independent-set edge bound: |E(A,B)| <= |A| + sum (i+1)|B_i| with B_i the
// degree-(k-1+i) neighbors of A, plus the l=1 special form. When the bound
// is violated (possible only off the k-critical hypothesis), small instances
// are cross-checked against the choosability consequence.
struct EdgeBoundReport {
  bool applicable = true;
  long lhs = 0;
  long rhs = 0;
  bool pass = false;
  std::vector<long> bucket_sizes;  // |B_1| .. |B_l|
  std::optional<bool> kr_subgraph_found;  // choosable-subgraph cross-check
  std::string note;
};
EdgeBoundReport independent_set_edge_bound(const Graph& g, int k, const VertexSet& a,
                                           int ell);

}  // namespace critgraph
