#pragma once

#include <optional>
#include <string>
#include <vector>

#include "critgraph/graph.hpp"
#include "critgraph/ore.hpp"
#include "critgraph/rational.hpp"

namespace critgraph {

// The constant family (epsilon, delta, P, Q, Delta, Gamma) for one k.
// Construction validates the five constraint clauses; all later potential
// arithmetic may then assume them.
struct PotentialParams {
  int k = 0;
  Rational epsilon, delta, p_big, q_big, delta_big, gamma_big;

  // Throws InputError naming the first violated clause.
  static PotentialParams validated(int k, Rational epsilon, Rational delta,
                                   Rational p_big, Rational q_big, Rational delta_big,
                                   Rational gamma_big);

  // The k=6 constants: epsilon=1/105, delta=10/105, P=20/21, Q=2/7,
  // Delta=32/21, Gamma=2+10/105.
  static PotentialParams for_k6();

  // Clause values as exact rationals, for reporting. Index 1..5.
  struct ClauseReport {
    int clause;
    bool holds;
    bool equality;
    std::string lhs, rhs;
  };
  std::vector<ClauseReport> clause_reports() const;
};

// Maximum of 2a+b over families of vertex-disjoint cliques, where a counts
// K_{k-1} components and b counts K_{k-2} components.
struct CliqueFamilyWeight {
  int value = 0;
  std::vector<VertexSet> family;  // a witness achieving the value
};
CliqueFamilyWeight clique_family_weight(const Graph& g, int k);

// All cliques of exactly `size` vertices.
std::vector<VertexSet> cliques_of_size(const Graph& g, int size);

// (k-2)(k+1)|V| - 2(k-1)|E|, exact.
Rational ky_potential(const Graph& g, int k);

// ky + epsilon|V| - delta*T, exact.
Rational eps_delta_potential(const Graph& g, const PotentialParams& params);

Rational subset_potential(const Graph& g, const VertexSet& r,
                          const PotentialParams& params);

// One density claim evaluated on a concrete graph.
struct DensityClaim {
  std::string name;
  bool applicable = false;
  bool pass = false;
  bool equality = false;
  std::string lhs, rhs;  // exact "num/den" strings; empty when inapplicable
  std::string note;
};

struct DensityReport {
  bool critical = false;       // whether the input was k-critical
  OreStatus ore_status = OreStatus::kNotKOre;
  std::vector<DensityClaim> claims;
  int tightness = -1;  // largest i in 0..3 with p > k(k-3) - P - Q + i*delta
  bool all_applicable_pass() const;
};

// Evaluates the density bounds on one graph: the base bound, the strengthened
// bound when the graph is not k-Ore (y_4=2, y_5=4, y_k=k^2-5k+2), the k-Ore
// tightness and T bound, and the potential-threshold tightness classes.
// Non-critical inputs yield a report flagged inapplicable.
DensityReport check_density_theorems(const Graph& g, int k,
                                     const std::optional<PotentialParams>& params,
                                     const OreRecognitionOptions& ore_opts = {});

}  // namespace critgraph
