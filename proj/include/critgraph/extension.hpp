#pragma once

#include <optional>
#include <string>
#include <vector>

#include "critgraph/coloring.hpp"
#include "critgraph/graph.hpp"
#include "critgraph/potential.hpp"

namespace critgraph {

// One critical extension of a colored subset: identify the color classes of
// g[R], complete them to a clique, extract a k-critical subgraph W, and read
// off the core X, the extended set R', and the incompleteness i.
struct ExtensionRecord {
  int k = 0;
  VertexSet base;             // R
  std::vector<int> coloring;  // colors of g[R] indexed by host vertex, 0 off R
  Graph extender;             // W, on its own labels
  int core_size = 0;          // |X|
  std::vector<int> core_colors;  // which color classes the core vertices are
  VertexSet extended;         // R'
  int incompleteness = 0;     // i >= 0
  bool spanning = false;
  bool complete() const { return incompleteness == 0; }

  std::string to_json() const;
};

enum class ExtensionOutcome {
  kExtension,     // record produced
  kNoExtension,   // the identified graph was (k-1)-colorable
};

struct ExtensionResult {
  ExtensionOutcome outcome = ExtensionOutcome::kNoExtension;
  std::optional<ExtensionRecord> record;
};

// Builds one critical extension for a proper (k-1)-coloring phi of g[R].
// phi is indexed by host vertices (entries outside R ignored).
ExtensionResult build_extension(const Graph& g, const VertexSet& r,
                                const std::vector<int>& phi, int k);

// Enumerates proper (k-1)-colorings of g[r] with color 1 pinned to the least
// boundary vertex (a sound quotient: the collapsibility inequality is
// invariant under color permutation). Calls visit for each; stops when visit
// returns false or the budget runs out.
struct ColoringEnumeration {
  long budget = 50'000;
};
enum class EnumStatus { kComplete, kStopped, kBudgetExhausted };
EnumStatus for_each_boundary_fixed_coloring(
    const Graph& g, const VertexSet& r, int k,
    const std::function<bool(const std::vector<int>&)>& visit,
    const ColoringEnumeration& opts = {});

// i-collapsibility: every (k-1)-coloring of g[R] admits a color c such that
// at most i boundary edges leave the other color classes.
struct CollapsibilityResult {
  bool decided = false;  // false when the coloring budget ran out
  bool collapsible = false;
  long colorings_checked = 0;
};
CollapsibilityResult is_i_collapsible(const Graph& g, const VertexSet& r, int i, int k,
                                      const ColoringEnumeration& opts = {});

// Search for at most `i` non-edges whose addition creates a k-critical
// subgraph on a proper vertex subset.
struct EdgeAdditionCaps {
  long set_budget = 20'000;
};
struct EdgeAdditionWitness {
  std::vector<std::pair<int, int>> added;  // S
  VertexSet subgraph_vertices;             // V(H)
  Graph subgraph;                          // H on its own labels
};
struct EdgeAdditionResult {
  std::optional<EdgeAdditionWitness> witness;
  bool budget_exhausted = false;
};
EdgeAdditionResult find_i_edge_addition(const Graph& g, int i, int k,
                                        const EdgeAdditionCaps& caps = {});

// Exact evaluation of the extension potential inequalities on one record:
// the submodular bound, the drop bound (only when g[R] is not a clique), and
// the witness bound for edge additions.
struct InequalityCheck {
  std::string name;
  bool applicable = false;
  bool pass = false;
  std::string lhs, rhs;
};
std::vector<InequalityCheck> check_potential_inequalities(const Graph& g,
                                                          const ExtensionRecord& record,
                                                          const PotentialParams& params);

// Witness-side bound: p_G(V(H)) <= p(G) + P + Q + 2i(k-1) + i*delta.
InequalityCheck check_edge_addition_inequality(const Graph& g,
                                               const EdgeAdditionWitness& witness,
                                               const PotentialParams& params);

}  // namespace critgraph
