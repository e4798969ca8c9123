#pragma once

#include <optional>
#include <string>
#include <vector>

#include "critgraph/graph.hpp"
#include "critgraph/ore.hpp"
#include "critgraph/potential.hpp"

namespace critgraph {

// A diamond is an induced K_k minus one edge whose non-endpoint vertices all
// have host degree k-1; an emerald is an induced K_{k-1} with all host
// degrees k-1.
struct Gem {
  enum class Kind { kDiamond, kEmerald };
  Kind kind;
  VertexSet vertices;
  std::pair<int, int> endpoints{-1, -1};  // diamond only
};

std::vector<Gem> find_gems(const Graph& g, int k);
bool is_ungemmed(const Graph& g, int k);

// Partition of the degree-(k-1) vertices into maximal sets sharing one
// closed neighborhood. Singletons allowed. Classes are sorted by least
// member; output order is deterministic.
std::vector<VertexSet> find_clusters(const Graph& g, int k);

// Cloning x with y: y is removed, a twin of x (adjacent to N(x)-y and to x)
// takes y's label, so |V| is unchanged. Requires d(x) = k-1 and xy an edge.
Graph clone_vertex(const Graph& g, int x, int y, int k);

// Cluster form: clones the least member of the cluster with y. The result
// does not depend on the member chosen (they share a closed neighborhood).
Graph clone_cluster(const Graph& g, const VertexSet& cluster, int y, int k);

enum class D5Shape {
  kSingleton,
  kInducedPath2,
  kClusterPair,
  kClusterPairPlusVertexTriangle,
  kPlainEdge,
  kPlainTriangle,
  kOther,
};

const char* d5_shape_name(D5Shape s);

struct D5Component {
  VertexSet vertices;
  D5Shape shape;
};

// Components of the degree-5 subgraph labeled by the six-shape taxonomy;
// anything outside it (size > 3, or a triangle inside one cluster) is
// kOther. Total: every component gets exactly one tag.
std::vector<D5Component> classify_d5(const Graph& g);

// Search caps for certificate-backed detectors. Budgets count candidate
// interiors / frames examined; recognition_budget bounds each split-k-Ore
// test.
struct StructureCaps {
  int interior_cap = 9;
  long candidate_budget = 20000;
  long frame_budget = 200000;
  long recognition_budget = 200000;
};

// K_{k-1} (proto-gadget) or K_{k-2} (kite) with replacement edges: the
// distinguished frame plus disjoint split-k-Ore certificates for the
// nonadjacent pairs.
struct ProtoGadget {
  std::vector<int> frame;
  std::vector<Frame::Replacement> replacements;
};

struct ProtoGadgetSearch {
  std::vector<ProtoGadget> gadgets;
  bool budget_exhausted = false;
};

ProtoGadgetSearch find_proto_gadgets(const Graph& g, int k, int frame_size,
                                     const StructureCaps& caps);

enum class NeighborDirection { kDownward, kUpward, kInapplicable };

struct DirectionResult {
  NeighborDirection direction = NeighborDirection::kInapplicable;
  bool budget_exhausted = false;
};

// x is downward of y when some proto-gadget has x on its frame and y off it;
// upward otherwise. Only defined for d(x) = k-1 and d(y) in {k, k+1}.
// Upward verdicts carry a budget flag when the search was truncated, since
// the definition is a pure existential.
DirectionResult classify_neighbor_direction(const Graph& g, int k, int x, int y,
                                            const StructureCaps& caps);

// Hypotheses the caller certifies before conclusion checks run. The checker
// trusts these; certifying them on graphs that do not satisfy them simply
// exercises the conclusion tests (which may then honestly fail).
struct CertifiedHypotheses {
  bool k_critical = false;
  bool ungemmed = false;
  int tight_level = -1;            // certified i-tightness, -1 = not certified
  int no_edge_addition_up_to = 0;  // no i-edge-addition for 1 <= i <= this
};

struct LemmaCheck {
  std::string id;
  enum class Status { kPass, kFail, kSkipped, kPassWithBudget } status;
  long instances = 0;
  std::vector<std::string> failures;
};

struct StructuralLemmaReport {
  std::vector<LemmaCheck> checks;
  bool all_pass_or_skipped() const {
    for (const auto& c : checks)
      if (c.status == LemmaCheck::Status::kFail) return false;
    return true;
  }
};

// Exhaustively checks conclusions of the structural lemmas whose hypotheses
// the caller certified, over all qualifying vertex tuples. `params` enables
// the checks that need potential thresholds (clone tightness, dangling).
StructuralLemmaReport check_structural_lemmas(const Graph& g, int k,
                                              const std::optional<PotentialParams>& params,
                                              const CertifiedHypotheses& hyps,
                                              const StructureCaps& caps);

// Dangling test (k=6): x,y adjacent degree-5 vertices in different clusters,
// the clone of y with x is 2-tight and ungemmed, and a kite isolates x from
// y in the stated way.
struct DanglingResult {
  bool dangles = false;
  bool budget_exhausted = false;
};
DanglingResult is_dangling(const Graph& g, int x, int y, const PotentialParams& params,
                           const StructureCaps& caps);

}  // namespace critgraph
