#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "critgraph/graph.hpp"

namespace critgraph {

// Recursive record of an Ore-composition history. A trace describes a graph
// on labels 0..n-1 of its own level; node maps embed the side graphs' labels
// into the composed labels, with the split vertex mapped to -1 (its halves
// are the images of the replaced edge's endpoints).
struct OreTrace {
  int k = 0;

  struct Node {
    std::unique_ptr<OreTrace> edge_side;
    std::unique_ptr<OreTrace> vertex_side;
    std::pair<int, int> replaced_edge;  // edge-side labels
    int split_vertex = -1;              // vertex-side label
    std::vector<int> split_to_x;        // vertex-side labels attached to x
    std::vector<int> edge_map;          // edge-side label -> composed label
    std::vector<int> vertex_map;        // vertex-side label -> composed label; -1 at z
  };

  // Leaf when node is null: the graph is K_k on labels 0..k-1.
  std::unique_ptr<Node> node;

  bool is_leaf() const { return node == nullptr; }
  int vertex_count() const;

  OreTrace clone() const;
  // Rebuilds the composed graph bottom-up; validation compares this against
  // the graph the trace claims to describe.
  Graph replay() const;

  std::string to_json() const;
  static OreTrace from_json(const std::string& text);
};

// Ore-composition of g1 (edge-side, edge xy deleted) and g2 (vertex-side,
// z split so that x inherits split_to_x and y the rest). Composed labels:
// g1 keeps its labels; g2's vertices other than z follow in increasing order.
struct OreComposition {
  Graph graph;
  OreTrace trace;
};
// Side traces may be omitted when the corresponding side is a complete graph
// (a trace leaf); supplied traces must replay to their side exactly.
OreComposition ore_compose(const Graph& g1, std::pair<int, int> xy, const Graph& g2,
                           int z, const VertexSet& split_to_x,
                           std::optional<OreTrace> edge_trace = {},
                           std::optional<OreTrace> vertex_trace = {});

// `ops` uniformly random compositions of the current graph with a fresh K_k;
// each step draws the role of the current graph, the replaced edge, the split
// vertex, and the bipartition. Deterministic for a given seed.
OreComposition generate_k_ore(int k, int ops, std::uint64_t seed);

enum class OreStatus {
  kKOre,
  kNotKOre,
  kBudgetExhausted,
};

struct OreRecognition {
  OreStatus status = OreStatus::kNotKOre;
  std::optional<OreTrace> trace;  // present iff status == kKOre
  long nodes_used = 0;
};

// Memo table keyed by canonical form. Traces are stored in canonical labels
// and remapped to the caller's labels on a hit. Definitive verdicts only;
// budget-truncated searches are never cached.
struct OreMemo {
  struct Entry {
    bool is_ore = false;
    std::shared_ptr<const OreTrace> canonical_trace;
  };
  std::map<std::string, Entry> entries;
};

struct OreRecognitionOptions {
  long node_budget = 1'000'000;
  // Pass the same memo across calls to amortize repeated side graphs; when
  // null each call uses a private table.
  OreMemo* shared_memo = nullptr;
};

// Decides whether g is k-Ore by searching nonadjacent 2-cuts and recursing
// on the candidate edge-side / vertex-side reconstructions, memoized on
// canonical forms. The overlap pair of any Ore-composition is a nonadjacent
// 2-cut, so restricting the cut search loses nothing.
OreRecognition recognize_k_ore(const Graph& g, int k,
                               const OreRecognitionOptions& opts = {});

// True iff identifying a,b in g[h] yields a k-Ore graph. a,b must lie in h,
// be nonadjacent, and have positive degree inside g[h].
OreStatus is_split_k_ore(const Graph& g, const VertexSet& h, int a, int b, int k,
                         const OreRecognitionOptions& opts = {});

// A k-vertex skeleton of a k-Ore graph: every pair of frame vertices is
// either a real edge or a replacement edge carrying a split-k-Ore
// certificate whose split vertices are that pair.
struct Frame {
  struct Replacement {
    std::pair<int, int> split;
    VertexSet interior;  // certificate vertices minus the split pair
  };
  std::vector<int> vertices;
  std::vector<Replacement> replacements;

  bool is_replacement(int u, int v) const {
    for (const auto& r : replacements)
      if ((r.split.first == u && r.split.second == v) ||
          (r.split.first == v && r.split.second == u))
        return true;
    return false;
  }
};

// Frame computed structurally from the trace: the edge-side frame lifts to
// the composition, and the replaced edge either becomes a replacement pair
// or grows the certificate it already sits inside.
Frame find_frame(const Graph& g, const OreTrace& trace);

// Checks frame invariants against g (real edges exist, replacement pairs are
// nonadjacent, interiors are disjoint, certificates recognize as split k-Ore).
// kKOre means valid; kBudgetExhausted means the certificate recognition ran
// out of budget before reaching a verdict.
OreStatus validate_frame(const Graph& g, const Frame& frame, int k,
                         const OreRecognitionOptions& opts = {});

}  // namespace critgraph
