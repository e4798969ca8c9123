#pragma once

#include <optional>
#include <vector>

#include "critgraph/graph.hpp"

namespace critgraph {

// Proper coloring witness: colors are 1..c. Only produced once verified.
struct Coloring {
  std::vector<int> colors;
};

// Decides whether g has a proper c-coloring; on success the witness is the
// first coloring found by the deterministic DSATUR search, so golden tests
// can pin it.
std::optional<Coloring> find_coloring(const Graph& g, int color_count);
bool is_colorable(const Graph& g, int color_count);

bool is_proper_coloring(const Graph& g, const std::vector<int>& colors, int color_count);

int chromatic_number(const Graph& g);

// Greedy clique used as a coloring lower bound; exactness is not required
// here (the potential module owns exact clique search).
VertexSet greedy_clique(const Graph& g);

// chi(g) = k and chi(g - e) <= k-1 for every edge e. Deleting a vertex is
// dominated by deleting any incident edge first, so edge deletions suffice;
// see docs/notes.md for the one-paragraph argument.
bool is_critical(const Graph& g, int k);

struct CriticalSubgraph {
  Graph graph;
  std::vector<int> labels;  // labels[new_vertex] = vertex of the input graph
};

// Greedily deletes vertices (lowest index first) and then edges while the
// graph stays (k-1)-uncolorable; the result is k-critical.
// Requires g itself to be (k-1)-uncolorable.
CriticalSubgraph extract_critical_subgraph(const Graph& g, int k);

struct ChoosabilityOptions {
  int demand_cap = 24;  // reject when sum of f(v) exceeds this
};

// True iff for every assignment of color lists with |L(v)| = f(v), drawn from
// a universe of sum(f) colors, an L-coloring exists. List assignments are
// enumerated up to universe relabeling (colors first appear in increasing
// order), which is exhaustive because a counterexample uses at most sum(f)
// distinct colors.
bool is_f_choosable(const Graph& g, const std::vector<int>& f,
                    const ChoosabilityOptions& opts = {});

}  // namespace critgraph
