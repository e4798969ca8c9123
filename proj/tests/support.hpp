#pragma once

// Shared fixtures and independent oracles for the test suites. Everything
// here stays out of the library on purpose: the oracles must not share code
// with the implementation paths they check.

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "critgraph/canonical.hpp"
#include "critgraph/graph.hpp"
#include "critgraph/ore.hpp"
#include "critgraph/rng.hpp"

namespace test_support {

using critgraph::Graph;
using critgraph::GraphBuilder;
using critgraph::Rng;
using critgraph::VertexSet;

inline Graph c5_join_k3() { return Graph::join(Graph::cycle(5), Graph::complete(3)); }

// The one-composition 6-Ore graph used across suites: two K6, the replaced
// edge being (0,1), split parts of size 2 and 3. Vertices 0..5 are the
// edge side, 6..10 the vertex-side interior.
inline critgraph::OreComposition k6_compose_k6() {
  VertexSet to_x = VertexSet::of({1, 2});  // neighbors of z=0 in the second K6
  return critgraph::ore_compose(Graph::complete(6), {0, 1}, Graph::complete(6), 0, to_x);
}

inline Graph random_graph(int n, Rng& rng) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.below(2) == 0) b.add_edge(u, v);
  return b.build();
}

inline Graph random_graph_p(int n, int percent, Rng& rng) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.below(100) < static_cast<std::uint64_t>(percent)) b.add_edge(u, v);
  return b.build();
}

// Independent oracle for the clique-family weight: list every K_{k-1} and
// K_{k-2} vertex set by scanning all subsets, then exhaustively enumerate
// disjoint families with no pruning. The cliques are vertex-disjoint but may
// see each other across edges of g; those edges simply stay out of the
// family. Use only for n <= ~12.
inline int naive_clique_family_weight(const Graph& g, int k) {
  int n = g.vertex_count();
  std::vector<std::pair<VertexSet, int>> candidates;  // (vertices, weight)
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int bits = __builtin_popcount(mask);
    if (bits != k - 1 && bits != k - 2) continue;
    VertexSet s;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) s.add(v);
    int edges = 0;
    s.for_each([&](int v) { edges += g.neighbors(v).count_intersection(s); });
    if (edges != bits * (bits - 1)) continue;  // counted twice
    candidates.emplace_back(s, bits == k - 1 ? 2 : 1);
  }
  std::function<int(std::size_t, const VertexSet&)> best =
      [&](std::size_t from, const VertexSet& used) {
        int w = 0;
        for (std::size_t i = from; i < candidates.size(); ++i) {
          if (candidates[i].first.intersects(used)) continue;
          w = std::max(w, candidates[i].second +
                              best(i + 1, used | candidates[i].first));
        }
        return w;
      };
  return best(0, VertexSet{});
}

// All graphs on exactly n vertices up to isomorphism, by canonical
// augmentation from the list on n-1 vertices.
inline std::vector<Graph> all_graphs(int n) {
  std::vector<Graph> current;
  current.push_back(Graph(0));
  for (int size = 1; size <= n; ++size) {
    std::set<std::string> seen;
    std::vector<Graph> next;
    for (const Graph& g : current) {
      int base = g.vertex_count();
      for (std::uint32_t mask = 0; mask < (1u << base); ++mask) {
        GraphBuilder b(base + 1);
        for (auto [u, v] : g.edges()) b.add_edge(u, v);
        for (int v = 0; v < base; ++v)
          if (mask & (1u << v)) b.add_edge(v, base);
        Graph candidate = b.build();
        auto form = critgraph::canonical_form(candidate);
        if (seen.insert(form.key_string()).second) next.push_back(std::move(candidate));
      }
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace test_support
