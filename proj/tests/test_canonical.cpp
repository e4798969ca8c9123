#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "critgraph/canonical.hpp"
#include "critgraph/rng.hpp"

#include <algorithm>

#include "support.hpp"

using namespace critgraph;

namespace {

Graph permuted(const Graph& g, Rng& rng) {
  std::vector<int> perm(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  for (std::size_t i = perm.size(); i > 1; --i)
    std::swap(perm[i - 1], perm[rng.below(i)]);
  GraphBuilder b(g.vertex_count());
  for (auto [u, v] : g.edges())
    b.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return b.build();
}

}  // namespace

TEST_CASE("canonical form is invariant under relabeling") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng.below(11));
    Graph g = test_support::random_graph(n, rng);
    Graph h = permuted(g, rng);
    CHECK(canonical_form(g) == canonical_form(h));
    CHECK(isomorphic(g, h));
  }
}

TEST_CASE("canonical form separates near-identical graphs") {
  Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(!isomorphic(p4, star));
  Graph c6 = Graph::cycle(6);
  Graph two_triangles = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(!isomorphic(c6, two_triangles));
}

TEST_CASE("labeling realizes the key") {
  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = test_support::random_graph(9, rng);
    auto form = canonical_form(g);
    Graph relabeled = apply_canonical_labeling(g, form);
    CHECK(canonical_form(relabeled).key == form.key);
  }
}

TEST_CASE("graph counts by augmentation match the literature") {
  // Numbers of simple graphs up to isomorphism on 1..7 vertices.
  const std::size_t expected[] = {1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n)
    CHECK(test_support::all_graphs(n).size() == expected[n - 1]);
}
