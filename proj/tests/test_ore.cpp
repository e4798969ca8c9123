#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "critgraph/canonical.hpp"
#include "critgraph/coloring.hpp"
#include "critgraph/ore.hpp"
#include "critgraph/potential.hpp"

#include "support.hpp"

using namespace critgraph;

TEST_CASE("composition sizes and overlap") {
  auto comp = test_support::k6_compose_k6();
  const Graph& g = comp.graph;
  CHECK(g.vertex_count() == 11);
  CHECK(g.edge_count() == 29);
  // Overlap vertices are the replaced edge's endpoints, now nonadjacent.
  CHECK(!g.adjacent(0, 1));
  CHECK(chromatic_number(g) == 6);
  CHECK(is_critical(g, 6));
  CHECK(comp.trace.replay() == g);
}

TEST_CASE("composition rejects bad bipartitions") {
  Graph k6 = Graph::complete(6);
  CHECK_THROWS_AS(ore_compose(k6, {0, 1}, k6, 0, VertexSet{}), InputError);
  CHECK_THROWS_AS(ore_compose(k6, {0, 1}, k6, 0, VertexSet::of({1, 2, 3, 4, 5})),
                  InputError);
  Graph k6e = k6.without_edge(0, 1);
  CHECK_THROWS_AS(ore_compose(k6e, {0, 1}, k6, 0, VertexSet::of({1})), InputError);
}

TEST_CASE("generator sizes are forced by the operation count") {
  for (int k : {4, 5, 6})
    for (int ops : {0, 1, 2, 3}) {
      auto out = generate_k_ore(k, ops, 42);
      CHECK(out.graph.vertex_count() == k + ops * (k - 1));
      CHECK(out.trace.replay() == out.graph);
    }
  CHECK(generate_k_ore(6, 0, 9).graph == Graph::complete(6));
}

TEST_CASE("generator is deterministic per seed") {
  auto a = generate_k_ore(6, 3, 123);
  auto b = generate_k_ore(6, 3, 123);
  CHECK(a.graph == b.graph);
  CHECK(a.trace.to_json() == b.trace.to_json());
  auto c = generate_k_ore(6, 3, 124);
  CHECK(a.graph != c.graph);  // overwhelmingly likely across seeds
}

TEST_CASE("one composition of two K6 has a single isomorphism class per split size") {
  auto direct = test_support::k6_compose_k6();
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto gen = generate_k_ore(6, 1, seed);
    const auto& nd = *gen.trace.node;
    VertexSet to_x;
    for (int v : nd.split_to_x) to_x.add(v);
    int small = std::min(to_x.count(), 5 - to_x.count());
    if (small == 2) CHECK(isomorphic(gen.graph, direct.graph));
  }
}

TEST_CASE("trace json round-trips") {
  auto comp = generate_k_ore(6, 2, 77);
  OreTrace back = OreTrace::from_json(comp.trace.to_json());
  CHECK(back.replay() == comp.graph);
}

TEST_CASE("recognizer base cases") {
  auto rec = recognize_k_ore(Graph::complete(6), 6);
  REQUIRE(rec.status == OreStatus::kKOre);
  CHECK(rec.trace->is_leaf());

  CHECK(recognize_k_ore(test_support::c5_join_k3(), 6).status == OreStatus::kNotKOre);
  CHECK(recognize_k_ore(Graph::complete(7), 6).status == OreStatus::kNotKOre);
  CHECK(recognize_k_ore(Graph::cycle(11), 6).status == OreStatus::kNotKOre);
}

TEST_CASE("generator and recognizer round-trip") {
  OreMemo memo;
  for (int k : {4, 5, 6}) {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      int ops = static_cast<int>(seed % 5);
      auto gen = generate_k_ore(k, ops, seed);
      OreRecognitionOptions opts;
      opts.shared_memo = &memo;
      auto rec = recognize_k_ore(gen.graph, k, opts);
      REQUIRE(rec.status == OreStatus::kKOre);
      CHECK(rec.trace->replay() == gen.graph);
    }
  }
}

TEST_CASE("split recognition on the glued K6") {
  auto comp = test_support::k6_compose_k6();
  const Graph& g = comp.graph;
  // Vertex side plus the overlap pair is a split 6-Ore subgraph.
  VertexSet h = VertexSet::of({0, 1, 6, 7, 8, 9, 10});
  CHECK(is_split_k_ore(g, h, 0, 1, 6) == OreStatus::kKOre);
  // K5 has no nonadjacent pair, so the precondition trips.
  Graph k5 = Graph::complete(5);
  CHECK_THROWS_AS(is_split_k_ore(k5, k5.vertices(), 0, 1, 6), InputError);
}

TEST_CASE("identify of split vertices restores a 6-Ore graph") {
  // The split 6-Ore graph is the vertex side together with the overlap pair;
  // re-identifying the pair gives back K6.
  auto comp = test_support::k6_compose_k6();
  auto side = induced_subgraph(comp.graph, VertexSet::of({0, 1, 6, 7, 8, 9, 10}));
  auto ident = identify_vertices(side.graph, 0, 1);
  CHECK(ident.graph == Graph::complete(6));
  CHECK(recognize_k_ore(ident.graph, 6).status == OreStatus::kKOre);
  // The full composition is not itself a split 6-Ore graph.
  auto whole = identify_vertices(comp.graph, 0, 1);
  CHECK(recognize_k_ore(whole.graph, 6).status == OreStatus::kNotKOre);
}

TEST_CASE("frames") {
  Graph k6 = Graph::complete(6);
  auto leaf = recognize_k_ore(k6, 6);
  Frame f = find_frame(k6, *leaf.trace);
  CHECK(f.vertices == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(f.replacements.empty());

  auto comp = test_support::k6_compose_k6();
  Frame f2 = find_frame(comp.graph, comp.trace);
  CHECK(f2.vertices == std::vector<int>{0, 1, 2, 3, 4, 5});
  REQUIRE(f2.replacements.size() == 1);
  CHECK(f2.replacements[0].split == std::pair<int, int>{0, 1});
  CHECK(f2.replacements[0].interior == VertexSet::of({6, 7, 8, 9, 10}));
  CHECK(validate_frame(comp.graph, f2, 6) == OreStatus::kKOre);
}

TEST_CASE("nested frame when a frame edge is replaced twice") {
  auto first = test_support::k6_compose_k6();
  // Replace the real frame edge (2,3) of the composed graph.
  auto second = ore_compose(first.graph, {2, 3}, Graph::complete(6), 0,
                            VertexSet::of({1, 2}), first.trace.clone());
  Frame f = find_frame(second.graph, second.trace);
  CHECK(f.vertices == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(f.replacements.size() == 2);

  // Now replace an edge inside the first replacement's certificate: the
  // frame keeps one replacement pair with a grown interior.
  auto third = ore_compose(first.graph, {6, 7}, Graph::complete(6), 0,
                           VertexSet::of({1, 2}), first.trace.clone());
  Frame f3 = find_frame(third.graph, third.trace);
  CHECK(f3.vertices == std::vector<int>{0, 1, 2, 3, 4, 5});
  REQUIRE(f3.replacements.size() == 1);
  CHECK(f3.replacements[0].interior.count() == 10);
}

TEST_CASE("frame certificates of generated graphs validate") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto gen = generate_k_ore(6, 2, seed);
    Frame f = find_frame(gen.graph, gen.trace);
    CHECK(validate_frame(gen.graph, f, 6) == OreStatus::kKOre);
    VertexSet seen;
    for (const auto& rep : f.replacements) {
      CHECK(!rep.interior.intersects(seen));
      seen |= rep.interior;
    }
  }
}

TEST_CASE("generated graphs are k-critical with tight density") {
  for (int k : {4, 5, 6}) {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      auto gen = generate_k_ore(k, 1 + static_cast<int>(seed % 2), seed);
      CHECK(is_critical(gen.graph, k));
      CHECK(ky_potential(gen.graph, k) == Rational(k * (k - 3)));
    }
  }
}

TEST_CASE("clique-weight superadditivity across compositions") {
  // T(G) >= T(G1) + T(G2) - 2, with -1 when either side is complete.
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    auto base = generate_k_ore(6, 1 + static_cast<int>(seed % 2), seed);
    int t1 = clique_family_weight(base.graph, 6).value;
    int t2 = clique_family_weight(Graph::complete(6), 6).value;
    auto edges = base.graph.edges();
    auto comp = ore_compose(base.graph, edges[seed % edges.size()], Graph::complete(6), 0,
                            VertexSet::of({1}), base.trace.clone());
    int t = clique_family_weight(comp.graph, 6).value;
    CHECK(t >= t1 + t2 - 1);
  }
}
