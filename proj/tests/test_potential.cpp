#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "critgraph/potential.hpp"
#include "critgraph/rng.hpp"

#include "support.hpp"

using namespace critgraph;

TEST_CASE("the k=6 constants satisfy every clause, three with equality") {
  auto params = PotentialParams::for_k6();
  auto clauses = params.clause_reports();
  REQUIRE(clauses.size() == 5);
  for (const auto& c : clauses) CHECK(c.holds);
  CHECK(clauses[2].equality);  // (Gamma-2) + Q + 6 delta = P
  CHECK(clauses[3].equality);  // P + Q + 3 delta = Delta
  CHECK(clauses[4].equality);  // Delta + 5 delta = 2
  CHECK(params.delta_big + 5 * params.delta == Rational(2));
}

TEST_CASE("invalid parameter families are rejected with the clause named") {
  CHECK_THROWS_AS(PotentialParams::validated(6, make_rational(1, 105),
                                             make_rational(1, 105),  // delta too small
                                             make_rational(20, 21), make_rational(2, 7),
                                             make_rational(32, 21),
                                             Rational(2) + make_rational(10, 105)),
                  InputError);
  CHECK_THROWS_AS(PotentialParams::validated(6, make_rational(1, 2), Rational(5),
                                             make_rational(20, 21), make_rational(2, 7),
                                             make_rational(32, 21), Rational(3)),
                  InputError);
}

TEST_CASE("clique-family weight on the named graphs") {
  CHECK(clique_family_weight(Graph::complete(6), 6).value == 2);
  CHECK(clique_family_weight(Graph::complete(3), 6).value == 0);
  CHECK(clique_family_weight(test_support::k6_compose_k6().graph, 6).value == 4);
  CHECK(clique_family_weight(Graph::complete(6).without_edge(0, 1), 6).value == 2);

  auto witness = clique_family_weight(test_support::k6_compose_k6().graph, 6);
  int recomputed = 0;
  VertexSet used;
  for (const auto& c : witness.family) {
    CHECK(!c.intersects(used));
    used |= c;
    if (c.count() == 5) recomputed += 2;
    if (c.count() == 4) recomputed += 1;
  }
  CHECK(recomputed == witness.value);
}

TEST_CASE("branch and bound matches the exhaustive oracle up to ten vertices") {
  Rng rng(31);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 4 + static_cast<int>(rng.below(7));
    Graph g = test_support::random_graph_p(n, 40 + static_cast<int>(rng.below(50)), rng);
    CHECK(clique_family_weight(g, 6).value == test_support::naive_clique_family_weight(g, 6));
  }
  for (int n = 4; n <= 8; ++n)
    CHECK(clique_family_weight(Graph::complete(n), 6).value ==
          test_support::naive_clique_family_weight(Graph::complete(n), 6));
}

TEST_CASE("removing a vertex set drops the weight by at most its size") {
  Rng rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = test_support::random_graph_p(9, 60, rng);
    int t = clique_family_weight(g, 6).value;
    VertexSet removed;
    for (int v = 0; v < 9; ++v)
      if (rng.below(3) == 0) removed.add(v);
    auto rest = induced_subgraph(g, g.vertices() - removed);
    CHECK(clique_family_weight(rest.graph, 6).value >= t - removed.count());
  }
}

TEST_CASE("adding edges never decreases the clique-family weight") {
  Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = test_support::random_graph(8, rng);
    int before = clique_family_weight(g, 6).value;
    for (int u = 0; u < 8; ++u)
      for (int v = u + 1; v < 8; ++v) {
        if (g.adjacent(u, v)) continue;
        CHECK(clique_family_weight(g.with_edge(u, v), 6).value >= before);
        break;
      }
  }
}

TEST_CASE("ky potential of the named graphs") {
  CHECK(ky_potential(Graph::complete(6), 6) == Rational(18));
  CHECK(ky_potential(test_support::k6_compose_k6().graph, 6) == Rational(18));
  CHECK(ky_potential(test_support::c5_join_k3(), 6) == Rational(-6));
}

TEST_CASE("eps-delta potential of the named graphs") {
  auto params = PotentialParams::for_k6();
  CHECK(eps_delta_potential(Graph::complete(6), params) ==
        Rational(18) + 6 * params.epsilon - 2 * params.delta);
  CHECK(eps_delta_potential(Graph::complete(6), params) == make_rational(268, 15));
  CHECK(eps_delta_potential(Graph(1), params) == Rational(28) + params.epsilon);

  const Graph glued = test_support::k6_compose_k6().graph;
  Rational p = eps_delta_potential(glued, params);
  CHECK(p == Rational(18) + 11 * params.epsilon - 4 * params.delta);
  // Bound for non-complete 6-Ore graphs, met with equality here.
  CHECK(p == Rational(18) + 11 * params.epsilon -
                 (Rational(2) + Rational(10) / 5) * params.delta);
}

TEST_CASE("subset potentials") {
  auto params = PotentialParams::for_k6();
  const Graph glued = test_support::k6_compose_k6().graph;
  CHECK(subset_potential(glued, glued.vertices(), params) ==
        eps_delta_potential(glued, params));
  // The edge side induces K6 minus an edge.
  CHECK(subset_potential(glued, VertexSet::range(6), params) ==
        Rational(28) + 6 * params.epsilon - 2 * params.delta);
  CHECK(subset_potential(glued, VertexSet::of({3}), params) ==
        Rational(28) + params.epsilon);
}

TEST_CASE("density report on K6") {
  auto report = check_density_theorems(Graph::complete(6), 6, PotentialParams::for_k6());
  CHECK(report.critical);
  CHECK(report.ore_status == OreStatus::kKOre);
  CHECK(report.all_applicable_pass());
  CHECK(report.tightness == 3);
  bool saw_equality = false;
  for (const auto& c : report.claims)
    if (c.name == "ky-bound") saw_equality = c.equality;
  CHECK(saw_equality);
}

TEST_CASE("density report on the join") {
  auto report = check_density_theorems(test_support::c5_join_k3(), 6,
                                       PotentialParams::for_k6());
  CHECK(report.critical);
  CHECK(report.ore_status == OreStatus::kNotKOre);
  CHECK(report.all_applicable_pass());
  for (const auto& c : report.claims) {
    if (c.name == "strong-ky-bound") {
      CHECK(c.applicable);
      CHECK(c.pass);
      CHECK(c.lhs == "-6");
      CHECK(c.rhs == "8");
    }
    if (c.name == "non-ore-potential-bound") CHECK(c.pass);
  }
}

TEST_CASE("density report flags non-critical input") {
  auto report = check_density_theorems(Graph::cycle(6), 6, PotentialParams::for_k6());
  CHECK(!report.critical);
  CHECK(!report.claims.empty());
  CHECK(report.claims[0].name == "k-critical");
}

TEST_CASE("generated 6-Ore graphs meet the bounds exactly") {
  auto params = PotentialParams::for_k6();
  OreMemo memo;
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    int ops = 1 + static_cast<int>(seed % 3);
    auto gen = generate_k_ore(6, ops, seed);
    CHECK(ky_potential(gen.graph, 6) == Rational(18));
    int n = gen.graph.vertex_count();
    int t = clique_family_weight(gen.graph, 6).value;
    CHECK(Rational(t) >= Rational(2) + Rational(n - 1) / 5);
    CHECK(eps_delta_potential(gen.graph, params) <=
          Rational(18) + n * params.epsilon -
              (Rational(2) + Rational(n - 1) / 5) * params.delta);
  }
}

TEST_CASE("rational formatting round-trips") {
  CHECK(to_fraction_string(make_rational(268, 15)) == "268/15");
  CHECK(to_fraction_string(Rational(18)) == "18");
  CHECK(parse_rational("10/105") == make_rational(2, 21));
  CHECK(parse_rational("-6") == Rational(-6));
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("2/0"), ParseError);
}
