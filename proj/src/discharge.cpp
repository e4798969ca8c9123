#include "critgraph/discharge.hpp"

#include <algorithm>
#include <map>

#include "critgraph/coloring.hpp"
#include "critgraph/graph6.hpp"

#include "json.hpp"

namespace critgraph {

std::vector<Rational> initial_charge(const Graph& g, int k, const Rational& epsilon) {
  std::vector<Rational> out(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v)
    out[static_cast<std::size_t>(v)] = Rational((k - 1) * g.degree(v)) -
                                       Rational((k - 2) * (k + 1)) - epsilon;
  return out;
}

Rational psi(int d, int r, const Rational& epsilon) {
  if (r < 1) throw InputError("psi: r must be at least 1");
  return (Rational(5 * d - 28) - epsilon) / r;
}

Rational ChargeLedger::total() const {
  Rational t = 0;
  if (charges.empty()) return t;
  for (const auto& c : charges[0]) t += c;
  return t;
}

Rational ChargeLedger::stage_sum(int stage, const VertexSet& s) const {
  if (stage < 0 || stage >= static_cast<int>(charges.size()))
    throw InputError("stage_sum: stage out of range");
  Rational t = 0;
  s.for_each([&](int v) {
    t += charges[static_cast<std::size_t>(stage)][static_cast<std::size_t>(v)];
  });
  return t;
}

namespace {

struct Engine {
  const Graph& g;
  const DischargeParams& params;
  const DischargeHooks& hooks;
  ChargeLedger& ledger;
  std::vector<Rational> charge;
  std::vector<Rational> ch0;
  std::vector<bool> discharged;
  std::vector<int> cluster_index;  // -1 for non-degree-5 vertices
  Rational happy_threshold;

  Engine(const Graph& graph, const DischargeParams& p, const DischargeHooks& h,
         ChargeLedger& led)
      : g(graph), params(p), hooks(h), ledger(led) {
    charge = initial_charge(g, 6, params.epsilon);
    ch0 = charge;
    discharged.assign(static_cast<std::size_t>(g.vertex_count()), false);
    cluster_index.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t c = 0; c < hooks.clusters.size(); ++c)
      hooks.clusters[c].for_each([&](int v) {
        if (g.degree(v) != 5 || cluster_index[static_cast<std::size_t>(v)] != -1)
          throw InputError("discharge hooks: clusters must partition the degree-5 set");
        cluster_index[static_cast<std::size_t>(v)] = static_cast<int>(c);
      });
    for (int v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) == 5 && cluster_index[static_cast<std::size_t>(v)] == -1)
        throw InputError("discharge hooks: degree-5 vertex missing from clusters");
    happy_threshold = Rational(2) + 2 * params.epsilon;
  }

  Rational cluster_charge(int c) const {
    Rational sum = 0;
    hooks.clusters[static_cast<std::size_t>(c)].for_each(
        [&](int v) { sum += charge[static_cast<std::size_t>(v)]; });
    return sum;
  }

  bool vertex_unhappy(int v) const {
    return cluster_charge(cluster_index[static_cast<std::size_t>(v)]) < happy_threshold;
  }

  bool upward_of(int x, int y) const {
    return hooks.direction(x, y) == NeighborDirection::kUpward;
  }

  void send(int stage, const std::string& rule, int from, const std::vector<int>& to,
            const Rational& amount) {
    if (to.empty() || amount == 0) return;
    if (from >= 0) charge[static_cast<std::size_t>(from)] -= amount * static_cast<int>(to.size());
    for (int v : to) charge[static_cast<std::size_t>(v)] += amount;
    ledger.transfers.push_back({stage, rule, from, to, amount});
    if (from >= 0) discharged[static_cast<std::size_t>(from)] = true;
  }

  void snapshot() { ledger.charges.push_back(charge); }

  void stage1() {
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) < 8) continue;
      std::vector<int> receivers;
      g.neighbors(v).for_each([&](int w) {
        if (g.degree(w) == 5) receivers.push_back(w);
      });
      if (receivers.empty()) continue;  // retains its charge; division guarded
      send(1, "1", v, receivers,
           ch0[static_cast<std::size_t>(v)] / static_cast<int>(receivers.size()));
    }
    snapshot();
  }

  // One stage-2 pass over the given vertex order; returns whether any vertex
  // fired. fired2 tracks one-shot rule triggering.
  bool stage2_round(const std::vector<int>& order, std::vector<bool>& fired2) {
    bool any = false;
    for (int v : order) {
      if (fired2[static_cast<std::size_t>(v)]) continue;
      if (g.degree(v) == 7) {
        std::vector<int> unhappy_upward;
        g.neighbors(v).for_each([&](int x) {
          if (g.degree(x) == 5 && upward_of(x, v) && vertex_unhappy(x))
            unhappy_upward.push_back(x);
        });
        int r = static_cast<int>(unhappy_upward.size());
        if (r >= 1 && r <= 5) {
          Rational amount = ch0[static_cast<std::size_t>(v)] / r;
          for (int x : unhappy_upward)
            if (vertex_unhappy(x)) send(2, "2A", v, {x}, amount);
          fired2[static_cast<std::size_t>(v)] = true;
          any = true;
        }
      } else if (g.degree(v) == 6) {
        std::vector<int> candidate_clusters;
        for (std::size_t c = 0; c < hooks.clusters.size(); ++c) {
          const VertexSet& cl = hooks.clusters[c];
          if (!cl.intersects(g.neighbors(v))) continue;
          bool all_upward = true;
          cl.for_each([&](int x) { all_upward = all_upward && upward_of(x, v); });
          if (!all_upward) continue;
          if (cluster_charge(static_cast<int>(c)) >= happy_threshold) continue;
          candidate_clusters.push_back(static_cast<int>(c));
        }
        if (candidate_clusters.size() == 1) {
          int c = candidate_clusters[0];
          if (cluster_charge(c) < happy_threshold) {
            std::vector<int> members =
                hooks.clusters[static_cast<std::size_t>(c)].to_vector();
            Rational total = Rational(2) - params.epsilon;
            send(2, "2B", v, members, total / static_cast<int>(members.size()));
            fired2[static_cast<std::size_t>(v)] = true;
            any = true;
          }
        }
      }
    }
    return any;
  }

  void stage2() {
    std::vector<int> order(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) order[static_cast<std::size_t>(v)] = v;
    std::vector<bool> fired2(static_cast<std::size_t>(g.vertex_count()), false);
    int cap = params.stage2_round_cap > 0 ? params.stage2_round_cap : g.vertex_count() + 1;
    int rounds = 0;
    while (rounds < cap) {
      ++rounds;
      if (!stage2_round(order, fired2)) {
        --rounds;  // the idle round does not count
        break;
      }
    }
    ledger.stage2_rounds = rounds;
    snapshot();
  }

  void stage3() {
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) < 7) continue;
      Rational cur = charge[static_cast<std::size_t>(v)];
      if (cur <= 0) continue;
      std::vector<int> receivers;
      g.neighbors(v).for_each([&](int w) {
        if (g.degree(w) == 5) receivers.push_back(w);
      });
      if (receivers.empty()) continue;
      send(3, "3A", v, receivers, cur / static_cast<int>(receivers.size()));
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) != 6 || discharged[static_cast<std::size_t>(v)]) continue;
      std::vector<int> unhappy;
      g.neighbors(v).for_each([&](int w) {
        if (g.degree(w) == 5 && vertex_unhappy(w)) unhappy.push_back(w);
      });
      if (unhappy.size() >= 1 && unhappy.size() <= 2) {
        Rational cur = charge[static_cast<std::size_t>(v)];
        if (cur > 0) send(3, "3B", v, unhappy, cur / static_cast<int>(unhappy.size()));
        continue;
      }
      if (unhappy.size() < 3) continue;
      std::vector<int> upward;
      g.neighbors(v).for_each([&](int w) {
        if (g.degree(w) == 5 && upward_of(w, v)) upward.push_back(w);
      });
      if (upward.size() != 3) continue;
      int edges = (g.adjacent(upward[0], upward[1]) ? 1 : 0) +
                  (g.adjacent(upward[0], upward[2]) ? 1 : 0) +
                  (g.adjacent(upward[1], upward[2]) ? 1 : 0);
      if (edges != 1) {
        if (edges >= 2)
          ledger.flags.push_back("rule-3B footnote at vertex " + std::to_string(v) +
                                 ": upward triple not an isolated edge; transfer "
                                 "skipped, component left to stages 4-6");
        continue;
      }
      int xa, ya, z;
      if (g.adjacent(upward[0], upward[1])) {
        xa = upward[0]; ya = upward[1]; z = upward[2];
      } else if (g.adjacent(upward[0], upward[2])) {
        xa = upward[0]; ya = upward[2]; z = upward[1];
      } else {
        xa = upward[1]; ya = upward[2]; z = upward[0];
      }
      send(3, "3B", v, {z}, Rational(1) - params.epsilon / 2);
      send(3, "3B", v, {xa, ya}, make_rational(1, 2) - params.epsilon / 4);
    }
    snapshot();
  }

  std::vector<int> reserved_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) == 6 && !discharged[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
  }

  void global_stages() {
    std::vector<int> reserved = reserved_vertices();
    ledger.reserved = reserved;
    VertexSet reserved_set;
    for (int v : reserved) reserved_set.add(v);

    auto components = classify_d5(g);
    auto reserve_degree = [&](int x) {
      return g.neighbors(x).count_intersection(reserved_set);
    };

    VertexSet a_set, b_set;
    for (const auto& comp : components) {
      Rational sum = 0;
      comp.vertices.for_each([&](int v) { sum += charge[static_cast<std::size_t>(v)]; });
      if (sum >= 0) continue;
      int pick = -1, best = -1;
      comp.vertices.for_each([&](int v) {
        int rd = reserve_degree(v);
        if (rd > best) {
          best = rd;
          pick = v;
        }
      });
      if (pick != -1) a_set.add(pick);
    }
    b_set = reserved_set;
    VertexSet a_nbrs;
    a_set.for_each([&](int v) { a_nbrs |= g.neighbors(v); });
    b_set &= a_nbrs;

    ledger.set_a = a_set.to_vector();
    ledger.set_b = b_set.to_vector();

    // A is one vertex per unsatisfied component, hence independent, and all
    // of degree 5.
    a_set.for_each([&](int v) {
      if (g.degree(v) != 5) throw InternalError("discharge: A contains a non-degree-5 vertex");
    });
    a_set.for_each([&](int u) {
      a_set.for_each([&](int v) {
        if (u < v && g.adjacent(u, v))
          throw InternalError("discharge: A is not independent");
      });
    });

    const Rational unit = make_rational(4, 5) + params.epsilon / 5;
    int na = a_set.count(), nb = b_set.count();

    // Stage 4: shift charge from A into B in aggregate.
    if (na > 0 && nb > 0) {
      send(4, "4", -1, a_set.to_vector(), -unit);
      send(4, "4", -1, b_set.to_vector(), unit * na / nb);
    } else if (na > 0) {
      ledger.flags.push_back("rule 4 skipped: A is nonempty but B is empty");
    }
    snapshot();

    // Stage 5: along every A-B edge.
    b_set.for_each([&](int b) {
      std::vector<int> targets;
      (g.neighbors(b) & a_set).for_each([&](int a) { targets.push_back(a); });
      for (int a : targets) send(5, "5", b, {a}, unit);
    });
    snapshot();

    // Stage 6: equalize inside B, then pay adjacent triangles.
    if (nb > 0) {
      Rational total_b = 0;
      b_set.for_each([&](int b) { total_b += charge[static_cast<std::size_t>(b)]; });
      const Rational floor_each = make_rational(2, 5) - 7 * params.epsilon / 5;
      // Feasibility per the independent-set edge bound.
      EdgeBoundReport bound = independent_set_edge_bound(g, 6, a_set, 1);
      if (bound.pass && total_b < floor_each * nb)
        throw InternalError("discharge: rule-6 floor infeasible despite the edge bound");
      Rational share = total_b / nb;
      b_set.for_each([&](int b) {
        Rational delta = share - charge[static_cast<std::size_t>(b)];
        if (delta != 0) {
          charge[static_cast<std::size_t>(b)] = share;
          ledger.transfers.push_back({6, "6-equalize", -1, {b}, delta});
        }
      });
      // Triangle payments.
      b_set.for_each([&](int b) {
        int adjacent_triangles = 0;
        for (const auto& comp : components) {
          if (comp.vertices.count() != 3) continue;
          if (count_edges_within(g, comp.vertices) != 3) continue;
          if (!comp.vertices.intersects(g.neighbors(b))) continue;
          ++adjacent_triangles;
          std::vector<int> members = comp.vertices.to_vector();
          send(6, "6", b, members, floor_each / 3);
        }
        if (adjacent_triangles > 1)
          ledger.flags.push_back("vertex " + std::to_string(b) +
                                 " adjacent to several triangles; paid each");
      });
    }
    snapshot();
  }
};

}  // namespace

ChargeLedger run_discharge(const Graph& g, const DischargeParams& params,
                           const DischargeHooks& hooks) {
  ChargeLedger ledger;
  ledger.n = g.vertex_count();
  ledger.epsilon = params.epsilon;
  ledger.partial = hooks.budget_exhausted;

  Engine engine(g, params, hooks, ledger);
  ledger.charges.push_back(engine.charge);  // ch0
  engine.stage1();
  engine.stage2();
  engine.stage3();
  engine.global_stages();

  if (params.check_order_independence) {
    // Re-run stages 1-2 with the vertex order reversed and compare ch2.
    ChargeLedger alt;
    Engine rev(g, params, hooks, alt);
    alt.charges.push_back(rev.charge);
    rev.stage1();
    std::vector<int> order;
    for (int v = g.vertex_count() - 1; v >= 0; --v) order.push_back(v);
    std::vector<bool> fired2(static_cast<std::size_t>(g.vertex_count()), false);
    while (rev.stage2_round(order, fired2)) {
    }
    if (rev.charge != ledger.charges[2])
      ledger.flags.push_back("stage-2 outcome depends on the processing order");
  }

  Rational t0 = ledger.total();
  ledger.conserved = true;
  for (const auto& stage : ledger.charges) {
    Rational t = 0;
    for (const auto& c : stage) t += c;
    if (t != t0) ledger.conserved = false;
  }
  return ledger;
}

std::vector<ComponentSatisfaction> component_satisfaction(const ChargeLedger& ledger,
                                                          const Graph& g) {
  if (ledger.charges.size() != 7)
    throw InputError("component_satisfaction: ledger is incomplete");
  std::vector<ComponentSatisfaction> out;
  Rational happy_threshold = Rational(2) + 2 * ledger.epsilon;
  for (const auto& comp : classify_d5(g)) {
    ComponentSatisfaction cs;
    cs.vertices = comp.vertices;
    cs.shape = comp.shape;
    for (const auto& stage : ledger.charges) {
      Rational sum = 0;
      comp.vertices.for_each([&](int v) { sum += stage[static_cast<std::size_t>(v)]; });
      cs.stage_sums.push_back(sum);
    }
    cs.satisfied = cs.stage_sums.back() >= 0;
    cs.happy = cs.stage_sums.back() >= happy_threshold;
    out.push_back(std::move(cs));
  }
  return out;
}

EdgeBoundReport independent_set_edge_bound(const Graph& g, int k, const VertexSet& a,
                                           int ell) {
  if (ell < 1) throw InputError("independent_set_edge_bound: l must be at least 1");
  a.for_each([&](int v) {
    if (g.degree(v) != k - 1)
      throw InputError("independent_set_edge_bound: A must consist of degree-(k-1) vertices");
  });
  a.for_each([&](int u) {
    a.for_each([&](int v) {
      if (u < v && g.adjacent(u, v))
        throw InputError("independent_set_edge_bound: A must be independent");
    });
  });

  EdgeBoundReport report;
  VertexSet b_all;
  long rhs = a.count();
  for (int i = 1; i <= ell; ++i) {
    VertexSet bi;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) != k - 1 + i) continue;
      if (!g.neighbors(v).intersects(a)) continue;
      bi.add(v);
    }
    report.bucket_sizes.push_back(bi.count());
    rhs += static_cast<long>(i + 1) * bi.count();
    b_all |= bi;
  }
  report.lhs = count_edges_between(g, a, b_all);
  report.rhs = rhs;
  report.pass = report.lhs <= report.rhs;

  if (!report.pass) {
    // Violation can only happen off the critical hypothesis; on small
    // instances confirm the choosability consequence directly.
    VertexSet support = a | b_all;
    if (support.count() <= 12) {
      InducedSubgraph sub = induced_subgraph(g, support);
      int n = sub.graph.vertex_count();
      std::vector<int> f(static_cast<std::size_t>(n), 0);
      for (int v = 0; v < n; ++v) {
        int host = sub.labels[static_cast<std::size_t>(v)];
        if (a.contains(host)) {
          f[static_cast<std::size_t>(v)] = sub.graph.degree(v);
        } else {
          int i = g.degree(host) - (k - 1);
          f[static_cast<std::size_t>(v)] = std::max(sub.graph.degree(v) - i, 0);
        }
      }
      bool found = false;
      // All nonempty induced subgraphs, smallest-first.
      for (std::uint32_t mask = 1; mask < (1u << n) && !found; ++mask) {
        VertexSet hs;
        for (int v = 0; v < n; ++v)
          if (mask & (1u << v)) hs.add(v);
        InducedSubgraph h = induced_subgraph(sub.graph, hs);
        std::vector<int> fh(static_cast<std::size_t>(h.graph.vertex_count()));
        bool valid = true;
        long demand = 0;
        for (int v = 0; v < h.graph.vertex_count(); ++v) {
          int parent = h.labels[static_cast<std::size_t>(v)];
          fh[static_cast<std::size_t>(v)] = f[static_cast<std::size_t>(parent)] +
                                            h.graph.degree(v) - sub.graph.degree(parent);
          if (fh[static_cast<std::size_t>(v)] < 1) valid = false;
          demand += fh[static_cast<std::size_t>(v)];
        }
        if (!valid || demand > 24) continue;
        if (is_f_choosable(h.graph, fh)) found = true;
      }
      report.kr_subgraph_found = found;
    } else {
      report.note = "support too large for the choosability cross-check";
    }
  }
  return report;
}

DischargeHooks DischargeHooks::from_structure(const Graph& g, const StructureCaps& caps) {
  DischargeHooks hooks;
  hooks.clusters = find_clusters(g, 6);
  auto table = std::make_shared<std::map<std::pair<int, int>, NeighborDirection>>();
  bool exhausted = false;
  for (int x = 0; x < g.vertex_count(); ++x) {
    if (g.degree(x) != 5) continue;
    g.neighbors(x).for_each([&](int y) {
      if (g.degree(y) != 6 && g.degree(y) != 7) return;
      DirectionResult r = classify_neighbor_direction(g, 6, x, y, caps);
      exhausted = exhausted || r.budget_exhausted;
      (*table)[{x, y}] = r.direction;
    });
  }
  hooks.budget_exhausted = exhausted;
  hooks.direction = [table](int x, int y) {
    auto it = table->find({x, y});
    return it == table->end() ? NeighborDirection::kInapplicable : it->second;
  };
  return hooks;
}

std::string ChargeLedger::to_json(const Graph& g) const {
  nlohmann::json j;
  j["schema"] = "critgraph.ledger.v1";
  j["k"] = 6;
  j["n"] = n;
  j["epsilon"] = to_fraction_string(epsilon);
  j["graph6"] = graph6_encode(g);
  const char* names[] = {"ch0", "ch1", "ch2", "ch3", "ch4", "ch5", "ch6"};
  nlohmann::json ch = nlohmann::json::object();
  for (std::size_t i = 0; i < charges.size() && i < 7; ++i) {
    std::vector<std::string> vals;
    for (const auto& r : charges[i]) vals.push_back(to_fraction_string(r));
    ch[names[i]] = vals;
  }
  j["charges"] = ch;
  nlohmann::json ts = nlohmann::json::array();
  for (const auto& t : transfers)
    ts.push_back({{"stage", t.stage},
                  {"rule", t.rule},
                  {"from", t.from},
                  {"to", t.receivers},
                  {"amount", to_fraction_string(t.amount)}});
  j["transfers"] = ts;
  j["reserved"] = reserved;
  j["A"] = set_a;
  j["B"] = set_b;
  j["stage2_rounds"] = stage2_rounds;
  j["conserved"] = conserved;
  j["partial"] = partial;
  j["flags"] = flags;
  j["total"] = to_fraction_string(total());
  return j.dump(2);
}

}  // namespace critgraph
