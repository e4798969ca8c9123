#include "critgraph/extension.hpp"

#include <algorithm>
#include <functional>

#include "json.hpp"

namespace critgraph {

namespace {

// The identified graph G_{R,phi}: vertices outside R keep their relative
// order as labels 0..m-1, the k-1 color-class vertices follow. Classes left
// empty by phi still appear, joined to the other class vertices.
struct IdentifiedGraph {
  Graph graph;
  std::vector<int> outside;  // label -> host vertex, for labels < m
  int m = 0;                 // number of outside vertices
};

IdentifiedGraph build_identified(const Graph& g, const VertexSet& r,
                                 const std::vector<int>& phi, int k) {
  VertexSet outside_set = g.vertices() - r;
  IdentifiedGraph out;
  out.outside = outside_set.to_vector();
  out.m = static_cast<int>(out.outside.size());
  std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int i = 0; i < out.m; ++i)
    pos[static_cast<std::size_t>(out.outside[static_cast<std::size_t>(i)])] = i;
  GraphBuilder b(out.m + k - 1);
  for (auto [u, v] : g.edges()) {
    bool ru = r.contains(u), rv = r.contains(v);
    if (ru && rv) continue;
    if (!ru && !rv) {
      b.add_edge(pos[static_cast<std::size_t>(u)], pos[static_cast<std::size_t>(v)]);
    } else {
      int host = ru ? v : u;
      int in_r = ru ? u : v;
      b.add_edge(pos[static_cast<std::size_t>(host)],
                 out.m + phi[static_cast<std::size_t>(in_r)] - 1);
    }
  }
  for (int i = 0; i < k - 1; ++i)
    for (int j = i + 1; j < k - 1; ++j) b.add_edge(out.m + i, out.m + j);
  out.graph = b.build();
  return out;
}

}  // namespace

ExtensionResult build_extension(const Graph& g, const VertexSet& r,
                                const std::vector<int>& phi, int k) {
  if (!r.is_subset_of(g.vertices()) || r == g.vertices() || r.empty())
    throw InputError("build_extension: R must be a nonempty proper subset");
  if (static_cast<int>(phi.size()) != g.vertex_count())
    throw InputError("build_extension: coloring must be indexed by host vertices");
  // phi must properly color g[R] with colors 1..k-1.
  for (int v = r.first(); v != -1; v = r.next(v)) {
    int col = phi[static_cast<std::size_t>(v)];
    if (col < 1 || col > k - 1)
      throw InputError("build_extension: color out of range at vertex " +
                       std::to_string(v));
  }
  for (int v = r.first(); v != -1; v = r.next(v))
    for (int w = r.next(v); w != -1; w = r.next(w))
      if (g.adjacent(v, w) &&
          phi[static_cast<std::size_t>(v)] == phi[static_cast<std::size_t>(w)])
        throw InputError("build_extension: coloring is not proper on g[R]");

  IdentifiedGraph ident = build_identified(g, r, phi, k);
  if (is_colorable(ident.graph, k - 1)) return {ExtensionOutcome::kNoExtension, {}};

  CriticalSubgraph w = extract_critical_subgraph(ident.graph, k);

  ExtensionRecord rec;
  rec.k = k;
  rec.base = r;
  rec.coloring.assign(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v = r.first(); v != -1; v = r.next(v))
    rec.coloring[static_cast<std::size_t>(v)] = phi[static_cast<std::size_t>(v)];
  rec.extender = w.graph;
  rec.extended = r;
  for (int lbl : w.labels) {
    if (lbl >= ident.m) {
      ++rec.core_size;
      rec.core_colors.push_back(lbl - ident.m + 1);
    } else {
      rec.extended.add(ident.outside[static_cast<std::size_t>(lbl)]);
    }
  }
  if (rec.core_size < 1)
    throw InputError("build_extension: extender avoids every color class; "
                     "the input graph cannot be k-critical");
  int e_rp = count_edges_within(g, rec.extended);
  int e_r = count_edges_within(g, rec.base);
  int e_kx = rec.core_size * (rec.core_size - 1) / 2;
  rec.incompleteness = e_rp - (e_r + rec.extender.edge_count() - e_kx);
  rec.spanning = rec.extended == g.vertices();
  if (rec.incompleteness < 0)
    throw InternalError("build_extension: negative incompleteness");
  if (!(rec.base.is_subset_of(rec.extended)) || rec.base == rec.extended)
    throw InternalError("build_extension: extension did not grow the base");
  return {ExtensionOutcome::kExtension, std::move(rec)};
}

EnumStatus for_each_boundary_fixed_coloring(
    const Graph& g, const VertexSet& r, int k,
    const std::function<bool(const std::vector<int>&)>& visit,
    const ColoringEnumeration& opts) {
  std::vector<int> order = r.to_vector();
  if (order.empty()) return EnumStatus::kComplete;
  VertexSet bd = boundary(g, r);
  int pinned = bd.empty() ? order[0] : bd.first();

  std::vector<int> phi(static_cast<std::size_t>(g.vertex_count()), 0);
  long remaining = opts.budget;
  bool stopped = false, exhausted = false;

  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (stopped || exhausted) return;
    if (idx == order.size()) {
      if (--remaining < 0) {
        exhausted = true;
        return;
      }
      if (!visit(phi)) stopped = true;
      return;
    }
    int v = order[idx];
    for (int col = 1; col <= k - 1; ++col) {
      if (v == pinned && col != 1) break;
      bool ok = true;
      for (std::size_t j = 0; j < idx && ok; ++j)
        if (g.adjacent(v, order[j]) && phi[static_cast<std::size_t>(order[j])] == col)
          ok = false;
      if (!ok) continue;
      phi[static_cast<std::size_t>(v)] = col;
      rec(idx + 1);
      phi[static_cast<std::size_t>(v)] = 0;
      if (stopped || exhausted) return;
    }
  };
  rec(0);
  if (exhausted) return EnumStatus::kBudgetExhausted;
  return stopped ? EnumStatus::kStopped : EnumStatus::kComplete;
}

CollapsibilityResult is_i_collapsible(const Graph& g, const VertexSet& r, int i, int k,
                                      const ColoringEnumeration& opts) {
  if (r.count() < 2 || !r.is_subset_of(g.vertices()) || r == g.vertices())
    throw InputError("is_i_collapsible: need 2 <= |R| and R proper");
  CollapsibilityResult out;
  std::vector<int> out_degree(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v = r.first(); v != -1; v = r.next(v))
    out_degree[static_cast<std::size_t>(v)] =
        g.degree(v) - g.neighbors(v).count_intersection(r);
  bool violated = false;
  EnumStatus status = for_each_boundary_fixed_coloring(
      g, r, k,
      [&](const std::vector<int>& phi) {
        ++out.colorings_checked;
        std::vector<long> per_color(static_cast<std::size_t>(k), 0);
        long total = 0;
        for (int v = r.first(); v != -1; v = r.next(v)) {
          per_color[static_cast<std::size_t>(phi[static_cast<std::size_t>(v)])] +=
              out_degree[static_cast<std::size_t>(v)];
          total += out_degree[static_cast<std::size_t>(v)];
        }
        long best = total;
        for (int c = 1; c <= k - 1; ++c)
          best = std::min(best, total - per_color[static_cast<std::size_t>(c)]);
        if (best > i) {
          violated = true;
          return false;
        }
        return true;
      },
      opts);
  if (violated) {
    out.decided = true;
    out.collapsible = false;
  } else if (status == EnumStatus::kComplete) {
    out.decided = true;
    out.collapsible = true;
  }
  return out;
}

EdgeAdditionResult find_i_edge_addition(const Graph& g, int i, int k,
                                        const EdgeAdditionCaps& caps) {
  if (i < 1) throw InputError("find_i_edge_addition: i must be at least 1");
  std::vector<std::pair<int, int>> non_edges;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (!g.adjacent(u, v)) non_edges.emplace_back(u, v);

  EdgeAdditionResult out;
  long budget = caps.set_budget;
  auto attempt = [&](const std::vector<int>& picks) -> bool {
    if (--budget < 0) {
      out.budget_exhausted = true;
      return false;
    }
    GraphBuilder b(g);
    for (int p : picks)
      b.add_edge(non_edges[static_cast<std::size_t>(p)].first,
                 non_edges[static_cast<std::size_t>(p)].second);
    Graph augmented = b.build();
    // A k-critical subgraph on a proper vertex subset lives inside some
    // one-vertex-deleted subgraph.
    for (int v = 0; v < g.vertex_count(); ++v) {
      VertexSet rest = g.vertices();
      rest.remove(v);
      InducedSubgraph sub = induced_subgraph(augmented, rest);
      if (is_colorable(sub.graph, k - 1)) continue;
      CriticalSubgraph crit = extract_critical_subgraph(sub.graph, k);
      EdgeAdditionWitness w;
      for (int p : picks) w.added.push_back(non_edges[static_cast<std::size_t>(p)]);
      for (int lbl : crit.labels)
        w.subgraph_vertices.add(sub.labels[static_cast<std::size_t>(lbl)]);
      w.subgraph = std::move(crit.graph);
      out.witness = std::move(w);
      return false;
    }
    return true;
  };

  // Colex order over non-edge indices: all sets with a given largest index
  // precede those with a larger one, recursively; sizes ascend first.
  int n_ne = static_cast<int>(non_edges.size());
  for (int size = 1; size <= i && !out.witness && !out.budget_exhausted; ++size) {
    std::vector<int> pick;
    std::function<bool(int, int)> rec = [&](int need, int below) -> bool {
      if (need == 0) return attempt(pick);
      for (int top = need - 1; top < below; ++top) {
        pick.push_back(top);
        bool cont = rec(need - 1, top);
        pick.pop_back();
        if (!cont) return false;
      }
      return true;
    };
    rec(size, n_ne);
  }
  return out;
}

std::vector<InequalityCheck> check_potential_inequalities(const Graph& g,
                                                          const ExtensionRecord& record,
                                                          const PotentialParams& params) {
  const int k = params.k;
  if (record.k != k)
    throw InputError("check_potential_inequalities: record built for a different k");
  std::vector<InequalityCheck> out;

  Rational p_rp = subset_potential(g, record.extended, params);
  Rational p_r = subset_potential(g, record.base, params);
  Rational p_w = eps_delta_potential(record.extender, params);
  long long i = record.incompleteness;
  int x = record.core_size;

  // p(K_X) + delta*T(K_X) - delta*|X| with T on complete graphs by size.
  Graph kx = Graph::complete(x);
  int t_kx = (x == k - 1) ? 2 : (x == k - 2 ? 1 : 0);
  Rational p_kx = ky_potential(kx, k) + params.epsilon * x - params.delta * t_kx;
  Rational core_term = p_kx + params.delta * t_kx - params.delta * x;

  {
    InequalityCheck c;
    c.name = "extension-submodular";
    c.applicable = true;
    Rational rhs = p_r + p_w - Rational(2 * i * (k - 1)) - core_term;
    c.lhs = to_fraction_string(p_rp);
    c.rhs = to_fraction_string(rhs);
    c.pass = p_rp <= rhs;
    out.push_back(std::move(c));
  }
  {
    InequalityCheck c;
    c.name = "extension-drop";
    InducedSubgraph base = induced_subgraph(g, record.base);
    bool clique = base.graph.is_complete();
    c.applicable = !clique;
    if (!clique) {
      Rational rhs = p_r - Rational(2 * (i + 1) * (k - 1)) - params.delta;
      c.lhs = to_fraction_string(p_rp);
      c.rhs = to_fraction_string(rhs);
      c.pass = p_rp <= rhs;
    }
    out.push_back(std::move(c));
  }
  return out;
}

InequalityCheck check_edge_addition_inequality(const Graph& g,
                                               const EdgeAdditionWitness& witness,
                                               const PotentialParams& params) {
  const int k = params.k;
  InequalityCheck c;
  c.name = "edge-addition-witness-bound";
  Rational p_g = eps_delta_potential(g, params);
  // The bound carries a tightness hypothesis on the host graph.
  Rational tight_threshold =
      Rational(static_cast<long long>(k) * (k - 3)) - params.p_big - params.q_big;
  c.applicable = p_g > tight_threshold;
  if (!c.applicable) return c;
  Rational p_r = subset_potential(g, witness.subgraph_vertices, params);
  long long i = static_cast<long long>(witness.added.size());
  Rational rhs = p_g + params.p_big + params.q_big + Rational(2 * i * (k - 1)) +
                 Rational(i) * params.delta;
  c.lhs = to_fraction_string(p_r);
  c.rhs = to_fraction_string(rhs);
  c.pass = p_r <= rhs;
  return c;
}

std::string ExtensionRecord::to_json() const {
  nlohmann::json j;
  j["k"] = k;
  j["base"] = base.to_vector();
  nlohmann::json phi = nlohmann::json::object();
  for (int v = base.first(); v != -1; v = base.next(v))
    phi[std::to_string(v)] = coloring[static_cast<std::size_t>(v)];
  j["coloring"] = phi;
  j["extender_edges"] = extender.edges();
  j["core_size"] = core_size;
  j["core_colors"] = core_colors;
  j["extended"] = extended.to_vector();
  j["incompleteness"] = incompleteness;
  j["spanning"] = spanning;
  return j.dump();
}

}  // namespace critgraph
