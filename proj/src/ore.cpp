#include "critgraph/ore.hpp"

#include <algorithm>
#include <utility>

#include "critgraph/canonical.hpp"
#include "critgraph/rng.hpp"

#include "json.hpp"

namespace critgraph {

namespace {

OreTrace leaf_trace(int k) {
  OreTrace t;
  t.k = k;
  return t;
}

// Edge count forced on k-Ore graphs by the tightness of the density bound:
// (k-2)(k+1)n - 2(k-1)|E| = k(k-3). Returns -1 when no integer solution.
long expected_k_ore_edges(int n, int k) {
  long num = static_cast<long>(k - 2) * (k + 1) * n - static_cast<long>(k) * (k - 3);
  if (num % (2 * (k - 1)) != 0) return -1;
  return num / (2 * (k - 1));
}

bool k_ore_shape_ok(const Graph& g, int k) {
  int n = g.vertex_count();
  if (n < k) return false;
  if ((n - k) % (k - 1) != 0) return false;
  if (g.edge_count() != expected_k_ore_edges(n, k)) return false;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) < k - 1) return false;
  return g.is_connected();
}

}  // namespace

int OreTrace::vertex_count() const {
  if (is_leaf()) return k;
  return static_cast<int>(node->edge_map.size() + node->vertex_map.size()) - 1;
}

OreTrace OreTrace::clone() const {
  OreTrace out;
  out.k = k;
  if (node) {
    out.node = std::make_unique<Node>();
    out.node->edge_side = std::make_unique<OreTrace>(node->edge_side->clone());
    out.node->vertex_side = std::make_unique<OreTrace>(node->vertex_side->clone());
    out.node->replaced_edge = node->replaced_edge;
    out.node->split_vertex = node->split_vertex;
    out.node->split_to_x = node->split_to_x;
    out.node->edge_map = node->edge_map;
    out.node->vertex_map = node->vertex_map;
  }
  return out;
}

Graph OreTrace::replay() const {
  if (is_leaf()) {
    if (k < 1) throw InputError("trace leaf with non-positive k");
    return Graph::complete(k);
  }
  const Node& nd = *node;
  Graph edge_side = nd.edge_side->replay();
  Graph vertex_side = nd.vertex_side->replay();
  int ne = edge_side.vertex_count();
  int nv = vertex_side.vertex_count();
  if (static_cast<int>(nd.edge_map.size()) != ne ||
      static_cast<int>(nd.vertex_map.size()) != nv)
    throw InputError("trace label maps do not match the side graphs");
  int n = ne + nv - 1;
  auto [a, b] = nd.replaced_edge;
  if (!edge_side.adjacent(a, b))
    throw InputError("trace replaced edge is not an edge of the edge-side");
  int z = nd.split_vertex;
  vertex_side.check_vertex(z);
  if (nd.vertex_map[static_cast<std::size_t>(z)] != -1)
    throw InputError("trace vertex map must send the split vertex to -1");
  VertexSet split_x;
  for (int v : nd.split_to_x) split_x.add(v);
  VertexSet zn = vertex_side.neighbors(z);
  if (!split_x.is_subset_of(zn) || split_x.empty() || split_x == zn)
    throw InputError("trace bipartition must split N(z) into two nonempty parts");

  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  auto place = [&](int lbl) {
    if (lbl < 0 || lbl >= n || hit[static_cast<std::size_t>(lbl)])
      throw InputError("trace label maps are not a bijection");
    hit[static_cast<std::size_t>(lbl)] = true;
  };
  for (int v = 0; v < ne; ++v) place(nd.edge_map[static_cast<std::size_t>(v)]);
  for (int v = 0; v < nv; ++v)
    if (v != z) place(nd.vertex_map[static_cast<std::size_t>(v)]);

  GraphBuilder bld(n);
  for (auto [u, v] : edge_side.edges()) {
    if ((u == a && v == b) || (u == b && v == a)) continue;
    bld.add_edge(nd.edge_map[static_cast<std::size_t>(u)],
                 nd.edge_map[static_cast<std::size_t>(v)]);
  }
  for (auto [u, v] : vertex_side.edges()) {
    if (u == z || v == z) continue;
    bld.add_edge(nd.vertex_map[static_cast<std::size_t>(u)],
                 nd.vertex_map[static_cast<std::size_t>(v)]);
  }
  int x = nd.edge_map[static_cast<std::size_t>(a)];
  int y = nd.edge_map[static_cast<std::size_t>(b)];
  zn.for_each([&](int w) {
    bld.add_edge(split_x.contains(w) ? x : y,
                 nd.vertex_map[static_cast<std::size_t>(w)]);
  });
  return bld.build();
}

OreComposition ore_compose(const Graph& g1, std::pair<int, int> xy, const Graph& g2,
                           int z, const VertexSet& split_to_x,
                           std::optional<OreTrace> edge_trace,
                           std::optional<OreTrace> vertex_trace) {
  auto [x, y] = xy;
  if (!g1.adjacent(x, y)) throw InputError("ore_compose: xy is not an edge of g1");
  g2.check_vertex(z);
  VertexSet zn = g2.neighbors(z);
  if (!split_to_x.is_subset_of(zn))
    throw InputError("ore_compose: bipartition escapes N(z)");
  if (split_to_x.empty() || split_to_x == zn)
    throw InputError("ore_compose: both parts of the bipartition must be nonempty");

  if (!edge_trace) {
    if (!g1.is_complete())
      throw InputError("ore_compose: edge-side trace required for a non-complete side");
    edge_trace = leaf_trace(g1.vertex_count());
  }
  if (!vertex_trace) {
    if (!g2.is_complete())
      throw InputError("ore_compose: vertex-side trace required for a non-complete side");
    vertex_trace = leaf_trace(g2.vertex_count());
  }
  if (edge_trace->k != vertex_trace->k)
    throw InputError("ore_compose: side traces disagree on k");
  if (edge_trace->replay() != g1)
    throw InputError("ore_compose: edge-side trace does not replay to g1");
  if (vertex_trace->replay() != g2)
    throw InputError("ore_compose: vertex-side trace does not replay to g2");

  int n1 = g1.vertex_count();
  int n2 = g2.vertex_count();
  OreTrace trace;
  trace.k = edge_trace->k;
  trace.node = std::make_unique<OreTrace::Node>();
  auto& nd = *trace.node;
  nd.edge_side = std::make_unique<OreTrace>(std::move(*edge_trace));
  nd.vertex_side = std::make_unique<OreTrace>(std::move(*vertex_trace));
  nd.replaced_edge = {x, y};
  nd.split_vertex = z;
  nd.split_to_x = split_to_x.to_vector();
  nd.edge_map.resize(static_cast<std::size_t>(n1));
  for (int v = 0; v < n1; ++v) nd.edge_map[static_cast<std::size_t>(v)] = v;
  nd.vertex_map.assign(static_cast<std::size_t>(n2), -1);
  for (int v = 0; v < n2; ++v)
    if (v != z) nd.vertex_map[static_cast<std::size_t>(v)] = n1 + (v < z ? v : v - 1);

  Graph composed = trace.replay();
  if (composed.vertex_count() != n1 + n2 - 1 ||
      composed.edge_count() != g1.edge_count() + g2.edge_count() - 1)
    throw InternalError("ore_compose: size bookkeeping failed");
  return {std::move(composed), std::move(trace)};
}

OreComposition generate_k_ore(int k, int ops, std::uint64_t seed) {
  if (k < 4) throw InputError("generate_k_ore: k must be at least 4");
  if (ops < 0) throw InputError("generate_k_ore: ops must be nonnegative");
  Rng rng(seed);
  Graph cur = Graph::complete(k);
  OreTrace trace = leaf_trace(k);
  for (int step = 0; step < ops; ++step) {
    Graph fresh = Graph::complete(k);
    bool current_is_edge_side = rng.below(2) == 0;
    const Graph& eside = current_is_edge_side ? cur : fresh;
    const Graph& vside = current_is_edge_side ? fresh : cur;

    auto edges = eside.edges();
    auto xy = edges[rng.below(edges.size())];
    int z = rng.below_int(vside.vertex_count());
    std::vector<int> zn = vside.neighbors(z).to_vector();
    int d = static_cast<int>(zn.size());
    // Uniform over the 2^d - 2 ordered bipartitions with both parts nonempty.
    std::uint64_t mask = 1 + rng.below((std::uint64_t{1} << d) - 2);
    VertexSet to_x;
    for (int i = 0; i < d; ++i)
      if (mask & (std::uint64_t{1} << i)) to_x.add(zn[static_cast<std::size_t>(i)]);

    std::optional<OreTrace> t_edge, t_vertex;
    if (current_is_edge_side)
      t_edge = std::move(trace);
    else
      t_vertex = std::move(trace);
    OreComposition next =
        ore_compose(eside, xy, vside, z, to_x, std::move(t_edge), std::move(t_vertex));
    cur = std::move(next.graph);
    trace = std::move(next.trace);
  }
  return {std::move(cur), std::move(trace)};
}

namespace {

// Remaps the root-level label maps of a trace expressed in canonical labels
// onto concrete graph labels. Sub-traces are untouched: they reference side
// labels, which do not depend on the host labeling.
OreTrace remap_root(const OreTrace& canonical, const std::vector<int>& canon_to_host) {
  OreTrace out = canonical.clone();
  if (out.node) {
    for (auto& lbl : out.node->edge_map) lbl = canon_to_host[static_cast<std::size_t>(lbl)];
    for (auto& lbl : out.node->vertex_map)
      if (lbl != -1) lbl = canon_to_host[static_cast<std::size_t>(lbl)];
  }
  return out;
}

struct RecognizerState {
  int k;
  long budget;
  OreMemo* memo;
  long nodes_used = 0;

  // Outcome of one recursive decision.
  struct Result {
    OreStatus status;
    std::optional<OreTrace> trace;
  };

  Result run(const Graph& g) {
    if (--budget < 0) return {OreStatus::kBudgetExhausted, {}};
    ++nodes_used;
    if (!k_ore_shape_ok(g, k)) return {OreStatus::kNotKOre, {}};
    if (g.vertex_count() == k) return {OreStatus::kKOre, leaf_trace(k)};

    CanonicalForm form = canonical_form(g);
    std::string key = form.key_string();
    if (auto it = memo->entries.find(key); it != memo->entries.end()) {
      if (!it->second.is_ore) return {OreStatus::kNotKOre, {}};
      return {OreStatus::kKOre, remap_root(*it->second.canonical_trace, form.labeling)};
    }

    bool exhausted = false;
    int n = g.vertex_count();
    for (int x = 0; x < n && !exhausted; ++x) {
      for (int y = x + 1; y < n && !exhausted; ++y) {
        if (g.adjacent(x, y)) continue;
        VertexSet rest = g.vertices();
        rest.remove(x);
        rest.remove(y);
        auto comps = g.components(rest);
        if (comps.size() < 2) continue;
        if (comps.size() > 20) continue;  // not a plausible k-Ore cut
        std::uint32_t all = (1u << comps.size()) - 1;
        for (std::uint32_t pick = 1; pick < all && !exhausted; ++pick) {
          if (--budget < 0) {
            exhausted = true;
            break;
          }
          VertexSet a_set, b_set;
          for (std::size_t i = 0; i < comps.size(); ++i)
            ((pick >> i) & 1 ? a_set : b_set) |= comps[i];
          auto res = try_split(g, x, y, a_set, b_set);
          if (res.status == OreStatus::kKOre) {
            auto trace = std::move(*res.trace);
            // Store in canonical labels for reuse under any labeling.
            std::vector<int> host_to_canon(static_cast<std::size_t>(n));
            for (int c = 0; c < n; ++c)
              host_to_canon[static_cast<std::size_t>(
                  form.labeling[static_cast<std::size_t>(c)])] = c;
            memo->entries[key] = {
                true, std::make_shared<OreTrace>(remap_root(trace, host_to_canon))};
            return {OreStatus::kKOre, std::move(trace)};
          }
          if (res.status == OreStatus::kBudgetExhausted) exhausted = true;
        }
      }
    }
    if (exhausted) return {OreStatus::kBudgetExhausted, {}};
    memo->entries[key] = {false, nullptr};
    return {OreStatus::kNotKOre, {}};
  }

  Result try_split(const Graph& g, int x, int y, const VertexSet& a_set,
                   const VertexSet& b_set) {
    // Edge-side needs x,y of degree >= k-1 (counting the restored edge xy);
    // vertex-side needs both split halves of positive degree.
    if (g.neighbors(x).count_intersection(a_set) < k - 2) return {OreStatus::kNotKOre, {}};
    if (g.neighbors(y).count_intersection(a_set) < k - 2) return {OreStatus::kNotKOre, {}};
    if (g.neighbors(x).count_intersection(b_set) < 1) return {OreStatus::kNotKOre, {}};
    if (g.neighbors(y).count_intersection(b_set) < 1) return {OreStatus::kNotKOre, {}};
    if (a_set.count() + 2 < k || b_set.count() + 1 < k) return {OreStatus::kNotKOre, {}};

    VertexSet a_verts = a_set;
    a_verts.add(x);
    a_verts.add(y);
    InducedSubgraph eside = induced_subgraph(g, a_verts);
    int ex = -1, ey = -1;
    for (std::size_t i = 0; i < eside.labels.size(); ++i) {
      if (eside.labels[i] == x) ex = static_cast<int>(i);
      if (eside.labels[i] == y) ey = static_cast<int>(i);
    }
    Graph edge_candidate = eside.graph.with_edge(ex, ey);
    if (!k_ore_shape_ok(edge_candidate, k)) return {OreStatus::kNotKOre, {}};

    VertexSet b_verts = b_set;
    b_verts.add(x);
    b_verts.add(y);
    InducedSubgraph vside = induced_subgraph(g, b_verts);
    int vx = -1, vy = -1;
    for (std::size_t i = 0; i < vside.labels.size(); ++i) {
      if (vside.labels[i] == x) vx = static_cast<int>(i);
      if (vside.labels[i] == y) vy = static_cast<int>(i);
    }
    IdentifyResult ident = identify_vertices(vside.graph, vx, vy);
    if (!k_ore_shape_ok(ident.graph, k)) return {OreStatus::kNotKOre, {}};

    auto edge_res = run(edge_candidate);
    if (edge_res.status != OreStatus::kKOre) return edge_res;
    auto vertex_res = run(ident.graph);
    if (vertex_res.status != OreStatus::kKOre) return vertex_res;

    OreTrace trace;
    trace.k = k;
    trace.node = std::make_unique<OreTrace::Node>();
    auto& nd = *trace.node;
    nd.edge_side = std::make_unique<OreTrace>(std::move(*edge_res.trace));
    nd.vertex_side = std::make_unique<OreTrace>(std::move(*vertex_res.trace));
    nd.replaced_edge = {ex, ey};
    nd.split_vertex = ident.merged;
    nd.edge_map = eside.labels;
    // vside label t (other than the pair) maps through identify to a
    // vertex-side label; record the original g label there.
    nd.vertex_map.assign(static_cast<std::size_t>(ident.graph.vertex_count()), -1);
    for (std::size_t t = 0; t < vside.labels.size(); ++t) {
      int g_label = vside.labels[t];
      if (g_label == x || g_label == y) continue;
      nd.vertex_map[static_cast<std::size_t>(ident.old_to_new[t])] = g_label;
    }
    // Split halves: x inherits the b-side neighbors of x.
    nd.split_to_x.clear();
    VertexSet zn = ident.graph.neighbors(ident.merged);
    zn.for_each([&](int w) {
      // find original label of w
      // (w != merged; vertex_map gives the g label)
      int g_label = nd.vertex_map[static_cast<std::size_t>(w)];
      if (g.adjacent(x, g_label)) nd.split_to_x.push_back(w);
    });
    return {OreStatus::kKOre, std::move(trace)};
  }
};

}  // namespace

OreRecognition recognize_k_ore(const Graph& g, int k, const OreRecognitionOptions& opts) {
  if (k < 4) throw InputError("recognize_k_ore: k must be at least 4");
  OreMemo local;
  RecognizerState state{k, opts.node_budget, opts.shared_memo ? opts.shared_memo : &local};
  auto res = state.run(g);
  OreRecognition out;
  out.status = res.status;
  out.nodes_used = state.nodes_used;
  if (res.trace) {
    // A recognizer trace must replay to the input exactly.
    if (res.trace->replay() != g)
      throw InternalError("recognize_k_ore: trace replay mismatch");
    out.trace = std::move(*res.trace);
  }
  return out;
}

OreStatus is_split_k_ore(const Graph& g, const VertexSet& h, int a, int b, int k,
                         const OreRecognitionOptions& opts) {
  if (!h.contains(a) || !h.contains(b))
    throw InputError("is_split_k_ore: split vertices must lie in the subgraph");
  if (g.adjacent(a, b)) throw InputError("is_split_k_ore: split vertices are adjacent");
  InducedSubgraph sub = induced_subgraph(g, h);
  int ia = -1, ib = -1;
  for (std::size_t i = 0; i < sub.labels.size(); ++i) {
    if (sub.labels[i] == a) ia = static_cast<int>(i);
    if (sub.labels[i] == b) ib = static_cast<int>(i);
  }
  if (sub.graph.degree(ia) < 1 || sub.graph.degree(ib) < 1)
    throw InputError("is_split_k_ore: split vertices need positive degree in g[h]");
  IdentifyResult ident = identify_vertices(sub.graph, ia, ib);
  return recognize_k_ore(ident.graph, k, opts).status;
}

namespace {

Frame frame_of_trace(const OreTrace& trace) {
  if (trace.is_leaf()) {
    Frame f;
    for (int v = 0; v < trace.k; ++v) f.vertices.push_back(v);
    return f;
  }
  const auto& nd = *trace.node;
  Frame f = frame_of_trace(*nd.edge_side);
  for (auto& v : f.vertices) v = nd.edge_map[static_cast<std::size_t>(v)];
  for (auto& rep : f.replacements) {
    rep.split = {nd.edge_map[static_cast<std::size_t>(rep.split.first)],
                 nd.edge_map[static_cast<std::size_t>(rep.split.second)]};
    VertexSet lifted;
    rep.interior.for_each(
        [&](int v) { lifted.add(nd.edge_map[static_cast<std::size_t>(v)]); });
    rep.interior = lifted;
  }
  int a = nd.edge_map[static_cast<std::size_t>(nd.replaced_edge.first)];
  int b = nd.edge_map[static_cast<std::size_t>(nd.replaced_edge.second)];
  VertexSet vertex_interior;
  for (std::size_t v = 0; v < nd.vertex_map.size(); ++v)
    if (nd.vertex_map[v] != -1) vertex_interior.add(nd.vertex_map[v]);

  bool a_on_frame = std::find(f.vertices.begin(), f.vertices.end(), a) != f.vertices.end();
  bool b_on_frame = std::find(f.vertices.begin(), f.vertices.end(), b) != f.vertices.end();
  if (a_on_frame && b_on_frame && !f.is_replacement(a, b)) {
    f.replacements.push_back({{a, b}, vertex_interior});
    return f;
  }
  // The replaced edge sits inside exactly one existing certificate, which the
  // new vertex side extends.
  for (auto& rep : f.replacements) {
    VertexSet cert = rep.interior;
    cert.add(rep.split.first);
    cert.add(rep.split.second);
    if (cert.contains(a) && cert.contains(b)) {
      rep.interior |= vertex_interior;
      return f;
    }
  }
  throw InputError("find_frame: replaced edge not locatable in the frame");
}

}  // namespace

Frame find_frame(const Graph& g, const OreTrace& trace) {
  if (trace.replay() != g)
    throw InputError("find_frame: trace does not replay to the given graph");
  Frame f = frame_of_trace(trace);
  std::sort(f.vertices.begin(), f.vertices.end());
  if (validate_frame(g, f, trace.k) == OreStatus::kNotKOre)
    throw InternalError("find_frame: constructed frame failed validation");
  return f;
}

OreStatus validate_frame(const Graph& g, const Frame& frame, int k,
                         const OreRecognitionOptions& opts) {
  if (static_cast<int>(frame.vertices.size()) != k) return OreStatus::kNotKOre;
  VertexSet fv;
  for (int v : frame.vertices) {
    g.check_vertex(v);
    fv.add(v);
  }
  if (fv.count() != k) return OreStatus::kNotKOre;
  // Interiors pairwise disjoint and disjoint from the frame.
  VertexSet seen;
  for (const auto& rep : frame.replacements) {
    if (rep.interior.intersects(fv) || rep.interior.intersects(seen))
      return OreStatus::kNotKOre;
    seen |= rep.interior;
    if (!fv.contains(rep.split.first) || !fv.contains(rep.split.second))
      return OreStatus::kNotKOre;
  }
  bool exhausted = false;
  for (std::size_t i = 0; i < frame.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < frame.vertices.size(); ++j) {
      int u = frame.vertices[i], v = frame.vertices[j];
      if (frame.is_replacement(u, v)) {
        if (g.adjacent(u, v)) return OreStatus::kNotKOre;
      } else if (!g.adjacent(u, v)) {
        return OreStatus::kNotKOre;
      }
    }
  }
  for (const auto& rep : frame.replacements) {
    VertexSet h = rep.interior;
    h.add(rep.split.first);
    h.add(rep.split.second);
    OreStatus st = is_split_k_ore(g, h, rep.split.first, rep.split.second, k, opts);
    if (st == OreStatus::kNotKOre) return OreStatus::kNotKOre;
    if (st == OreStatus::kBudgetExhausted) exhausted = true;
  }
  return exhausted ? OreStatus::kBudgetExhausted : OreStatus::kKOre;
}

namespace {

nlohmann::json trace_to_json(const OreTrace& t) {
  if (t.is_leaf()) return {{"kind", "leaf"}, {"k", t.k}};
  const auto& nd = *t.node;
  return {{"kind", "node"},
          {"k", t.k},
          {"replaced_edge", {nd.replaced_edge.first, nd.replaced_edge.second}},
          {"split_vertex", nd.split_vertex},
          {"split_to_x", nd.split_to_x},
          {"edge_map", nd.edge_map},
          {"vertex_map", nd.vertex_map},
          {"edge_side", trace_to_json(*nd.edge_side)},
          {"vertex_side", trace_to_json(*nd.vertex_side)}};
}

OreTrace trace_from_json(const nlohmann::json& j) {
  OreTrace t;
  t.k = j.at("k").get<int>();
  if (j.at("kind").get<std::string>() == "leaf") return t;
  t.node = std::make_unique<OreTrace::Node>();
  auto& nd = *t.node;
  nd.replaced_edge = {j.at("replaced_edge").at(0).get<int>(),
                      j.at("replaced_edge").at(1).get<int>()};
  nd.split_vertex = j.at("split_vertex").get<int>();
  nd.split_to_x = j.at("split_to_x").get<std::vector<int>>();
  nd.edge_map = j.at("edge_map").get<std::vector<int>>();
  nd.vertex_map = j.at("vertex_map").get<std::vector<int>>();
  nd.edge_side = std::make_unique<OreTrace>(trace_from_json(j.at("edge_side")));
  nd.vertex_side = std::make_unique<OreTrace>(trace_from_json(j.at("vertex_side")));
  return t;
}

}  // namespace

std::string OreTrace::to_json() const { return trace_to_json(*this).dump(); }

OreTrace OreTrace::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  return trace_from_json(j);
}

}  // namespace critgraph
