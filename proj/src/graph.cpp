#include "critgraph/graph.hpp"

#include <algorithm>

namespace critgraph {

Graph Graph::complete(int n) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

Graph Graph::cycle(int n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return b.build();
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

Graph Graph::join(const Graph& a, const Graph& b) {
  int na = a.vertex_count(), nb = b.vertex_count();
  GraphBuilder out(na + nb);
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(na + u, na + v);
  for (int u = 0; u < na; ++u)
    for (int v = 0; v < nb; ++v) out.add_edge(u, na + v);
  return out.build();
}

Graph Graph::with_edge(int u, int v) const {
  return GraphBuilder(*this).add_edge(u, v).build();
}

Graph Graph::without_edge(int u, int v) const {
  return GraphBuilder(*this).remove_edge(u, v).build();
}

VertexSet Graph::component_of(int start, const VertexSet& within) const {
  check_vertex(start);
  VertexSet comp;
  if (!within.contains(start)) return comp;
  comp.add(start);
  VertexSet frontier;
  frontier.add(start);
  while (!frontier.empty()) {
    VertexSet next;
    frontier.for_each([&](int v) { next |= adj_[static_cast<std::size_t>(v)]; });
    next &= within;
    next.subtract(comp);
    comp |= next;
    frontier = next;
  }
  return comp;
}

std::vector<VertexSet> Graph::components(const VertexSet& within) const {
  std::vector<VertexSet> out;
  VertexSet rest = within;
  for (int v = rest.first(); v != -1; v = rest.first()) {
    VertexSet comp = component_of(v, rest);
    rest.subtract(comp);
    out.push_back(comp);
  }
  return out;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  return component_of(0, vertices()).count() == n_;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& r) {
  if (!r.is_subset_of(g.vertices()))
    throw InputError("induced_subgraph: set escapes the vertex range");
  std::vector<int> labels = r.to_vector();
  std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < labels.size(); ++i)
    pos[static_cast<std::size_t>(labels[i])] = static_cast<int>(i);
  GraphBuilder b(static_cast<int>(labels.size()));
  for (std::size_t i = 0; i < labels.size(); ++i) {
    VertexSet nb = g.neighbors(labels[i]) & r;
    nb.for_each([&](int w) {
      int j = pos[static_cast<std::size_t>(w)];
      if (static_cast<int>(i) < j) b.add_edge(static_cast<int>(i), j);
    });
  }
  return {b.build(), std::move(labels)};
}

VertexSet boundary(const Graph& g, const VertexSet& a) {
  if (!a.is_subset_of(g.vertices()))
    throw InputError("boundary: set escapes the vertex range");
  VertexSet out;
  a.for_each([&](int v) {
    VertexSet outside = g.neighbors(v);
    outside.subtract(a);
    if (!outside.empty()) out.add(v);
  });
  return out;
}

std::vector<std::pair<int, int>> edges_between(const Graph& g, const VertexSet& a,
                                               const VertexSet& b) {
  if (!a.is_subset_of(g.vertices()) || !b.is_subset_of(g.vertices()))
    throw InputError("edges_between: set escapes the vertex range");
  if (a.intersects(b)) throw InputError("edges_between: sets must be disjoint");
  std::vector<std::pair<int, int>> out;
  a.for_each([&](int u) {
    (g.neighbors(u) & b).for_each([&](int v) { out.emplace_back(u, v); });
  });
  return out;
}

int count_edges_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (!a.is_subset_of(g.vertices()) || !b.is_subset_of(g.vertices()))
    throw InputError("edges_between: set escapes the vertex range");
  if (a.intersects(b)) throw InputError("edges_between: sets must be disjoint");
  int c = 0;
  a.for_each([&](int u) { c += g.neighbors(u).count_intersection(b); });
  return c;
}

int count_edges_within(const Graph& g, const VertexSet& r) {
  int twice = 0;
  r.for_each([&](int u) { twice += g.neighbors(u).count_intersection(r); });
  return twice / 2;
}

IdentifyResult identify_vertices(const Graph& g, int u, int v, IdentifyPolicy policy) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) throw InputError("identify_vertices: vertices must differ");
  if (g.adjacent(u, v) && policy == IdentifyPolicy::kRejectAdjacent)
    throw InputError("identify_vertices: vertices are adjacent");
  if (u > v) std::swap(u, v);
  // v disappears; labels above v shift down by one; the merged vertex sits at u.
  std::vector<int> old_to_new(static_cast<std::size_t>(g.vertex_count()));
  for (int w = 0; w < g.vertex_count(); ++w)
    old_to_new[static_cast<std::size_t>(w)] = (w < v) ? w : (w == v ? u : w - 1);
  GraphBuilder b(g.vertex_count() - 1);
  for (auto [a, c] : g.edges()) {
    int na = old_to_new[static_cast<std::size_t>(a)];
    int nc = old_to_new[static_cast<std::size_t>(c)];
    if (na != nc) b.add_edge(na, nc);
  }
  return {b.build(), std::move(old_to_new), u};
}

InducedSubgraph degree_subgraph(const Graph& g, int i) {
  VertexSet r;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == i) r.add(v);
  return induced_subgraph(g, r);
}

}  // namespace critgraph
