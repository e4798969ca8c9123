#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "critgraph/errors.hpp"

namespace critgraph {

// Set of vertex labels backed by a fixed 512-bit field. All subset queries in
// the search modules reduce to word-parallel operations on this type.
class VertexSet {
public:
  static constexpr int kCapacity = 512;
  static constexpr int kWords = kCapacity / 64;

  VertexSet() = default;

  static VertexSet range(int n) {
    VertexSet s;
    for (int v = 0; v < n; ++v) s.add(v);
    return s;
  }

  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
  }

  void add(int v) { words_[word(v)] |= bit(v); }
  void remove(int v) { words_[word(v)] &= ~bit(v); }
  bool contains(int v) const {
    return v >= 0 && v < kCapacity && (words_[word(v)] & bit(v)) != 0;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  // Smallest member, or -1 when empty.
  int first() const { return next(-1); }

  // Smallest member greater than `after`, or -1.
  int next(int after) const {
    int v = after + 1;
    if (v >= kCapacity) return -1;
    int wi = word(v);
    std::uint64_t w = words_[wi] & ~((bit(v)) - 1);
    while (true) {
      if (w) return wi * 64 + std::countr_zero(w);
      if (++wi == kWords) return -1;
      w = words_[wi];
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (int wi = 0; wi < kWords; ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        f(wi * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& subtract(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a.subtract(b); }

  bool operator==(const VertexSet& o) const { return words_ == o.words_; }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  bool is_subset_of(const VertexSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const VertexSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  int count_intersection(const VertexSet& o) const {
    int c = 0;
    for (int i = 0; i < kWords; ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

private:
  static int word(int v) { return v >> 6; }
  static std::uint64_t bit(int v) { return std::uint64_t{1} << (v & 63); }

  std::array<std::uint64_t, kWords> words_{};
};

class GraphBuilder;

// Simple undirected graph on dense labels 0..n-1 with bitset adjacency.
// Instances are immutable after construction; every editing operation
// returns a new value.
class Graph {
public:
  Graph() = default;

  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
    if (n < 0 || n > VertexSet::kCapacity)
      throw InputError("vertex count out of range 0.." +
                       std::to_string(VertexSet::kCapacity));
  }

  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph empty_graph(int n) { return Graph(n); }
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  // Disjoint union of a and b plus all edges between them.
  static Graph join(const Graph& a, const Graph& b);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[static_cast<std::size_t>(u)].contains(v);
  }

  const VertexSet& neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  VertexSet closed_neighborhood(int v) const {
    VertexSet s = neighbors(v);
    s.add(v);
    return s;
  }

  int degree(int v) const { return neighbors(v).count(); }

  VertexSet vertices() const { return VertexSet::range(n_); }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
      adj_[static_cast<std::size_t>(u)].for_each([&](int v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;

  bool is_complete() const { return m_ == n_ * (n_ - 1) / 2; }
  bool is_connected() const;

  // Vertices of the component of g-induced search containing `start`,
  // restricted to `within`.
  VertexSet component_of(int start, const VertexSet& within) const;
  std::vector<VertexSet> components(const VertexSet& within) const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }
  bool operator!=(const Graph& o) const { return !(*this == o); }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw InputError("vertex " + std::to_string(v) + " out of range 0.." +
                       std::to_string(n_ - 1));
  }

private:
  friend class GraphBuilder;

  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
};

// Accumulates edges, validates symmetry/irreflexivity, and freezes into a
// Graph value.
class GraphBuilder {
public:
  explicit GraphBuilder(int n) : g_(n) {}
  explicit GraphBuilder(const Graph& g) : g_(g) {}

  GraphBuilder& add_edge(int u, int v) {
    g_.check_vertex(u);
    g_.check_vertex(v);
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (!g_.adj_[static_cast<std::size_t>(u)].contains(v)) {
      g_.adj_[static_cast<std::size_t>(u)].add(v);
      g_.adj_[static_cast<std::size_t>(v)].add(u);
      ++g_.m_;
    }
    return *this;
  }

  GraphBuilder& remove_edge(int u, int v) {
    g_.check_vertex(u);
    g_.check_vertex(v);
    if (g_.adj_[static_cast<std::size_t>(u)].contains(v)) {
      g_.adj_[static_cast<std::size_t>(u)].remove(v);
      g_.adj_[static_cast<std::size_t>(v)].remove(u);
      --g_.m_;
    }
    return *this;
  }

  bool has_edge(int u, int v) const { return g_.adjacent(u, v); }

  Graph build() { return std::move(g_); }

private:
  Graph g_;
};

struct InducedSubgraph {
  Graph graph;
  // labels[new_vertex] = original vertex in the host graph.
  std::vector<int> labels;
};

// Subgraph induced by r, with new labels in increasing order of the old ones.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& r);

// Boundary of a in g: members of a with a neighbor outside a.
VertexSet boundary(const Graph& g, const VertexSet& a);

// Edges with one end in a and the other in b, each counted once.
// Requires a and b disjoint.
std::vector<std::pair<int, int>> edges_between(const Graph& g, const VertexSet& a,
                                               const VertexSet& b);
int count_edges_between(const Graph& g, const VertexSet& a, const VertexSet& b);

// Number of edges of g with both ends in r.
int count_edges_within(const Graph& g, const VertexSet& r);

enum class IdentifyPolicy {
  kRejectAdjacent,  // default: identifying adjacent vertices is an error
  kDiscardLoops,    // callers that identify whole color classes opt in
};

struct IdentifyResult {
  Graph graph;
  // old_to_new[v] = label of v in the merged graph; u and v map to the same
  // label (the merged vertex).
  std::vector<int> old_to_new;
  int merged;  // label of the merged vertex in the new graph
};

IdentifyResult identify_vertices(const Graph& g, int u, int v,
                                 IdentifyPolicy policy = IdentifyPolicy::kRejectAdjacent);

// Subgraph induced by the vertices of degree exactly i.
InducedSubgraph degree_subgraph(const Graph& g, int i);

}  // namespace critgraph
