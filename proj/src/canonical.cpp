#include "critgraph/canonical.hpp"

#include <algorithm>
#include <map>

namespace critgraph {

namespace {

// Ordered partition of the vertex set into cells.
using Partition = std::vector<std::vector<int>>;

Partition initial_partition(const Graph& g) {
  // Seed by degree so refinement starts from an invariant split.
  std::map<int, std::vector<int>> by_degree;
  for (int v = 0; v < g.vertex_count(); ++v) by_degree[g.degree(v)].push_back(v);
  Partition p;
  for (auto& [d, cell] : by_degree) p.push_back(std::move(cell));
  return p;
}

// Refines to an equitable partition: every vertex in a cell has the same
// number of neighbors in every cell.
void refine(const Graph& g, Partition& p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t target = 0; target < p.size(); ++target) {
      VertexSet target_set;
      for (int v : p[target]) target_set.add(v);
      Partition next;
      next.reserve(p.size());
      for (auto& cell : p) {
        if (cell.size() == 1) {
          next.push_back(std::move(cell));
          continue;
        }
        std::map<int, std::vector<int>> split;
        for (int v : cell) split[g.neighbors(v).count_intersection(target_set)].push_back(v);
        if (split.size() > 1) changed = true;
        for (auto& [cnt, part] : split) next.push_back(std::move(part));
      }
      p = std::move(next);
      if (changed) break;
    }
  }
}

struct Searcher {
  const Graph& g;
  int n;
  std::vector<std::uint64_t> best_key;
  std::vector<int> best_labeling;
  bool have_best = false;

  explicit Searcher(const Graph& graph) : g(graph), n(graph.vertex_count()) {}

  std::vector<std::uint64_t> key_of(const std::vector<int>& labeling) const {
    std::size_t total_bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::vector<std::uint64_t> key((total_bits + 63) / 64, 0);
    std::size_t bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (g.adjacent(labeling[static_cast<std::size_t>(i)],
                       labeling[static_cast<std::size_t>(j)]))
          key[bit >> 6] |= std::uint64_t{1} << (63 - (bit & 63));
        ++bit;
      }
    return key;
  }

  void leaf(const Partition& p) {
    std::vector<int> labeling;
    labeling.reserve(static_cast<std::size_t>(n));
    for (const auto& cell : p) labeling.push_back(cell[0]);
    auto key = key_of(labeling);
    if (!have_best || key > best_key) {
      best_key = std::move(key);
      best_labeling = std::move(labeling);
      have_best = true;
    }
  }

  void search(Partition p) {
    refine(g, p);
    std::size_t branch = p.size();
    std::size_t branch_size = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i].size() > 1 && (branch == p.size() || p[i].size() < branch_size)) {
        branch = i;
        branch_size = p[i].size();
      }
    }
    if (branch == p.size()) {
      leaf(p);
      return;
    }
    for (int v : p[branch]) {
      Partition q;
      q.reserve(p.size() + 1);
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (i == branch) {
          q.push_back({v});
          std::vector<int> rest;
          for (int w : p[i])
            if (w != v) rest.push_back(w);
          q.push_back(std::move(rest));
        } else {
          q.push_back(p[i]);
        }
      }
      search(std::move(q));
    }
  }
};

}  // namespace

std::string CanonicalForm::key_string() const {
  std::string s;
  s.reserve(key.size() * 8 + 4);
  s.push_back(static_cast<char>(n & 0xff));
  s.push_back(static_cast<char>((n >> 8) & 0xff));
  for (auto w : key)
    for (int b = 0; b < 8; ++b) s.push_back(static_cast<char>((w >> (8 * b)) & 0xff));
  return s;
}

CanonicalForm canonical_form(const Graph& g) {
  CanonicalForm out;
  out.n = g.vertex_count();
  if (out.n == 0) return out;
  Searcher s(g);
  s.search(initial_partition(g));
  out.key = std::move(s.best_key);
  out.labeling = std::move(s.best_labeling);
  return out;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  return canonical_form(a) == canonical_form(b);
}

Graph apply_canonical_labeling(const Graph& g, const CanonicalForm& form) {
  std::vector<int> old_to_new(static_cast<std::size_t>(g.vertex_count()));
  for (int c = 0; c < form.n; ++c)
    old_to_new[static_cast<std::size_t>(form.labeling[static_cast<std::size_t>(c)])] = c;
  GraphBuilder b(g.vertex_count());
  for (auto [u, v] : g.edges())
    b.add_edge(old_to_new[static_cast<std::size_t>(u)],
               old_to_new[static_cast<std::size_t>(v)]);
  return b.build();
}

}  // namespace critgraph
