#include "critgraph/coloring.hpp"

#include <algorithm>
#include <numeric>

namespace critgraph {

namespace {

// DSATUR backtracking. Vertices are picked by maximum saturation, then
// maximum degree among uncolored, then least index; colors are tried
// ascending, capped at one past the highest color used so far (new colors
// are interchangeable, so trying one representative is enough).
struct ColorSearch {
  const Graph& g;
  int c;
  int n;
  std::vector<int> color;               // 0 = uncolored
  std::vector<VertexSet> used_by_nbrs;  // colors (as bit indices) seen around v

  ColorSearch(const Graph& graph, int colors)
      : g(graph),
        c(colors),
        n(graph.vertex_count()),
        color(static_cast<std::size_t>(graph.vertex_count()), 0),
        used_by_nbrs(static_cast<std::size_t>(graph.vertex_count())) {}

  int pick() const {
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (color[static_cast<std::size_t>(v)] != 0) continue;
      int sat = used_by_nbrs[static_cast<std::size_t>(v)].count();
      int deg = g.degree(v);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  bool solve(int colored, int max_used) {
    if (colored == n) return true;
    int v = pick();
    const auto& seen = used_by_nbrs[static_cast<std::size_t>(v)];
    int limit = std::min(c, max_used + 1);
    for (int col = 1; col <= limit; ++col) {
      if (seen.contains(col)) continue;
      color[static_cast<std::size_t>(v)] = col;
      std::vector<int> newly;
      g.neighbors(v).for_each([&](int w) {
        auto& s = used_by_nbrs[static_cast<std::size_t>(w)];
        if (!s.contains(col)) {
          s.add(col);
          newly.push_back(w);
        }
      });
      if (solve(colored + 1, std::max(max_used, col))) return true;
      for (int w : newly) used_by_nbrs[static_cast<std::size_t>(w)].remove(col);
      color[static_cast<std::size_t>(v)] = 0;
    }
    return false;
  }
};

}  // namespace

VertexSet greedy_clique(const Graph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.vertex_count()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  VertexSet best;
  for (int seed : order) {
    VertexSet clique;
    clique.add(seed);
    VertexSet cand = g.neighbors(seed);
    for (int v = cand.first(); v != -1; v = cand.next(v)) {
      if (g.neighbors(v).count_intersection(clique) == clique.count()) clique.add(v);
    }
    if (clique.count() > best.count()) best = clique;
  }
  return best;
}

std::optional<Coloring> find_coloring(const Graph& g, int color_count) {
  if (color_count < 0) throw InputError("negative color count");
  if (g.vertex_count() == 0) return Coloring{{}};
  if (color_count == 0) return std::nullopt;
  if (greedy_clique(g).count() > color_count) return std::nullopt;
  ColorSearch search(g, color_count);
  if (!search.solve(0, 0)) return std::nullopt;
  return Coloring{std::move(search.color)};
}

bool is_colorable(const Graph& g, int color_count) {
  return find_coloring(g, color_count).has_value();
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& colors, int color_count) {
  if (static_cast<int>(colors.size()) != g.vertex_count()) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int col = colors[static_cast<std::size_t>(v)];
    if (col < 1 || col > color_count) return false;
  }
  for (auto [u, v] : g.edges())
    if (colors[static_cast<std::size_t>(u)] == colors[static_cast<std::size_t>(v)])
      return false;
  return true;
}

int chromatic_number(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  for (int c = greedy_clique(g).count(); c <= g.vertex_count(); ++c)
    if (is_colorable(g, c)) return c;
  return g.vertex_count();
}

bool is_critical(const Graph& g, int k) {
  if (k < 1) throw InputError("is_critical: k must be positive");
  if (is_colorable(g, k - 1)) return false;
  if (!is_colorable(g, k)) return false;
  for (auto [u, v] : g.edges())
    if (!is_colorable(g.without_edge(u, v), k - 1)) return false;
  return true;
}

CriticalSubgraph extract_critical_subgraph(const Graph& g, int k) {
  if (is_colorable(g, k - 1))
    throw InputError("extract_critical_subgraph: graph is (k-1)-colorable");
  Graph cur = g;
  std::vector<int> labels(static_cast<std::size_t>(g.vertex_count()));
  std::iota(labels.begin(), labels.end(), 0);
  // Vertex pass: drop the lowest-index vertex whose removal preserves
  // uncolorability, and restart the scan.
  bool progress = true;
  while (progress) {
    progress = false;
    for (int v = 0; v < cur.vertex_count(); ++v) {
      VertexSet r = cur.vertices();
      r.remove(v);
      InducedSubgraph sub = induced_subgraph(cur, r);
      if (!is_colorable(sub.graph, k - 1)) {
        std::vector<int> next_labels;
        next_labels.reserve(sub.labels.size());
        for (int w : sub.labels)
          next_labels.push_back(labels[static_cast<std::size_t>(w)]);
        cur = std::move(sub.graph);
        labels = std::move(next_labels);
        progress = true;
        break;
      }
    }
  }
  // Edge pass.
  progress = true;
  while (progress) {
    progress = false;
    for (auto [u, v] : cur.edges()) {
      Graph cand = cur.without_edge(u, v);
      if (!is_colorable(cand, k - 1)) {
        cur = std::move(cand);
        progress = true;
        break;
      }
    }
  }
  return {std::move(cur), std::move(labels)};
}

namespace {

// Backtracking list-coloring feasibility.
bool list_colorable(const Graph& g, const std::vector<VertexSet>& lists) {
  int n = g.vertex_count();
  std::vector<int> assigned(static_cast<std::size_t>(n), 0);
  std::vector<VertexSet> avail = lists;
  // Recursive lambda over the most-constrained uncolored vertex.
  struct Rec {
    const Graph& g;
    std::vector<int>& assigned;
    std::vector<VertexSet>& avail;
    bool run(int remaining) {
      if (remaining == 0) return true;
      int best = -1, best_count = 1 << 30;
      for (int v = 0; v < g.vertex_count(); ++v) {
        if (assigned[static_cast<std::size_t>(v)] != 0) continue;
        int cnt = avail[static_cast<std::size_t>(v)].count();
        if (cnt < best_count) {
          best = v;
          best_count = cnt;
        }
      }
      if (best_count == 0) return false;
      VertexSet options = avail[static_cast<std::size_t>(best)];
      for (int col = options.first(); col != -1; col = options.next(col)) {
        assigned[static_cast<std::size_t>(best)] = col;
        std::vector<int> touched;
        g.neighbors(best).for_each([&](int w) {
          if (assigned[static_cast<std::size_t>(w)] == 0 &&
              avail[static_cast<std::size_t>(w)].contains(col)) {
            avail[static_cast<std::size_t>(w)].remove(col);
            touched.push_back(w);
          }
        });
        if (run(remaining - 1)) return true;
        for (int w : touched) avail[static_cast<std::size_t>(w)].add(col);
        assigned[static_cast<std::size_t>(best)] = 0;
      }
      return false;
    }
  } rec{g, assigned, avail};
  return rec.run(n);
}

// Enumerates list assignments up to relabeling of the color universe:
// scanning vertices in index order and each list in increasing order, a new
// color may only be introduced as max_used+1. Returns false as soon as an
// assignment with no L-coloring is found.
bool all_assignments_colorable(const Graph& g, const std::vector<int>& f,
                               std::vector<VertexSet>& lists, int v, int max_used) {
  if (v == g.vertex_count()) return list_colorable(g, lists);
  int want = f[static_cast<std::size_t>(v)];
  std::vector<int> chosen;
  // Enumerate sorted `want`-subsets of 1..max_used+want where colors above
  // max_used form the contiguous block max_used+1, max_used+2, ...
  struct Gen {
    const Graph& g;
    const std::vector<int>& f;
    std::vector<VertexSet>& lists;
    int v, want;
    bool pick(int index, int low, int max_used, std::vector<int>& chosen) {
      if (index == want) {
        VertexSet list;
        int top = max_used;
        for (int c : chosen) {
          list.add(c);
          top = std::max(top, c);
        }
        lists[static_cast<std::size_t>(v)] = list;
        return all_assignments_colorable(g, f, lists, v + 1, top);
      }
      // Old colors first (ascending); fresh colors can always complete the
      // list, so no lookahead bound is needed here.
      for (int c = low; c <= max_used; ++c) {
        chosen.push_back(c);
        if (!pick(index + 1, c + 1, max_used, chosen)) return false;
        chosen.pop_back();
      }
      int fresh = std::max(low, max_used + 1);
      if (fresh == max_used + 1) {
        chosen.push_back(fresh);
        if (!pick(index + 1, fresh + 1, std::max(max_used, fresh), chosen)) return false;
        chosen.pop_back();
      }
      return true;
    }
  } gen{g, f, lists, v, want};
  return gen.pick(0, 1, max_used, chosen);
}

}  // namespace

bool is_f_choosable(const Graph& g, const std::vector<int>& f,
                    const ChoosabilityOptions& opts) {
  if (static_cast<int>(f.size()) != g.vertex_count())
    throw InputError("is_f_choosable: f must assign a demand to every vertex");
  long long total = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (f[static_cast<std::size_t>(v)] < 1)
      throw InputError("is_f_choosable: f(v) must be at least 1");
    total += f[static_cast<std::size_t>(v)];
  }
  if (total > opts.demand_cap)
    throw ResourceError("is_f_choosable: total demand " + std::to_string(total) +
                        " exceeds cap " + std::to_string(opts.demand_cap));
  if (g.vertex_count() == 0) return true;
  std::vector<VertexSet> lists(static_cast<std::size_t>(g.vertex_count()));
  return all_assignments_colorable(g, f, lists, 0, 0);
}

}  // namespace critgraph
