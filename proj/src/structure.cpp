#include "critgraph/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "critgraph/coloring.hpp"

namespace critgraph {

namespace {

// Detectors re-check their own invariants on every emission.
void validate_gem(const Graph& g, int k, const Gem& gem) {
  int n = gem.vertices.count();
  int edges = count_edges_within(g, gem.vertices);
  if (gem.kind == Gem::Kind::kEmerald) {
    if (n != k - 1 || edges != n * (n - 1) / 2)
      throw InternalError("emerald is not an induced K_{k-1}");
    gem.vertices.for_each([&](int v) {
      if (g.degree(v) != k - 1) throw InternalError("emerald vertex of wrong degree");
    });
  } else {
    if (n != k || edges != n * (n - 1) / 2 - 1 ||
        g.adjacent(gem.endpoints.first, gem.endpoints.second))
      throw InternalError("diamond is not an induced K_k minus its endpoints' edge");
    gem.vertices.for_each([&](int v) {
      if (v != gem.endpoints.first && v != gem.endpoints.second && g.degree(v) != k - 1)
        throw InternalError("diamond interior vertex of wrong degree");
    });
  }
}

}  // namespace

std::vector<Gem> find_gems(const Graph& g, int k) {
  std::vector<Gem> out;
  auto degree_ok = [&](const VertexSet& s) {
    bool ok = true;
    s.for_each([&](int v) { ok = ok && g.degree(v) == k - 1; });
    return ok;
  };
  for (const auto& clique : cliques_of_size(g, k - 1))
    if (degree_ok(clique)) out.push_back({Gem::Kind::kEmerald, clique, {-1, -1}});
  for (const auto& interior : cliques_of_size(g, k - 2)) {
    if (!degree_ok(interior)) continue;
    VertexSet common = g.vertices();
    interior.for_each([&](int v) { common &= g.neighbors(v); });
    for (int u = common.first(); u != -1; u = common.next(u))
      for (int v = common.next(u); v != -1; v = common.next(v)) {
        if (g.adjacent(u, v)) continue;
        VertexSet d = interior;
        d.add(u);
        d.add(v);
        out.push_back({Gem::Kind::kDiamond, d, {u, v}});
      }
  }
  for (const auto& gem : out) validate_gem(g, k, gem);
  std::sort(out.begin(), out.end(), [](const Gem& a, const Gem& b) {
    return a.vertices.to_vector() < b.vertices.to_vector();
  });
  return out;
}

bool is_ungemmed(const Graph& g, int k) { return find_gems(g, k).empty(); }

std::vector<VertexSet> find_clusters(const Graph& g, int k) {
  std::map<std::vector<int>, VertexSet> by_closed_nbhd;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != k - 1) continue;
    by_closed_nbhd[g.closed_neighborhood(v).to_vector()].add(v);
  }
  std::vector<VertexSet> out;
  out.reserve(by_closed_nbhd.size());
  for (auto& [nbhd, cluster] : by_closed_nbhd) out.push_back(cluster);
  std::sort(out.begin(), out.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
  VertexSet seen;
  for (const auto& c : out) {
    if (c.intersects(seen)) throw InternalError("clusters overlap");
    seen |= c;
    c.for_each([&](int v) {
      if (g.degree(v) != k - 1 ||
          g.closed_neighborhood(v) != g.closed_neighborhood(c.first()))
        throw InternalError("cluster member violates the shared-neighborhood invariant");
    });
  }
  return out;
}

Graph clone_vertex(const Graph& g, int x, int y, int k) {
  g.check_vertex(x);
  g.check_vertex(y);
  if (g.degree(x) != k - 1)
    throw InputError("clone_vertex: cloned vertex must have degree k-1");
  if (!g.adjacent(x, y)) throw InputError("clone_vertex: x and y must be adjacent");
  GraphBuilder b(g);
  std::vector<int> old = g.neighbors(y).to_vector();
  for (int w : old) b.remove_edge(y, w);
  g.neighbors(x).for_each([&](int w) {
    if (w != y) b.add_edge(y, w);
  });
  b.add_edge(y, x);
  Graph out = b.build();
  if (out.vertex_count() != g.vertex_count())
    throw InternalError("clone_vertex: vertex count changed");
  return out;
}

Graph clone_cluster(const Graph& g, const VertexSet& cluster, int y, int k) {
  if (cluster.empty()) throw InputError("clone_cluster: empty cluster");
  if (cluster.contains(y)) throw InputError("clone_cluster: y lies in the cluster");
  return clone_vertex(g, cluster.first(), y, k);
}

const char* d5_shape_name(D5Shape s) {
  switch (s) {
    case D5Shape::kSingleton: return "singleton";
    case D5Shape::kInducedPath2: return "induced-path-2";
    case D5Shape::kClusterPair: return "cluster-pair";
    case D5Shape::kClusterPairPlusVertexTriangle: return "cluster-pair-plus-vertex-triangle";
    case D5Shape::kPlainEdge: return "plain-edge";
    case D5Shape::kPlainTriangle: return "plain-triangle";
    case D5Shape::kOther: return "other";
  }
  return "other";
}

std::vector<D5Component> classify_d5(const Graph& g) {
  VertexSet d5;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 5) d5.add(v);
  auto clusters = find_clusters(g, 6);
  auto same_cluster = [&](int a, int b) {
    for (const auto& c : clusters)
      if (c.contains(a) && c.contains(b)) return true;
    return false;
  };
  std::vector<D5Component> out;
  for (const auto& comp : g.components(d5)) {
    D5Component c{comp, D5Shape::kOther};
    std::vector<int> vs = comp.to_vector();
    int edges = count_edges_within(g, comp);
    if (vs.size() == 1) {
      c.shape = D5Shape::kSingleton;
    } else if (vs.size() == 2) {
      c.shape = same_cluster(vs[0], vs[1]) ? D5Shape::kClusterPair : D5Shape::kPlainEdge;
    } else if (vs.size() == 3 && edges == 2) {
      c.shape = D5Shape::kInducedPath2;
    } else if (vs.size() == 3 && edges == 3) {
      int paired = 0;
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          if (same_cluster(vs[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>(j)]))
            ++paired;
      if (paired == 1)
        c.shape = D5Shape::kClusterPairPlusVertexTriangle;
      else if (paired == 0)
        c.shape = D5Shape::kPlainTriangle;
      // all three in one cluster stays kOther
    }
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

// Enumerates connected interiors witnessing a split-k-Ore certificate for
// one nonadjacent pair. Vertices adjacent to both endpoints are excluded
// outright: a split vertex's halves have disjoint neighborhoods.
struct CertificateSearch {
  const Graph& g;
  int k;
  const StructureCaps& caps;
  long& candidate_budget;
  OreMemo& memo;
  bool exhausted = false;

  CertificateSearch(const Graph& graph, int kk, const StructureCaps& c, long& budget,
                    OreMemo& m)
      : g(graph), k(kk), caps(c), candidate_budget(budget), memo(m) {}

  // Calls `found` for each certified interior; stops early when it returns
  // true. Enumeration is over connected sets, each visited once (sets are
  // grouped by their minimum vertex).
  bool search(int a, int b, const VertexSet& forbidden,
              const std::function<bool(const VertexSet&)>& found) {
    VertexSet universe;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (v == a || v == b || forbidden.contains(v)) continue;
      if (g.degree(v) < k - 1) continue;  // interior degrees are at least k-1
      if (g.adjacent(v, a) && g.adjacent(v, b)) continue;
      universe.add(v);
    }
    for (int anchor = universe.first(); anchor != -1; anchor = universe.next(anchor)) {
      VertexSet allowed = universe;
      for (int v = universe.first(); v != -1 && v < anchor; v = universe.next(v))
        allowed.remove(v);
      VertexSet start;
      start.add(anchor);
      VertexSet ext = g.neighbors(anchor) & allowed;
      if (grow(a, b, allowed, start, ext, found)) return true;
      if (exhausted) return false;
    }
    return false;
  }

  bool viable(int a, int b, const VertexSet& interior) const {
    int n = interior.count();
    if (n < k - 1 || (n + 1 - k) % (k - 1) != 0) return false;
    if (g.neighbors(a).count_intersection(interior) < 1) return false;
    if (g.neighbors(b).count_intersection(interior) < 1) return false;
    VertexSet h = interior;
    h.add(a);
    h.add(b);
    bool degrees_ok = true;
    interior.for_each([&](int v) {
      degrees_ok = degrees_ok && g.neighbors(v).count_intersection(h) >= k - 1;
    });
    return degrees_ok;
  }

  bool certify(int a, int b, const VertexSet& interior) {
    VertexSet h = interior;
    h.add(a);
    h.add(b);
    OreRecognitionOptions opts;
    opts.node_budget = caps.recognition_budget;
    opts.shared_memo = &memo;
    OreStatus st = is_split_k_ore(g, h, a, b, k, opts);
    if (st == OreStatus::kBudgetExhausted) exhausted = true;
    return st == OreStatus::kKOre;
  }

  // Binary include/exclude over the current extension frontier.
  bool grow(int a, int b, const VertexSet& allowed, const VertexSet& current,
            VertexSet ext, const std::function<bool(const VertexSet&)>& found) {
    if (--candidate_budget < 0) {
      exhausted = true;
      return false;
    }
    if (viable(a, b, current) && certify(a, b, current) && found(current)) return true;
    if (exhausted) return false;
    if (current.count() >= caps.interior_cap) return false;
    int u = ext.first();
    if (u == -1) return false;
    VertexSet with = current;
    with.add(u);
    VertexSet ext_with = ext | (g.neighbors(u) & allowed);
    ext_with.subtract(with);
    ext_with.subtract(banned_);
    VertexSet ext_without = ext;
    ext_without.remove(u);
    if (grow(a, b, allowed, with, ext_with, found)) return true;
    if (exhausted) return false;
    banned_.add(u);
    bool r = grow(a, b, allowed, current, ext_without, found);
    banned_.remove(u);
    return r;
  }

private:
  VertexSet banned_;
};

// Enumerates candidate frames (subsets of the stated size) and certifies
// every nonadjacent pair with pairwise-disjoint interiors.
struct FrameSearch {
  const Graph& g;
  int k;
  int frame_size;
  const StructureCaps& caps;
  long frame_budget;
  long candidate_budget;
  OreMemo memo;
  bool exhausted = false;

  FrameSearch(const Graph& graph, int kk, int fsize, const StructureCaps& c)
      : g(graph), k(kk), frame_size(fsize), caps(c), frame_budget(c.frame_budget),
        candidate_budget(c.candidate_budget) {}

  bool anchored_ = false;

  // anchor >= 0 forces membership; excluded vertices never appear.
  // on_gadget returns true to stop the whole search.
  void run(int anchor, const VertexSet& excluded,
           const std::function<bool(const ProtoGadget&)>& on_gadget) {
    std::vector<int> chosen;
    anchored_ = anchor >= 0;
    if (anchored_) chosen.push_back(anchor);
    extend(chosen, excluded, on_gadget);
  }

  bool extend(std::vector<int>& chosen, const VertexSet& excluded,
              const std::function<bool(const ProtoGadget&)>& on_gadget) {
    if (--frame_budget < 0) {
      exhausted = true;
      return false;
    }
    if (static_cast<int>(chosen.size()) == frame_size) return certify(chosen, on_gadget);
    // The anchor (when present) sits at index 0 and does not constrain the
    // order; the rest are enumerated ascending to visit each subset once.
    std::size_t free_from = anchored_ ? 1 : 0;
    int floor_label = 0;
    for (std::size_t i = free_from; i < chosen.size(); ++i)
      floor_label = std::max(floor_label, chosen[i] + 1);
    for (int v = floor_label; v < g.vertex_count(); ++v) {
      if (excluded.contains(v)) continue;
      if (anchored_ && v == chosen[0]) continue;
      if (!pair_feasible(chosen, v)) continue;
      chosen.push_back(v);
      bool stop = extend(chosen, excluded, on_gadget);
      chosen.pop_back();
      if (stop || exhausted) return stop;
    }
    return false;
  }

  bool pair_feasible(const std::vector<int>& chosen, int v) const {
    // A nonadjacent frame pair needs room for a certificate: both ends keep
    // at least one neighbor off the frame and the graph has k-1 spare
    // vertices per replacement pair.
    int nonadjacent = 0;
    for (int c : chosen) {
      if (g.adjacent(c, v)) continue;
      if (g.degree(v) < 1 || g.degree(c) < 1) return false;
      ++nonadjacent;
    }
    if (nonadjacent == 0) return true;
    return g.vertex_count() - frame_size >= k - 1;
  }

  bool certify(const std::vector<int>& frame,
               const std::function<bool(const ProtoGadget&)>& on_gadget) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < frame.size(); ++i)
      for (std::size_t j = i + 1; j < frame.size(); ++j)
        if (!g.adjacent(frame[i], frame[j])) pairs.emplace_back(frame[i], frame[j]);
    VertexSet frame_set;
    for (int v : frame) frame_set.add(v);
    if (static_cast<int>(pairs.size()) * (k - 1) >
        g.vertex_count() - static_cast<int>(frame.size()))
      return false;

    ProtoGadget gadget;
    gadget.frame = frame;
    std::sort(gadget.frame.begin(), gadget.frame.end());
    if (pairs.empty()) return on_gadget(gadget);
    return assign(gadget, pairs, 0, frame_set, on_gadget);
  }

  bool assign(ProtoGadget& gadget, const std::vector<std::pair<int, int>>& pairs,
              std::size_t idx, VertexSet used,
              const std::function<bool(const ProtoGadget&)>& on_gadget) {
    if (idx == pairs.size()) {
      // Emission-time invariant check: interiors disjoint from each other
      // and from the frame, one certificate per nonadjacent pair.
      VertexSet frame_set, seen;
      for (int v : gadget.frame) frame_set.add(v);
      if (gadget.replacements.size() != pairs.size())
        throw InternalError("proto-gadget certificate count mismatch");
      for (const auto& rep : gadget.replacements) {
        if (rep.interior.intersects(frame_set) || rep.interior.intersects(seen))
          throw InternalError("proto-gadget certificate interiors overlap");
        seen |= rep.interior;
      }
      return on_gadget(gadget);
    }
    auto [a, b] = pairs[idx];
    CertificateSearch cert{g, k, caps, candidate_budget, memo};
    bool stop = cert.search(a, b, used, [&](const VertexSet& interior) {
      gadget.replacements.push_back({{a, b}, interior});
      bool s = assign(gadget, pairs, idx + 1, used | interior, on_gadget);
      gadget.replacements.pop_back();
      return s;
    });
    if (cert.exhausted) exhausted = true;
    return stop;
  }
};

}  // namespace

ProtoGadgetSearch find_proto_gadgets(const Graph& g, int k, int frame_size,
                                     const StructureCaps& caps) {
  if (frame_size != k - 1 && frame_size != k - 2)
    throw InputError("find_proto_gadgets: frame size must be k-1 or k-2");
  ProtoGadgetSearch out;
  FrameSearch search(g, k, frame_size, caps);
  search.run(-1, VertexSet{}, [&](const ProtoGadget& found) {
    out.gadgets.push_back(found);
    return false;  // keep searching; one certificate set per frame
  });
  out.budget_exhausted = search.exhausted;
  return out;
}

DirectionResult classify_neighbor_direction(const Graph& g, int k, int x, int y,
                                            const StructureCaps& caps) {
  g.check_vertex(x);
  g.check_vertex(y);
  if (g.degree(x) != k - 1 || (g.degree(y) != k && g.degree(y) != k + 1) ||
      !g.adjacent(x, y))
    return {NeighborDirection::kInapplicable, false};
  FrameSearch search(g, k, k - 1, caps);
  VertexSet excluded;
  excluded.add(y);
  bool downward = false;
  search.run(x, excluded, [&](const ProtoGadget&) {
    downward = true;
    return true;
  });
  if (downward) return {NeighborDirection::kDownward, false};
  return {NeighborDirection::kUpward, search.exhausted};
}

DanglingResult is_dangling(const Graph& g, int x, int y, const PotentialParams& params,
                           const StructureCaps& caps) {
  const int k = params.k;
  DanglingResult out;
  if (g.degree(x) != k - 1 || g.degree(y) != k - 1 || !g.adjacent(x, y)) return out;
  for (const auto& c : find_clusters(g, k))
    if (c.contains(x) && c.contains(y)) return out;

  // Clone of y with x (x removed) must be 2-tight and ungemmed.
  Graph clone = clone_vertex(g, y, x, k);
  if (!is_ungemmed(clone, k)) return out;
  if (!is_critical(clone, k)) return out;
  Rational threshold = Rational(static_cast<long long>(k) * (k - 3)) - params.p_big -
                       params.q_big + Rational(2) * params.delta;
  if (!(eps_delta_potential(clone, params) > threshold)) return out;

  // A kite whose frame meets D5 exactly in x, avoiding y entirely, with no
  // degree-6 frame vertex adjacent to y.
  FrameSearch search(g, k, k - 2, caps);
  VertexSet excluded;
  excluded.add(y);
  bool found = false;
  search.run(x, excluded, [&](const ProtoGadget& kite) {
    for (int w : kite.frame) {
      if (w != x && g.degree(w) == k - 1) return false;
      if (g.degree(w) == k && g.adjacent(w, y)) return false;
    }
    for (const auto& rep : kite.replacements)
      if (rep.interior.contains(y)) return false;
    found = true;
    return true;
  });
  out.dangles = found;
  out.budget_exhausted = search.exhausted;
  return out;
}

namespace {

using Status = LemmaCheck::Status;

std::string tuple_string(std::initializer_list<int> vs) {
  std::string s = "(";
  bool first = true;
  for (int v : vs) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + ")";
}

}  // namespace

StructuralLemmaReport check_structural_lemmas(const Graph& g, int k,
                                              const std::optional<PotentialParams>& params,
                                              const CertifiedHypotheses& hyps,
                                              const StructureCaps& caps) {
  StructuralLemmaReport report;
  auto add = [&](const std::string& id) -> LemmaCheck& {
    report.checks.push_back({id, Status::kPass, 0, {}});
    return report.checks.back();
  };
  auto skip = [&](const std::string& id) { add(id).status = Status::kSkipped; };

  const bool tight_ungemmed = hyps.tight_level >= 0 && hyps.ungemmed;
  auto clusters = find_clusters(g, k);
  auto cluster_of = [&](int v) -> const VertexSet* {
    for (const auto& c : clusters)
      if (c.contains(v)) return &c;
    return nullptr;
  };

  // Maximum cluster size k-4 on tight ungemmed graphs.
  if (tight_ungemmed) {
    auto& c = add("cluster-size-cap");
    for (const auto& cl : clusters) {
      ++c.instances;
      if (cl.count() > k - 4) {
        c.status = Status::kFail;
        c.failures.push_back("cluster" + tuple_string({cl.first()}) + " has size " +
                             std::to_string(cl.count()));
      }
    }
  } else {
    skip("cluster-size-cap");
  }

  // No induced path on four degree-(k-1) vertices.
  if (tight_ungemmed) {
    auto& c = add("no-induced-p4-low-degree");
    for (auto [v2, v3] : g.edges()) {
      if (g.degree(v2) != k - 1 || g.degree(v3) != k - 1) continue;
      VertexSet left = g.neighbors(v2) - g.closed_neighborhood(v3);
      VertexSet right = g.neighbors(v3) - g.closed_neighborhood(v2);
      left.for_each([&](int v1) {
        if (g.degree(v1) != k - 1) return;
        right.for_each([&](int v4) {
          if (g.degree(v4) != k - 1 || v1 == v4 || g.adjacent(v1, v4)) return;
          ++c.instances;
          c.status = Status::kFail;
          c.failures.push_back(tuple_string({v1, v2, v3, v4}));
        });
      });
    }
  } else {
    skip("no-induced-p4-low-degree");
  }

  // Common-neighbor lemmas, gated on certified edge-addition freeness.
  {
    int i_cert = hyps.no_edge_addition_up_to;
    if (i_cert >= 1) {
      auto& c = add("common-neighbors-nested");
      for (int x = 0; x < g.vertex_count(); ++x) {
        if (g.degree(x) != k - 1) continue;
        g.neighbors(x).for_each([&](int y) {
          if (g.degree(y) > k - 2 + i_cert) return;
          if (g.neighbors(x).count_intersection(g.neighbors(y)) < k - 3) return;
          ++c.instances;
          if (!g.closed_neighborhood(x).is_subset_of(g.closed_neighborhood(y))) {
            c.status = Status::kFail;
            c.failures.push_back(tuple_string({x, y}));
          }
        });
      }
      auto& eq = add("adjacent-low-degree-same-closed-nbhd");
      for (auto [x, y] : g.edges()) {
        if (g.degree(x) != k - 1 || g.degree(y) != k - 1) continue;
        if (g.neighbors(x).count_intersection(g.neighbors(y)) < k - 3) continue;
        ++eq.instances;
        if (g.closed_neighborhood(x) != g.closed_neighborhood(y)) {
          eq.status = Status::kFail;
          eq.failures.push_back(tuple_string({x, y}));
        }
      }
    } else {
      skip("common-neighbors-nested");
      skip("adjacent-low-degree-same-closed-nbhd");
    }
    if (i_cert >= 2) {
      auto& c = add("deg-k-neighbor-nested");
      for (auto [x, y] : g.edges()) {
        int a = x, b = y;
        if (g.degree(a) != k - 1) std::swap(a, b);
        if (g.degree(a) != k - 1 || g.degree(b) != k) continue;
        if (g.neighbors(a).count_intersection(g.neighbors(b)) < k - 3) continue;
        ++c.instances;
        if (!g.closed_neighborhood(a).is_subset_of(g.closed_neighborhood(b))) {
          c.status = Status::kFail;
          c.failures.push_back(tuple_string({a, b}));
        }
      }
    } else {
      skip("deg-k-neighbor-nested");
    }
  }

  // Split k-Ore subgraphs leave each split vertex with at least 3 edges
  // inside, on 2-tight ungemmed instances.
  if (hyps.tight_level >= 2 && hyps.ungemmed) {
    auto& c = add("split-ore-min-degree");
    long budget = caps.candidate_budget;
    OreMemo memo;
    bool truncated = false;
    for (int a = 0; a < g.vertex_count() && !truncated; ++a) {
      for (int b = a + 1; b < g.vertex_count() && !truncated; ++b) {
        if (g.adjacent(a, b)) continue;
        CertificateSearch cert{g, k, caps, budget, memo};
        cert.search(a, b, VertexSet{}, [&](const VertexSet& interior) {
          if (interior.count() + 2 >= g.vertex_count()) return false;  // need H proper
          VertexSet h = interior;
          h.add(a);
          h.add(b);
          ++c.instances;
          int da = g.neighbors(a).count_intersection(interior);
          int db = g.neighbors(b).count_intersection(interior);
          if (da < 3 || db < 3) {
            c.status = Status::kFail;
            c.failures.push_back(tuple_string({a, b}) + " degrees " + std::to_string(da) +
                                 "," + std::to_string(db));
          }
          return false;  // enumerate all certificates
        });
        truncated = truncated || cert.exhausted;
      }
    }
    if (truncated && c.status == Status::kPass) c.status = Status::kPassWithBudget;
  } else {
    skip("split-ore-min-degree");
  }

  // Proto-gadget frame facts (replacement-edge degrees, shared clusters).
  if (tight_ungemmed && k == 6) {
    auto search = find_proto_gadgets(g, k, k - 1, caps);
    auto& rep_deg = add("frame-replacement-degrees");
    auto& one_cluster = add("frame-deg5-same-cluster");
    for (const auto& pg : search.gadgets) {
      for (int v : pg.frame) {
        int reps = 0;
        for (const auto& r : pg.replacements)
          if (r.split.first == v || r.split.second == v) ++reps;
        if (g.degree(v) == k - 1) {
          ++rep_deg.instances;
          if (reps != 0) {
            rep_deg.status = Status::kFail;
            rep_deg.failures.push_back(tuple_string({v}));
          }
        } else if (g.degree(v) == k || g.degree(v) == k + 1) {
          ++rep_deg.instances;
          if (reps > 1) {
            rep_deg.status = Status::kFail;
            rep_deg.failures.push_back(tuple_string({v}));
          }
        }
      }
      for (std::size_t i = 0; i < pg.frame.size(); ++i)
        for (std::size_t j = i + 1; j < pg.frame.size(); ++j) {
          int u = pg.frame[i], v = pg.frame[j];
          if (g.degree(u) != k - 1 || g.degree(v) != k - 1) continue;
          ++one_cluster.instances;
          const VertexSet* cu = cluster_of(u);
          if (cu == nullptr || !cu->contains(v)) {
            one_cluster.status = Status::kFail;
            one_cluster.failures.push_back(tuple_string({u, v}));
          }
        }
    }
    if (search.budget_exhausted) {
      if (rep_deg.status == Status::kPass) rep_deg.status = Status::kPassWithBudget;
      if (one_cluster.status == Status::kPass) one_cluster.status = Status::kPassWithBudget;
    }
  } else {
    skip("frame-replacement-degrees");
    skip("frame-deg5-same-cluster");
  }

  // Size-2 clusters have at most one neighbor of degree <= k, and such a
  // cluster lies in a proto-gadget (1-tight + ungemmed).
  if (hyps.tight_level >= 1 && hyps.ungemmed && k == 6) {
    auto& c = add("cluster2-low-degree-neighbors");
    bool truncated = false;
    for (const auto& cl : clusters) {
      if (cl.count() != 2) continue;
      ++c.instances;
      int x = cl.first();
      VertexSet nbrs = g.neighbors(x) - cl;
      int low = 0;
      nbrs.for_each([&](int w) {
        if (g.degree(w) <= k) ++low;
      });
      if (low > 1) {
        c.status = Status::kFail;
        c.failures.push_back("cluster" + tuple_string({x}) + " has " + std::to_string(low) +
                             " low-degree neighbors");
        continue;
      }
      if (low == 1) {
        FrameSearch fs(g, k, k - 1, caps);
        bool contained = false;
        fs.run(x, VertexSet{}, [&](const ProtoGadget& pg) {
          VertexSet frame_set;
          for (int v : pg.frame) frame_set.add(v);
          if (cl.is_subset_of(frame_set)) {
            contained = true;
            return true;
          }
          return false;
        });
        truncated = truncated || fs.exhausted;
        if (!contained && !fs.exhausted) {
          c.status = Status::kFail;
          c.failures.push_back("cluster" + tuple_string({x}) + " not in a proto-gadget");
        }
      }
    }
    if (truncated && c.status == Status::kPass) c.status = Status::kPassWithBudget;
  } else {
    skip("cluster2-low-degree-neighbors");
  }

  // Degree-5 subgraph shape facts for 2-tight ungemmed graphs (k = 6).
  if (hyps.tight_level >= 2 && hyps.ungemmed && k == 6) {
    InducedSubgraph d5 = degree_subgraph(g, 5);
    {
      auto& c = add("d5-no-k4");
      c.instances = 1;
      if (!cliques_of_size(d5.graph, 4).empty()) {
        c.status = Status::kFail;
        c.failures.push_back("K4 present in D5");
      }
    }
    {
      auto& c = add("d5-component-size-cap");
      for (const auto& comp : d5.graph.components(d5.graph.vertices())) {
        ++c.instances;
        if (comp.count() > 3) {
          c.status = Status::kFail;
          c.failures.push_back("component of size " + std::to_string(comp.count()));
        }
      }
    }
    {
      auto& c = add("d5-triangle-isolated");
      for (const auto& tri : cliques_of_size(d5.graph, 3)) {
        ++c.instances;
        VertexSet comp = d5.graph.component_of(tri.first(), d5.graph.vertices());
        if (comp.count() != 3) {
          c.status = Status::kFail;
          c.failures.push_back("triangle inside larger component");
        }
      }
    }
    {
      auto& c = add("d5-max-degree-2");
      for (int v = 0; v < d5.graph.vertex_count(); ++v) {
        ++c.instances;
        if (d5.graph.degree(v) > 2) {
          c.status = Status::kFail;
          c.failures.push_back(tuple_string({d5.labels[static_cast<std::size_t>(v)]}));
        }
      }
    }
    {
      auto& c = add("d5-no-c4");
      // 4-cycles: nonadjacent u,v with two common neighbors in D5.
      for (int u = 0; u < d5.graph.vertex_count(); ++u)
        for (int v = u + 1; v < d5.graph.vertex_count(); ++v) {
          if (d5.graph.adjacent(u, v)) continue;
          ++c.instances;
          if (d5.graph.neighbors(u).count_intersection(d5.graph.neighbors(v)) >= 2) {
            c.status = Status::kFail;
            c.failures.push_back(tuple_string({d5.labels[static_cast<std::size_t>(u)],
                                               d5.labels[static_cast<std::size_t>(v)]}));
          }
        }
    }
  } else {
    skip("d5-no-k4");
    skip("d5-component-size-cap");
    skip("d5-triangle-isolated");
    skip("d5-max-degree-2");
    skip("d5-no-c4");
  }

  // Clones across an induced degree-5 path are 1-tight and ungemmed
  // (2-tight + ungemmed hypothesis; needs potential params).
  if (hyps.tight_level >= 2 && hyps.ungemmed && params && k == 6) {
    auto& c = add("path-clone-tight-ungemmed");
    Rational threshold = Rational(static_cast<long long>(k) * (k - 3)) - params->p_big -
                         params->q_big + params->delta;
    for (int v2 = 0; v2 < g.vertex_count(); ++v2) {
      if (g.degree(v2) != 5) continue;
      std::vector<int> d5n;
      g.neighbors(v2).for_each([&](int w) {
        if (g.degree(w) == 5) d5n.push_back(w);
      });
      for (std::size_t i = 0; i < d5n.size(); ++i)
        for (std::size_t j = 0; j < d5n.size(); ++j) {
          if (i == j) continue;
          int v1 = d5n[i], v3 = d5n[j];
          if (g.adjacent(v1, v3)) continue;
          ++c.instances;
          Graph cl = clone_vertex(g, v2, v3, k);  // clone v2, removing v3
          bool ok = is_ungemmed(cl, k) && is_critical(cl, k) &&
                    eps_delta_potential(cl, *params) > threshold;
          if (!ok) {
            c.status = Status::kFail;
            c.failures.push_back(tuple_string({v1, v2, v3}));
          }
        }
    }
  } else {
    skip("path-clone-tight-ungemmed");
  }

  // A degree-5 frame vertex of a proto-gadget has at most one neighbor with
  // which it shares no proto-gadget (the one off the frame).
  if (hyps.tight_level >= 2 && hyps.ungemmed && k == 6) {
    auto& c = add("off-frame-neighbor-unique");
    auto search = find_proto_gadgets(g, k, k - 1, caps);
    bool truncated = search.budget_exhausted;
    for (const auto& pg : search.gadgets) {
      VertexSet frame_set;
      for (int v : pg.frame) frame_set.add(v);
      for (int x : pg.frame) {
        if (g.degree(x) != 5) continue;
        g.neighbors(x).for_each([&](int y) {
          if (frame_set.contains(y)) return;
          if (g.degree(y) != 6 && g.degree(y) != 7) return;
          ++c.instances;
          // No proto-gadget may carry both x and y on its frame.
          FrameSearch fs(g, k, k - 1, caps);
          bool both = false;
          fs.run(x, VertexSet{}, [&](const ProtoGadget& other) {
            for (int w : other.frame)
              if (w == y) {
                both = true;
                return true;
              }
            return false;
          });
          truncated = truncated || fs.exhausted;
          if (both) {
            c.status = Status::kFail;
            c.failures.push_back(tuple_string({x, y}));
          }
        });
      }
    }
    if (truncated && c.status == Status::kPass) c.status = Status::kPassWithBudget;
  } else {
    skip("off-frame-neighbor-unique");
  }

  return report;
}

}  // namespace critgraph
