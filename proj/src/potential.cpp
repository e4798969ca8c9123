#include "critgraph/potential.hpp"

#include <algorithm>

#include "critgraph/coloring.hpp"

namespace critgraph {

PotentialParams PotentialParams::validated(int k, Rational epsilon, Rational delta,
                                           Rational p_big, Rational q_big,
                                           Rational delta_big, Rational gamma_big) {
  if (k < 4) throw InputError("potential params: k must be at least 4");
  PotentialParams p{k, std::move(epsilon), std::move(delta), std::move(p_big),
                    std::move(q_big), std::move(delta_big), std::move(gamma_big)};
  if (p.epsilon <= 0 || p.delta <= 0)
    throw InputError("potential params: epsilon and delta must be positive");
  for (const auto& c : p.clause_reports())
    if (!c.holds)
      throw InputError("potential params violate clause " + std::to_string(c.clause) +
                       ": " + c.lhs + " vs " + c.rhs);
  return p;
}

PotentialParams PotentialParams::for_k6() {
  return validated(6, make_rational(1, 105), make_rational(10, 105),
                   make_rational(20, 21), make_rational(2, 7), make_rational(32, 21),
                   Rational(2) + make_rational(10, 105));
}

std::vector<PotentialParams::ClauseReport> PotentialParams::clause_reports() const {
  std::vector<ClauseReport> out;
  auto push = [&](int clause, const Rational& lhs, const Rational& rhs, bool holds) {
    out.push_back({clause, holds, lhs == rhs, to_fraction_string(lhs),
                   to_fraction_string(rhs)});
  };
  // 1: delta = 2(k-1) epsilon
  push(1, delta, Rational(2 * (k - 1)) * epsilon, delta == Rational(2 * (k - 1)) * epsilon);
  // 2: 2 + delta <= Gamma <= k-2  (reported as one clause; equality on the left)
  {
    Rational lhs = Rational(2) + delta;
    bool holds = lhs <= gamma_big && gamma_big <= Rational(k - 2);
    out.push_back({2, holds, lhs == gamma_big, to_fraction_string(lhs),
                   to_fraction_string(gamma_big)});
  }
  // 3: (Gamma-2) + Q + k delta <= P
  push(3, gamma_big - 2 + q_big + Rational(k) * delta, p_big,
       gamma_big - 2 + q_big + Rational(k) * delta <= p_big);
  // 4: P + Q + (k/2) delta <= Delta
  push(4, p_big + q_big + Rational(k) / 2 * delta, delta_big,
       p_big + q_big + Rational(k) / 2 * delta <= delta_big);
  // 5: Delta + (k-1) delta <= 2
  push(5, delta_big + Rational(k - 1) * delta, Rational(2),
       delta_big + Rational(k - 1) * delta <= Rational(2));
  return out;
}

std::vector<VertexSet> cliques_of_size(const Graph& g, int size) {
  std::vector<VertexSet> out;
  if (size <= 0 || size > g.vertex_count()) return out;
  // Extend by vertices of larger index only, so each clique appears once.
  struct Rec {
    const Graph& g;
    int size;
    std::vector<VertexSet>& out;
    void grow(VertexSet clique, int count, const VertexSet& cand) {
      if (count == size) {
        out.push_back(clique);
        return;
      }
      for (int v = cand.first(); v != -1; v = cand.next(v)) {
        VertexSet next_cand = cand & g.neighbors(v);
        // only vertices above v remain candidates
        VertexSet above;
        for (int w = next_cand.next(v); w != -1; w = next_cand.next(w)) above.add(w);
        if (count + 1 + above.count() < size) continue;
        VertexSet c2 = clique;
        c2.add(v);
        grow(c2, count + 1, above);
      }
    }
  } rec{g, size, out};
  rec.grow(VertexSet{}, 0, g.vertices());
  return out;
}

namespace {

// Max-weight independent set over the clique intersection-conflict graph,
// branch and bound. Weight 2 for K_{k-1} cliques, 1 for K_{k-2}.
struct FamilySearch {
  const std::vector<VertexSet>& cliques;
  const std::vector<int>& weights;
  int k;
  int best = 0;
  std::vector<int> best_pick;

  void run() {
    std::vector<int> pick;
    branch(0, 0, VertexSet{}, pick);
  }

  // Bound: remaining cliques fit in the untouched vertices; weight per vertex
  // is at most 2/(k-1).
  int bound(std::size_t from, const VertexSet& used) const {
    VertexSet reachable;
    for (std::size_t i = from; i < cliques.size(); ++i)
      if (!cliques[i].intersects(used)) reachable |= cliques[i];
    return (2 * reachable.count()) / (k - 1);
  }

  void branch(std::size_t from, int weight, VertexSet used, std::vector<int>& pick) {
    if (weight > best) {
      best = weight;
      best_pick = pick;
    }
    if (from >= cliques.size()) return;
    if (weight + bound(from, used) <= best) return;
    for (std::size_t i = from; i < cliques.size(); ++i) {
      if (cliques[i].intersects(used)) continue;
      pick.push_back(static_cast<int>(i));
      branch(i + 1, weight + weights[i], used | cliques[i], pick);
      pick.pop_back();
    }
  }
};

}  // namespace

CliqueFamilyWeight clique_family_weight(const Graph& g, int k) {
  if (k < 4) throw InputError("clique_family_weight: k must be at least 4");
  std::vector<VertexSet> cliques = cliques_of_size(g, k - 1);
  std::size_t big = cliques.size();
  std::vector<VertexSet> small = cliques_of_size(g, k - 2);
  cliques.insert(cliques.end(), small.begin(), small.end());
  std::vector<int> weights(cliques.size());
  for (std::size_t i = 0; i < cliques.size(); ++i) weights[i] = i < big ? 2 : 1;
  FamilySearch search{cliques, weights, k};
  search.run();
  CliqueFamilyWeight out;
  out.value = search.best;
  for (int idx : search.best_pick) out.family.push_back(cliques[static_cast<std::size_t>(idx)]);
  return out;
}

Rational ky_potential(const Graph& g, int k) {
  return Rational(static_cast<long long>(k - 2) * (k + 1)) * g.vertex_count() -
         Rational(2 * (k - 1)) * g.edge_count();
}

Rational eps_delta_potential(const Graph& g, const PotentialParams& params) {
  int t = clique_family_weight(g, params.k).value;
  return ky_potential(g, params.k) + params.epsilon * g.vertex_count() -
         params.delta * t;
}

Rational subset_potential(const Graph& g, const VertexSet& r,
                          const PotentialParams& params) {
  return eps_delta_potential(induced_subgraph(g, r).graph, params);
}

bool DensityReport::all_applicable_pass() const {
  for (const auto& c : claims)
    if (c.applicable && !c.pass) return false;
  return true;
}

DensityReport check_density_theorems(const Graph& g, int k,
                                     const std::optional<PotentialParams>& params,
                                     const OreRecognitionOptions& ore_opts) {
  if (params && params->k != k)
    throw InputError("check_density_theorems: params built for a different k");
  DensityReport report;
  report.critical = is_critical(g, k);
  auto claim = [&](const std::string& name) -> DensityClaim& {
    report.claims.push_back({});
    report.claims.back().name = name;
    return report.claims.back();
  };
  if (!report.critical) {
    auto& c = claim("k-critical");
    c.applicable = true;
    c.pass = false;
    c.note = "input is not k-critical; density claims inapplicable";
    return report;
  }

  int n = g.vertex_count();
  Rational p_bar = ky_potential(g, k);
  Rational kk3 = Rational(static_cast<long long>(k) * (k - 3));

  {
    auto& c = claim("ky-bound");
    c.applicable = true;
    c.lhs = to_fraction_string(p_bar);
    c.rhs = to_fraction_string(kk3);
    c.pass = p_bar <= kk3;
    c.equality = p_bar == kk3;
  }

  OreRecognition rec = recognize_k_ore(g, k, ore_opts);
  report.ore_status = rec.status;
  bool is_ore = rec.status == OreStatus::kKOre;
  bool ore_known = rec.status != OreStatus::kBudgetExhausted;

  int t = clique_family_weight(g, k).value;

  if (is_ore) {
    auto& c = claim("ore-ky-equality");
    c.applicable = true;
    c.lhs = to_fraction_string(p_bar);
    c.rhs = to_fraction_string(kk3);
    c.pass = c.equality = p_bar == kk3;
    if (n > k) {
      auto& tb = claim("ore-clique-weight-bound");
      tb.applicable = true;
      tb.lhs = std::to_string(t);
      tb.rhs = to_fraction_string(Rational(2) + Rational(n - 1) / (k - 1));
      tb.pass = Rational(t) >= Rational(2) + Rational(n - 1) / (k - 1);
    }
  } else if (ore_known) {
    // Strengthened bound for non-extremal critical graphs.
    long long yk = (k == 4) ? 2 : (k == 5) ? 4 : static_cast<long long>(k) * k - 5 * k + 2;
    auto& c = claim("strong-ky-bound");
    c.applicable = true;
    c.lhs = to_fraction_string(p_bar);
    c.rhs = to_fraction_string(Rational(yk));
    c.pass = p_bar <= Rational(yk);
    c.equality = p_bar == Rational(yk);
  }

  if (params) {
    Rational p = ky_potential(g, k) + params->epsilon * n - params->delta * t;
    if (is_ore && n == k) {
      auto& c = claim("ore-potential-kk");
      c.applicable = true;
      Rational rhs = kk3 + Rational(k) * params->epsilon - 2 * params->delta;
      c.lhs = to_fraction_string(p);
      c.rhs = to_fraction_string(rhs);
      c.pass = c.equality = p == rhs;
    } else if (is_ore) {
      auto& c = claim("ore-potential-bound");
      c.applicable = true;
      Rational rhs = kk3 + Rational(n) * params->epsilon -
                     (Rational(2) + Rational(n - 1) / (k - 1)) * params->delta;
      c.lhs = to_fraction_string(p);
      c.rhs = to_fraction_string(rhs);
      c.pass = p <= rhs;
      c.equality = p == rhs;
    } else if (ore_known) {
      auto& c = claim("non-ore-potential-bound");
      c.applicable = true;
      Rational rhs = kk3 - params->p_big;
      c.lhs = to_fraction_string(p);
      c.rhs = to_fraction_string(rhs);
      c.pass = p <= rhs;
      c.equality = p == rhs;
      if (k != 6) c.note = "conjectured bound for this k; instance-level check only";
    }
    report.tightness = -1;
    for (int i = 0; i <= 3; ++i) {
      Rational threshold = kk3 - params->p_big - params->q_big + Rational(i) * params->delta;
      if (p > threshold) report.tightness = i;
    }
  }
  if (!ore_known) {
    auto& c = claim("ore-recognition");
    c.applicable = false;
    c.note = "recognizer budget exhausted; Ore-conditional claims skipped";
  }
  return report;
}

}  // namespace critgraph
