#include "critgraph/json_io.hpp"

#include "json.hpp"

namespace critgraph {

std::string graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.vertex_count();
  j["edges"] = g.edges();
  return j.dump();
}

Graph graph_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  return Graph::from_edges(j.at("n").get<int>(),
                           j.at("edges").get<std::vector<std::pair<int, int>>>());
}

namespace {

nlohmann::json claim_to_json(const DensityClaim& c) {
  nlohmann::json j;
  j["name"] = c.name;
  j["applicable"] = c.applicable;
  if (c.applicable) {
    j["pass"] = c.pass;
    j["equality"] = c.equality;
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
  }
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

const char* ore_status_name(OreStatus s) {
  switch (s) {
    case OreStatus::kKOre: return "k-ore";
    case OreStatus::kNotKOre: return "not-k-ore";
    case OreStatus::kBudgetExhausted: return "budget-exhausted";
  }
  return "unknown";
}

}  // namespace

std::string density_report_to_json(const DensityReport& report) {
  nlohmann::json j;
  j["schema"] = "critgraph.density.v1";
  j["critical"] = report.critical;
  j["ore_status"] = ore_status_name(report.ore_status);
  j["tightness"] = report.tightness;
  nlohmann::json claims = nlohmann::json::array();
  for (const auto& c : report.claims) claims.push_back(claim_to_json(c));
  j["claims"] = claims;
  j["pass"] = report.all_applicable_pass();
  return j.dump();
}

std::string structure_report_to_json(const Graph& g, int k,
                                     const std::optional<PotentialParams>& params,
                                     const CertifiedHypotheses& hyps,
                                     const StructureCaps& caps) {
  nlohmann::json j;
  j["schema"] = "critgraph.structure.v1";
  j["k"] = k;
  j["n"] = g.vertex_count();

  nlohmann::json gems = nlohmann::json::array();
  for (const auto& gem : find_gems(g, k)) {
    nlohmann::json gj;
    gj["kind"] = gem.kind == Gem::Kind::kDiamond ? "diamond" : "emerald";
    gj["vertices"] = gem.vertices.to_vector();
    if (gem.kind == Gem::Kind::kDiamond)
      gj["endpoints"] = {gem.endpoints.first, gem.endpoints.second};
    gems.push_back(gj);
  }
  j["gems"] = gems;

  nlohmann::json clusters = nlohmann::json::array();
  for (const auto& c : find_clusters(g, k)) clusters.push_back(c.to_vector());
  j["clusters"] = clusters;

  if (k == 6) {
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& comp : classify_d5(g))
      comps.push_back({{"vertices", comp.vertices.to_vector()},
                       {"shape", d5_shape_name(comp.shape)}});
    j["d5_components"] = comps;
  }

  auto search = find_proto_gadgets(g, k, k - 1, caps);
  nlohmann::json gadgets = nlohmann::json::array();
  for (const auto& pg : search.gadgets) {
    nlohmann::json pj;
    pj["frame"] = pg.frame;
    nlohmann::json reps = nlohmann::json::array();
    for (const auto& rep : pg.replacements)
      reps.push_back({{"split", {rep.split.first, rep.split.second}},
                      {"interior", rep.interior.to_vector()}});
    pj["replacements"] = reps;
    gadgets.push_back(pj);
  }
  j["proto_gadgets"] = gadgets;
  j["proto_gadget_budget_exhausted"] = search.budget_exhausted;

  auto lemmas = check_structural_lemmas(g, k, params, hyps, caps);
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : lemmas.checks) {
    const char* status = c.status == LemmaCheck::Status::kPass            ? "pass"
                         : c.status == LemmaCheck::Status::kFail          ? "fail"
                         : c.status == LemmaCheck::Status::kPassWithBudget
                             ? "pass-with-budget"
                             : "skipped";
    checks.push_back({{"id", c.id},
                      {"status", status},
                      {"instances", c.instances},
                      {"failures", c.failures}});
  }
  j["lemma_checks"] = checks;
  j["lemmas_pass"] = lemmas.all_pass_or_skipped();
  return j.dump();
}

}  // namespace critgraph
