#pragma once

#include <string>

#include "critgraph/discharge.hpp"
#include "critgraph/graph.hpp"
#include "critgraph/potential.hpp"
#include "critgraph/structure.hpp"

namespace critgraph {

// Adjacency-list export: {"n": int, "edges": [[u,v], ...]} with u < v,
// lexicographically sorted.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

std::string density_report_to_json(const DensityReport& report);

// Full structural census for one graph: gems, clusters, D5 taxonomy,
// proto-gadgets with certificates, and the lemma-check matrix.
std::string structure_report_to_json(const Graph& g, int k,
                                     const std::optional<PotentialParams>& params,
                                     const CertifiedHypotheses& hyps,
                                     const StructureCaps& caps);

}  // namespace critgraph
