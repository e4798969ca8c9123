#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "critgraph/graph.hpp"

namespace critgraph {

// Result of canonical labeling: a label-invariant key plus one labeling that
// realizes it. labeling[c] is the original vertex receiving canonical label c.
struct CanonicalForm {
  int n = 0;
  std::vector<std::uint64_t> key;  // upper-triangle adjacency bits, row-major
  std::vector<int> labeling;

  bool operator==(const CanonicalForm& o) const { return n == o.n && key == o.key; }
  bool operator<(const CanonicalForm& o) const {
    if (n != o.n) return n < o.n;
    return key < o.key;
  }

  // Compact string usable as a hash-map key.
  std::string key_string() const;
};

// Canonical form via equitable refinement with backtracking over target-cell
// individualization. Exact on all inputs; intended for desk-scale graphs.
CanonicalForm canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

// Rebuilds the graph in canonical labels.
Graph apply_canonical_labeling(const Graph& g, const CanonicalForm& form);

}  // namespace critgraph
