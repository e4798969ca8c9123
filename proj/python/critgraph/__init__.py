"""Exact machinery for k-critical graphs.

Thin wrapper over the compiled extension. Graphs cross the boundary as
graph6 strings; rationals as "num/den" strings (convert with
fractions.Fraction); structured results as JSON strings.
"""

from _critgraph import (  # noqa: F401
    InputError,
    ParseError,
    ResourceError,
    chromatic_number,
    clique_family_weight,
    complete_graph,
    density_report,
    find_clusters,
    find_gems,
    generate_k_ore,
    graph_from_edges,
    graph_to_edges,
    graph_to_json,
    is_colorable,
    is_critical,
    is_f_choosable,
    ky_potential,
    potential,
    recognize_k_ore,
    run_discharge,
    structure_report,
)

__all__ = [
    "InputError",
    "ParseError",
    "ResourceError",
    "chromatic_number",
    "clique_family_weight",
    "complete_graph",
    "density_report",
    "find_clusters",
    "find_gems",
    "generate_k_ore",
    "graph_from_edges",
    "graph_to_edges",
    "graph_to_json",
    "is_colorable",
    "is_critical",
    "is_f_choosable",
    "ky_potential",
    "potential",
    "recognize_k_ore",
    "run_discharge",
    "structure_report",
]
