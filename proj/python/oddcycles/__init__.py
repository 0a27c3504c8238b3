"""Cycles of consecutive odd lengths: extraction pipeline, oracles, generators.

Thin re-export of the compiled module. The main entry points are
``extract`` / ``verify`` for the pipeline, ``enumerate_cycles`` and the
residue helpers for ground truth, and the graph generators.
"""

from ._oddcycles import (  # noqa: F401
    Error,
    Graph,
    Spectrum,
    average_degree,
    bipartite_check,
    blowup,
    check_all_residues,
    chromatic_number,
    complete,
    complete_bipartite,
    cut_vertex_odd_family,
    cycle_graph,
    emit,
    enumerate_cycles,
    extract,
    from_edges,
    girth,
    gnp,
    is_two_connected,
    longest_consecutive_odd_run,
    odd_girth,
    parse,
    residue_coverage,
    run_residues,
    shortest_odd_cycle,
    theta,
    verify,
)

__all__ = [
    "Error",
    "Graph",
    "Spectrum",
    "average_degree",
    "bipartite_check",
    "blowup",
    "check_all_residues",
    "chromatic_number",
    "complete",
    "complete_bipartite",
    "cut_vertex_odd_family",
    "cycle_graph",
    "emit",
    "enumerate_cycles",
    "extract",
    "from_edges",
    "girth",
    "gnp",
    "is_two_connected",
    "longest_consecutive_odd_run",
    "odd_girth",
    "parse",
    "residue_coverage",
    "run_residues",
    "shortest_odd_cycle",
    "theta",
    "verify",
]
