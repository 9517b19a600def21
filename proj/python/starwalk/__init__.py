"""Exact closed-walk counts, spectra and shortlex ordering of starlike trees."""

from ._core import (
    Graph,
    Relation,
    Verdict,
    all_walks,
    charpoly,
    closed_walks,
    closed_walks_at,
    coalescence,
    compare,
    compare_spectral_radii,
    compare_starlike,
    eigenvalues,
    estrada_index,
    free_trees,
    incomparable_pairs,
    parse_edge_list,
    parse_tree,
    path,
    shortlex_partitions,
    spectral_radius,
    starlike,
    successor,
    trees_isomorphic,
    verify,
)

__all__ = [
    "Graph",
    "Relation",
    "Verdict",
    "all_walks",
    "charpoly",
    "closed_walks",
    "closed_walks_at",
    "coalescence",
    "compare",
    "compare_spectral_radii",
    "compare_starlike",
    "eigenvalues",
    "estrada_index",
    "free_trees",
    "incomparable_pairs",
    "parse_edge_list",
    "parse_tree",
    "path",
    "shortlex_partitions",
    "spectral_radius",
    "starlike",
    "successor",
    "trees_isomorphic",
    "verify",
]
