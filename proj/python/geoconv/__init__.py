"""Geodesic convexity in graphs: hulls, halfspace separation and enumeration."""

from ._core import (
    GeoconvError,
    GeodesicSpace,
    Graph,
    Matroid,
    basis_graph,
    certify,
    classify,
    count_models_2sat,
    enumerate_bruteforce,
    enumerate_flashlight,
    find_exchange_violation,
    format_graph,
    generators,
    graphic_matroid,
    halfspace_separation,
    hull,
    is_convex,
    is_halfspace,
    is_locally_convex,
    parse_graph,
    satisfies_k_sd,
    shadow,
    shadow_closure,
    solve_2sat,
    squares,
    uniform_matroid,
)

__all__ = [
    "GeoconvError",
    "GeodesicSpace",
    "Graph",
    "Matroid",
    "basis_graph",
    "certify",
    "classify",
    "count_models_2sat",
    "enumerate_bruteforce",
    "enumerate_flashlight",
    "find_exchange_violation",
    "format_graph",
    "generators",
    "graphic_matroid",
    "halfspace_separation",
    "hull",
    "is_convex",
    "is_halfspace",
    "is_locally_convex",
    "parse_graph",
    "satisfies_k_sd",
    "shadow",
    "shadow_closure",
    "solve_2sat",
    "squares",
    "uniform_matroid",
]
