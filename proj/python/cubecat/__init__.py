"""Standard and twisted cube categories."""

from ._cubecat import (
    CapacityError,
    bch_compose,
    categories,
    cube,
    cube_dot,
    face_to_injection,
    graph_json,
    hamiltonian_path,
    hom_count,
    hom_table,
    homs,
    order_g,
    rec_nonrec_isomorphic,
    run_suite,
    tensor,
    ternary_compose,
    ternary_to_graphdim,
    untwisted_compose,
)

__all__ = [
    "CapacityError",
    "bch_compose",
    "categories",
    "cube",
    "cube_dot",
    "face_to_injection",
    "graph_json",
    "hamiltonian_path",
    "hom_count",
    "hom_table",
    "homs",
    "order_g",
    "rec_nonrec_isomorphic",
    "run_suite",
    "tensor",
    "ternary_compose",
    "ternary_to_graphdim",
    "untwisted_compose",
]
