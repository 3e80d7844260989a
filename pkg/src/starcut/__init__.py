"""Exact star-cut connectivity toolkit.

Core objects: Graph (bitmask adjacency), Star / CutFamily (cut certificates),
the exact solver (structure_connectivity / substructure_connectivity), an
independent subset-enumeration oracle, two hardness gadget builders with
encode/decode helpers, text formats, and seeded generators.
"""

from .cuts import (
    STRUCTURE,
    SUBSTRUCTURE,
    CutFamily,
    Star,
    canonical_star,
    family_mask,
    is_structure_cut,
    is_subgraph_cut,
    is_substructure_cut,
    remainder_is_cut,
    star_induced_in,
    star_valid_in,
)
from .formats import (
    ParseError,
    parse_3dm,
    parse_cut,
    parse_graph,
    parse_roles,
    write_3dm,
    write_cut,
    write_graph,
    write_roles,
)
from .generate import OCCURRENCE_CAP, gen_random_3dm, gen_random_graph
from .graph import (
    Graph,
    audit,
    build,
    closed_neighborhood,
    complete,
    cycle,
    disjoint_union,
    is_connected,
    mask_connected,
    open_neighborhood,
    path,
    remove_vertices,
    star,
)
from .npsolve import (
    ThreeDMInstance,
    VertexCoverInstance,
    bipartite_incidence,
    element_occurrences,
    is_vertex_cover,
    solve_3dm,
    solve_vertex_cover,
    validate_3dm,
    verify_matching,
)
from .reduce import (
    CLIQ,
    ELEM,
    ORIG,
    TRIPLE,
    UBLK,
    UPRM,
    ReducedInstance,
    VertexRole,
    audit_reduced_3dm,
    audit_reduced_vc,
    cover_to_cut,
    extract_cover,
    extract_matching,
    matching_to_cut,
    reduce_3dm,
    reduce_vertex_cover,
)
from .solver import (
    ORACLE_SIZE_CAP,
    SearchOptions,
    SolveResult,
    enumerate_stars,
    min_star_partition,
    oracle_connectivity,
    structure_connectivity,
    substructure_connectivity,
)

__version__ = "0.1.0"

__all__ = [
    "STRUCTURE",
    "SUBSTRUCTURE",
    "CutFamily",
    "Star",
    "canonical_star",
    "family_mask",
    "is_structure_cut",
    "is_subgraph_cut",
    "is_substructure_cut",
    "remainder_is_cut",
    "star_induced_in",
    "star_valid_in",
    "ParseError",
    "parse_3dm",
    "parse_cut",
    "parse_graph",
    "parse_roles",
    "write_3dm",
    "write_cut",
    "write_graph",
    "write_roles",
    "OCCURRENCE_CAP",
    "gen_random_3dm",
    "gen_random_graph",
    "Graph",
    "audit",
    "build",
    "closed_neighborhood",
    "complete",
    "cycle",
    "disjoint_union",
    "is_connected",
    "mask_connected",
    "open_neighborhood",
    "path",
    "remove_vertices",
    "star",
    "ThreeDMInstance",
    "VertexCoverInstance",
    "bipartite_incidence",
    "element_occurrences",
    "is_vertex_cover",
    "solve_3dm",
    "solve_vertex_cover",
    "validate_3dm",
    "verify_matching",
    "CLIQ",
    "ELEM",
    "ORIG",
    "TRIPLE",
    "UBLK",
    "UPRM",
    "ReducedInstance",
    "VertexRole",
    "audit_reduced_3dm",
    "audit_reduced_vc",
    "cover_to_cut",
    "extract_cover",
    "extract_matching",
    "matching_to_cut",
    "reduce_3dm",
    "reduce_vertex_cover",
    "ORACLE_SIZE_CAP",
    "SearchOptions",
    "SolveResult",
    "enumerate_stars",
    "min_star_partition",
    "oracle_connectivity",
    "structure_connectivity",
    "substructure_connectivity",
    "__version__",
]
