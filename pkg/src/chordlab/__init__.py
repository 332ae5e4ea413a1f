"""Chord diagrams, circle graphs, and exact weight-system computations.

The library computes the signed even-cycle weight systems, the mod-2
cycle-count weight system, the GF(2) nondegeneracy indicator, and the
universal sl2 weight system (by two independent methods), together with
projections onto primitive elements and a verification harness for the
4-term, 2-term, mutation, and parity identities they satisfy.
"""

from .diagrams import (
    ChordDiagram,
    DiagramError,
    MutationKind,
    Share,
    apply_mutation,
    canonical_code,
    diagram_product,
    enumerate_diagrams,
    find_shares,
    format_diagram,
    induced_subdiagram,
    parse_diagram,
    random_diagram,
)
from .fourterm import (
    RelationQuadruple,
    VerificationReport,
    diagram_four_term,
    graph_four_term,
    two_term_check,
    verify_weight_system,
)
from .graphs import (
    DirectedIntersectionGraph,
    GraphError,
    SimpleGraph,
    cycle_sign,
    directed_intersection_graph,
    enumerate_cycles,
    enumerate_graphs,
    format_graph,
    gf2_rank,
    graph_canonical_mask,
    graph_prime,
    graph_tilde,
    intersection_graph,
    is_intersection_graph,
    orient_chords,
    parse_graph,
    realize_diagram,
)
from .invariants import (
    FIVE_WHEEL,
    THREE_PRISM,
    conjecture_check,
    e_l_parity,
    project_primitive_value,
    r_k,
    r_k_graph,
    r_k_via_wc,
    sl2,
    sl2_graph_extension_check,
    sl2_on_graph,
    sl2_projected,
    w_c,
)
from .partitions import partition_log_full, partition_weight, set_partitions
from .polynomials import IntPolynomial
from .sl2 import sl2_oracle, sl2_recursive

__version__ = "0.1.0"

__all__ = [
    "ChordDiagram",
    "DiagramError",
    "DirectedIntersectionGraph",
    "FIVE_WHEEL",
    "GraphError",
    "IntPolynomial",
    "MutationKind",
    "RelationQuadruple",
    "Share",
    "SimpleGraph",
    "THREE_PRISM",
    "VerificationReport",
    "apply_mutation",
    "canonical_code",
    "conjecture_check",
    "cycle_sign",
    "diagram_four_term",
    "diagram_product",
    "directed_intersection_graph",
    "e_l_parity",
    "enumerate_cycles",
    "enumerate_diagrams",
    "enumerate_graphs",
    "find_shares",
    "format_diagram",
    "format_graph",
    "gf2_rank",
    "graph_canonical_mask",
    "graph_four_term",
    "graph_prime",
    "graph_tilde",
    "induced_subdiagram",
    "intersection_graph",
    "is_intersection_graph",
    "orient_chords",
    "parse_diagram",
    "parse_graph",
    "partition_log_full",
    "partition_weight",
    "project_primitive_value",
    "r_k",
    "r_k_graph",
    "r_k_via_wc",
    "random_diagram",
    "realize_diagram",
    "set_partitions",
    "sl2",
    "sl2_graph_extension_check",
    "sl2_on_graph",
    "sl2_oracle",
    "sl2_projected",
    "sl2_recursive",
    "two_term_check",
    "verify_weight_system",
    "w_c",
]
