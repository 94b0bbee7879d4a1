"""Exact Tutte polynomials and reliability of two self-similar graph families.

The pseudofractal scale-free web and the Sierpinski gasket grow by
merging three copies of the previous generation, which collapses the
(generally intractable) Tutte polynomial into a three-component
polynomial recursion, one step per generation.  This package implements
that recursion exactly, together with the numeric invariants it unlocks
(spanning trees, forests, connected spanning subgraphs, acyclic
orientations) and all-terminal reliability in exact, float, and
log-domain arithmetic, all validated against brute-force oracles.
"""

from .bipoly import (
    BiPoly,
    poly_add,
    poly_degrees,
    poly_div_exact_xminus1,
    poly_eval_exact,
    poly_mul,
)
from .errors import (
    DomainError,
    FractalTutteError,
    NonDivisible,
    NonIntegralExponent,
    SizeLimitExceeded,
    ZeroPolynomial,
)
from .graphs import (
    HubGraph,
    build_psw_copy_merge,
    build_psw_edge_expansion,
    build_sierpinski,
    degree_histogram,
    from_edge_list,
    psw_edge_count,
    psw_vertex_count,
    to_edge_list,
)
from .invariants import (
    ExponentSeq,
    InvariantReport,
    eval_state_at_point,
    eval_tutte_at_point,
    exponent_sequences,
    invariant_report,
    spanning_trees_closed_form,
    spanning_trees_recurrence,
)
from .oracle import (
    HubPattern,
    SubgraphClassification,
    classify_edge_subset,
    matrix_tree_count,
    partition_subgraph_sum,
    reliability_enumeration,
    tutte_deletion_contraction,
    tutte_subgraph_sum,
)
from .recursion import (
    PartitionTriple,
    PswTutteState,
    assemble_partition,
    assemble_tutte,
    initial_partition,
    initial_state,
    state_to_partition,
    step_partition,
    step_state,
    tutte_psw,
    tutte_psw_json,
)
from .reliability import (
    CurvePoint,
    RelStatePsw,
    RelStateSg,
    compare_curves,
    curves_to_csv,
    psw_rel_approx_log,
    psw_rel_init,
    psw_rel_step,
    psw_rel_via_tutte,
    psw_reliability,
    sg_rel_init,
    sg_rel_step,
    sg_reliability,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
