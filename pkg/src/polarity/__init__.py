"""Maximum polar-type induced subgraphs on P4-sparse and P4-extendible graphs,
with exhaustive oracles and a catalog of minimal 2-polar obstructions."""

from .canon import are_isomorphic, canonical_form
from .decomposition import (
    ClassReport,
    NotInClassError,
    TreeNode,
    build_parse_tree,
    build_ps_tree,
    classify,
    detect_spider,
    detect_x_spider,
    serialize_tree,
)
from .dp import Solver, evaluate_tree, max_subgraph
from .graph import Graph, Graph6Error, complement, emit_graph6, induced_subgraph, parse_edgelist, parse_graph6
from .obstructions import (
    build_extremal,
    decide_2polar,
    load_catalog,
    mine,
    partial_complements,
    verify_catalog,
)
from .oracle import (
    TWO_POLAR,
    MaxSubgraphResult,
    SKBound,
    brute_force_max_subgraph,
    check_property,
    is_minimal_obstruction,
    is_sk_polar,
)
from .properties import PropertyKind, dual_property, parse_property

__version__ = "0.1.0"

__all__ = [
    "are_isomorphic",
    "brute_force_max_subgraph",
    "build_extremal",
    "build_parse_tree",
    "build_ps_tree",
    "canonical_form",
    "check_property",
    "classify",
    "ClassReport",
    "complement",
    "decide_2polar",
    "detect_spider",
    "detect_x_spider",
    "dual_property",
    "emit_graph6",
    "evaluate_tree",
    "Graph",
    "Graph6Error",
    "induced_subgraph",
    "is_minimal_obstruction",
    "is_sk_polar",
    "load_catalog",
    "max_subgraph",
    "MaxSubgraphResult",
    "mine",
    "NotInClassError",
    "parse_edgelist",
    "parse_graph6",
    "parse_property",
    "partial_complements",
    "PropertyKind",
    "serialize_tree",
    "SKBound",
    "Solver",
    "TreeNode",
    "TWO_POLAR",
    "verify_catalog",
]
