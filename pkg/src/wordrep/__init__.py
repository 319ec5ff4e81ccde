"""Word-representable graphs: deciders, certificates, and the split-graph enumeration."""

from .canon import are_isomorphic, canonical_form, canonical_labeling, contains_induced, find_induced
from .enumeration import EnumConfig, EnumReport, candidates, find_minimal_nonrep, is_minimal_nonrep
from .gluing import GlueSpec, apex_gluing, experiment_6_1, experiment_6_2, glue, word_gluing
from .graph import (
    Graph,
    GraphFormatError,
    SplitPartition,
    from_edge_list,
    induced_subgraph,
    parse_graph6,
    split_partition,
    to_graph6,
)
from .orientation import Orientation, find_semi_transitive, find_violation, is_semi_transitive
from .split import (
    check_restrictions,
    classify,
    clique_degree_predicate,
    decide,
    degree_cap,
    large_degree_obstruction,
    orientation_of_witness,
    reduce_assumptions,
)
from .threshold import BuildSequence, build, is_threshold, random_threshold, reduction_certificate
from .verdict import Verdict, decide_graph, verify_certificate
from .words import alternate, find_word_bounded, graph_of_word, parse_word, represents

__version__ = "0.1.0"

__all__ = [
    "BuildSequence",
    "EnumConfig",
    "EnumReport",
    "GlueSpec",
    "Graph",
    "GraphFormatError",
    "Orientation",
    "SplitPartition",
    "Verdict",
    "alternate",
    "apex_gluing",
    "are_isomorphic",
    "build",
    "canonical_form",
    "canonical_labeling",
    "candidates",
    "check_restrictions",
    "classify",
    "clique_degree_predicate",
    "contains_induced",
    "decide",
    "decide_graph",
    "degree_cap",
    "experiment_6_1",
    "experiment_6_2",
    "find_induced",
    "find_minimal_nonrep",
    "find_semi_transitive",
    "find_violation",
    "find_word_bounded",
    "from_edge_list",
    "glue",
    "graph_of_word",
    "induced_subgraph",
    "is_minimal_nonrep",
    "is_semi_transitive",
    "is_threshold",
    "large_degree_obstruction",
    "orientation_of_witness",
    "parse_graph6",
    "parse_word",
    "random_threshold",
    "reduce_assumptions",
    "reduction_certificate",
    "represents",
    "split_partition",
    "to_graph6",
    "verify_certificate",
    "word_gluing",
]
