"""Token graphs: build F_k(g), classify it, and search over it.

The vertices of the k-token graph F_k(g) are the k-element subsets of the
vertex set of g; two subsets are adjacent when they differ by sliding a
single token along an edge of g.
"""

from .canon import (
    CanonicalForm,
    are_isomorphic,
    canonical_form,
    canonical_graph,
    canonical_graph6,
)
from .classify import (
    Inconsistent,
    NeighborhoodPartition,
    RegularityCase,
    RegularityVerdict,
    RegularityWitness,
    TokenPlanarity,
    classify_planarity,
    classify_regularity,
    partition_uv,
    residual_degree_obstruction,
    uniform_substitution_degree,
)
from .errors import (
    BadK,
    BudgetExceeded,
    Disconnected,
    IndexOutOfRange,
    InvalidScript,
    MalformedGraph6,
    NoP3Found,
    NoSuchVertex,
    NotAnEdge,
    NotRegularInput,
    SizeLimitExceeded,
    TokenGraphError,
    UnsupportedPattern,
)
from .graph6 import decode_graph6, encode_graph6, iter_graph6
from .graphs import (
    Graph,
    complete_bipartite_graph,
    complete_graph,
    contains_disjoint,
    cycle_graph,
    empty_graph,
    has_cycle_of_length_at_least,
    has_subgraph,
    octahedron_graph,
    path_graph,
    petersen_graph,
    star_graph,
)
from .minors import (
    ContractEdge,
    DeleteEdge,
    DeleteVertex,
    LiftedScript,
    LiftedStep,
    apply_and_verify,
    apply_script,
    format_script,
    lift_script,
    nonplanarity_by_minor,
    parse_script,
)
from .planarity import PlanarityVerdict, is_planar, planarity_oracle
from .search import (
    SearchEntry,
    SearchReport,
    connected_graphs,
    edge_maximal_search,
    graph_classes,
    verify_maximality,
)
from .subsets import KSubset, SubsetCodec, complement_subset
from .tokens import (
    TokenGraph,
    build_token_graph,
    complement_isomorphism_check,
    johnson,
    johnson_complement,
    token_degree,
)

__version__ = "0.1.0"

__all__ = [
    "BadK",
    "BudgetExceeded",
    "CanonicalForm",
    "ContractEdge",
    "DeleteEdge",
    "DeleteVertex",
    "Disconnected",
    "Graph",
    "IndexOutOfRange",
    "Inconsistent",
    "InvalidScript",
    "KSubset",
    "LiftedScript",
    "LiftedStep",
    "MalformedGraph6",
    "NeighborhoodPartition",
    "NoP3Found",
    "NoSuchVertex",
    "NotAnEdge",
    "NotRegularInput",
    "PlanarityVerdict",
    "RegularityCase",
    "RegularityVerdict",
    "RegularityWitness",
    "SearchEntry",
    "SearchReport",
    "SizeLimitExceeded",
    "SubsetCodec",
    "TokenGraph",
    "TokenGraphError",
    "TokenPlanarity",
    "UnsupportedPattern",
    "apply_and_verify",
    "apply_script",
    "are_isomorphic",
    "build_token_graph",
    "canonical_form",
    "canonical_graph",
    "canonical_graph6",
    "classify_planarity",
    "classify_regularity",
    "complement_isomorphism_check",
    "complement_subset",
    "complete_bipartite_graph",
    "complete_graph",
    "connected_graphs",
    "contains_disjoint",
    "cycle_graph",
    "decode_graph6",
    "edge_maximal_search",
    "empty_graph",
    "encode_graph6",
    "format_script",
    "graph_classes",
    "has_cycle_of_length_at_least",
    "has_subgraph",
    "is_planar",
    "iter_graph6",
    "johnson",
    "johnson_complement",
    "lift_script",
    "nonplanarity_by_minor",
    "octahedron_graph",
    "parse_script",
    "partition_uv",
    "path_graph",
    "petersen_graph",
    "planarity_oracle",
    "residual_degree_obstruction",
    "star_graph",
    "token_degree",
    "uniform_substitution_degree",
    "verify_maximality",
]
