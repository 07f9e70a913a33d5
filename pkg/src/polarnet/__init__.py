"""Three-channel (fuzzy / polar neutrosophic) semantic nets.

Vertices and edges carry truth/indeterminacy/falsehood or positivity/
neutrality/negativity degree triples.  The package covers construction and
validation, membership-matrix and adjacency-tensor extraction, a small net
description DSL, JSON and DOT output, and polarity-driven neighbor
selection.
"""
from .analysis import (
    NormalizedTriple,
    Polarity,
    RankedNeighbor,
    SelectionResult,
    combine,
    net_polarity,
    normalize,
    polar_select,
    polarity_score,
)
from .core import (
    DEFAULT_SCALE,
    ChannelTriple,
    Edge,
    GraphClass,
    NetError,
    NetMode,
    NeutroValue,
    Order,
    SemanticNet,
    Vertex,
    Violation,
)
from .dsl import ParseError, format_net, parse_net
from .io import SchemaError, from_json, to_dot, to_json
from .matrix import (
    AdjacencyTensor,
    MembershipMatrix,
    adjacency_tensor,
    from_matrices,
    membership_matrix,
)

__all__ = [
    "DEFAULT_SCALE",
    "AdjacencyTensor",
    "ChannelTriple",
    "Edge",
    "GraphClass",
    "MembershipMatrix",
    "NetError",
    "NetMode",
    "NeutroValue",
    "NormalizedTriple",
    "Order",
    "ParseError",
    "Polarity",
    "RankedNeighbor",
    "SchemaError",
    "SelectionResult",
    "SemanticNet",
    "Vertex",
    "Violation",
    "adjacency_tensor",
    "combine",
    "format_net",
    "from_json",
    "from_matrices",
    "membership_matrix",
    "net_polarity",
    "normalize",
    "parse_net",
    "polar_select",
    "polarity_score",
    "to_dot",
    "to_json",
]

__version__ = "0.1.0"
