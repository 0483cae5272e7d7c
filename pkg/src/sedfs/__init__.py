"""sedfs: space-efficient depth-first search and its applications, with
bit-exact working-memory accounting."""

from .bits import (
    BitMeter,
    BitStack,
    BitUnderflowError,
    BitVec,
    ChoiceDict,
    EmptySetError,
    GroupedStack,
    RaggedArray,
    StaticAllocArray,
    TernaryArray,
)
from .dense import DfsEvents, collect_events, dfs, dfs_forest_parents, run_dfs
from .graph import (
    AdjGraph,
    GraphError,
    GraphParseError,
    ModeError,
    SpaceMetric,
    build_graph,
    jensen_bound,
    l_metric,
    parse_graph,
    serialize_graph,
)

__version__ = "0.1.0"

__all__ = [
    "AdjGraph",
    "BitMeter",
    "BitStack",
    "BitUnderflowError",
    "BitVec",
    "ChoiceDict",
    "DfsEvents",
    "EmptySetError",
    "GraphError",
    "GraphParseError",
    "GroupedStack",
    "ModeError",
    "RaggedArray",
    "SpaceMetric",
    "StaticAllocArray",
    "TernaryArray",
    "build_graph",
    "collect_events",
    "dfs",
    "dfs_forest_parents",
    "jensen_bound",
    "l_metric",
    "parse_graph",
    "run_dfs",
    "serialize_graph",
    "__version__",
]
