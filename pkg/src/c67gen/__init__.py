"""Generating subgraphs, relating edges and extendable vertices in graphs without 6- and 7-cycles."""
from .cycles import CycleReport, find_cycle_of_length, validate_c67_free
from .errors import (
    C67Error,
    CapacityError,
    ContractViolation,
    GraphInputError,
    InvalidWitnessError,
    InvariantError,
)
from .extendable import ExtendabilityResult, ReductionTrace, is_extendable
from .fileio import emit_report, format_graph, gen_random_c67_free, parse_graph
from .generating import build_gb, is_generating
from .graph import (
    Graph,
    InducedSubgraph,
    LayeredView,
    connected_components,
    dominates,
    greedy_extend_to_maximal,
    induced,
    is_independent,
    is_induced_complete_bipartite,
    neighborhood_layers,
)
from .relating import is_relating, side_subgraph
from .results import BipartiteSpec, GeneratingResult, RelatingResult

__version__ = "0.1.0"
