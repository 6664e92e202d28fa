"""Minimum d-separating sets in directed acyclic graphs."""

from .dsep import QueryError, SeparationQuery, d_separated_direct, d_separated_moral, separated
from .graph import (
    CycleError,
    Dag,
    GraphError,
    NodeSet,
    UndirectedGraph,
    UnknownNodeError,
    ancestors,
    descendants,
    induced_subgraph,
    moral_ancestral_graph,
    moralize,
    topological_order,
)
from .minsep import (
    InvariantError,
    NotSeparable,
    SeparatorRequest,
    SeparatorResult,
    augment_with_terminals,
    minimum_d_separator,
    minimum_d_separator_constrained,
    minimum_d_separator_sets,
    minimum_weight_d_separator,
    solve,
)
from .netio import RandomDagSpec, parse_network, random_dag, serialize_network
from .oracle import BudgetExceeded, OracleReport, brute_force_minimum
from .vertex_cut import CutResult, NoCutExists, max_flow_value, min_vertex_cut

__version__ = "0.1.0"
