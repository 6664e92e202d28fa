"""Minimum d-separating sets.

The search space is cut down to the ancestral set of the query, the problem is
moved to the moral graph of that set (where d-separation becomes plain
separation) and solved there as a minimum vertex cut.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

from .dsep import QueryError, separated
from .graph import (
    Dag,
    NodeSet,
    UndirectedGraph,
    ancestors,
    descendants,
    induced_subgraph,
    moralize,
)
from .vertex_cut import EPS, CutResult, NoCutExists, min_vertex_cut


class NotSeparable(NoCutExists):
    """No set of nodes can d-separate the query sets (some pair is adjacent)."""


class InvariantError(RuntimeError):
    """A computed result failed one of its own certificates."""


@dataclass(frozen=True)
class SeparatorRequest:
    x_set: NodeSet
    y_set: NodeSet
    fixed_z: NodeSet = NodeSet()
    weighted: bool = False

    def __post_init__(self):
        for name in ("x_set", "y_set", "fixed_z"):
            val = getattr(self, name)
            if isinstance(val, str):
                val = (val,)
            object.__setattr__(self, name, NodeSet(val))
        if not self.x_set or not self.y_set:
            raise QueryError("x_set and y_set must be non-empty")
        if self.x_set & self.y_set or self.x_set & self.fixed_z or self.y_set & self.fixed_z:
            raise QueryError("x_set, y_set and fixed_z must be pairwise disjoint")

    def check_against(self, g: Dag) -> None:
        for v in self.x_set | self.y_set | self.fixed_z:
            if v not in g:
                raise QueryError(f"unknown node {v!r}")


@dataclass(frozen=True)
class SeparatorResult:
    separator: NodeSet
    size: int
    weight: float
    certificate_flow: float
    cut: CutResult | None = field(default=None, repr=False, compare=False)


def node_weights(g: Dag, nodes: Iterable[str] | None = None) -> dict[str, float]:
    """State-space weight of each node: log2 of its domain size."""
    nodes = g.nodes if nodes is None else nodes
    return {v: math.log2(g.card(v)) for v in nodes}


def state_space_weight(g: Dag, vs: Iterable[str]) -> float:
    return sum(math.log2(g.card(v)) for v in g.order(vs))


def _fresh_name(base: str, taken) -> str:
    name = base
    while name in taken:
        name = "_" + name + "_"
    return name


def augment_with_terminals(
    h: UndirectedGraph, xs: Iterable[str], ys: Iterable[str]
) -> tuple[UndirectedGraph, str, str]:
    """Add a dummy ``alpha`` next to every neighbour of ``xs`` and ``beta`` for ``ys``.

    Returns ``(augmented graph, alpha, beta)``. Dummy names are chosen so they
    never clash with existing nodes.
    """
    xs, ys = h.check_nodes(xs), h.check_nodes(ys)
    alpha = _fresh_name("__alpha_X__", h)
    nx = {u for x in xs for u in h.neighbors(x)}
    aug = h.with_terminal(alpha, nx)
    beta = _fresh_name("__beta_Y__", aug)
    ny = {u for y in ys for u in h.neighbors(y)}
    return aug.with_terminal(beta, ny), alpha, beta


def orient(g: Dag, x: str, y: str) -> tuple[str, str]:
    """``(source, sink)`` for a pair query.

    The flow starts from the node that is not an ancestor of the other, so
    ties among minimum separators are settled in favour of nodes near it (its
    parent set wins whenever that is a minimum separator).
    """
    if x in descendants(g, y):
        return x, y
    return y, x


def _prune_free_nodes(h, source, sink, cut_nodes, weight, order):
    """Drop zero-weight cut nodes that separation does not need."""
    kept = set(cut_nodes)
    for v in order(cut_nodes):
        if weight.get(v, 1) == 0 and separated(h, x={source}, y={sink}, z=kept - {v}):
            kept.discard(v)
    return NodeSet(kept)


def _finish(g, h, source, sink, cut: CutResult, weight) -> SeparatorResult:
    sep = cut.cut_nodes
    if weight is not None and any(weight[v] == 0 for v in sep):
        sep = _prune_free_nodes(h, source, sink, sep, weight, g.order)
    cut_weight = sum((1 if weight is None else weight[v]) for v in g.order(cut.cut_nodes))
    if abs(cut_weight - cut.flow_value) > EPS * max(1.0, abs(cut_weight)):
        raise InvariantError(f"flow {cut.flow_value} differs from cut weight {cut_weight}")
    return SeparatorResult(
        separator=sep,
        size=len(sep),
        weight=state_space_weight(g, sep),
        certificate_flow=cut.flow_value,
        cut=cut,
    )


def minimum_d_separator(g: Dag, x: str, y: str, weighted: bool = False) -> SeparatorResult:
    """Smallest (or lightest) node set d-separating ``x`` from ``y`` in ``g``."""
    g.index(x), g.index(y)
    if x == y:
        raise QueryError("x and y must differ")
    if g.adjacent(x, y):
        raise NotSeparable(f"{x!r} and {y!r} are adjacent")
    h = moralize(induced_subgraph(g, ancestors(g, (x, y))))
    source, sink = orient(g, x, y)
    weight = node_weights(g, h.nodes) if weighted else None
    try:
        cut = min_vertex_cut(h, source, sink, weight)
    except NoCutExists as exc:
        raise NotSeparable(str(exc)) from None
    return _finish(g, h, source, sink, cut, weight)


def _set_pipeline(g: Dag, req: SeparatorRequest) -> SeparatorResult:
    req.check_against(g)
    xs, ys, zs = req.x_set, req.y_set, req.fixed_z
    h = moralize(induced_subgraph(g, ancestors(g, xs | ys | zs)))
    if zs:
        h = h.without(zs)
    for x in xs:
        for y in ys:
            if h.adjacent(x, y):
                raise NotSeparable(f"{x!r} and {y!r} are adjacent in the moral ancestral graph")
    aug, alpha, beta = augment_with_terminals(h, xs, ys)
    weight = node_weights(g, h.nodes) if req.weighted else None
    try:
        cut = min_vertex_cut(aug, beta, alpha, weight, protected=xs | ys)
    except NoCutExists as exc:
        raise NotSeparable(str(exc)) from None
    return _finish(g, aug, beta, alpha, cut, weight)


def minimum_d_separator_sets(
    g: Dag, x_set: Iterable[str], y_set: Iterable[str], weighted: bool = False
) -> SeparatorResult:
    return _set_pipeline(g, SeparatorRequest(NodeSet(x_set), NodeSet(y_set), weighted=weighted))


def minimum_d_separator_constrained(g: Dag, req: SeparatorRequest) -> SeparatorResult:
    """Smallest ``S`` such that ``fixed_z | S`` d-separates the query sets.

    An empty ``S`` means ``fixed_z`` alone already d-separates them.
    """
    return _set_pipeline(g, req)


def minimum_weight_d_separator(g: Dag, req: SeparatorRequest) -> SeparatorResult:
    """Like :func:`minimum_d_separator_constrained` but minimising total log2 state space."""
    if not req.weighted:
        req = SeparatorRequest(req.x_set, req.y_set, req.fixed_z, weighted=True)
    return _set_pipeline(g, req)


def solve(g: Dag, req: SeparatorRequest) -> SeparatorResult:
    """Dispatch a request: single pairs without fixed nodes use the pair pipeline."""
    req.check_against(g)
    if len(req.x_set) == 1 and len(req.y_set) == 1 and not req.fixed_z:
        (x,), (y,) = req.x_set, req.y_set
        return minimum_d_separator(g, x, y, weighted=req.weighted)
    return _set_pipeline(g, req)
