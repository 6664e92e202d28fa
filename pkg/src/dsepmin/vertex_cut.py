"""Minimum weight vertex cuts via shortest augmenting paths on a split graph.

Every node ``u`` stands for two flow nodes: ``u+`` (entry) and ``u-`` (exit),
joined by an internal arc ``u+ -> u-`` whose capacity is the weight of ``u``.
Each undirected edge ``u - v`` becomes the arcs ``u- -> v+`` and ``v- -> u+``
with a capacity larger than any cut, so only internal arcs ever saturate. The
split graph is never built; the search runs over ``(node, side)`` states.

Flow goes from ``s-`` to ``t+``. The returned cut is the source-side
canonical one: ``u`` is cut when ``u+`` is reachable from ``s-`` in the final
residual graph and ``u-`` is not. This is the unique minimum cut lying
closest to ``s`` and does not depend on the order augmenting paths were found.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .graph import GraphError, NodeSet, UndirectedGraph

EPS = 1e-9

IN, OUT = 0, 1


class NoCutExists(Exception):
    """The terminals cannot be separated by removing finite-weight nodes."""


@dataclass(frozen=True)
class CutResult:
    cut_nodes: NodeSet
    flow_value: float
    # flow through each node's internal arc (zero entries omitted)
    node_flow: Mapping[str, float] = field(default_factory=dict, repr=False)
    # flow on u- -> v+ keyed by (u, v) (zero entries omitted)
    arc_flow: Mapping[tuple[str, str], float] = field(default_factory=dict, repr=False)


class _SplitFlow:
    def __init__(self, adj, cap, edge_cap, source, sink):
        self.adj = adj
        self.cap = cap
        self.edge_cap = edge_cap
        self.source = source
        self.sink = sink
        self.node_flow = [0] * len(adj)
        self.arc_flow: dict[tuple[int, int], float] = {}
        self.value = 0

    def _moves(self, i, side):
        """Residual moves out of state (i, side) as (j, side_j, kind)."""
        adj, arc_flow = self.adj, self.arc_flow
        if side == IN:
            if self.cap[i] - self.node_flow[i] > EPS:
                yield i, OUT, "node"
            for j in adj[i]:
                if arc_flow.get((j, i), 0) > EPS:
                    yield j, OUT, "arc_back"
        else:
            for j in adj[i]:
                if self.edge_cap - arc_flow.get((i, j), 0) > EPS:
                    yield j, IN, "arc"
            if self.node_flow[i] > EPS:
                yield i, IN, "node_back"

    def _bfs(self, stop_at_sink: bool):
        start = (self.source, OUT)
        goal = (self.sink, IN)
        pred = {start: None}
        queue = deque([start])
        while queue:
            state = queue.popleft()
            for j, side, kind in self._moves(*state):
                nxt = (j, side)
                if nxt in pred:
                    continue
                pred[nxt] = (state, kind)
                if stop_at_sink and nxt == goal:
                    return pred
                queue.append(nxt)
        return pred

    def _residual(self, frm, to, kind):
        i, j = frm[0], to[0]
        if kind == "node":
            return self.cap[i] - self.node_flow[i]
        if kind == "node_back":
            return self.node_flow[i]
        if kind == "arc":
            return self.edge_cap - self.arc_flow.get((i, j), 0)
        return self.arc_flow[(j, i)]

    def _push(self, frm, to, kind, delta):
        i, j = frm[0], to[0]
        if kind == "node":
            self.node_flow[i] += delta
        elif kind == "node_back":
            self.node_flow[i] -= delta
        elif kind == "arc":
            self.arc_flow[(i, j)] = self.arc_flow.get((i, j), 0) + delta
        else:
            self.arc_flow[(j, i)] -= delta

    def run(self):
        goal = (self.sink, IN)
        while True:
            pred = self._bfs(stop_at_sink=True)
            if goal not in pred:
                return
            path = []
            state = goal
            while pred[state] is not None:
                prev, kind = pred[state]
                path.append((prev, state, kind))
                state = prev
            delta = min(self._residual(*step) for step in path)
            for frm, to, kind in path:
                self._push(frm, to, kind, delta)
            self.value += delta

    def source_side(self) -> set[tuple[int, int]]:
        return set(self._bfs(stop_at_sink=False))


def _prepare(h: UndirectedGraph, s, t, weight, protected):
    si, ti = h.index(s), h.index(t)
    if si == ti:
        raise GraphError("source and sink must differ")
    adj = h.index_adjacency()
    if ti in adj[si]:
        raise NoCutExists(f"{s!r} and {t!r} are adjacent")
    protected_idx = {h.index(v) for v in (protected or ())} | {si, ti}

    cap: list[float] = []
    total = 0
    for i, v in enumerate(h.nodes):
        if i in protected_idx:
            cap.append(math.inf)
            continue
        w = 1 if weight is None else weight.get(v, 1)
        if isinstance(w, bool) or not isinstance(w, (int, float)) or not math.isfinite(w):
            raise GraphError(f"weight of {v!r} must be a finite number, got {w!r}")
        if w < 0:
            raise GraphError(f"weight of {v!r} is negative")
        cap.append(w)
        total += w

    # a chain of unbounded nodes from s to t admits no finite cut
    seen = {si}
    queue = deque([si])
    while queue:
        i = queue.popleft()
        for j in adj[i]:
            if j == ti:
                raise NoCutExists(f"{s!r} and {t!r} are joined through protected nodes only")
            if j not in seen and j in protected_idx:
                seen.add(j)
                queue.append(j)

    return _SplitFlow(adj, cap, 1 + total, si, ti)


def min_vertex_cut(
    h: UndirectedGraph,
    s: str,
    t: str,
    weight: Mapping[str, float] | None = None,
    protected: Iterable[str] = (),
) -> CutResult:
    """Minimum total weight node set separating ``s`` from ``t`` in ``h``.

    ``weight`` defaults to 1 for every node not listed. Nodes in ``protected``
    (and the terminals) get unbounded capacity and are never cut. Raises
    :class:`NoCutExists` if the terminals are adjacent or linked through
    protected nodes only.
    """
    flow = _prepare(h, s, t, weight, protected)
    flow.run()
    reach = flow.source_side()
    nodes = h.nodes
    cut = NodeSet(nodes[i] for i in range(len(nodes)) if (i, IN) in reach and (i, OUT) not in reach)
    return CutResult(
        cut_nodes=cut,
        flow_value=flow.value,
        node_flow={nodes[i]: f for i, f in enumerate(flow.node_flow) if f > EPS},
        arc_flow={(nodes[i], nodes[j]): f for (i, j), f in flow.arc_flow.items() if f > EPS},
    )


def max_flow_value(
    h: UndirectedGraph,
    s: str,
    t: str,
    weight: Mapping[str, float] | None = None,
    protected: Iterable[str] = (),
) -> float:
    flow = _prepare(h, s, t, weight, protected)
    flow.run()
    return flow.value
