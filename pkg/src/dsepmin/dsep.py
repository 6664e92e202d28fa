"""Separation in undirected graphs and two independent d-separation tests.

``d_separated_direct`` walks the dag itself, applying the blocking rules for
chains; ``d_separated_moral`` goes through the moral graph of the ancestral
set. They never share code beyond ancestor computation, so each serves as the
other's oracle.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .graph import Dag, GraphError, NodeSet, UndirectedGraph, ancestors, induced_subgraph, moralize


class QueryError(GraphError):
    """Query sets overlap, are empty, or name unknown nodes."""


@dataclass(frozen=True)
class SeparationQuery:
    """``I(X, Y | Z)``: is ``x_set`` separated from ``y_set`` given ``z_set``?"""

    x_set: NodeSet
    y_set: NodeSet
    z_set: NodeSet = NodeSet()

    def __post_init__(self):
        for name in ("x_set", "y_set", "z_set"):
            val = getattr(self, name)
            if isinstance(val, str):
                val = (val,)
            object.__setattr__(self, name, NodeSet(val))
        if not self.x_set or not self.y_set:
            raise QueryError("x_set and y_set must be non-empty")
        if self.x_set & self.y_set or self.x_set & self.z_set or self.y_set & self.z_set:
            raise QueryError("x_set, y_set and z_set must be pairwise disjoint")

    def swapped(self) -> "SeparationQuery":
        return SeparationQuery(self.y_set, self.x_set, self.z_set)

    def check_against(self, g: Dag | UndirectedGraph) -> None:
        for v in self.x_set | self.y_set | self.z_set:
            if v not in g:
                raise QueryError(f"unknown node {v!r}")


def _query(q: SeparationQuery | None, x, y, z) -> SeparationQuery:
    if q is not None:
        return q
    return SeparationQuery(x, y, () if z is None else z)


def separated(
    h: UndirectedGraph,
    q: SeparationQuery | None = None,
    *,
    x: Iterable[str] | None = None,
    y: Iterable[str] | None = None,
    z: Iterable[str] | None = None,
) -> bool:
    """True iff removing ``z_set`` from ``h`` disconnects ``x_set`` from ``y_set``.

    The query may be given as a :class:`SeparationQuery` or as keyword sets.
    """
    q = _query(q, x, y, z)
    q.check_against(h)
    adj = h.index_adjacency()
    blocked = {h.index(v) for v in q.z_set}
    targets = {h.index(v) for v in q.y_set}
    seen = {h.index(v) for v in q.x_set}
    queue = deque(seen)
    while queue:
        i = queue.popleft()
        for j in adj[i]:
            if j in seen or j in blocked:
                continue
            if j in targets:
                return False
            seen.add(j)
            queue.append(j)
    return True


def d_separated_direct(
    g: Dag,
    q: SeparationQuery | None = None,
    *,
    x: Iterable[str] | None = None,
    y: Iterable[str] | None = None,
    z: Iterable[str] | None = None,
) -> bool:
    """Decide ``<X, Y | Z>^d`` by reachability over (node, direction) states.

    A state ``(v, UP)`` means the trail entered ``v`` from one of its
    children, ``(v, DOWN)`` from one of its parents. Observed non-colliders
    stop the trail; a collider passes only when it or a descendant is in Z.
    """
    q = _query(q, x, y, z)
    q.check_against(g)
    parents = g._parents
    children = g._children
    zs = {g.index(v) for v in q.z_set}
    # colliders are open exactly on Z and its ancestors
    opens = {g.index(v) for v in ancestors(g, q.z_set)}
    targets = {g.index(v) for v in q.y_set}

    UP, DOWN = 0, 1
    seen: set[tuple[int, int]] = set()
    stack = [(g.index(v), UP) for v in q.x_set]
    while stack:
        state = stack.pop()
        if state in seen:
            continue
        seen.add(state)
        v, direction = state
        if v not in zs and v in targets:
            return False
        if direction == UP:
            if v in zs:
                continue
            stack.extend((p, UP) for p in parents[v])
            stack.extend((c, DOWN) for c in children[v])
        else:
            if v not in zs:
                stack.extend((c, DOWN) for c in children[v])
            if v in opens:
                stack.extend((p, UP) for p in parents[v])
    return True


def d_separated_moral(
    g: Dag,
    q: SeparationQuery | None = None,
    *,
    x: Iterable[str] | None = None,
    y: Iterable[str] | None = None,
    z: Iterable[str] | None = None,
) -> bool:
    """Decide ``<X, Y | Z>^d`` as separation in ``(G_An(X u Y u Z))^m``."""
    q = _query(q, x, y, z)
    q.check_against(g)
    an = ancestors(g, q.x_set | q.y_set | q.z_set)
    return separated(moralize(induced_subgraph(g, an)), q)
