"""Directed acyclic graphs, undirected graphs and the constructions between them.

Both graph classes are immutable after construction. Node identifiers are
opaque strings; internally every node also has a dense integer index given by
its position in ``nodes``, and neighbour lists are kept sorted by that index so
that every derived result depends only on the node order and the arc *set*,
never on the order in which arcs were supplied.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Mapping

NodeSet = frozenset

DEFAULT_CARDINALITY = 2


class GraphError(ValueError):
    """Invalid graph construction or invalid node reference."""


class UnknownNodeError(GraphError):
    def __init__(self, node):
        self.node = node
        super().__init__(f"unknown node {node!r}")


class CycleError(GraphError):
    def __init__(self, arc: tuple[str, str]):
        self.arc = arc
        super().__init__(f"graph contains a directed cycle through arc {arc[0]!r} -> {arc[1]!r}")


def _index_nodes(nodes: Iterable[str]) -> tuple[tuple[str, ...], dict[str, int]]:
    nodes = tuple(nodes)
    index: dict[str, int] = {}
    for i, v in enumerate(nodes):
        if v in index:
            raise GraphError(f"duplicate node identifier {v!r}")
        index[v] = i
    return nodes, index


class Dag:
    """A belief network structure ``G = (U, E)`` with optional domain sizes."""

    __slots__ = ("_nodes", "_index", "_arcs", "_parents", "_children", "_card")

    def __init__(
        self,
        nodes: Iterable[str],
        arcs: Iterable[tuple[str, str]] = (),
        cardinality: Mapping[str, int] | None = None,
    ):
        self._nodes, self._index = _index_nodes(nodes)
        index = self._index
        parents: list[list[int]] = [[] for _ in self._nodes]
        children: list[list[int]] = [[] for _ in self._nodes]
        seen: set[tuple[str, str]] = set()
        for arc in arcs:
            u, v = arc
            if u not in index:
                raise UnknownNodeError(u)
            if v not in index:
                raise UnknownNodeError(v)
            if u == v:
                raise GraphError(f"self-loop on {u!r}")
            if (u, v) in seen:
                raise GraphError(f"duplicate arc {u!r} -> {v!r}")
            seen.add((u, v))
            parents[index[v]].append(index[u])
            children[index[u]].append(index[v])
        self._arcs = frozenset(seen)
        self._parents = tuple(tuple(sorted(p)) for p in parents)
        self._children = tuple(tuple(sorted(c)) for c in children)

        card = dict.fromkeys(self._nodes, DEFAULT_CARDINALITY)
        for v, k in (cardinality or {}).items():
            if v not in index:
                raise UnknownNodeError(v)
            if isinstance(k, bool) or not isinstance(k, int) or k < 1:
                raise GraphError(f"cardinality of {v!r} must be an integer >= 1, got {k!r}")
            card[v] = k
        self._card = card

        self._check_acyclic()

    # -- basic accessors -------------------------------------------------

    @property
    def nodes(self) -> tuple[str, ...]:
        return self._nodes

    @property
    def arcs(self) -> frozenset[tuple[str, str]]:
        return self._arcs

    @property
    def cardinality(self) -> dict[str, int]:
        return dict(self._card)

    def card(self, v: str) -> int:
        self._check(v)
        return self._card[v]

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise UnknownNodeError(v) from None

    def __contains__(self, v) -> bool:
        return v in self._index

    def __len__(self) -> int:
        return len(self._nodes)

    def parents(self, v: str) -> tuple[str, ...]:
        return tuple(self._nodes[i] for i in self._parents[self.index(v)])

    def children(self, v: str) -> tuple[str, ...]:
        return tuple(self._nodes[i] for i in self._children[self.index(v)])

    def has_arc(self, u: str, v: str) -> bool:
        return (u, v) in self._arcs

    def adjacent(self, u: str, v: str) -> bool:
        return (u, v) in self._arcs or (v, u) in self._arcs

    def sorted_arcs(self) -> list[tuple[str, str]]:
        """Arcs ordered by (parent index, child index)."""
        nodes = self._nodes
        return [(nodes[i], nodes[j]) for i, ch in enumerate(self._children) for j in ch]

    def _check(self, v) -> None:
        if v not in self._index:
            raise UnknownNodeError(v)

    def check_nodes(self, vs: Iterable[str]) -> NodeSet:
        vs = NodeSet(vs)
        for v in vs:
            self._check(v)
        return vs

    def order(self, vs: Iterable[str]) -> list[str]:
        """Members of ``vs`` listed in node insertion order."""
        return sorted(vs, key=self.index)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Dag):
            return NotImplemented
        return self._nodes == other._nodes and self._arcs == other._arcs and self._card == other._card

    def __hash__(self):
        return hash((self._nodes, self._arcs))

    def __repr__(self) -> str:
        return f"Dag(nodes={list(self._nodes)!r}, arcs={self.sorted_arcs()!r})"

    # -- acyclicity ------------------------------------------------------

    def _topological_indices(self) -> list[int]:
        indeg = [len(p) for p in self._parents]
        queue = deque(i for i, d in enumerate(indeg) if d == 0)
        out = []
        while queue:
            i = queue.popleft()
            out.append(i)
            for j in self._children[i]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    queue.append(j)
        return out

    def _check_acyclic(self) -> None:
        order = self._topological_indices()
        if len(order) == len(self._nodes):
            return
        done = set(order)
        # every leftover node keeps a leftover parent; walk parents until one repeats
        start = next(i for i in range(len(self._nodes)) if i not in done)
        visited = {}
        cur = start
        while cur not in visited:
            visited[cur] = True
            nxt = next(p for p in self._parents[cur] if p not in done)
            prev, cur = cur, nxt
        # cur was reached twice, so prev's parent ``cur`` lies on the cycle
        raise CycleError((self._nodes[cur], self._nodes[prev]))


class UndirectedGraph:
    """Undirected simple graph; used for moral graphs and their derivatives."""

    __slots__ = ("_nodes", "_index", "_adj")

    def __init__(self, nodes: Iterable[str], edges: Iterable[tuple[str, str]] = ()):
        self._nodes, self._index = _index_nodes(nodes)
        index = self._index
        adj: list[set[int]] = [set() for _ in self._nodes]
        for u, v in edges:
            if u not in index:
                raise UnknownNodeError(u)
            if v not in index:
                raise UnknownNodeError(v)
            if u == v:
                raise GraphError(f"self-loop on {u!r}")
            adj[index[u]].add(index[v])
            adj[index[v]].add(index[u])
        self._adj = tuple(tuple(sorted(a)) for a in adj)

    @classmethod
    def _from_index_adjacency(cls, nodes: tuple[str, ...], adj: list[set[int]]) -> "UndirectedGraph":
        g = cls.__new__(cls)
        g._nodes, g._index = _index_nodes(nodes)
        g._adj = tuple(tuple(sorted(a)) for a in adj)
        return g

    @property
    def nodes(self) -> tuple[str, ...]:
        return self._nodes

    @property
    def edges(self) -> frozenset[frozenset[str]]:
        nodes = self._nodes
        return frozenset(frozenset((nodes[i], nodes[j])) for i, a in enumerate(self._adj) for j in a if i < j)

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise UnknownNodeError(v) from None

    def index_adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Neighbour lists by dense index, each sorted ascending."""
        return self._adj

    def neighbors(self, v: str) -> tuple[str, ...]:
        return tuple(self._nodes[j] for j in self._adj[self.index(v)])

    def adjacent(self, u: str, v: str) -> bool:
        return self.index(v) in self._adj[self.index(u)]

    def check_nodes(self, vs: Iterable[str]) -> NodeSet:
        vs = NodeSet(vs)
        for v in vs:
            self.index(v)
        return vs

    def __contains__(self, v) -> bool:
        return v in self._index

    def __len__(self) -> int:
        return len(self._nodes)

    def num_edges(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    def subgraph(self, keep: Iterable[str]) -> "UndirectedGraph":
        keep = self.check_nodes(keep)
        nodes = tuple(v for v in self._nodes if v in keep)
        new = {self._index[v]: i for i, v in enumerate(nodes)}
        adj = [{new[j] for j in self._adj[self._index[v]] if j in new} for v in nodes]
        return UndirectedGraph._from_index_adjacency(nodes, adj)

    def without(self, drop: Iterable[str]) -> "UndirectedGraph":
        drop = self.check_nodes(drop)
        return self.subgraph(v for v in self._nodes if v not in drop)

    def with_terminal(self, name: str, attach_to: Iterable[str]) -> "UndirectedGraph":
        """Copy of the graph plus a new node ``name`` adjacent to ``attach_to``."""
        if name in self._index:
            raise GraphError(f"duplicate node identifier {name!r}")
        attach = {self.index(v) for v in attach_to}
        new_i = len(self._nodes)
        adj = [set(a) for a in self._adj]
        for j in attach:
            adj[j].add(new_i)
        adj.append(attach)
        return UndirectedGraph._from_index_adjacency(self._nodes + (name,), adj)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UndirectedGraph):
            return NotImplemented
        return set(self._nodes) == set(other._nodes) and self.edges == other.edges

    def __repr__(self) -> str:
        return f"UndirectedGraph(nodes={list(self._nodes)!r}, edges={sorted(tuple(sorted(e)) for e in self.edges)!r})"


# -- derived constructions -------------------------------------------------


def ancestors(g: Dag, xs: Iterable[str]) -> NodeSet:
    """Smallest ancestral set containing ``xs``; ``xs`` itself is included."""
    start = [g.index(v) for v in xs]
    seen = set(start)
    stack = list(start)
    parents = g._parents
    while stack:
        i = stack.pop()
        for p in parents[i]:
            if p not in seen:
                seen.add(p)
                stack.append(p)
    return NodeSet(g.nodes[i] for i in seen)


def descendants(g: Dag, x: str) -> NodeSet:
    """Nodes reachable from ``x`` by a directed path, not including ``x``."""
    i0 = g.index(x)
    seen = {i0}
    stack = [i0]
    children = g._children
    while stack:
        i = stack.pop()
        for c in children[i]:
            if c not in seen:
                seen.add(c)
                stack.append(c)
    seen.discard(i0)
    return NodeSet(g.nodes[i] for i in seen)


def induced_subgraph(g: Dag, s: Iterable[str]) -> Dag:
    s = g.check_nodes(s)
    nodes = [v for v in g.nodes if v in s]
    arcs = [(u, v) for (u, v) in g.sorted_arcs() if u in s and v in s]
    card = g.cardinality
    return Dag(nodes, arcs, {v: card[v] for v in nodes})


def moralize(g: Dag) -> UndirectedGraph:
    """Marry co-parents, then drop arc directions."""
    adj: list[set[int]] = [set() for _ in g.nodes]
    for child, pa in enumerate(g._parents):
        for k, p in enumerate(pa):
            adj[p].add(child)
            adj[child].add(p)
            for q in pa[k + 1:]:
                adj[p].add(q)
                adj[q].add(p)
    return UndirectedGraph._from_index_adjacency(g.nodes, adj)


def topological_order(g: Dag) -> list[str]:
    """Kahn's algorithm with ties broken by node insertion order."""
    return [g.nodes[i] for i in g._topological_indices()]


def moral_ancestral_graph(g: Dag, xs: Iterable[str]) -> UndirectedGraph:
    """``(G_An(xs))^m``."""
    return moralize(induced_subgraph(g, ancestors(g, xs)))
