import itertools
import math
import random
from collections import defaultdict, deque

import pytest
from hypothesis import strategies as st

from dsepmin import Dag, UndirectedGraph


def dag(arcs, nodes=None, card=None):
    """Build a Dag from arcs, declaring nodes in first-appearance order."""
    if nodes is None:
        nodes = []
        for a in arcs:
            for v in a:
                if v not in nodes:
                    nodes.append(v)
    return Dag(nodes, arcs, card)


def ugraph(edges, nodes=None):
    if nodes is None:
        nodes = []
        for e in edges:
            for v in e:
                if v not in nodes:
                    nodes.append(v)
    return UndirectedGraph(nodes, edges)


@st.composite
def dags(draw, min_nodes=2, max_nodes=8, cards=False):
    n = draw(st.integers(min_nodes, max_nodes))
    nodes = [f"n{i}" for i in range(n)]
    perm = draw(st.permutations(nodes))
    arcs = [(perm[i], perm[j]) for i, j in itertools.combinations(range(n), 2) if draw(st.booleans())]
    card = None
    if cards:
        card = {v: draw(st.integers(1, 8)) for v in nodes}
    return Dag(nodes, arcs, card)


@st.composite
def dags_with_query(draw, min_nodes=2, max_nodes=8, cards=False):
    """A dag and disjoint sets X, Y (non-empty) and Z."""
    g = draw(dags(max(min_nodes, 2), max_nodes, cards))
    labels = [draw(st.sampled_from("xyzn")) for _ in g.nodes]
    nodes = list(g.nodes)
    i, j = draw(st.lists(st.integers(0, len(nodes) - 1), min_size=2, max_size=2, unique=True))
    labels[i], labels[j] = "x", "y"
    pick = lambda c: frozenset(v for v, lab in zip(nodes, labels) if lab == c)
    return g, pick("x"), pick("y"), pick("z")


# -- brute-force helpers, independent of the library's algorithms ----------


def connected_avoiding(adj, s, t, removed):
    seen = {s}
    stack = [s]
    while stack:
        u = stack.pop()
        if u == t:
            return True
        for v in adj[u]:
            if v not in seen and v not in removed:
                seen.add(v)
                stack.append(v)
    return False


def adjacency(h):
    return {v: set(h.neighbors(v)) for v in h.nodes}


def brute_force_cuts(h, s, t, weight=None):
    """All vertex cuts between s and t, as (weight, frozenset) pairs."""
    adj = adjacency(h)
    inner = [v for v in h.nodes if v not in (s, t)]
    out = []
    for k in range(len(inner) + 1):
        for combo in itertools.combinations(inner, k):
            if not connected_avoiding(adj, s, t, set(combo)):
                w = sum(1 if weight is None else weight.get(v, 1) for v in combo)
                out.append((w, frozenset(combo)))
    return out


def max_disjoint_paths(h, s, t):
    """Maximum number of internally vertex-disjoint s-t paths, by search over simple paths."""
    adj = adjacency(h)
    paths = []

    def walk(path):
        u = path[-1]
        for v in sorted(adj[u]):
            if v == t:
                paths.append(frozenset(path[1:]))
            elif v not in path:
                walk(path + [v])

    walk([s])
    paths = sorted(set(paths), key=len)
    best = 0

    def pack(i, used, count):
        nonlocal best
        best = max(best, count)
        if count + (len(paths) - i) <= best:
            return
        for k in range(i, len(paths)):
            if not (paths[k] & used):
                pack(k + 1, used | paths[k], count + 1)

    pack(0, frozenset(), 0)
    return best


def residual_source_side(h, s, t, weight, res, protected=()):
    """Rebuild the explicit split digraph's residual graph and search it from s-."""
    inf = math.inf
    cap = {v: (inf if v in (s, t) or v in protected else (1 if weight is None else weight.get(v, 1))) for v in h.nodes}
    out = defaultdict(list)
    for v in h.nodes:
        f = res.node_flow.get(v, 0)
        if cap[v] - f > 1e-9:
            out[(v, "+")].append((v, "-"))
        if f > 1e-9:
            out[(v, "-")].append((v, "+"))
        for w in h.neighbors(v):
            out[(v, "-")].append((w, "+"))  # edge arcs never saturate
            if res.arc_flow.get((v, w), 0) > 1e-9:
                out[(w, "+")].append((v, "-"))
    seen = {(s, "-")}
    queue = deque(seen)
    while queue:
        for nxt in out[queue.popleft()]:
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def random_query(g, rng: random.Random):
    """Random disjoint X, Y (non-empty), Z over g's nodes."""
    nodes = list(g.nodes)
    rng.shuffle(nodes)
    x, y = {nodes[0]}, {nodes[1]}
    z = set()
    for v in nodes[2:]:
        r = rng.random()
        if r < 0.15:
            x.add(v)
        elif r < 0.3:
            y.add(v)
        elif r < 0.55:
            z.add(v)
    return frozenset(x), frozenset(y), frozenset(z)


@pytest.fixture
def chain():
    return dag([("x", "z"), ("z", "y")])


@pytest.fixture
def collider():
    return dag([("a", "b"), ("c", "b")])


# -- acceptance reporting --------------------------------------------------

ACCEPTANCE_LINES = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        status = "PASS" if rep.passed else "FAIL"
        ACCEPTANCE_LINES.append(f"{status}  AC{marker.args[0]}  {marker.args[1]}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
