"""The ``dsep-net/1`` network format and seeded random dag generation.

A network document is a JSON object::

    {"schema": "dsep-net/1",
     "nodes": [{"id": "a", "card": 2}, {"id": "b"}],
     "arcs": [["a", "b"]]}

``card`` is optional and defaults to 2.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .graph import Dag, GraphError

SCHEMA = "dsep-net/1"


class NetworkFormatError(GraphError):
    """Malformed network document; the message names the offending field or line."""


def _fail(where: str, msg: str):
    raise NetworkFormatError(f"{where}: {msg}")


def parse_network(text: str) -> Dag:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise NetworkFormatError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        _fail("document", "expected a JSON object")
    if doc.get("schema") != SCHEMA:
        _fail("schema", f"expected {SCHEMA!r}, got {doc.get('schema')!r}")

    raw_nodes = doc.get("nodes")
    if not isinstance(raw_nodes, list):
        _fail("nodes", "expected a list")
    ids, card = [], {}
    for i, entry in enumerate(raw_nodes):
        where = f"nodes[{i}]"
        if isinstance(entry, str):
            entry = {"id": entry}
        if not isinstance(entry, dict) or not isinstance(entry.get("id"), str):
            _fail(where, "expected an object with a string 'id'")
        extra = set(entry) - {"id", "card"}
        if extra:
            _fail(where, f"unexpected fields {sorted(extra)}")
        if "card" in entry:
            k = entry["card"]
            if isinstance(k, bool) or not isinstance(k, int) or k < 1:
                _fail(f"{where}.card", f"expected an integer >= 1, got {k!r}")
            card[entry["id"]] = k
        ids.append(entry["id"])
    if len(set(ids)) != len(ids):
        dup = next(v for v in ids if ids.count(v) > 1)
        _fail("nodes", f"duplicate id {dup!r}")

    raw_arcs = doc.get("arcs", [])
    if not isinstance(raw_arcs, list):
        _fail("arcs", "expected a list")
    declared = set(ids)
    arcs = []
    for i, arc in enumerate(raw_arcs):
        where = f"arcs[{i}]"
        if not (isinstance(arc, list) and len(arc) == 2 and all(isinstance(v, str) for v in arc)):
            _fail(where, "expected a [parent, child] pair of ids")
        for v in arc:
            if v not in declared:
                _fail(where, f"dangling endpoint {v!r} is not a declared node")
        arcs.append((arc[0], arc[1]))

    try:
        return Dag(ids, arcs, card)
    except GraphError as exc:
        raise NetworkFormatError(str(exc)) from exc


def network_to_dict(g: Dag) -> dict:
    card = g.cardinality
    return {
        "schema": SCHEMA,
        "nodes": [{"id": v, "card": card[v]} for v in g.nodes],
        "arcs": [list(a) for a in g.sorted_arcs()],
    }


def serialize_network(g: Dag, indent: int | None = None) -> str:
    return json.dumps(network_to_dict(g), indent=indent)


def read_network(path) -> Dag:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        return parse_network(text)
    except NetworkFormatError as exc:
        raise NetworkFormatError(f"{path}: {exc}") from None


@dataclass(frozen=True)
class RandomDagSpec:
    n: int
    edge_prob: float
    seed: int = 0
    card_range: tuple[int, int] | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if not 0.0 <= self.edge_prob <= 1.0:
            raise ValueError("edge_prob must lie in [0, 1]")
        if self.card_range is not None:
            lo, hi = self.card_range
            if not 1 <= lo <= hi:
                raise ValueError("card_range must satisfy 1 <= min <= max")


def random_dag(spec: RandomDagSpec) -> Dag:
    """Nodes ``v1..vn`` in topological order; each forward arc kept with ``edge_prob``."""
    rng = np.random.default_rng(spec.seed)
    nodes = [f"v{i + 1}" for i in range(spec.n)]
    arcs = []
    for i in range(spec.n - 1):
        keep = rng.random(spec.n - 1 - i) < spec.edge_prob
        arcs.extend((nodes[i], nodes[i + 1 + j]) for j in np.flatnonzero(keep))
    card = None
    if spec.card_range is not None:
        lo, hi = spec.card_range
        card = dict(zip(nodes, (int(k) for k in rng.integers(lo, hi + 1, size=spec.n))))
    return Dag(nodes, arcs, card)
