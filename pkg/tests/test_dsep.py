import random

import pytest
from hypothesis import given, settings

from dsepmin import (
    QueryError,
    SeparationQuery,
    ancestors,
    d_separated_direct,
    d_separated_moral,
    induced_subgraph,
    separated,
)
from dsepmin.netio import RandomDagSpec, random_dag

from conftest import dag, dags_with_query, random_query, ugraph


class TestSeparated:
    def test_path(self):
        assert separated(ugraph(["ab", "bc"]), SeparationQuery({"a"}, {"c"}, {"b"}))

    def test_direct_edge(self):
        assert not separated(ugraph(["ab", "bc", "ac"]), SeparationQuery({"a"}, {"c"}, {"b"}))

    def test_disconnected(self):
        h = ugraph([], nodes=["a", "c"])
        assert separated(h, x={"a"}, y={"c"})


class TestDirect:
    def test_chain_blocked(self, chain):
        assert d_separated_direct(chain, x={"x"}, y={"y"}, z={"z"})

    def test_collider(self, collider):
        assert d_separated_direct(collider, x={"a"}, y={"c"})
        assert not d_separated_direct(collider, x={"a"}, y={"c"}, z={"b"})

    def test_collider_descendant_opens(self):
        g = dag([("a", "b"), ("c", "b"), ("b", "d")])
        assert not d_separated_direct(g, x={"a"}, y={"c"}, z={"d"})


class TestMoral:
    def test_chain_blocked(self, chain):
        assert d_separated_moral(chain, x={"x"}, y={"y"}, z={"z"})

    def test_married_parents(self, collider):
        assert not d_separated_moral(collider, x={"a"}, y={"c"}, z={"b"})


class TestQueryValidation:
    def test_empty_rejected(self):
        with pytest.raises(QueryError):
            SeparationQuery(set(), {"a"})

    def test_overlap_rejected(self):
        with pytest.raises(QueryError):
            SeparationQuery({"a"}, {"b"}, {"a"})

    def test_unknown_node(self, chain):
        with pytest.raises(QueryError):
            d_separated_direct(chain, x={"x"}, y={"nope"})


def test_agreement_on_random_dags():
    rng = random.Random(7)
    for seed in range(500):
        g = random_dag(RandomDagSpec(rng.randint(2, 10), rng.choice([0.2, 0.35, 0.5]), seed))
        x, y, z = random_query(g, rng)
        q = SeparationQuery(x, y, z)
        assert d_separated_direct(g, q) == d_separated_moral(g, q), (g, q)


@given(dags_with_query())
def test_agreement_and_symmetry(data):
    g, x, y, z = data
    q = SeparationQuery(x, y, z)
    direct = d_separated_direct(g, q)
    assert direct == d_separated_moral(g, q)
    assert direct == d_separated_direct(g, q.swapped())
    assert direct == d_separated_moral(g, q.swapped())


@given(dags_with_query())
def test_restriction_to_ancestral_subgraph(data):
    g, x, y, z = data
    an = ancestors(g, x | y)
    z = z & an
    h = induced_subgraph(g, an)
    assert d_separated_direct(g, x=x, y=y, z=z) == d_separated_direct(h, x=x, y=y, z=z)


@settings(max_examples=200)
@given(dags_with_query())
def test_matches_networkx(data):
    nx = pytest.importorskip("networkx")
    g, x, y, z = data
    G = nx.DiGraph()
    G.add_nodes_from(g.nodes)
    G.add_edges_from(g.arcs)
    assert d_separated_direct(g, x=x, y=y, z=z) == nx.is_d_separator(G, set(x), set(y), set(z))


@given(dags_with_query())
def test_separate_components(data):
    g, x, y, _ = data
    # weak components via undirected reachability
    adj = {v: set(g.parents(v)) | set(g.children(v)) for v in g.nodes}
    comp, stack = set(x), list(x)
    while stack:
        for w in adj[stack.pop()] - comp:
            comp.add(w)
            stack.append(w)
    if not comp & y:
        assert d_separated_direct(g, x=x, y=y)
