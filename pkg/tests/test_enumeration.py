import itertools
import random

import networkx as nx
import pytest
from conftest import graphs
from hypothesis import given, settings

from scm_lab.enumeration import canonical_graph, canonical_key, enumerate_graphs, enumerate_up_to
from scm_lab.graphs import Graph

ALL = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
CONNECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def relabel(g, perm):
    return Graph.from_edges(g.n, [(perm[a], perm[b]) for a, b in g.edges()])


@pytest.mark.parametrize("n", sorted(ALL))
def test_class_counts(n):
    assert len(list(enumerate_graphs(n))) == ALL[n]
    assert len(list(enumerate_graphs(n, connected=True))) == CONNECTED[n]


def test_small_connected_classes():
    assert {g.num_edges for g in enumerate_graphs(3, True)} == {2, 3}
    assert [g.to_graph6() for g in enumerate_graphs(1)] == ["@"]


@pytest.mark.parametrize("n", [4, 5])
def test_pairwise_non_isomorphic(n):
    reps = [nx.from_edgelist(g.edges()) for g in enumerate_graphs(n)]
    for h in reps:
        h.add_nodes_from(range(n))
    for a, b in itertools.combinations(reps, 2):
        assert not nx.is_isomorphic(a, b)


def test_every_labelled_graph_is_represented():
    n = 5
    keys = {canonical_key(g) for g in enumerate_graphs(n)}
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        g = Graph.from_edges(n, [p for k, p in enumerate(pairs) if bits >> k & 1])
        assert canonical_key(g) in keys


@given(graphs(max_n=8))
@settings(max_examples=150, deadline=None)
def test_canonical_key_is_invariant(g):
    perm = list(range(g.n))
    random.Random(g.n + g.num_edges).shuffle(perm)
    h = relabel(g, perm)
    assert canonical_key(g) == canonical_key(h)
    assert canonical_graph(g) == canonical_graph(h)


@given(graphs(max_n=6), graphs(max_n=6))
@settings(max_examples=150, deadline=None)
def test_canonical_key_separates(g, h):
    a, b = nx.Graph(g.edges()), nx.Graph(h.edges())
    a.add_nodes_from(range(g.n))
    b.add_nodes_from(range(h.n))
    assert (canonical_key(g) == canonical_key(h)) == nx.is_isomorphic(a, b)


def test_deterministic_order():
    assert [g.to_graph6() for g in enumerate_graphs(5)] == [g.to_graph6() for g in enumerate_graphs(5)]


def test_refuses_large_n():
    with pytest.raises(ValueError, match="graph6"):
        list(enumerate_graphs(8))


def test_up_to():
    assert len(list(enumerate_up_to(4, connected=True))) == 1 + 1 + 2 + 6
    assert len(list(enumerate_up_to(4, min_n=4))) == 11
