import random

import networkx as nx
from hypothesis import given
from hypothesis import strategies as st

from polarity.canon import are_isomorphic, canonical_form, canonical_graph
from polarity.generate import all_graphs
from polarity.graph import Graph, complement, relabel
from strategies import graphs


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@given(graphs(max_n=10), st.randoms(use_true_random=False))
def test_invariant_under_relabelling(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_form(relabel(g, perm)) == canonical_form(g)


@given(graphs(max_n=8))
def test_canonical_graph_is_isomorphic(g):
    h = canonical_graph(g)
    assert nx.is_isomorphic(to_nx(g), to_nx(h))
    assert canonical_form(h) == canonical_form(g)


@given(graphs(min_n=4, max_n=8), graphs(min_n=4, max_n=8))
def test_agrees_with_networkx_isomorphism(g, h):
    assert are_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))


def test_equal_edge_counts_can_differ():
    # P4 and K3 + K1 share n and m but not the degree sequence; C6 and 2K3 share both
    c6 = Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    two_k3 = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not are_isomorphic(c6, two_k3)
    assert not are_isomorphic(complement(c6), complement(two_k3))


def test_unlabelled_graph_counts():
    # 1, 2, 4, 11, 34, 156 graphs on 1..6 vertices
    assert [len(all_graphs(n)) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]


def test_regular_prime_graphs():
    # the Petersen graph against a random relabelling: stresses the refinement search
    pet = nx.petersen_graph()
    g = Graph.from_edges(10, list(pet.edges()))
    perm = list(range(10))
    random.Random(3).shuffle(perm)
    assert canonical_form(relabel(g, perm)) == canonical_form(g)
