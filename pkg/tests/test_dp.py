import random
import time

import pytest
from hypothesis import given

from polarity.decomposition import NodeKind, NotInClassError, build_parse_tree, build_ps_tree, classify, rebuild_graph
from polarity.dp import (
    Solver,
    dual,
    eval_join,
    eval_join_via_dual,
    eval_leaf,
    eval_union,
    evaluate_tree,
    max_subgraph,
    max_subgraph_on_tree,
    reconstruct,
    result_from_vec,
)
from polarity.generate import random_parse_tree, random_ps_tree
from polarity.graph import Graph, complement, induced_subgraph, mask_of
from polarity.oracle import check_property, max_sizes, valid_partition
from polarity.properties import PropertyKind, dual_property
from strategies import extendible_graphs, sparse_graphs, trees

C5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])


def assert_matches_oracle(g):
    sizes = max_sizes(g)
    solver = Solver.for_graph(g, check=True)
    for p in PropertyKind:
        res = solver.solve(p)
        assert res.size == sizes[p], (p, res.size, sizes[p])
        assert len(res.witness) == res.size
        assert check_property(induced_subgraph(g, mask_of(res.witness)), p)[0]
        if p.is_pair:
            assert valid_partition(g, p, *res.partition)


@given(sparse_graphs(max_n=11))
def test_sparse_matches_oracle(g):
    assert_matches_oracle(g)


@given(extendible_graphs(max_n=11))
def test_extendible_matches_oracle(g):
    assert_matches_oracle(g)


@given(sparse_graphs(max_n=10))
def test_complement_gives_dual_sizes(g):
    a, b = Solver.for_graph(g), Solver.for_graph(complement(g))
    for p in PropertyKind:
        assert a.root.size[p] == b.root.size[dual_property(p)]


@given(trees(max_n=12))
def test_every_node_has_valid_witnesses(tn):
    tree, n = tn
    g = rebuild_graph(tree, n)
    _, vecs = evaluate_tree(tree, check=True, keep=True)
    for node in tree.iter_nodes():
        vec = vecs[id(node)]
        sub = induced_subgraph(g, node.scope)
        sizes = max_sizes(sub)
        for p in PropertyKind:
            a, b = reconstruct(vec, p)
            assert len(a) + len(b) == vec.size[p] == sizes[p]
            assert mask_of(a + b) & ~node.scope == 0
            if p.is_pair:
                assert valid_partition(g, p, a, b)
            else:
                # single-family slots may land on either side after a swap
                assert check_property(induced_subgraph(g, mask_of(a + b)), p)[0]


def test_join_rule_agrees_with_duality():
    rng = random.Random(2)
    for _ in range(200):
        kids = []
        for _ in range(rng.randint(2, 4)):
            n = rng.randint(1, 7)
            kids.append(evaluate_tree(random_ps_tree(n, rng, 0.5)))
        assert eval_join(kids).size == eval_join_via_dual(kids).size


def test_union_of_leaves():
    v = eval_union([eval_leaf(0), eval_leaf(1), eval_leaf(2)])
    assert v.size[PropertyKind.MI] == 3
    assert v.size[PropertyKind.MC] == 1
    assert v.size[PropertyKind.McB] == 2
    assert dual(v).size[PropertyKind.MC] == 3


def test_c5_unipolar_and_polar():
    assert max_subgraph(C5, PropertyKind.MU).size == 4
    assert max_subgraph(C5, PropertyKind.MP).size == 5
    assert max_subgraph(C5, PropertyKind.MS).size == 4


def test_small_graphs_and_empty():
    assert max_subgraph(Graph.empty(0), PropertyKind.MP).size == 0
    assert max_subgraph(Graph.empty(1), PropertyKind.MC).witness == (0,)


def test_outside_the_classes_is_rejected():
    p6 = Graph.from_edges(6, [(i, i + 1) for i in range(5)])
    with pytest.raises(NotInClassError):
        max_subgraph(p6, PropertyKind.MP)


def test_witnesses_are_deterministic():
    g = rebuild_graph(random_parse_tree(11, random.Random(9), 0.6), 11)
    first = [max_subgraph(g, p) for p in PropertyKind]
    again = [max_subgraph(g, p) for p in PropertyKind]
    assert first == again


def test_solver_uses_ps_tree_when_sparse():
    g = rebuild_graph(random_ps_tree(10, random.Random(4), 0.6), 10)
    assert Solver.for_graph(g).shape == "ps"
    assert Solver.for_graph(C5).shape == "parse"


def test_same_answer_from_either_tree():
    # graphs in both classes (spiders have at most two legs) have two trees with equal optima
    rng = random.Random(21)
    tried = 0
    while tried < 50:
        g = rebuild_graph(random_ps_tree(rng.randint(4, 11), rng, 0.6), None)
        if not classify(g, False).is_p4_extendible:
            continue
        tried += 1
        a = evaluate_tree(build_ps_tree(g), check=True)
        b = evaluate_tree(build_parse_tree(g), check=True)
        assert a.size == b.size


def test_large_tree_is_fast_enough():
    tree = random_ps_tree(20000, random.Random(0), 0.4)
    start = time.perf_counter()
    res = max_subgraph_on_tree(tree, PropertyKind.MP)
    assert time.perf_counter() - start < 10
    assert res.size == len(res.witness)
    assert result_from_vec(evaluate_tree(tree), PropertyKind.MC).size >= 1


def test_node_kinds_are_exercised():
    rng = random.Random(8)
    kinds = set()
    for _ in range(100):
        n = rng.randint(5, 12)
        for tree in (random_ps_tree(n, rng, 0.6), random_parse_tree(n, rng, 0.6)):
            kinds |= {x.kind for x in tree.iter_nodes()}
    assert kinds == set(NodeKind)
