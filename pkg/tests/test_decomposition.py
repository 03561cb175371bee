import random

import pytest
from hypothesis import given

import reference as ref
from polarity.decomposition import (
    NodeKind,
    NotInClassError,
    build_parse_tree,
    build_ps_tree,
    classify,
    detect_spider,
    detect_x_spider,
    parse_tree_text,
    rebuild_graph,
    serialize_tree,
    thin_or_thick_from_tree,
    tree_to_json,
)
from polarity.extensions import EXTENSIONS, match_extension
from polarity.generate import random_parse_tree, random_ps_tree, random_spider
from polarity.graph import Graph, complement, induced_subgraph, mask_of
from strategies import graphs, trees

C5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
P4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])


def test_labelled_cograph_and_sparse_counts():
    # labelled cographs: 1, 2, 8, 52, 472 on 1..5 vertices
    counts = [sum(classify(g, False).is_cograph for g in ref.all_labeled(n)) for n in range(1, 6)]
    assert counts == [1, 2, 8, 52, 472]


def test_classes_match_definitions_on_all_five_vertex_graphs():
    for g in ref.all_labeled(5):
        rep = classify(g, False)
        assert rep.is_cograph == ref.is_cograph(g)
        assert rep.is_p4_sparse == ref.is_p4_sparse(g)
        assert rep.is_p4_extendible == ref.is_p4_extendible(g)


@given(graphs(min_n=5, max_n=8))
def test_classes_match_definitions(g):
    rep = classify(g)
    assert rep.is_cograph == ref.is_cograph(g)
    assert rep.is_p4_sparse == ref.is_p4_sparse(g)
    assert rep.is_p4_extendible == ref.is_p4_extendible(g)


@given(graphs(min_n=4, max_n=8))
def test_witnesses_are_minimal_forbidden_sets(g):
    rep = classify(g)
    for member, witness, check in (
        (rep.is_cograph, rep.cograph_witness, ref.is_cograph),
        (rep.is_p4_sparse, rep.sparse_witness, ref.is_p4_sparse),
        (rep.is_p4_extendible, rep.extendible_witness, ref.is_p4_extendible),
    ):
        if member:
            continue
        h = induced_subgraph(g, mask_of(witness))
        assert not check(h)
        for v in range(h.n):
            assert check(induced_subgraph(h, h.full & ~(1 << v)))


def test_c5_is_extendible_but_not_sparse():
    rep = classify(C5)
    assert not rep.is_cograph and not rep.is_p4_sparse and rep.is_p4_extendible
    assert sorted(rep.sparse_witness) == [0, 1, 2, 3, 4]


def test_build_rejects_graphs_outside_the_class():
    with pytest.raises(NotInClassError):
        build_ps_tree(C5)
    build_parse_tree(C5)
    three_p4 = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)])  # P6
    with pytest.raises(NotInClassError) as info:
        build_parse_tree(three_p4)
    assert info.value.witness


@given(trees(max_n=14))
def test_tree_rebuild_round_trip(tn):
    tree, n = tn
    g = rebuild_graph(tree, n)
    rebuilt = build_ps_tree(g) if classify(g, False).is_p4_sparse else build_parse_tree(g)
    assert rebuild_graph(rebuilt, n) == g
    text = serialize_tree(rebuilt)
    assert rebuild_graph(parse_tree_text(text), n) == g
    assert serialize_tree(parse_tree_text(text)) == text


@given(trees(max_n=14))
def test_tree_size_is_linear(tn):
    tree, n = tn
    g = rebuild_graph(tree, n)
    built = build_ps_tree(g) if classify(g, False).is_p4_sparse else build_parse_tree(g)
    leaves = sum(1 for x in built.iter_nodes() if x.kind is NodeKind.LEAF)
    assert built.size() <= 2 * n
    assert leaves <= n


def test_spider_detection_on_random_spiders():
    rng = random.Random(11)
    for _ in range(200):
        g, thin = random_spider(rng)
        sp = detect_spider(g)
        assert sp is not None
        # a spider on two legs is both thin and thick, thin is reported
        assert sp.thin == thin or len(sp.legs) == 2
        # the head is arbitrary, so only some of these spiders are P4-sparse
        if classify(g, False).is_p4_sparse:
            assert thin_or_thick_from_tree(build_ps_tree(g)) == sp.kind


def test_p4_is_a_spider_not_an_xspider():
    sp = detect_spider(P4)
    assert sp is not None and sp.thin
    assert detect_x_spider(P4) is None


def test_extension_graphs_are_recognised():
    for name, e in EXTENSIONS.items():
        g = e.graph()
        found = match_extension(g, g.full, (name,))
        assert found is not None and found[0] == name
        assert classify(g).is_p4_extendible
    # complements map the family onto itself
    for name, e in EXTENSIONS.items():
        co = complement(e.graph())
        assert match_extension(co, co.full) is not None


def test_xspider_detection():
    rng = random.Random(5)
    seen = set()
    for _ in range(300):
        n = rng.randint(6, 12)
        tree = random_parse_tree(n, rng, 0.9)
        g = rebuild_graph(tree, n)
        for node in build_parse_tree(g).iter_nodes():
            if node.kind is NodeKind.XSPIDER:
                seen.add(node.name)
                scope = node.scope
                x = detect_x_spider(g, scope)
                assert x is not None and x.name == node.name
    assert seen == {name for name, e in EXTENSIONS.items() if e.separable}


def test_tree_json_shape():
    g = rebuild_graph(random_ps_tree(9, random.Random(1), 0.6), 9)
    js = tree_to_json(build_ps_tree(g))
    assert js["kind"] in {"union", "join", "spider"}
