import math

import pytest
from hypothesis import given

import reference as ref
from polarity.graph import Graph, complement, induced_subgraph, mask_of
from polarity.oracle import (
    SKBound,
    brute_force_max_subgraph,
    check_property,
    is_minimal_obstruction,
    is_sk_polar,
    max_sizes,
    valid_partition,
)
from polarity.properties import DUAL_INDEX, PropertyKind, dual_property, parse_property
from strategies import graphs


def test_dual_map_is_an_involution():
    for p in PropertyKind:
        assert dual_property(dual_property(p)) == p
        assert DUAL_INDEX[p] == dual_property(p)
    assert dual_property(PropertyKind.MS) == PropertyKind.MS
    assert dual_property(PropertyKind.MP) == PropertyKind.MP
    assert dual_property(PropertyKind.MUC) == PropertyKind.MJI


@pytest.mark.parametrize("text,kind", [("polar", PropertyKind.MP), ("MP", PropertyKind.MP), ("McU", PropertyKind.McU), ("split", PropertyKind.MS)])
def test_parse_property(text, kind):
    assert parse_property(text) == kind


def test_parse_property_rejects_unknown():
    with pytest.raises(ValueError):
        parse_property("planar")


def test_sk_bound_parse():
    assert SKBound.parse("2,2") == SKBound(2, 2)
    assert SKBound.parse("(2,1)") == SKBound(2, 1)
    assert SKBound.parse("inf,3") == SKBound(math.inf, 3)
    assert str(SKBound(math.inf, 1)) == "inf,1"


def test_every_graph_up_to_five_against_reference():
    for n in range(0, 6):
        for g in ref.all_labeled(n) if n <= 4 else list(ref.all_labeled(n))[::7]:
            sizes = max_sizes(g)
            for p in PropertyKind:
                assert sizes[p] == ref.max_size(g, p), (g, p)


@given(graphs(max_n=7))
def test_max_subgraph_witness(g):
    for p in PropertyKind:
        res = brute_force_max_subgraph(g, p)
        assert res.size == len(res.witness) == max_sizes(g)[p]
        h = induced_subgraph(g, mask_of(res.witness))
        assert check_property(h, p)[0]
        if p.is_pair:
            assert valid_partition(g, p, *res.partition)


@given(graphs(max_n=7))
def test_check_property_matches_reference(g):
    for p in PropertyKind:
        ok, part = check_property(g, p)
        assert ok == ref.has_property(g, list(range(g.n)), p)
        if ok:
            assert valid_partition(g, p, *part)


@given(graphs(max_n=7))
def test_sk_polarity_matches_reference(g):
    for s, k in ((2, 2), (2, 1), (1, 1), (math.inf, math.inf)):
        assert is_sk_polar(g, s, k)[0] == ref.is_sk_polar(g, s, k)


@given(graphs(max_n=7))
def test_complement_swaps_dual_properties(g):
    a, b = max_sizes(g), max_sizes(complement(g))
    for p in PropertyKind:
        assert a[p] == b[dual_property(p)]


def test_k33_is_2polar_with_everything_on_one_side():
    k33 = Graph.from_edges(6, [(i, j) for i in range(3) for j in range(3, 6)])
    ok, (a, b) = is_sk_polar(k33, 2, 2)
    assert ok and a == tuple(range(6)) and b == ()
    assert is_sk_polar(k33, SKBound(2, 2)) == (ok, (a, b))


def test_minimal_obstruction_examples():
    # (1,1)-polar means split, and C5 is one of the three minimal non-split graphs
    c5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    assert is_sk_polar(c5, 2, 2)[0]
    assert not is_sk_polar(c5, 1, 1)[0]
    assert is_minimal_obstruction(c5, SKBound(1, 1))
    assert is_minimal_obstruction(c5, PropertyKind.MS)
    assert not is_minimal_obstruction(Graph.complete(4), SKBound(2, 2))


def test_size_caps():
    with pytest.raises(ValueError):
        brute_force_max_subgraph(Graph.empty(17), PropertyKind.MC)
