"""Hypothesis strategies for graphs and class members."""

import random

from hypothesis import strategies as st

from polarity.generate import random_p4_extendible, random_p4_sparse, random_parse_tree, random_ps_tree
from polarity.graph import Graph


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, b in zip(pairs, bits) if b])


@st.composite
def sparse_graphs(draw, min_n=1, max_n=11):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_p4_sparse(n, random.Random(seed), draw(st.sampled_from((0.2, 0.5, 0.8))))


@st.composite
def extendible_graphs(draw, min_n=1, max_n=11):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_p4_extendible(n, random.Random(seed), draw(st.sampled_from((0.2, 0.5, 0.8))))


@st.composite
def trees(draw, min_n=1, max_n=11):
    n = draw(st.integers(min_n, max_n))
    rng = random.Random(draw(st.integers(0, 2**32 - 1)))
    if draw(st.booleans()):
        return random_ps_tree(n, rng, 0.5), n
    return random_parse_tree(n, rng, 0.5), n
