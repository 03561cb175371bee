"""Slow pure-Python references used only by the tests.

These follow the textbook characterisations (forbidden P3 / co-P3, all
3^n partitions) rather than the neighbourhood tests the package uses, so
agreement is a genuine cross-check.
"""

from __future__ import annotations

from itertools import combinations, product

from polarity.graph import Graph
from polarity.properties import PropertyKind

_FAMILY = {
    PropertyKind.MC: ("clique", "empty"),
    PropertyKind.MI: ("independent", "empty"),
    PropertyKind.MB: ("independent", "independent"),
    PropertyKind.McB: ("clique", "clique"),
    PropertyKind.MS: ("independent", "clique"),
    PropertyKind.MUC: ("cluster", "empty"),
    PropertyKind.MJI: ("multipartite", "empty"),
    PropertyKind.MM: ("independent", "cluster"),
    PropertyKind.McM: ("multipartite", "clique"),
    PropertyKind.MP: ("multipartite", "cluster"),
    PropertyKind.MU: ("clique", "cluster"),
    PropertyKind.McU: ("multipartite", "independent"),
}


def _p3_free(g: Graph, vs: list[int], flip: bool) -> bool:
    e = (lambda u, v: not g.has_edge(u, v)) if flip else g.has_edge
    for a, b, c in combinations(vs, 3):
        k = e(a, b) + e(b, c) + e(a, c)
        if k == 2:
            return False
    return True


def in_family(g: Graph, vs: list[int], name: str) -> bool:
    if name == "empty":
        return not vs
    if name == "clique":
        return all(g.has_edge(u, v) for u, v in combinations(vs, 2))
    if name == "independent":
        return not any(g.has_edge(u, v) for u, v in combinations(vs, 2))
    if name == "cluster":
        return _p3_free(g, vs, False)
    if name == "multipartite":
        return _p3_free(g, vs, True)
    raise KeyError(name)


def has_property(g: Graph, vs: list[int], p: PropertyKind) -> bool:
    x, y = _FAMILY[p]
    for sides in product((0, 1), repeat=len(vs)):
        a = [v for v, s in zip(vs, sides) if s == 0]
        b = [v for v, s in zip(vs, sides) if s == 1]
        if in_family(g, a, x) and in_family(g, b, y):
            return True
    return False


def max_size(g: Graph, p: PropertyKind) -> int:
    for r in range(g.n, -1, -1):
        for vs in combinations(range(g.n), r):
            if has_property(g, list(vs), p):
                return r
    return 0


def parts_of_multipartite(g: Graph, vs: list[int]) -> int:
    # classes of the non-adjacency relation
    parts: list[list[int]] = []
    for v in vs:
        for p in parts:
            if not g.has_edge(v, p[0]):
                p.append(v)
                break
        else:
            parts.append([v])
    return len(parts)


def cliques_of_cluster(g: Graph, vs: list[int]) -> int:
    parts: list[list[int]] = []
    for v in vs:
        for p in parts:
            if g.has_edge(v, p[0]):
                p.append(v)
                break
        else:
            parts.append([v])
    return len(parts)


def is_sk_polar(g: Graph, s: float, k: float) -> bool:
    vs = list(range(g.n))
    for sides in product((0, 1), repeat=g.n):
        a = [v for v, t in zip(vs, sides) if t == 0]
        b = [v for v, t in zip(vs, sides) if t == 1]
        if (
            in_family(g, a, "multipartite")
            and in_family(g, b, "cluster")
            and parts_of_multipartite(g, a) <= s
            and cliques_of_cluster(g, b) <= k
        ):
            return True
    return False


def induced_p4_count(g: Graph, vs) -> int:
    cnt = 0
    for q in combinations(vs, 4):
        degs = sorted(sum(g.has_edge(u, v) for v in q if v != u) for u in q)
        if degs == [1, 1, 2, 2] and sum(degs) == 6:
            # three edges with degree sequence 1,1,2,2 is exactly P4
            cnt += 1
    return cnt


def is_p4_sparse(g: Graph) -> bool:
    return all(induced_p4_count(g, five) <= 1 for five in combinations(range(g.n), 5))


def is_cograph(g: Graph) -> bool:
    return induced_p4_count(g, range(g.n)) == 0


def all_labeled(n: int):
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(n, [e for i, e in enumerate(pairs) if bits >> i & 1])


def induced_p4_sets(g: Graph) -> list[frozenset[int]]:
    return [frozenset(q) for q in combinations(range(g.n), 4) if induced_p4_count(g, q) == 1]


def is_p4_extendible(g: Graph) -> bool:
    """At most one outside vertex lies on a P4 meeting any given P4."""
    p4s = induced_p4_sets(g)
    for w in p4s:
        ext = set()
        for other in p4s:
            if other & w:
                ext |= other - w
        if len(ext) > 1:
            return False
    return True
