"""Exhaustive reference implementations.

Everything here enumerates vertex subsets as integer masks in numpy arrays,
so a graph on ``n`` vertices costs ``O(2^n * (n + m))`` word operations.  The
point is to be obviously correct, not fast: the predicates follow the
definitions directly and the optimisers are plain maxima over subsets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .graph import Graph, induced_subgraph, mask_of, members
from .properties import FAMILIES, PropertyKind

ORACLE_LIMIT = 20
MAX_SUBGRAPH_LIMIT = 16


@dataclass(frozen=True)
class SKBound:
    """``(s, k)``-polar: complete s-partite side plus a k-cluster side.  ``math.inf`` means no bound."""

    s: float
    k: float

    @classmethod
    def parse(cls, text: str) -> "SKBound":
        a, b = text.replace("(", "").replace(")", "").split(",")
        conv = lambda t: math.inf if t.strip().lower() in ("inf", "oo", "infinity") else int(t)
        return cls(conv(a), conv(b))

    def __str__(self) -> str:
        fmt = lambda x: "inf" if x == math.inf else str(int(x))
        return f"{fmt(self.s)},{fmt(self.k)}"


TWO_POLAR = SKBound(2, 2)


@dataclass(frozen=True)
class MaxSubgraphResult:
    property: PropertyKind
    witness: tuple[int, ...]
    size: int
    partition: tuple[tuple[int, ...], tuple[int, ...]] | None

    def to_json(self) -> dict:
        out = {"property": self.property.label, "size": self.size, "witness": list(self.witness)}
        if self.partition is not None:
            out["partition"] = {"A": list(self.partition[0]), "B": list(self.partition[1])}
        return out


class SubsetTables:
    """Per-mask predicate tables for one graph, computed lazily."""

    def __init__(self, g: Graph):
        if g.n > ORACLE_LIMIT:
            raise ValueError(f"oracle supports n <= {ORACLE_LIMIT}, got {g.n}")
        self.g = g
        self.n = g.n
        self.masks = np.arange(1 << g.n, dtype=np.int64)
        self.adj = [int(r) for r in g.adj]

    def _has(self, v: int) -> np.ndarray:
        return ((self.masks >> v) & 1).astype(bool)

    @cached_property
    def size(self) -> np.ndarray:
        pop = np.zeros(1 << self.n, dtype=np.int64)
        for v in range(self.n):
            pop += (self.masks >> v) & 1
        return pop

    @cached_property
    def clique(self) -> np.ndarray:
        ok = np.ones(1 << self.n, dtype=bool)
        for v in range(self.n):
            outside = ~(self.adj[v] | (1 << v))
            ok &= ~self._has(v) | ((self.masks & outside) == 0)
        return ok

    @cached_property
    def independent(self) -> np.ndarray:
        ok = np.ones(1 << self.n, dtype=bool)
        for v in range(self.n):
            ok &= ~self._has(v) | ((self.masks & self.adj[v]) == 0)
        return ok

    @cached_property
    def cluster(self) -> np.ndarray:
        # adjacent vertices must have equal closed neighbourhoods inside the set
        ok = np.ones(1 << self.n, dtype=bool)
        has = [self._has(v) for v in range(self.n)]
        for u, v in self.g.edges():
            cu, cv = self.adj[u] | (1 << u), self.adj[v] | (1 << v)
            ok &= ~(has[u] & has[v]) | ((self.masks & cu) == (self.masks & cv))
        return ok

    @cached_property
    def multipartite(self) -> np.ndarray:
        # non-adjacent vertices must have equal open neighbourhoods inside the set
        ok = np.ones(1 << self.n, dtype=bool)
        has = [self._has(v) for v in range(self.n)]
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if self.adj[u] >> v & 1:
                    continue
                ok &= ~(has[u] & has[v]) | ((self.masks & self.adj[u]) == (self.masks & self.adj[v]))
        return ok

    @cached_property
    def empty(self) -> np.ndarray:
        return self.masks == 0

    @cached_property
    def cluster_count(self) -> np.ndarray:
        """Number of cliques of a cluster set: vertices with no smaller neighbour in the set."""
        cnt = np.zeros(1 << self.n, dtype=np.int64)
        for v in range(self.n):
            lower = (1 << v) - 1
            cnt += self._has(v) & ((self.masks & self.adj[v] & lower) == 0)
        return cnt

    @cached_property
    def part_count(self) -> np.ndarray:
        """Number of parts of a complete multipartite set."""
        cnt = np.zeros(1 << self.n, dtype=np.int64)
        for v in range(self.n):
            lower = (1 << v) - 1
            cnt += self._has(v) & ((self.masks & ~self.adj[v] & lower) == 0)
        return cnt

    def family(self, name: str) -> np.ndarray:
        return getattr(self, name)

    def pair_families(self, p: PropertyKind) -> tuple[np.ndarray, np.ndarray]:
        x, y = FAMILIES[p]
        return self.family(x), self.family(y)

    def sk_families(self, bound: SKBound) -> tuple[np.ndarray, np.ndarray]:
        x = self.multipartite & (self.part_count <= bound.s)
        y = self.cluster & (self.cluster_count <= bound.k)
        return x, y

    def holds_on(self, x: np.ndarray, y: np.ndarray, scope: int) -> tuple[int, int] | None:
        """Partition (A, B) of ``scope`` with A in x and B in y, preferring large A, then small mask."""
        inside = (self.masks & ~scope) == 0
        rest = np.where(inside, self.masks ^ scope, 0)
        ok = inside & x & y[rest]
        if not ok.any():
            return None
        score = np.where(ok, self.size, -1)
        a = int(np.argmax(score))
        return a, scope ^ a


def _sos_best(flags: np.ndarray, size: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """For every mask M: the largest flagged subset of M (size, mask); ties keep the smaller mask."""
    best = np.where(flags, size, -1)
    arg = np.where(flags, np.arange(1 << n, dtype=np.int64), -1)
    for i in range(n):
        b = best.reshape(-1, 2, 1 << i)
        a = arg.reshape(-1, 2, 1 << i)
        better = b[:, 0, :] > b[:, 1, :]
        b[:, 1, :] = np.where(better, b[:, 0, :], b[:, 1, :])
        a[:, 1, :] = np.where(better, a[:, 0, :], a[:, 1, :])
    return best, arg


def brute_force_max_subgraph(g: Graph, p: PropertyKind) -> MaxSubgraphResult:
    """Largest vertex set inducing property ``p``, by exhaustive search over pairs (A, B)."""
    if g.n > MAX_SUBGRAPH_LIMIT:
        raise ValueError(f"brute force supports n <= {MAX_SUBGRAPH_LIMIT}, got {g.n}")
    t = SubsetTables(g)
    x, y = t.pair_families(p)
    full = g.full
    best_y, arg_y = _sos_best(y, t.size, g.n)
    total = np.where(x, t.size + best_y[full ^ t.masks], -1)
    a = int(np.argmax(total))
    b = int(arg_y[full ^ a])
    w = a | b
    part = (tuple(members(a)), tuple(members(b))) if p.is_pair else None
    return MaxSubgraphResult(p, tuple(members(w)), int(total[a]), part)


def max_sizes(g: Graph) -> dict[PropertyKind, int]:
    """All twelve optimum sizes at once (shares the predicate tables)."""
    t = SubsetTables(g)
    full = g.full
    cache: dict[str, np.ndarray] = {}
    out = {}
    for p in PropertyKind:
        xn, yn = FAMILIES[p]
        x, y = t.family(xn), t.family(yn)
        if yn not in cache:
            cache[yn] = _sos_best(y, t.size, g.n)[0]
        best_y = cache[yn]
        out[p] = int(np.max(np.where(x, t.size + best_y[full ^ t.masks], -1)))
    return out


def check_property(g: Graph, p: PropertyKind) -> tuple[bool, tuple[tuple[int, ...], tuple[int, ...]] | None]:
    """Does the whole graph have property ``p``?  Returns a certificate partition when it does."""
    t = SubsetTables(g)
    found = t.holds_on(*t.pair_families(p), g.full)
    if found is None:
        return False, None
    return True, (tuple(members(found[0])), tuple(members(found[1])))


def is_sk_polar(g: Graph, s: float | SKBound, k: float | None = None) -> tuple[bool, tuple[tuple[int, ...], tuple[int, ...]] | None]:
    """(s, k)-polarity test, bound given as ``s, k`` or one SKBound.

    The certificate (A, B) maximises |A|, then takes the smallest mask.
    """
    bound = s if isinstance(s, SKBound) else SKBound(s, k)
    t = SubsetTables(g)
    found = t.holds_on(*t.sk_families(bound), g.full)
    if found is None:
        return False, None
    return True, (tuple(members(found[0])), tuple(members(found[1])))


def satisfies(g: Graph, bound: SKBound | PropertyKind) -> bool:
    if isinstance(bound, SKBound):
        return is_sk_polar(g, bound.s, bound.k)[0]
    return check_property(g, bound)[0]


def is_minimal_obstruction(g: Graph, bound: SKBound | PropertyKind) -> bool:
    """``g`` lacks the property but every vertex-deleted subgraph has it."""
    t = SubsetTables(g)
    x, y = t.sk_families(bound) if isinstance(bound, SKBound) else t.pair_families(bound)
    full = g.full
    if t.holds_on(x, y, full) is not None:
        return False
    return all(t.holds_on(x, y, full ^ (1 << v)) is not None for v in range(g.n))


def spider_2polar_equals_split(g: Graph) -> bool:
    return is_sk_polar(g, 2, 2)[0] == check_property(g, PropertyKind.MS)[0]


def valid_partition(g: Graph, p: PropertyKind, a: tuple[int, ...] | list[int], b: tuple[int, ...] | list[int]) -> bool:
    """Direct check that (A, B) is a canonical partition for property ``p``."""
    xa, yb = FAMILIES[p]
    am, bm = mask_of(a), mask_of(b)
    if am & bm:
        return False
    return _in_family(induced_subgraph(g, am), xa) and _in_family(induced_subgraph(g, bm), yb)


def _in_family(h: Graph, name: str) -> bool:
    if name == "empty":
        return h.n == 0
    if name == "clique":
        return h.m == h.n * (h.n - 1) // 2
    if name == "independent":
        return h.m == 0
    for u in range(h.n):
        for v in range(u + 1, h.n):
            if name == "cluster" and h.has_edge(u, v):
                if h.adj[u] | (1 << u) != h.adj[v] | (1 << v):
                    return False
            if name == "multipartite" and not h.has_edge(u, v):
                if h.adj[u] != h.adj[v]:
                    return False
    return True
