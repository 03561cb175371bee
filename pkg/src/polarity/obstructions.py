"""Minimal (s, k)-polar obstructions: catalog, partial complements, recognition, mining."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from importlib import resources
from itertools import combinations
from pathlib import Path

from .canon import canonical_form
from .decomposition import NotInClassError, classify, is_p4_extendible, is_p4_sparse
from .generate import extend_by_vertex, graphs_by_order
from .graph import Graph, complement, components, emit_graph6, induced_subgraph, members, parse_graph6, popcount
from .oracle import ORACLE_LIMIT, SKBound, is_minimal_obstruction, is_sk_polar, satisfies

SPARSE = "p4-sparse"
EXTENDIBLE = "p4-extendible"
CLASSES = (SPARSE, EXTENDIBLE)
MINING_LIMIT = 9


def in_class(g: Graph, cls: str) -> bool:
    if cls == SPARSE:
        return is_p4_sparse(g)
    if cls == EXTENDIBLE:
        return is_p4_extendible(g)
    raise ValueError(f"unknown class {cls!r}")


def parse_class(text: str) -> str:
    key = text.strip().lower().replace("_", "-")
    for c in CLASSES:
        if key in (c, c.split("-")[1], c.replace("-", "")):
            return c
    raise ValueError(f"unknown class {text!r}; use p4-sparse or p4-extendible")


# ---------------------------------------------------------------------------
# catalog


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    classes: frozenset[str]
    bound: SKBound
    graph6: str
    figure: str

    @property
    def graph(self) -> Graph:
        return parse_graph6(self.graph6)

    def line(self) -> str:
        tags = ",".join(c.split("-")[1] for c in CLASSES if c in self.classes) or "none"
        return f"{self.name} {tags} {self.bound} {self.graph6} {self.figure}"


def parse_catalog(text: str) -> list[CatalogEntry]:
    out = []
    for ln, raw in enumerate(text.splitlines(), 1):
        raw = raw.strip()
        if not raw or raw.startswith("#"):
            continue
        tok = raw.split()
        if len(tok) != 5:
            raise ValueError(f"catalog line {ln}: expected 5 fields, got {len(tok)}")
        name, tags, bound, g6, fig = tok
        classes = frozenset(parse_class(t) for t in tags.split(",") if t != "none")
        out.append(CatalogEntry(name, classes, SKBound.parse(bound), g6, fig))
    return out


def load_catalog(path: str | Path | None = None) -> list[CatalogEntry]:
    if path is None:
        text = resources.files("polarity").joinpath("data/catalog.txt").read_text()
    else:
        text = Path(path).read_text()
    return parse_catalog(text)


def catalog_family(entries: list[CatalogEntry], bound: SKBound, cls: str | None = None) -> list[CatalogEntry]:
    return [e for e in entries if e.bound == bound and (cls is None or cls in e.classes)]


@dataclass
class CatalogReport:
    bound: SKBound
    counts: dict[str, int]
    errors: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors

    def summary(self) -> str:
        parts = [f"{self.counts.get(c, 0)} {c.replace('p4', 'P4')}" for c in CLASSES]
        return ", ".join(parts) + (", OK" if self.ok else f", FAILED ({len(self.errors)} problems)")


def verify_catalog(entries: list[CatalogEntry], bound: SKBound = SKBound(2, 2), closed_under_complement: bool | None = None) -> CatalogReport:
    """Machine-check every entry of one family: parse, class tags, minimality, distinctness."""
    fam = catalog_family(entries, bound)
    if closed_under_complement is None:
        closed_under_complement = bound.s == bound.k
    errors: list[str] = []
    keys: dict[bytes, str] = {}
    counts = {c: 0 for c in CLASSES}
    for e in fam:
        try:
            g = e.graph
        except ValueError as exc:
            errors.append(f"{e.name}: unparsable graph6 ({exc})")
            continue
        rep = classify(g, minimal_witness=False)
        actual = {c for c, ok in ((SPARSE, rep.is_p4_sparse), (EXTENDIBLE, rep.is_p4_extendible)) if ok}
        if actual != set(e.classes):
            errors.append(f"{e.name}: class tags {sorted(e.classes)} but graph is in {sorted(actual)}")
        if g.n > ORACLE_LIMIT or not is_minimal_obstruction(g, bound):
            errors.append(f"{e.name}: not a minimal ({bound})-polar obstruction")
        key = canonical_form(g)
        if key in keys:
            errors.append(f"{e.name}: isomorphic to {keys[key]}")
        keys[key] = e.name
        for c in e.classes:
            counts[c] += 1
    if closed_under_complement:
        for e in fam:
            try:
                co = canonical_form(complement(e.graph))
            except ValueError:
                continue
            if co not in keys:
                errors.append(f"{e.name}: complement missing from the family")
    return CatalogReport(bound, counts, errors)


def catalog_index(entries: list[CatalogEntry]) -> dict[tuple[bytes, SKBound], str]:
    return {(canonical_form(e.graph), e.bound): e.name for e in entries}


# ---------------------------------------------------------------------------
# partial complements and the extremal family


def partial_complements(g: Graph) -> list[Graph]:
    """The complement, and co(H1) + co(H2) for every split of the components into two sides.

    Vertex labels are kept; isomorphic results are reported once (first found).
    """
    comps = components(g)
    full = g.full
    seen: set[bytes] = set()
    out: list[Graph] = []

    def add(h: Graph) -> None:
        key = canonical_form(h) if h.n <= 12 else emit_graph6(h).encode()
        if key not in seen:
            seen.add(key)
            out.append(h)

    add(complement(g))
    rest = comps[1:]
    for r in range(len(rest) + 1):
        for pick in combinations(range(len(rest)), r):
            side = comps[0]
            for i in pick:
                side |= rest[i]
            other = full & ~side
            if not other:
                continue
            rows = list(g.adj)
            for part in (side, other):
                for v in members(part):
                    rows[v] = part & ~g.adj[v] & ~(1 << v)
            add(Graph(g.n, tuple(rows)))
    return out


def closure_under_partial_complement(g: Graph) -> dict[bytes, Graph]:
    """All graphs reachable from ``g`` by repeated partial complementation, keyed by canonical form."""
    start = canonical_form(g)
    found = {start: g}
    todo = [g]
    while todo:
        h = todo.pop()
        for pc in partial_complements(h):
            key = canonical_form(pc)
            if key not in found:
                found[key] = pc
                todo.append(pc)
    return found


def preserves_2polar(g: Graph, cls: str) -> bool:
    """Every partial complement of ``g`` is 2-polar and stays in the class."""
    return all(is_sk_polar(h, 2, 2)[0] and in_class(h, cls) for h in partial_complements(g))


def build_extremal(k: int = 2, ell: int = 0) -> Graph:
    """ell K1 + (k+1-ell) K2 + K_{ell,ell}: a largest minimal obstruction built from few pieces."""
    if k != 2:
        raise ValueError("only k = 2 is implemented")
    if not 1 <= ell <= k + 1:
        raise ValueError(f"ell must be in 1..{k + 1}")
    edges = []
    n = ell
    for _ in range(k + 1 - ell):
        edges.append((n, n + 1))
        n += 2
    for i in range(ell):
        for j in range(ell):
            edges.append((n + i, n + ell + j))
    n += 2 * ell
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# induced-subgraph search and recognition


def find_induced(pattern: Graph, host: Graph) -> tuple[int, ...] | None:
    """An embedding ``pattern -> host`` as an induced subgraph, or None.  Plain backtracking."""
    p, h = pattern.n, host.n
    if p > h:
        return None
    if p == 0:
        return ()
    pdeg = [popcount(r) for r in pattern.adj]
    hdeg = [popcount(r) for r in host.adj]
    order = [max(range(p), key=lambda u: pdeg[u])]
    placed = 1 << order[0]
    while len(order) < p:
        best = max(
            (u for u in range(p) if not placed >> u & 1),
            key=lambda u: (popcount(pattern.adj[u] & placed), pdeg[u]),
        )
        order.append(best)
        placed |= 1 << best
    base = []
    for u in order:
        m = 0
        for v in range(h):
            if hdeg[v] >= pdeg[u] and (h - 1 - hdeg[v]) >= (p - 1 - pdeg[u]):
                m |= 1 << v
        base.append(m)
    links = [[(j, pattern.has_edge(order[i], order[j])) for j in range(i)] for i in range(p)]
    image = [0] * p
    full = host.full

    def go(i: int, used: int) -> bool:
        if i == p:
            return True
        cand = base[i] & ~used
        for j, adj in links[i]:
            row = host.adj[image[j]]
            cand &= row if adj else (full & ~row)
            if not cand:
                return False
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            image[i] = v
            if go(i + 1, used | low):
                return True
            cand ^= low
        return False

    if not go(0, 0):
        return None
    emb = [0] * p
    for i, u in enumerate(order):
        emb[u] = image[i]
    return tuple(emb)


@dataclass(frozen=True)
class PolarDecision:
    is_2polar: bool
    partition: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    obstruction: str | None = None
    embedding: tuple[int, ...] | None = None

    def to_json(self) -> dict:
        d: dict = {"two_polar": self.is_2polar}
        if self.partition is not None:
            d["partition"] = {"A": list(self.partition[0]), "B": list(self.partition[1])}
        if self.obstruction is not None:
            d["obstruction"] = self.obstruction
            d["vertices"] = list(self.embedding or ())
        return d


def decide_2polar(g: Graph, entries: list[CatalogEntry] | None = None) -> PolarDecision:
    """2-polarity for P4-sparse or P4-extendible graphs by catalog search.

    A certificate partition is attached to positive answers when the graph is
    small enough for the exhaustive oracle.
    """
    if entries is None:
        entries = load_catalog()
    if is_p4_sparse(g):
        cls = SPARSE
    elif is_p4_extendible(g):
        cls = EXTENDIBLE
    else:
        raise NotInClassError("graph is neither P4-sparse nor P4-extendible", classify(g).witness)
    for e in catalog_family(entries, SKBound(2, 2), cls):
        emb = find_induced(e.graph, g)
        if emb is not None:
            return PolarDecision(False, obstruction=e.name, embedding=emb)
    part = None
    if g.n <= ORACLE_LIMIT:
        ok, part = is_sk_polar(g, 2, 2)
        if not ok:
            raise AssertionError("catalog search and exhaustive check disagree")
    return PolarDecision(True, partition=part)


# ---------------------------------------------------------------------------
# mining


@dataclass
class MiningReport:
    order: int
    cls: str
    bound: SKBound
    graphs: list[Graph]
    names: list[str]

    def lines(self) -> list[str]:
        tag = self.cls.split("-")[1]
        out = [f"{name} {tag} {self.bound} {emit_graph6(g)} mined" for g, name in zip(self.graphs, self.names)]
        return out

    def summary(self) -> str:
        return f"order {self.order}: {len(self.graphs)} minimal obstructions"


def mine(n: int, cls: str, bound: SKBound = SKBound(2, 2), entries: list[CatalogEntry] | None = None) -> MiningReport:
    """Every minimal ``bound``-polar obstruction of order ``n`` inside the class, up to isomorphism.

    Graphs are generated one vertex at a time from the members of order n-1
    that lie in the class and satisfy the bound; both conditions are
    hereditary, so a minimal obstruction of order n always arises this way.
    """
    if not 1 <= n <= MINING_LIMIT:
        raise ValueError(f"exhaustive mining supports 1 <= n <= {MINING_LIMIT}")
    keep = lambda g: in_class(g, cls) and satisfies(g, bound)
    base: dict[bytes, Graph] = {}
    if n > 1:
        for order, level in graphs_by_order(n - 1, keep):
            if order == n - 1:
                base = level
    seeds = list(base.values()) if n > 1 else [Graph.empty(0)]
    seen: set[bytes] = set()
    found: list[Graph] = []
    for g in seeds:
        for nbrs in range(1 << g.n):
            h = extend_by_vertex(g, nbrs)
            key = canonical_form(h)
            if key in seen:
                continue
            seen.add(key)
            if not in_class(h, cls) or satisfies(h, bound):
                continue
            if all(canonical_form(induced_subgraph(h, h.full & ~(1 << v))) in base for v in range(h.n)) or n == 1:
                found.append(h)
    idx = catalog_index(entries if entries is not None else load_catalog())
    names = [idx.get((canonical_form(h), bound), "unlisted") for h in found]
    order = sorted(range(len(found)), key=lambda i: (names[i] == "unlisted", _name_key(names[i]), emit_graph6(found[i])))
    return MiningReport(n, cls, bound, [found[i] for i in order], [names[i] for i in order])


def _name_key(name: str) -> tuple:
    digits = "".join(ch for ch in name if ch.isdigit())
    prefix = "".join(ch for ch in name if not ch.isdigit())
    return (prefix.startswith("co"), prefix, int(digits) if digits else math.inf)
