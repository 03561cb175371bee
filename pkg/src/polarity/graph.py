"""Undirected simple graphs on vertices 0..n-1 with bitset adjacency.

Vertex sets are plain Python ints used as bitmasks: vertex ``v`` belongs to
``mask`` iff ``mask >> v & 1``.  Adjacency row ``adj[v]`` is the mask of
neighbours of ``v``.  Graphs are immutable; every operation returns a new one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

VertexSet = int

MAX_VERTICES = 1 << 20


class Graph6Error(ValueError):
    """Malformed graph6 input.  ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


def members(mask: VertexSet) -> list[int]:
    """Vertices of ``mask`` in ascending order.  Linear in the bit length."""
    if mask < 0:
        raise ValueError("negative vertex set")
    if mask < 1 << 64:
        out = []
        while mask:
            low = mask & -mask
            out.append(low.bit_length() - 1)
            mask ^= low
        return out
    s = bin(mask)[:1:-1]
    return [i for i, c in enumerate(s) if c == "1"]


def mask_of(vertices: Iterable[int]) -> VertexSet:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: VertexSet) -> int:
    return bin(mask).count("1")


def low_vertex(mask: VertexSet) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} out of range")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")

    # construction -------------------------------------------------------
    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    # queries ------------------------------------------------------------
    @property
    def full(self) -> VertexSet:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in members(self.adj[u] >> (u + 1) << (u + 1)):
                yield u, v

    @property
    def m(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def non_neighbours(self, v: int) -> VertexSet:
        return self.full ^ self.adj[v] ^ (1 << v)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


# operations ---------------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph(g.n, tuple(full ^ r ^ (1 << v) for v, r in enumerate(g.adj)))


def _union2(g: Graph, h: Graph) -> Graph:
    return Graph(g.n + h.n, g.adj + tuple(r << g.n for r in h.adj))


def _join2(g: Graph, h: Graph) -> Graph:
    gm, hm = g.full, h.full << g.n
    return Graph(g.n + h.n, tuple(r | hm for r in g.adj) + tuple((r << g.n) | gm for r in h.adj))


def _fold(op, gs) -> Graph:
    out = Graph.empty(0)
    for g in gs:
        out = op(out, g)
    return out


def disjoint_union(*gs: Graph | Iterable[Graph]) -> Graph:
    """Union of the graphs (given as arguments or one list), numbered in order."""
    if len(gs) == 1 and not isinstance(gs[0], Graph):
        gs = tuple(gs[0])
    return _fold(_union2, gs)


def join(*gs: Graph | Iterable[Graph]) -> Graph:
    """Disjoint union plus every edge between different inputs."""
    if len(gs) == 1 and not isinstance(gs[0], Graph):
        gs = tuple(gs[0])
    return _fold(_join2, gs)


def induced_subgraph(g: Graph, w: VertexSet) -> Graph:
    """Subgraph on ``w`` relabelled ascending, so the i-th smallest vertex becomes i."""
    verts = members(w)
    index = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        r = 0
        for u in members(g.adj[v] & w):
            r |= 1 << index[u]
        rows.append(r)
    return Graph(len(verts), tuple(rows))


def _components(rows: tuple[int, ...] | list[int], scope: VertexSet) -> list[VertexSet]:
    out = []
    rest = scope
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            reach = 0
            for v in members(frontier):
                reach |= rows[v]
            frontier = reach & rest & ~comp
            comp |= frontier
        out.append(comp)
        rest &= ~comp
    return out


def components(g: Graph, scope: VertexSet | None = None) -> list[VertexSet]:
    """Connected components of ``G[scope]``, ordered by minimum vertex."""
    scope = g.full if scope is None else scope
    return _components(g.adj, scope)


def co_components(g: Graph, scope: VertexSet | None = None) -> list[VertexSet]:
    """Components of the complement of ``G[scope]``, ordered by minimum vertex."""
    scope = g.full if scope is None else scope
    full = g.full
    co = [full ^ r ^ (1 << v) for v, r in enumerate(g.adj)]
    return _components(co, scope)


def is_clique(g: Graph, w: VertexSet) -> bool:
    return all((g.adj[v] | (1 << v)) & w == w for v in members(w))


def is_independent(g: Graph, w: VertexSet) -> bool:
    return all(g.adj[v] & w == 0 for v in members(w))


def list_induced_p4s(g: Graph, scope: VertexSet | None = None) -> list[tuple[int, int, int, int]]:
    """Every induced P4 a-b-c-d of ``G[scope]`` exactly once, keyed by its middle edge b<c."""
    scope = g.full if scope is None else scope
    adj = g.adj
    out = []
    for b in members(scope):
        for c in members(adj[b] & scope):
            if c <= b:
                continue
            ends_b = adj[b] & ~adj[c] & scope & ~(1 << c)
            ends_c = adj[c] & ~adj[b] & scope & ~(1 << b)
            if not ends_b or not ends_c:
                continue
            for a in members(ends_b):
                for d in members(ends_c & ~adj[a]):
                    out.append((a, b, c, d))
    return out


# text formats --------------------------------------------------------------


def _n_bytes(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n < 1 << 36:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("graph too large for graph6")


def emit_graph6(g: Graph) -> str:
    out = bytearray(_n_bytes(g.n))
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def parse_graph6(text: str | bytes) -> Graph:
    """Bit-exact graph6 reader.  Rejects truncated data, stray bytes and nonzero padding."""
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    pos = 0
    if data.startswith(b">>graph6<<"):
        pos = len(b">>graph6<<")
    for i in range(pos, len(data)):
        if not 63 <= data[i] <= 126:
            raise Graph6Error(f"byte {data[i]!r} outside graph6 range", i)
    if pos >= len(data):
        raise Graph6Error("missing vertex count", pos)
    if data[pos] != 126:
        n = data[pos] - 63
        pos += 1
    elif len(data) > pos + 1 and data[pos + 1] == 126:
        if len(data) < pos + 8:
            raise Graph6Error("truncated 8-byte vertex count", len(data))
        n = 0
        for b in data[pos + 2 : pos + 8]:
            n = (n << 6) | (b - 63)
        pos += 8
    else:
        if len(data) < pos + 4:
            raise Graph6Error("truncated 4-byte vertex count", len(data))
        n = 0
        for b in data[pos + 1 : pos + 4]:
            n = (n << 6) | (b - 63)
        pos += 4
    if n > MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} exceeds limit {MAX_VERTICES}", pos)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise Graph6Error(f"expected {nbytes} data bytes, found {len(body)}", len(data))
    if len(body) > nbytes:
        raise Graph6Error("trailing bytes after graph data", pos + nbytes)
    rows = [0] * n
    k = 0
    i, j = 0, 1
    for bi, b in enumerate(body):
        val = b - 63
        for shift in range(5, -1, -1):
            if k >= nbits:
                if (val >> shift) & 1:
                    raise Graph6Error("nonzero padding bit", pos + bi)
                continue
            if (val >> shift) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i = 0
                j += 1
    return Graph(n, tuple(rows))


def parse_edgelist(text: str) -> Graph:
    """First non-blank line ``n m``, then ``m`` lines ``u v``.  ``#`` starts a comment."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty edge list")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("edge list header must be 'n m'")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ValueError(f"header promises {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph.from_edges(n, edges)


def emit_edgelist(g: Graph) -> str:
    es = list(g.edges())
    return "\n".join([f"{g.n} {len(es)}"] + [f"{u} {v}" for u, v in es]) + "\n"


def relabel(g: Graph, perm: list[int] | tuple[int, ...]) -> Graph:
    """Graph where old vertex ``v`` becomes ``perm[v]``."""
    rows = [0] * g.n
    for u, v in g.edges():
        rows[perm[u]] |= 1 << perm[v]
        rows[perm[v]] |= 1 << perm[u]
    return Graph(g.n, tuple(rows))
