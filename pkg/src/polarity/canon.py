"""Canonical labelling for small graphs.

Disconnected graphs and graphs with disconnected complement are split into
their (co-)components first, so only prime-ish pieces reach the
individualisation-refinement search.  That keeps edgeless, complete and
other highly symmetric inputs cheap.
"""

from __future__ import annotations

from .graph import Graph, co_components, components, disjoint_union, induced_subgraph, join, popcount

CANON_LIMIT = 12


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition (1-dimensional WL)."""
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        out: list[list[int]] = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                sig = tuple(popcount(adj[v] & m) for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(c)
                continue
            changed = True
            for sig in sorted(groups):
                out.append(groups[sig])
        cells = out
        if not changed:
            return cells


def _code(adj: tuple[int, ...], order: list[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def _search(adj: tuple[int, ...], cells: list[list[int]]) -> int:
    cells = _refine(adj, cells)
    target = -1
    for idx, c in enumerate(cells):
        if len(c) > 1 and (target < 0 or len(c) < len(cells[target])):
            target = idx
    if target < 0:
        return _code(adj, [c[0] for c in cells])
    best = -1
    cell = cells[target]
    for v in cell:
        rest = [u for u in cell if u != v]
        trial = cells[:target] + [[v], rest] + cells[target + 1 :]
        best = max(best, _search(adj, trial))
    return best


def _pack(tag: bytes, parts: list[bytes]) -> bytes:
    out = bytearray(tag)
    out += len(parts).to_bytes(2, "big")
    for p in sorted(parts):
        out += len(p).to_bytes(3, "big") + p
    return bytes(out)


def _canon(g: Graph) -> bytes:
    if g.n <= 1:
        return b"E" if g.n == 0 else b"V"
    comps = components(g)
    if len(comps) > 1:
        return _pack(b"U", [_canon(induced_subgraph(g, c)) for c in comps])
    cocomps = co_components(g)
    if len(cocomps) > 1:
        return _pack(b"J", [_canon(induced_subgraph(g, c)) for c in cocomps])
    code = _search(g.adj, [list(range(g.n))])
    nbits = g.n * (g.n - 1) // 2
    return b"P" + bytes([g.n]) + code.to_bytes((nbits + 7) // 8, "big")


def canonical_form(g: Graph, limit: int = CANON_LIMIT) -> bytes:
    """Isomorphism-invariant byte string: equal iff the graphs are isomorphic."""
    if g.n > limit:
        raise ValueError(f"canonical_form supports n <= {limit}, got {g.n}")
    return _canon(g)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(map(popcount, g.adj)) != sorted(map(popcount, h.adj)):
        return False
    return canonical_form(g) == canonical_form(h)


def canonical_graph(g: Graph) -> Graph:
    """A fixed representative of the isomorphism class, rebuilt from its code."""
    return _graph_from_code(canonical_form(g))


def _graph_from_code(code: bytes) -> Graph:
    tag = code[:1]
    if tag == b"E":
        return Graph.empty(0)
    if tag == b"V":
        return Graph.empty(1)
    if tag == b"P":
        n = code[1]
        nbits = n * (n - 1) // 2
        bits = int.from_bytes(code[2:], "big")
        rows = [0] * n
        k = nbits - 1
        for j in range(1, n):
            for i in range(j):
                if bits >> k & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                k -= 1
        return Graph(n, tuple(rows))
    count = int.from_bytes(code[1:3], "big")
    pos = 3
    parts = []
    for _ in range(count):
        ln = int.from_bytes(code[pos : pos + 3], "big")
        parts.append(_graph_from_code(code[pos + 3 : pos + 3 + ln]))
        pos += 3 + ln
    out = parts[0]
    for p in parts[1:]:
        out = disjoint_union(out, p) if tag == b"U" else join(out, p)
    return out


__all__ = ["canonical_form", "canonical_graph", "are_isomorphic"]
