"""Graph generators: exhaustive (isomorph-free) and random by decomposition tree."""

from __future__ import annotations

import random
from typing import Callable, Iterator

from .canon import canonical_form
from .decomposition import NodeKind, TreeNode, rebuild_graph
from .extensions import EXTENSIONS
from .graph import Graph, mask_of

Predicate = Callable[[Graph], bool]


def extend_by_vertex(g: Graph, nbrs: int) -> Graph:
    """``g`` plus a new vertex ``g.n`` adjacent to the mask ``nbrs``."""
    v = g.n
    rows = tuple(r | ((nbrs >> u & 1) << v) for u, r in enumerate(g.adj)) + (nbrs,)
    return Graph(g.n + 1, rows)


def graphs_by_order(n_max: int, keep: Predicate | None = None) -> Iterator[tuple[int, dict[bytes, Graph]]]:
    """Yield ``(n, {canonical form: graph})`` for n = 1..n_max.

    ``keep`` must describe a hereditary family: only kept graphs are extended,
    which is complete because every member of order n arises from a member of
    order n-1 by adding one vertex.
    """
    level = {canonical_form(Graph.empty(1)): Graph.empty(1)}
    if keep is not None:
        level = {k: g for k, g in level.items() if keep(g)}
    yield 1, level
    for n in range(2, n_max + 1):
        nxt: dict[bytes, Graph] = {}
        for g in level.values():
            for nbrs in range(1 << g.n):
                h = extend_by_vertex(g, nbrs)
                key = canonical_form(h)
                if key in nxt:
                    continue
                if keep is None or keep(h):
                    nxt[key] = h
        level = nxt
        yield n, level


def all_graphs(n: int, keep: Predicate | None = None) -> list[Graph]:
    out: list[Graph] = []
    for order, level in graphs_by_order(n, keep):
        if order == n:
            out = list(level.values())
    return out


# ---------------------------------------------------------------------------
# random members of the two classes, built from a random decomposition tree


def _split(rng: random.Random, verts: list[int]) -> list[list[int]]:
    k = rng.randint(2, min(4, len(verts)))
    cuts = sorted(rng.sample(range(1, len(verts)), k - 1))
    return [verts[a:b] for a, b in zip([0] + cuts, cuts + [len(verts)])]


def random_ps_tree(n: int, rng: random.Random, spider_bias: float = 0.4) -> TreeNode:
    """Random decomposition of a P4-sparse graph on vertices 0..n-1 (labels shuffled)."""
    verts = list(range(n))
    rng.shuffle(verts)
    return _ps_tree(verts, rng, spider_bias)


def _ps_tree(verts: list[int], rng: random.Random, bias: float) -> TreeNode:
    # iterative to survive deep spider chains
    root: list[TreeNode] = []
    stack: list[tuple[list[int], list[TreeNode]]] = [(verts, root)]
    while stack:
        vs, sink = stack.pop()
        if len(vs) == 1:
            sink.append(TreeNode(NodeKind.LEAF, 1 << vs[0], vertex=vs[0]))
            continue
        if len(vs) >= 4 and rng.random() < bias:
            t = rng.randint(2, len(vs) // 2)
            legs, body, head = vs[:t], vs[t : 2 * t], vs[2 * t :]
            thin = t == 2 or rng.random() < 0.5
            node = TreeNode(NodeKind.SPIDER, mask_of(vs), legs=tuple(legs), body=tuple(body), thin=thin)
            sink.append(node)
            if head:
                stack.append((head, node.children))
            continue
        kind = NodeKind.UNION if rng.random() < 0.5 else NodeKind.JOIN
        node = TreeNode(kind, mask_of(vs))
        sink.append(node)
        for part in _split(rng, vs):
            stack.append((part, node.children))
    return root[0]


_SEPARABLE = tuple(name for name, e in EXTENSIONS.items() if e.separable)
_FIVE = tuple(name for name, e in EXTENSIONS.items() if e.n == 5)


def random_parse_tree(n: int, rng: random.Random, x_bias: float = 0.4) -> TreeNode:
    """Random decomposition of a P4-extendible graph on vertices 0..n-1."""
    verts = list(range(n))
    rng.shuffle(verts)
    root: list[TreeNode] = []
    stack: list[tuple[list[int], list[TreeNode]]] = [(verts, root)]
    while stack:
        vs, sink = stack.pop()
        if len(vs) == 1:
            sink.append(TreeNode(NodeKind.LEAF, 1 << vs[0], vertex=vs[0]))
            continue
        if len(vs) in (4, 5) and rng.random() < x_bias:
            name = "P4" if len(vs) == 4 else rng.choice(_FIVE)
            sink.append(TreeNode(NodeKind.EXTENSION, mask_of(vs), name=name, roles=tuple(vs)))
            continue
        if len(vs) >= 5 and rng.random() < x_bias:
            name = rng.choice(_SEPARABLE)
            e = EXTENSIONS[name]
            if e.n < len(vs):
                roles, head = tuple(vs[: e.n]), vs[e.n :]
                node = TreeNode(
                    NodeKind.XSPIDER,
                    mask_of(vs),
                    name=name,
                    roles=roles,
                    legs=tuple(roles[i] for i in e.ends),
                    body=tuple(roles[i] for i in e.mids),
                )
                sink.append(node)
                stack.append((head, node.children))
                continue
        kind = NodeKind.UNION if rng.random() < 0.5 else NodeKind.JOIN
        node = TreeNode(kind, mask_of(vs))
        sink.append(node)
        for part in _split(rng, vs):
            stack.append((part, node.children))
    return root[0]


def random_p4_sparse(n: int, rng: random.Random, spider_bias: float = 0.4) -> Graph:
    return rebuild_graph(random_ps_tree(n, rng, spider_bias), n)


def random_p4_extendible(n: int, rng: random.Random, x_bias: float = 0.4) -> Graph:
    return rebuild_graph(random_parse_tree(n, rng, x_bias), n)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_spider(rng: random.Random, n_max: int = 14, thin: bool | None = None) -> tuple[Graph, bool]:
    """A spider with an arbitrary random head; returns the graph and whether it is thin."""
    t = rng.randint(2, max(2, (n_max - 1) // 2))
    r = rng.randint(0, n_max - 2 * t)
    thin = rng.random() < 0.5 if thin is None else thin
    n = 2 * t + r
    head = random_graph(r, rng.random(), rng)
    edges = [(u + 2 * t, v + 2 * t) for u, v in head.edges()]
    legs, body = list(range(t)), list(range(t, 2 * t))
    for i, s in enumerate(legs):
        if thin:
            edges.append((s, body[i]))
        else:
            edges += [(s, k) for j, k in enumerate(body) if j != i]
    edges += [(a, b) for i, a in enumerate(body) for b in body[i + 1 :]]
    edges += [(k, x) for k in body for x in range(2 * t, n)]
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph.from_edges(n, [(perm[u], perm[v]) for u, v in edges]), thin
