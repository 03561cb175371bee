"""Class recognition and decomposition trees.

Two tree shapes are produced.  The ps-tree (for P4-sparse graphs) has union,
join and spider nodes.  The parse tree (for P4-extendible graphs) has union,
join, extension-graph and X-spider nodes.  Both are built top-down with an
explicit stack, so deep spider chains do not hit the recursion limit.

Spider nodes store their partition explicitly: ``legs`` is the independent
side S, ``body`` is the clique K with ``body[i]`` the partner of ``legs[i]``,
and the single child (if any) is the head R.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .extensions import EXTENSIONS, match_extension
from .graph import (
    Graph,
    co_components,
    components,
    induced_subgraph,
    list_induced_p4s,
    low_vertex,
    mask_of,
    members,
    popcount,
)


class NotInClassError(ValueError):
    def __init__(self, message: str, witness: tuple[int, ...] = ()):
        super().__init__(message if not witness else f"{message}; witness {list(witness)}")
        self.witness = witness


# ---------------------------------------------------------------------------
# recognition


@dataclass(frozen=True)
class ClassReport:
    is_cograph: bool
    is_p4_sparse: bool
    is_p4_extendible: bool
    cograph_witness: tuple[int, ...] = ()
    sparse_witness: tuple[int, ...] = ()
    extendible_witness: tuple[int, ...] = ()

    @property
    def witness(self) -> tuple[int, ...]:
        """A vertex-minimal forbidden induced subgraph for the most permissive failing class."""
        if not self.is_p4_extendible:
            return self.extendible_witness
        if not self.is_p4_sparse:
            return self.sparse_witness
        return self.cograph_witness

    def to_json(self) -> dict:
        return {
            "cograph": self.is_cograph,
            "p4_sparse": self.is_p4_sparse,
            "p4_extendible": self.is_p4_extendible,
            "witness": list(self.witness),
        }


def _sparse_failure(g: Graph, p4s: list[tuple[int, int, int, int]], scope: int) -> int | None:
    seen: set[int] = set()
    for w in p4s:
        wm = mask_of(w)
        for x in members(scope & ~wm):
            five = wm | (1 << x)
            if five in seen:
                return five
            seen.add(five)
    return None


def _extension_sets(g: Graph, p4s: list[tuple[int, int, int, int]]) -> list[tuple[int, int]]:
    """For each P4 (as a mask): the set of outside vertices lying on a P4 that meets it."""
    by_vertex: dict[int, list[int]] = {}
    masks = [mask_of(w) for w in p4s]
    for i, w in enumerate(p4s):
        for v in w:
            by_vertex.setdefault(v, []).append(i)
    out = []
    for i, wm in enumerate(masks):
        ext = 0
        for v in p4s[i]:
            for j in by_vertex[v]:
                ext |= masks[j]
        out.append((wm, ext & ~wm))
    return out


def _extendible_failure(g: Graph, scope: int) -> int | None:
    p4s = list_induced_p4s(g, scope)
    masks = [mask_of(w) for w in p4s]
    for wm, ext in _extension_sets(g, p4s):
        if ext == 0:
            continue
        if popcount(ext) > 1:
            # W plus two P4s bringing in two different outside vertices
            picked = 0
            got = 0
            for qm in masks:
                if qm & wm and qm & ext & ~got:
                    picked |= qm
                    got |= qm & ext
                    if popcount(got) >= 2:
                        break
            return wm | picked
        if match_extension(g, wm | ext) is None:
            for qm in masks:
                if qm & wm and qm & ext:
                    return wm | qm
    return None


def _shrink(g: Graph, bad: int, fails) -> tuple[int, ...]:
    """Greedy vertex-minimal subset of ``bad`` on which ``fails`` still holds."""
    changed = True
    while changed:
        changed = False
        for v in members(bad):
            if fails(bad & ~(1 << v)):
                bad &= ~(1 << v)
                changed = True
    return tuple(members(bad))


def classify(g: Graph, minimal_witness: bool = True) -> ClassReport:
    p4s = list_induced_p4s(g)
    cograph = not p4s
    cw = tuple(sorted(p4s[0])) if p4s else ()
    sparse_bad = _sparse_failure(g, p4s, g.full)
    ext_bad = _extendible_failure(g, g.full)
    sw: tuple[int, ...] = ()
    ew: tuple[int, ...] = ()
    if sparse_bad is not None:
        sw = tuple(members(sparse_bad))
    if ext_bad is not None:
        if minimal_witness:
            ew = _shrink(g, ext_bad, lambda s: _extendible_failure(g, s) is not None)
        else:
            ew = tuple(members(ext_bad))
    return ClassReport(cograph, sparse_bad is None, ext_bad is None, cw, sw, ew)


def is_p4_sparse(g: Graph) -> bool:
    return _sparse_failure(g, list_induced_p4s(g), g.full) is None


def is_p4_extendible(g: Graph) -> bool:
    return _extendible_failure(g, g.full) is None


def is_cograph(g: Graph) -> bool:
    return not list_induced_p4s(g)


# ---------------------------------------------------------------------------
# spiders


@dataclass(frozen=True)
class SpiderPartition:
    legs: tuple[int, ...]  # S, independent
    body: tuple[int, ...]  # K, clique; body[i] is the partner of legs[i]
    head: int  # R as a mask
    thin: bool

    @property
    def kind(self) -> str:
        return "thin" if self.thin else "thick"


def _spider_ok(g: Graph, scope: int, legs: list[int], body: list[int], thin: bool) -> bool:
    if len(legs) < 2 or len(legs) != len(body):
        return False
    sm, km = mask_of(legs), mask_of(body)
    if popcount(sm) != len(legs) or popcount(km) != len(body) or sm & km or (sm | km) & ~scope:
        return False
    rm = scope & ~(sm | km)
    for s, k in zip(legs, body):
        nb = g.adj[s] & scope
        want = (1 << k) if thin else (km & ~(1 << k))
        if nb != want:
            return False
    for k in body:
        if g.adj[k] & (km | rm) != (km | rm) & ~(1 << k):
            return False
    return True


def detect_spider(g: Graph, scope: int | None = None) -> SpiderPartition | None:
    """Spider partition of ``G[scope]`` if there is one; thin wins when both readings apply."""
    scope = g.full if scope is None else scope
    size = popcount(scope)
    if size < 4:
        return None
    verts = members(scope)
    deg = {v: popcount(g.adj[v] & scope) for v in verts}
    legs = [v for v in verts if deg[v] == 1]
    body = [low_vertex(g.adj[s] & scope) for s in legs]
    if _spider_ok(g, scope, legs, body, True):
        return SpiderPartition(tuple(legs), tuple(body), scope & ~mask_of(legs + body), True)
    # thick: the clique side has co-degree 1 inside the scope
    body = [v for v in verts if size - 1 - deg[v] == 1]
    legs = [low_vertex(scope & ~g.adj[k] & ~(1 << k)) for k in body]
    order = sorted(range(len(legs)), key=lambda i: legs[i])
    legs = [legs[i] for i in order]
    body = [body[i] for i in order]
    if _spider_ok(g, scope, legs, body, False):
        return SpiderPartition(tuple(legs), tuple(body), scope & ~mask_of(legs + body), False)
    return None


@dataclass(frozen=True)
class XSpiderPartition:
    name: str  # extension graph forming the non-head part
    roles: tuple[int, ...]  # roles[i] is the vertex playing named vertex i
    head: int

    @property
    def mids(self) -> tuple[int, ...]:
        return tuple(self.roles[i] for i in EXTENSIONS[self.name].mids)

    @property
    def ends(self) -> tuple[int, ...]:
        return tuple(self.roles[i] for i in EXTENSIONS[self.name].ends)


def _separable_names() -> tuple[str, ...]:
    return tuple(n for n, e in EXTENSIONS.items() if e.separable)


def detect_x_spider(g: Graph, scope: int | None = None) -> XSpiderPartition | None:
    """X-spider structure of ``G[scope]``: a separable extension graph plus a nonempty head."""
    scope = g.full if scope is None else scope
    p4s = list_induced_p4s(g, scope)
    tried: set[int] = set()
    names = _separable_names()
    for wm, ext in _extension_sets(g, p4s):
        cand = wm | ext
        if cand in tried or popcount(cand) > 5:
            continue
        tried.add(cand)
        head = scope & ~cand
        if not head:
            continue
        found = match_extension(g, cand, names)
        if found is None:
            continue
        name, roles = found
        e = EXTENSIONS[name]
        mids = mask_of(roles[i] for i in e.mids)
        if all(g.adj[r] & cand == mids for r in members(head)):
            return XSpiderPartition(name, roles, head)
    return None


# ---------------------------------------------------------------------------
# trees


class NodeKind(str, Enum):
    LEAF = "leaf"
    UNION = "union"
    JOIN = "join"
    SPIDER = "spider"
    EXTENSION = "extension"
    XSPIDER = "xspider"


@dataclass
class TreeNode:
    kind: NodeKind
    scope: int
    children: list["TreeNode"] = field(default_factory=list)
    vertex: int = -1
    legs: tuple[int, ...] = ()
    body: tuple[int, ...] = ()
    thin: bool = True
    name: str = ""  # extension graph for extension / xspider nodes
    roles: tuple[int, ...] = ()

    @property
    def head(self) -> "TreeNode | None":
        if self.kind in (NodeKind.SPIDER, NodeKind.XSPIDER) and self.children:
            return self.children[0]
        return None

    def iter_nodes(self):
        """All nodes, children before parents."""
        out = []
        stack = [(self, False)]
        while stack:
            node, done = stack.pop()
            if done:
                out.append(node)
                continue
            stack.append((node, True))
            for c in reversed(node.children):
                stack.append((c, False))
        return out

    def size(self) -> int:
        return len(self.iter_nodes())


def _leaf(v: int) -> TreeNode:
    return TreeNode(NodeKind.LEAF, 1 << v, vertex=v)


def _build(g: Graph, shape: str) -> TreeNode:
    root_holder: list[TreeNode] = []
    stack: list[tuple[int, list[TreeNode]]] = [(g.full, root_holder)]
    while stack:
        scope, sink = stack.pop()
        if scope == 0:
            raise ValueError("empty graph has no decomposition tree")
        if scope & (scope - 1) == 0:
            sink.append(_leaf(low_vertex(scope)))
            continue
        parts = components(g, scope)
        kind = NodeKind.UNION
        if len(parts) == 1:
            parts = co_components(g, scope)
            kind = NodeKind.JOIN
        if len(parts) > 1:
            node = TreeNode(kind, scope)
            sink.append(node)
            for p in reversed(parts):
                stack.append((p, node.children))
            continue
        node = _prime_node(g, scope, shape)
        sink.append(node)
        if node.kind in (NodeKind.SPIDER, NodeKind.XSPIDER):
            head = scope & ~mask_of(node.legs + node.body)
            if head:
                stack.append((head, node.children))
    # children were pushed in reverse, so each list is already in min-vertex order
    return _fix_order(root_holder[0])


def _fix_order(root: TreeNode) -> TreeNode:
    for node in root.iter_nodes():
        node.children.sort(key=lambda c: low_vertex(c.scope))
    return root


def _prime_node(g: Graph, scope: int, shape: str) -> TreeNode:
    if shape == "ps":
        sp = detect_spider(g, scope)
        if sp is None:
            sub = induced_subgraph(g, scope)
            rep = classify(sub)
            verts = members(scope)
            raise NotInClassError("graph is not P4-sparse", tuple(verts[i] for i in rep.sparse_witness))
        return TreeNode(NodeKind.SPIDER, scope, legs=sp.legs, body=sp.body, thin=sp.thin)
    if popcount(scope) <= 5:
        found = match_extension(g, scope)
        if found is not None:
            name, roles = found
            return TreeNode(NodeKind.EXTENSION, scope, name=name, roles=roles)
    xs = detect_x_spider(g, scope)
    if xs is None:
        sub = induced_subgraph(g, scope)
        rep = classify(sub)
        verts = members(scope)
        raise NotInClassError("graph is not P4-extendible", tuple(verts[i] for i in rep.extendible_witness))
    return TreeNode(NodeKind.XSPIDER, scope, name=xs.name, roles=xs.roles, legs=xs.ends, body=xs.mids)


def build_ps_tree(g: Graph) -> TreeNode:
    """Decomposition of a P4-sparse graph into union, join and spider nodes."""
    return _build(g, "ps")


def build_parse_tree(g: Graph) -> TreeNode:
    """Decomposition of a P4-extendible graph into union, join, extension and X-spider nodes."""
    return _build(g, "parse")


def spider_type(node: TreeNode) -> str | None:
    """'thin' or 'thick' for a spider node, None otherwise."""
    if node.kind is not NodeKind.SPIDER:
        return None
    return "thin" if node.thin else "thick"


def thin_or_thick_from_tree(tree: TreeNode) -> str | None:
    """Spider type of the root of a ps-tree (None when the root is not a spider)."""
    return spider_type(tree)


# ---------------------------------------------------------------------------
# rebuilding and text form


def rebuild_graph(tree: TreeNode, n: int | None = None) -> Graph:
    """The graph a tree describes; an exact inverse of the builders."""
    n = tree.scope.bit_length() if n is None else n
    rows = [0] * n

    def link(a: int, b: int) -> None:
        rows[a] |= 1 << b
        rows[b] |= 1 << a

    for node in tree.iter_nodes():
        if node.kind is NodeKind.JOIN:
            seen = 0
            for c in node.children:
                for v in members(c.scope):
                    rows[v] |= seen
                for v in members(seen):
                    rows[v] |= c.scope
                seen |= c.scope
        elif node.kind is NodeKind.SPIDER:
            km = mask_of(node.body)
            head = node.children[0].scope if node.children else 0
            for s, k in zip(node.legs, node.body):
                if node.thin:
                    link(s, k)
                else:
                    for k2 in node.body:
                        if k2 != k:
                            link(s, k2)
            for k in node.body:
                rows[k] |= (km | head) & ~(1 << k)
                for r in members(head):
                    rows[r] |= 1 << k
        elif node.kind in (NodeKind.EXTENSION, NodeKind.XSPIDER):
            e = EXTENSIONS[node.name]
            for a, b in e.edges:
                link(node.roles[a], node.roles[b])
            if node.kind is NodeKind.XSPIDER:
                head = node.children[0].scope
                for i in e.mids:
                    k = node.roles[i]
                    rows[k] |= head
                    for r in members(head):
                        rows[r] |= 1 << k
    return Graph(n, tuple(rows))


def _csv(xs) -> str:
    return ",".join(str(x) for x in xs)


def serialize_tree(tree: TreeNode) -> str:
    """Line-based form, children listed before parents; the last line is the root.

    ``id leaf v`` / ``id union c..`` / ``id join c..`` /
    ``id spider thin|thick S=.. K=.. [head=c]`` / ``id extension NAME V=..`` /
    ``id xspider NAME V=.. head=c``
    """
    ids: dict[int, int] = {}
    lines = []
    for node in tree.iter_nodes():
        i = len(ids)
        ids[id(node)] = i
        kids = [ids[id(c)] for c in node.children]
        if node.kind is NodeKind.LEAF:
            lines.append(f"{i} leaf {node.vertex}")
        elif node.kind in (NodeKind.UNION, NodeKind.JOIN):
            lines.append(f"{i} {node.kind.value} " + " ".join(map(str, kids)))
        elif node.kind is NodeKind.SPIDER:
            line = f"{i} spider {'thin' if node.thin else 'thick'} S={_csv(node.legs)} K={_csv(node.body)}"
            if kids:
                line += f" head={kids[0]}"
            lines.append(line)
        elif node.kind is NodeKind.EXTENSION:
            lines.append(f"{i} extension {node.name} V={_csv(node.roles)}")
        else:
            lines.append(f"{i} xspider {node.name} V={_csv(node.roles)} head={kids[0]}")
    return "\n".join(lines) + "\n"


def parse_tree_text(text: str) -> TreeNode:
    nodes: dict[int, TreeNode] = {}
    last = None
    for raw in text.splitlines():
        raw = raw.strip()
        if not raw or raw.startswith("#"):
            continue
        tok = raw.split()
        i, kind = int(tok[0]), tok[1]
        kv = {t.split("=", 1)[0]: t.split("=", 1)[1] for t in tok[2:] if "=" in t}
        ints = lambda s: tuple(int(x) for x in s.split(",") if x)
        if kind == "leaf":
            node = _leaf(int(tok[2]))
        elif kind in ("union", "join"):
            kids = [nodes[int(t)] for t in tok[2:]]
            scope = 0
            for c in kids:
                scope |= c.scope
            node = TreeNode(NodeKind(kind), scope, kids)
        elif kind == "spider":
            legs, body = ints(kv["S"]), ints(kv["K"])
            kids = [nodes[int(kv["head"])]] if "head" in kv else []
            scope = mask_of(legs + body) | (kids[0].scope if kids else 0)
            node = TreeNode(NodeKind.SPIDER, scope, kids, legs=legs, body=body, thin=tok[2] == "thin")
        elif kind == "extension":
            roles = ints(kv["V"])
            node = TreeNode(NodeKind.EXTENSION, mask_of(roles), name=tok[2], roles=roles)
        elif kind == "xspider":
            roles = ints(kv["V"])
            e = EXTENSIONS[tok[2]]
            kids = [nodes[int(kv["head"])]]
            node = TreeNode(
                NodeKind.XSPIDER,
                mask_of(roles) | kids[0].scope,
                kids,
                name=tok[2],
                roles=roles,
                legs=tuple(roles[j] for j in e.ends),
                body=tuple(roles[j] for j in e.mids),
            )
        else:
            raise ValueError(f"unknown node kind {kind!r}")
        nodes[i] = node
        last = node
    if last is None:
        raise ValueError("empty tree text")
    return last


def tree_to_json(tree: TreeNode) -> dict:
    def enc(node: TreeNode) -> dict:
        d: dict = {"kind": node.kind.value, "vertices": members(node.scope)}
        if node.kind is NodeKind.LEAF:
            d["vertex"] = node.vertex
        if node.kind is NodeKind.SPIDER:
            d.update(type="thin" if node.thin else "thick", S=list(node.legs), K=list(node.body))
        if node.kind in (NodeKind.EXTENSION, NodeKind.XSPIDER):
            d.update(graph=node.name, roles=list(node.roles))
        if node.children:
            d["children"] = [enc(c) for c in node.children]
        return d

    return enc(tree)
