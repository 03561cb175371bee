"""Linear-time optimiser for the twelve properties on decomposition trees.

Each tree node gets a :class:`Vec` holding, for every property slot, the
optimum size and a *recipe*: a tuple of parts whose union is an optimal
vertex set.  A part is either a reference ``(vec, slot, mode)`` to another
vector's slot or an explicit ``(vertices, side)``.  Modes say how the
referenced set lands in the canonical partition (A, B) of the slot being
built: keep the child's split, swap it, or send everything to one side.

The bottom-up pass only touches sizes and builds recipes in O(1) per node
(plus the explicit vertex tuples, which are disjoint across nodes).  A
single top-down descent then expands a recipe into the witness and its
partition, so one query costs O(n) overall.

Where several alternatives reach the same size the first one listed wins.
"""

from __future__ import annotations

import gc
import os
from contextlib import contextmanager
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .decomposition import NodeKind, NotInClassError, TreeNode, build_parse_tree, build_ps_tree, classify
from .extensions import EXTENSIONS
from .graph import Graph
from .oracle import MaxSubgraphResult, brute_force_max_subgraph
from .properties import DUAL_INDEX, PropertyKind

MC, MI, MB, McB, MS, MUC, MJI, MM, McM, MP, MU, McU = range(12)
SLOTS = 12

KEEP, SWAP, TO_A, TO_B = 0, 1, 2, 3

CHECKS = bool(os.environ.get("POLARITY_DEBUG"))


class Vec:
    """Optimum sizes and recipes for one (sub)graph."""

    __slots__ = ("size", "recipe")

    def __init__(self) -> None:
        self.size = [0] * SLOTS
        self.recipe: list[tuple] = [()] * SLOTS

    def sizes(self) -> tuple[int, ...]:
        return tuple(self.size)


EMPTY = Vec()


def R(vec: Vec, slot: int, mode: int = TO_A) -> tuple:
    return (vec, slot, mode)


def X(verts: Sequence[int], side: int = TO_A) -> tuple:
    return (tuple(verts), side)


def _part_size(part: tuple) -> int:
    if len(part) == 3:
        return part[0].size[part[1]]
    return len(part[0])


def _set(out: Vec, slot: int, *alts: tuple) -> None:
    best = -1
    pick: tuple = ()
    for parts in alts:
        s = 0
        for p in parts:
            s += _part_size(p)
        if s > best:
            best, pick = s, parts
    out.size[slot] = best
    out.recipe[slot] = pick


# ---------------------------------------------------------------------------
# leaves, union, join


def eval_leaf(v: int) -> Vec:
    out = Vec()
    part = (((v,), TO_A),)
    out.size = [1] * SLOTS
    out.recipe = [part] * SLOTS
    return out


def dual(vec: Vec) -> Vec:
    """Vector of the complement graph: slot p reads the dual slot, with A and B swapped."""
    out = Vec()
    out.size = [vec.size[DUAL_INDEX[p]] for p in range(SLOTS)]
    out.recipe = [((vec, DUAL_INDEX[p], SWAP),) for p in range(SLOTS)]
    return out


def _union2(g0: Vec, g1: Vec) -> Vec:
    o = Vec()
    g = (g0, g1)
    _set(o, MC, (R(g0, MC),), (R(g1, MC),))
    _set(o, MI, (R(g0, MI), R(g1, MI)))
    _set(o, MB, (R(g0, MB, KEEP), R(g1, MB, KEEP)))
    _set(o, McB, (R(g0, McB, KEEP),), (R(g1, McB, KEEP),), (R(g0, MC, TO_A), R(g1, MC, TO_B)))
    _set(o, MS, *[(R(g[i], MI, TO_A), R(g[1 - i], MS, KEEP)) for i in (0, 1)])
    _set(o, MUC, (R(g0, MUC), R(g1, MUC)))
    _set(o, MJI, (R(o, MI),), (R(g0, MJI),), (R(g1, MJI),))
    _set(o, MM, (R(g0, MM, KEEP), R(g1, MM, KEEP)))
    _set(
        o,
        McM,
        *[(R(g[i], MS, KEEP), R(g[1 - i], MI, TO_A)) for i in (0, 1)],
        *[(R(g[i], McM, KEEP),) for i in (0, 1)],
        *[(R(g[i], MC, TO_B), R(g[1 - i], MJI, TO_A)) for i in (0, 1)],
    )
    _set(o, MP, (R(o, MM, KEEP),), (R(g0, MP, KEEP), R(g1, MUC, TO_B)), (R(g1, MP, KEEP), R(g0, MUC, TO_B)))
    _set(o, MU, *[(R(g[i], MU, KEEP), R(g[1 - i], MUC, TO_B)) for i in (0, 1)])
    _set(o, McU, (R(o, MB, KEEP),), (R(g0, MI, TO_B), R(g1, McU, KEEP)), (R(g1, MI, TO_B), R(g0, McU, KEEP)))
    return o


def _join2(g0: Vec, g1: Vec) -> Vec:
    o = Vec()
    g = (g0, g1)
    _set(o, MC, (R(g0, MC), R(g1, MC)))
    _set(o, MI, (R(g0, MI),), (R(g1, MI),))
    _set(o, MB, (R(g0, MB, KEEP),), (R(g1, MB, KEEP),), (R(g0, MI, TO_A), R(g1, MI, TO_B)))
    _set(o, McB, (R(g0, McB, KEEP), R(g1, McB, KEEP)))
    _set(o, MS, *[(R(g[i], MC, TO_B), R(g[1 - i], MS, KEEP)) for i in (0, 1)])
    _set(o, MUC, (R(o, MC),), (R(g0, MUC),), (R(g1, MUC),))
    _set(o, MJI, (R(g0, MJI), R(g1, MJI)))
    _set(
        o,
        MM,
        *[(R(g[i], MS, KEEP), R(g[1 - i], MC, TO_B)) for i in (0, 1)],
        *[(R(g[i], MM, KEEP),) for i in (0, 1)],
        *[(R(g[i], MI, TO_A), R(g[1 - i], MUC, TO_B)) for i in (0, 1)],
    )
    _set(o, McM, (R(g0, McM, KEEP), R(g1, McM, KEEP)))
    _set(o, MP, (R(o, McM, KEEP),), (R(g0, MP, KEEP), R(g1, MJI, TO_A)), (R(g1, MP, KEEP), R(g0, MJI, TO_A)))
    _set(o, MU, (R(o, McB, KEEP),), (R(g1, MU, KEEP), R(g0, MC, TO_A)), (R(g0, MU, KEEP), R(g1, MC, TO_A)))
    _set(o, McU, (R(g0, McU, KEEP), R(g1, MJI, TO_A)), (R(g1, McU, KEEP), R(g0, MJI, TO_A)))
    return o


def eval_union(children: Sequence[Vec]) -> Vec:
    """Disjoint union of two or more parts, folded left."""
    acc = children[0]
    for c in children[1:]:
        acc = _union2(acc, c)
    return acc


def eval_join(children: Sequence[Vec]) -> Vec:
    acc = children[0]
    for c in children[1:]:
        acc = _join2(acc, c)
    return acc


def eval_join_via_dual(children: Sequence[Vec]) -> Vec:
    """Join computed as the complement of the union of complements."""
    return dual(eval_union([dual(c) for c in children]))


# ---------------------------------------------------------------------------
# spiders


def eval_thin_spider(legs: Sequence[int], body: Sequence[int], head: Vec | None) -> Vec:
    """Thin spider: ``legs[i]`` is adjacent only to ``body[i]``; the head sees all of the body."""
    h = EMPTY if head is None else head
    S, K = tuple(legs), tuple(body)
    s0, s1, k0, k1 = S[0], S[1], K[0], K[1]
    rest = (k0,) + S[1:]  # K[0] together with the legs it does not touch
    o = Vec()
    _set(o, MC, (X((s0, k0)),), (X(K), R(h, MC)))
    _set(o, MI, (X(rest),), (X(S), R(h, MI)))
    _set(
        o,
        MB,
        (X(rest, TO_A), X((k1, s0), TO_B)),
        (R(h, MI, TO_A), X(S, TO_A), X((k0,), TO_B)),
        (R(h, MB, KEEP), X(S, TO_A)),
    )
    _set(
        o,
        McB,
        (X((s0, k0), TO_A), X((s1, k1), TO_B)),
        (R(h, MC, TO_A), X(K, TO_A), X((s0,), TO_B)),
        (R(h, McB, KEEP), X(K, TO_A)),
    )
    _set(o, MS, (X(S, TO_A), X(K, TO_B), R(h, MS, KEEP)))
    _set(o, MUC, (X(S), X((k0,))), (X(S), R(h, MUC)), (R(h, MC), X(K)))
    _set(
        o,
        MJI,
        (X((s0, k0, k1)),),
        (X(rest),),
        (X((s0, k0)), R(h, MI)),
        (X(S), R(h, MI)),
        (X(K), R(h, MJI)),
    )
    _set(
        o,
        MM,
        (X(S, TO_A), X(K, TO_B), R(h, MS, KEEP)),
        (X(rest, TO_A), X((s0,), TO_B), R(h, MUC, TO_B)),
        (X(S, TO_A), R(h, MM, KEEP)),
    )
    _set(
        o,
        McM,
        (X(S, TO_A), X(K, TO_B), R(h, MS, KEEP)),
        (X(K, TO_A), R(h, MJI, TO_A), X((s0,), TO_B)),
        (X(K, TO_A), R(h, McM, KEEP)),
    )
    for slot in (MP, MU, McU):
        _set(o, slot, (X(K, TO_A), X(S, TO_B), R(h, slot, KEEP)))
    return o


def eval_thick_spider(legs: Sequence[int], body: Sequence[int], head: Vec | None, check: bool = CHECKS) -> Vec:
    """Thick spider: ``legs[i]`` is adjacent to every body vertex except ``body[i]``.

    Its complement is a thin spider with the roles of legs and body exchanged
    and the complemented head, so the vector is the dual of that one.
    """
    h = EMPTY if head is None else head
    out = dual(eval_thin_spider(body, legs, dual(h)))
    if check:
        direct = _thick_direct(len(legs), len(body), h)
        for slot, size in direct.items():
            if out.size[slot] != size:
                raise AssertionError(f"thick spider slot {slot}: duality {out.size[slot]} != direct {size}")
    return out


def _thick_direct(ns: int, nk: int, h: Vec) -> dict[int, int]:
    """A few thick-spider optima written out directly, used as a cross-check."""
    hs = h.size
    return {
        MC: max(nk, nk + hs[MC]),
        MB: max(4, hs[MI] + ns + 1, hs[MB] + ns),
        MUC: max(3, nk, 2 + hs[MC], nk + hs[MC], ns + hs[MUC]),
        MS: ns + nk + hs[MS],
        MP: ns + nk + hs[MP],
    }


# ---------------------------------------------------------------------------
# extension graphs and X-spiders


@lru_cache(maxsize=None)
def _extension_table(name: str) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """Optimal (A, B) per slot on the named graph, in role indices, by brute force."""
    g = EXTENSIONS[name].graph()
    out = []
    for p in PropertyKind:
        res = brute_force_max_subgraph(g, p)
        out.append(res.partition if res.partition is not None else (res.witness, ()))
    return tuple(out)


def eval_extension(name: str, roles: Sequence[int]) -> Vec:
    o = Vec()
    for slot, (a, b) in enumerate(_extension_table(name)):
        parts = []
        if a:
            parts.append(X([roles[i] for i in a], TO_A))
        if b:
            parts.append(X([roles[i] for i in b], TO_B))
        o.size[slot] = len(a) + len(b)
        o.recipe[slot] = tuple(parts)
    return o


def _cop_spider(a: int, a2: int, b: int, c: int, d: int, h: Vec) -> Vec:
    """Triangle a a2 b, path b c d; the head sees b and c."""
    S, K = (a, a2, d), (b, c)
    o = Vec()
    _set(o, MC, (X((a, a2, b)),), (R(h, MC), X(K)))
    _set(
        o,
        MI,
        (X((a, c)),),
        (X((a, d)),),
        (X((a2, c)),),
        (X((a2, d)),),
        (X((b, d)),),
        (R(h, MI), X((a, d))),
        (R(h, MI), X((a2, d))),
    )
    _set(
        o,
        MB,
        (X((a2, c), TO_A), X((b, d), TO_B)),
        (X((a, c), TO_A), X((b, d), TO_B)),
        (R(h, MI, TO_A), X((a, d), TO_A), X((a2, c), TO_B)),
        (R(h, MB, KEEP), X((a, d), TO_A), X((a2,), TO_B)),
    )
    _set(
        o,
        McB,
        (X((a, a2, b), TO_A), X((c, d), TO_B)),
        (X((a, a2, b), TO_A), X((c,), TO_B), R(h, MC, TO_B)),
        (R(h, McB, KEEP), X(K, TO_A)),
    )
    _set(
        o,
        MS,
        (X((d,), TO_A), X((a, a2, b), TO_B)),
        (X((c,), TO_A), X((a, a2, b), TO_B)),
        (X((a2, d), TO_A), X((b, c), TO_B)),
        (X((a, d), TO_A), X((b, c), TO_B)),
        (R(h, MI, TO_A), X((a, d), TO_A), X((a2, b), TO_B)),
        (R(h, MS, KEEP), X((a2, d), TO_A), X((b, c), TO_B)),
        (R(h, MS, KEEP), X((a, d), TO_A), X((b, c), TO_B)),
    )
    _set(
        o,
        MUC,
        (X((a, a2, b, d)),),
        (X((a, a2, c, d)),),
        (R(h, MC), X((a, a2, c))),
        (R(h, MC), X(S)),
        (R(h, MUC), X(S)),
    )
    _set(
        o,
        MJI,
        (X((a, a2, b)),),
        (X((a, b, c)),),
        (X((a2, b, c)),),
        (X((b, c, d)),),
        (R(h, MI), X((a, b))),
        (R(h, MI), X((a2, b))),
        (R(h, MI), X((c, d))),
        (R(h, MI), X((a, d))),
        (R(h, MI), X((a2, d))),
        (R(h, MJI), X(K)),
    )
    _set(
        o,
        MM,
        (R(h, MC, TO_B), X((b, d), TO_A), X((a, a2, c), TO_B)),
        (R(h, MUC, TO_B), X((c,), TO_A), X((a, a2, d), TO_B)),
        (R(h, MUC, TO_B), X((b,), TO_A), X((a, a2, d), TO_B)),
        (R(h, MS, KEEP), X((a, d), TO_A), X((b, c), TO_B)),
        (R(h, MS, KEEP), X((a2, d), TO_A), X((b, c), TO_B)),
        (R(h, MS, KEEP), X((a, d), TO_A), X((a2, c), TO_B)),
        (R(h, MM, KEEP), X(S, TO_B)),
    )
    _set(
        o,
        McM,
        (R(h, MI, TO_A), X((c, d), TO_A), X((a, a2, b), TO_B)),
        (R(h, MS, KEEP), X((a, d), TO_A), X((b, c), TO_B)),
        (R(h, MS, KEEP), X((a2, d), TO_A), X((b, c), TO_B)),
        (R(h, MJI, TO_A), X((b, c), TO_A), X((a, a2), TO_B)),
        (R(h, McM, KEEP), X(K, TO_A)),
    )
    for slot in (MP, MU):
        _set(o, slot, (R(h, slot, KEEP), X(K, TO_A), X(S, TO_B)))
    _set(
        o,
        McU,
        (R(h, MI, TO_B), X((a, d), TO_B), X((a2, b, c), TO_A)),
        (R(h, MB, KEEP), X((a, b), TO_A), X((a2, d), TO_B)),
        (R(h, McU, KEEP), X(K, TO_A), X((a, d), TO_B)),
        (R(h, McU, KEEP), X(K, TO_A), X((a2, d), TO_B)),
    )
    return o


def _chair_spider(a: int, a2: int, b: int, c: int, d: int, h: Vec) -> Vec:
    """b adjacent to a, a2 and c; c adjacent to d; the head sees b and c."""
    S, K = (a, a2, d), (b, c)
    o = Vec()
    _set(o, MC, (X((a, b)),), (X((a2, b)),), (X((b, c)),), (X((c, d)),), (R(h, MC), X(K)))
    _set(o, MI, (X((a, a2, c)),), (R(h, MI), X(S)))
    _set(
        o,
        MB,
        (X((a, a2, c), TO_A), X((b, d), TO_B)),
        (R(h, MI, TO_A), X(S, TO_A), X((c,), TO_B)),
        (R(h, MI, TO_A), X(S, TO_A), X((b,), TO_B)),
        (R(h, MB, KEEP), X(S, TO_A)),
    )
    _set(
        o,
        McB,
        (X((a2, b), TO_A), X((c, d), TO_B)),
        (X((a, b), TO_A), X((c, d), TO_B)),
        (R(h, MC, TO_B), X((c,), TO_B), X((a, b), TO_A)),
        (R(h, MC, TO_B), X((c,), TO_B), X((a2, b), TO_A)),
        (R(h, MC, TO_A), X((b,), TO_A), X((c, d), TO_B)),
        (R(h, McB, KEEP), X(K, TO_A)),
    )
    _set(o, MS, (R(h, MS, KEEP), X(S, TO_A), X(K, TO_B)))
    _set(o, MUC, (X((a, a2, c, d)),), (R(h, MC), X((a, a2, c))), (R(h, MUC), X(S)))
    _set(o, MJI, (X((a, a2, b, c)),), (R(h, MI), X(S)), (R(h, MI), X((a, a2, b))), (R(h, MJI), X(K)))
    _set(
        o,
        MM,
        (R(h, MS, KEEP), X(S, TO_A), X(K, TO_B)),
        (R(h, MUC, TO_B), X((b, d), TO_A), X((a, a2), TO_B)),
        (R(h, MUC, TO_B), X((a, a2, c), TO_A), X((d,), TO_B)),
        (R(h, MM, KEEP), X(S, TO_A)),
    )
    _set(
        o,
        McM,
        (R(h, MS, KEEP), X(S, TO_A), X(K, TO_B)),
        (R(h, MJI, TO_A), X(K, TO_A), X((a,), TO_B)),
        (R(h, MJI, TO_A), X(K, TO_A), X((a2,), TO_B)),
        (R(h, MJI, TO_A), X(K, TO_A), X((d,), TO_B)),
        (R(h, McM, KEEP), X(K, TO_A)),
    )
    for slot in (MP, MU, McU):
        _set(o, slot, (R(h, slot, KEEP), X(K, TO_A), X(S, TO_B)))
    return o


def eval_x_spider(name: str, roles: Sequence[int], head: Vec) -> Vec:
    """X-spider on a separable extension graph ``name`` with the given role map and head."""
    r = roles
    if name == "P4":
        return eval_thin_spider((r[0], r[3]), (r[1], r[2]), head)
    if name == "coP":
        return _cop_spider(r[0], r[4], r[1], r[2], r[3], head)
    if name == "F":
        return _chair_spider(r[0], r[4], r[1], r[2], r[3], head)
    # the complement of a P-spider is a coP-spider and that of a coF-spider is
    # an F-spider; in both complements vertex 3 becomes b, 0 becomes c, 2 becomes d
    if name == "P":
        return dual(_cop_spider(r[1], r[4], r[3], r[0], r[2], dual(head)))
    if name == "coF":
        return dual(_chair_spider(r[1], r[4], r[3], r[0], r[2], dual(head)))
    raise ValueError(f"{name} is not a separable extension graph")


# ---------------------------------------------------------------------------
# trees and witnesses


@contextmanager
def _gc_paused():
    # the pass allocates millions of small tuples that all stay alive; letting the
    # cyclic collector rescan them makes the cost per node grow with n
    was = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if was:
            gc.enable()


def evaluate_tree(tree: TreeNode, check: bool = CHECKS, keep: bool = False) -> Vec | tuple[Vec, dict[int, Vec]]:
    """Bottom-up pass.  With ``keep`` the per-node vectors are returned too (keyed by ``id(node)``)."""
    with _gc_paused():
        return _evaluate(tree, check, keep)


def _evaluate(tree: TreeNode, check: bool, keep: bool) -> Vec | tuple[Vec, dict[int, Vec]]:
    vecs: dict[int, Vec] = {}
    for node in tree.iter_nodes():
        kids = [vecs[id(c)] for c in node.children]
        k = node.kind
        if k is NodeKind.LEAF:
            v = eval_leaf(node.vertex)
        elif k is NodeKind.UNION:
            v = eval_union(kids)
        elif k is NodeKind.JOIN:
            v = eval_join(kids)
            if check:
                alt = eval_join_via_dual(kids)
                if alt.size != v.size:
                    raise AssertionError(f"join rules disagree with duality: {v.size} vs {alt.size}")
        elif k is NodeKind.SPIDER:
            head = kids[0] if kids else None
            if node.thin:
                v = eval_thin_spider(node.legs, node.body, head)
            else:
                v = eval_thick_spider(node.legs, node.body, head, check=check)
        elif k is NodeKind.EXTENSION:
            v = eval_extension(node.name, node.roles)
        else:
            v = eval_x_spider(node.name, node.roles, kids[0])
        vecs[id(node)] = v
        if not keep:
            for c in node.children:
                vecs.pop(id(c), None)
    root = vecs[id(tree)]
    return (root, vecs) if keep else root


_FLIP = {KEEP: SWAP, SWAP: KEEP, TO_A: TO_B, TO_B: TO_A}


def _compose(state: int, mode: int) -> int:
    if state == KEEP:
        return mode
    if state == SWAP:
        return _FLIP[mode]
    return state


def reconstruct(vec: Vec, slot: int) -> tuple[list[int], list[int]]:
    """Expand a slot's recipe into its canonical partition (A, B)."""
    a: list[int] = []
    b: list[int] = []
    stack = [(vec, slot, KEEP)]
    while stack:
        v, s, state = stack.pop()
        for part in v.recipe[s]:
            if len(part) == 3:
                stack.append((part[0], part[1], _compose(state, part[2])))
            else:
                side = _compose(state, part[1])
                (a if side in (TO_A, KEEP) else b).extend(part[0])
    return a, b


def result_from_vec(vec: Vec, p: PropertyKind) -> MaxSubgraphResult:
    a, b = reconstruct(vec, int(p))
    w = tuple(sorted(a + b))
    if len(w) != vec.size[p]:
        raise AssertionError(f"witness size {len(w)} differs from optimum {vec.size[p]}")
    part = (tuple(sorted(a)), tuple(sorted(b))) if p.is_pair else None
    return MaxSubgraphResult(p, w, vec.size[p], part)


@dataclass
class Solver:
    """Holds the tree and root vector so several properties can be queried cheaply."""

    tree: TreeNode
    root: Vec
    shape: str

    @classmethod
    def for_graph(cls, g: Graph, check: bool = CHECKS) -> "Solver":
        rep = classify(g, minimal_witness=False)
        if rep.is_p4_sparse:
            tree, shape = build_ps_tree(g), "ps"
        elif rep.is_p4_extendible:
            tree, shape = build_parse_tree(g), "parse"
        else:
            raise NotInClassError("graph is neither P4-sparse nor P4-extendible", classify(g).witness)
        return cls(tree, evaluate_tree(tree, check=check), shape)

    def solve(self, p: PropertyKind) -> MaxSubgraphResult:
        return result_from_vec(self.root, p)


def max_subgraph(g: Graph, p: PropertyKind, check: bool = CHECKS) -> MaxSubgraphResult:
    """Largest induced subgraph with property ``p`` (ps-tree when the graph is P4-sparse)."""
    if g.n == 0:
        return MaxSubgraphResult(p, (), 0, ((), ()) if p.is_pair else None)
    return Solver.for_graph(g, check=check).solve(p)


def max_subgraph_on_tree(tree: TreeNode, p: PropertyKind, check: bool = CHECKS) -> MaxSubgraphResult:
    return result_from_vec(evaluate_tree(tree, check=check), p)


__all__ = [
    "Vec",
    "dual",
    "eval_leaf",
    "eval_union",
    "eval_join",
    "eval_join_via_dual",
    "eval_thin_spider",
    "eval_thick_spider",
    "eval_extension",
    "eval_x_spider",
    "evaluate_tree",
    "reconstruct",
    "max_subgraph",
    "max_subgraph_on_tree",
    "Solver",
    "result_from_vec",
]
