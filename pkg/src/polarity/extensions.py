"""The eight small graphs built from a P4 plus at most one extra vertex.

Vertices 0-1-2-3 always form the base path; vertex 4 (when present) is the
extra vertex.  ``mids`` lists the vertices that an X-spider head must be fully
joined to; the remaining vertices are the ends.  Only the five graphs with
``separable=True`` can appear as the non-head part of an X-spider.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .graph import Graph, members

_PATH = ((0, 1), (1, 2), (2, 3))


@dataclass(frozen=True)
class ExtensionGraph:
    name: str
    n: int
    edges: tuple[tuple[int, int], ...]
    mids: tuple[int, ...] = ()

    @property
    def separable(self) -> bool:
        return bool(self.mids)

    @property
    def ends(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if v not in self.mids)

    def graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edges)

    @property
    def complement_name(self) -> str:
        return COMPLEMENT[self.name]


EXTENSIONS: dict[str, ExtensionGraph] = {
    e.name: e
    for e in (
        ExtensionGraph("P4", 4, _PATH, (1, 2)),
        ExtensionGraph("C5", 5, _PATH + ((4, 0), (4, 3))),
        ExtensionGraph("P5", 5, _PATH + ((4, 0),)),
        ExtensionGraph("coP5", 5, _PATH + ((4, 0), (4, 2), (4, 3))),
        ExtensionGraph("P", 5, _PATH + ((4, 0), (4, 2)), (1, 2, 4)),
        ExtensionGraph("coP", 5, _PATH + ((4, 0), (4, 1)), (1, 2)),
        ExtensionGraph("F", 5, _PATH + ((4, 1),), (1, 2)),
        ExtensionGraph("coF", 5, _PATH + ((4, 0), (4, 1), (4, 2)), (1, 2, 4)),
    )
}

COMPLEMENT = {"P4": "P4", "C5": "C5", "P5": "coP5", "coP5": "P5", "P": "coP", "coP": "P", "F": "coF", "coF": "F"}

FIVE_VERTEX = tuple(name for name, e in EXTENSIONS.items() if e.n == 5)


def match_extension(g: Graph, scope: int, names: tuple[str, ...] | None = None) -> tuple[str, tuple[int, ...]] | None:
    """Identify ``G[scope]`` as a named extension graph.

    Returns the name and the lexicographically least vertex map (``roles[i]`` is
    the vertex playing named vertex ``i``), or None.
    """
    verts = members(scope)
    size = len(verts)
    m = sum(bin(g.adj[v] & scope).count("1") for v in verts) // 2
    for name, e in EXTENSIONS.items():
        if names is not None and name not in names:
            continue
        if e.n != size or len(e.edges) != m:
            continue
        for perm in permutations(verts):
            if all(g.adj[perm[a]] >> perm[b] & 1 for a, b in e.edges):
                return name, tuple(perm)
    return None
