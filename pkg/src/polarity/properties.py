"""The twelve hereditary properties handled by the optimiser.

Every property is described by a pair of vertex-set families ``(X, Y)``: a
set W has the property iff it splits as ``A | B`` with ``A`` in X and ``B`` in
Y.  Single-family properties use ``Y = {empty}``.  The canonical partition of
a witness lists the X-side first.
"""

from __future__ import annotations

from enum import IntEnum


class PropertyKind(IntEnum):
    MC = 0  # clique
    MI = 1  # independent set
    MB = 2  # bipartite
    McB = 3  # co-bipartite
    MS = 4  # split
    MUC = 5  # cluster (disjoint union of cliques)
    MJI = 6  # complete multipartite
    MM = 7  # monopolar
    McM = 8  # co-monopolar
    MP = 9  # polar
    MU = 10  # unipolar
    McU = 11  # co-unipolar

    @property
    def label(self) -> str:
        return _LABELS[self]

    @property
    def is_pair(self) -> bool:
        return FAMILIES[self][1] != "empty"


ALL = tuple(PropertyKind)

# families: clique, independent, cluster, multipartite (complete multipartite), empty
FAMILIES: dict[PropertyKind, tuple[str, str]] = {
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

_DUAL = {
    PropertyKind.MC: PropertyKind.MI,
    PropertyKind.MB: PropertyKind.McB,
    PropertyKind.MUC: PropertyKind.MJI,
    PropertyKind.MM: PropertyKind.McM,
    PropertyKind.MU: PropertyKind.McU,
    PropertyKind.MS: PropertyKind.MS,
    PropertyKind.MP: PropertyKind.MP,
}
_DUAL.update({v: k for k, v in list(_DUAL.items())})

DUAL_INDEX = tuple(int(_DUAL[p]) for p in ALL)

_LABELS = {
    PropertyKind.MC: "clique",
    PropertyKind.MI: "independent",
    PropertyKind.MB: "bipartite",
    PropertyKind.McB: "cobipartite",
    PropertyKind.MS: "split",
    PropertyKind.MUC: "cluster",
    PropertyKind.MJI: "multipartite",
    PropertyKind.MM: "monopolar",
    PropertyKind.McM: "comonopolar",
    PropertyKind.MP: "polar",
    PropertyKind.MU: "unipolar",
    PropertyKind.McU: "counipolar",
}


def dual_property(p: PropertyKind) -> PropertyKind:
    """Property of the complement: W is p-maximal in G iff it is dual(p)-maximal in co-G."""
    return _DUAL[p]


def parse_property(name: str) -> PropertyKind:
    key = name.strip()
    for p in ALL:
        if key in (p.name, p.label) or key.lower() in (p.name.lower(), p.label):
            return p
    aliases = {"cobip": PropertyKind.McB, "co-bipartite": PropertyKind.McB, "complete-multipartite": PropertyKind.MJI,
               "co-monopolar": PropertyKind.McM, "co-unipolar": PropertyKind.McU}
    if key.lower() in aliases:
        return aliases[key.lower()]
    raise ValueError(f"unknown property {name!r}")
