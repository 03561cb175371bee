"""Rebuild ``src/polarity/data/catalog.txt`` from hand-transcribed figure drawings.

Each drawing is recorded with the node names used in the figure source, as a
list of edges plus any isolated nodes.  The script converts every drawing to
graph6, adds the complements of the (2,2) family, computes class tags, and
refuses to write the file unless every entry is a minimal obstruction.

    python scripts/transcribe_figures.py [--check]
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from polarity.decomposition import classify
from polarity.graph import Graph, complement, emit_graph6
from polarity.obstructions import EXTENDIBLE, SPARSE, CatalogEntry, verify_catalog
from polarity.oracle import SKBound

OUT = Path(__file__).resolve().parents[1] / "src" / "polarity" / "data" / "catalog.txt"


def star(centres, leaves):
    return [(c, x) for c in centres for x in leaves]


def path(*names):
    return list(zip(names, names[1:]))


def cycle(*names):
    return path(*names) + [(names[-1], names[0])]


# name -> (edges, isolated nodes, figure label)
TWO_POLAR = {
    "F1": (path("00", "10") + path("01", "11") + path("02", "12"), ["7"], "order7"),
    "F2": (path("0", "1", "2") + cycle("3", "4", "5", "6"), [], "order7"),
    "F3": (star(["6"], ["0", "1", "2", "3", "4"]) + [("0", "1"), ("3", "4")], ["5"], "order7"),
    "F4": (cycle("3", "4", "5", "6") + star(["2"], ["3", "4", "5", "6"]), ["0", "1"], "order7"),
    "F5": (
        [("00", "11"), ("00", "12"), ("01", "10"), ("01", "12"), ("02", "10"), ("02", "11")]
        + [("00", "01"), ("01", "02"), ("00", "02"), ("10", "11"), ("11", "12"), ("12", "10")],
        ["7"],
        "order7",
    ),
    "F6": (path("0", "1") + path("03", "13", "23") + path("02", "12", "22"), [], "order8"),
    "F7": (star(["c"], ["0", "2", "3"]) + cycle("0", "1", "2", "3") + path("a", "b"), ["x"], "order8"),
    "F8": (star(["21", "22", "23"], ["01", "02", "03"]) + [("02", "03"), ("22", "23")], ["00", "20"], "order8"),
    "F9": (star(["c"], ["0", "1", "2", "3", "4"]) + [("4", "0"), ("0", "1"), ("2", "3")], ["a", "b"], "order8"),
    "F10": (star(["02", "12"], ["03", "13", "23", "01", "11"]) + path("03", "13", "23") + path("01", "11"), ["x"], "order8"),
    "F11": (star(["c"], ["0", "1", "2", "3", "4", "5"]) + path("5", "0", "1") + path("2", "3", "4"), ["x"], "order8"),
    "F12": (star(["0", "2"], ["a", "1", "3", "b"]) + [("1", "c"), ("a", "1"), ("1", "3"), ("3", "b"), ("1", "b")], ["x"], "order8"),
    "F13": (cycle("04", "24", "22", "02") + path("01", "21"), ["00", "20"], "order8"),
    "F14": (cycle("03", "14", "23", "12") + [("12", "14"), ("01", "21"), ("00", "20")], [], "order8"),
    "F15": (star(["03", "23"], ["04", "24", "22", "02"]) + [("04", "24"), ("02", "22"), ("01", "21")], [], "order8"),
    "F16": ([("3", "4"), ("1", "0")] + star(["x"], ["3", "4", "0", "1"]) + path("50", "60", "70"), [], "order8"),
    "F17": (star(["03", "23"], ["04", "24", "22", "02"]) + [("04", "24"), ("02", "22"), ("03", "23")], ["01", "21"], "order8"),
    "F18": (
        star(["3"], ["2", "1", "5", "4"]) + star(["x"], ["0", "1", "2", "3", "4", "5"]) + star(["0"], ["1", "2", "4", "5"])
        + [("2", "1"), ("4", "5")],
        ["y"],
        "order8",
    ),
    "F19": (star(["03", "23"], ["04", "24", "22", "02"]) + [("04", "24")], ["01", "21"], "order8"),
    "F20": (star(["c"], ["0", "1", "2", "3", "a", "b"]) + cycle("0", "1", "2", "3"), ["x"], "order8"),
    "F21": (star(["01", "02", "03"], ["11", "12", "13"]), ["0", "1", "2"], "order9"),
    "F22": (cycle("0", "1", "2") + cycle("3", "4", "5") + cycle("6", "7", "8"), [], "order9"),
    "F23": (
        star(["12"], ["03", "13", "23", "01", "11", "21"]) + cycle("03", "13", "23") + cycle("01", "11", "21") + [("00", "20")],
        [],
        "order9",
    ),
    "F24": (star(["x", "y"], ["03", "13", "23", "01", "11", "21"]) + [("x", "y")] + cycle("03", "13", "23") + cycle("01", "11", "21"), ["10"], "order9"),
    "F25": (
        star(["03", "23"], ["12", "11", "10"]) + [("03", "23"), ("23", "33"), ("23", "32"), ("33", "32")] + path("12", "11", "10"),
        ["30"],
        "order8",
    ),
    "F26": (
        star(["2", "3"], ["0", "1", "4"]) + [("2", "7"), ("2", "9"), ("7", "9"), ("3", "12"), ("2", "3"), ("4", "0"), ("0", "1")],
        [],
        "extendible",
    ),
    "F27": (cycle("0", "1", "2", "3", "4") + star(["5"], ["0", "1", "2", "3", "4"]) + [("6", "5")], ["7"], "extendible"),
    "F28": (cycle("0", "1", "2", "3", "4") + star(["c"], ["0", "1", "2", "3", "4"]), ["a", "b"], "extendible"),
    "F29": (cycle("0", "1", "2", "3", "4") + path("x", "y", "z"), [], "extendible"),
    "F30": (cycle("0", "1", "2", "3", "4") + path("a", "b"), ["c"], "extendible"),
    "F31": (cycle("0", "1", "2", "3", "4") + star(["5", "6"], ["0", "1", "2", "3", "4"]), ["c"], "extendible"),
    "F32": ([("03", "13"), ("02", "12"), ("01", "11"), ("00", "01"), ("01", "02"), ("11", "12")], ["10"], "extendible"),
    "F33": (path("02", "12", "22") + path("00", "10", "20", "30") + [("01", "00"), ("01", "10")], [], "extendible"),
    "F34": (path("00", "10", "20", "30") + [("01", "00"), ("01", "10")] + star(["02"], ["00", "10", "20", "30", "01"]), ["03", "13"], "extendible"),
    "F35": (
        star(["01", "21"], ["13", "12", "11", "10", "20"]) + [("10", "20"), ("10", "11"), ("20", "11"), ("11", "12"), ("12", "13")],
        ["x"],
        "extendible",
    ),
    "F36": (star(["u"], ["h", "00", "1", "0", "7", "6"]) + [("7", "00"), ("00", "1"), ("1", "0"), ("0", "7"), ("7", "6")], ["a"], "extendible"),
    "F37": (cycle("0", "1", "2", "3", "4") + [("00", "10"), ("1", "4")], ["20"], "extendible"),
    "F38": (path("0", "1", "2") + path("3", "4", "5", "6", "7"), [], "extendible"),
    "F39": (path("0", "1", "2", "3", "4") + star(["t", "b"], ["0", "1", "2", "3", "4"]), ["i"], "extendible"),
    "F40": (path("5", "6", "7", "8", "9") + star(["o"], ["5", "6", "7", "8", "9"]), ["a", "b"], "extendible"),
    "F41": (cycle("0", "1", "2", "3", "4") + [("1", "4")] + star(["c"], ["0", "1", "2", "3", "4", "b"]), ["a"], "extendible"),
}

TWO_ONE_POLAR = {
    "E1": (path("1", "2") + path("3", "4"), ["5"], "sparse"),
    "E2": (path("1", "2", "3") + path("4", "5", "6"), [], "sparse"),
    "E3": (cycle("1", "2", "4", "3"), ["5", "6"], "sparse"),
    "E4": (
        [("00", "11"), ("00", "12"), ("01", "10"), ("01", "12"), ("02", "10"), ("02", "11")]
        + [("00", "01"), ("01", "02"), ("00", "02"), ("10", "11"), ("11", "12"), ("12", "10")],
        [],
        "sparse",
    ),
    "E5": (
        [("00", "01"), ("01", "02"), ("10", "11"), ("11", "12"), ("00", "10"), ("00", "11"), ("01", "10"), ("01", "12"), ("02", "11"), ("02", "12")],
        [],
        "sparse",
    ),
    "E6": (cycle("0", "1", "2", "3") + star(["4"], ["0", "1", "2", "3"]), ["5"], "sparse"),
    "E7": (cycle("1", "2", "3", "4") + star(["5"], ["1", "2", "4"]), ["6"], "sparse"),
    "E8": (cycle("0", "1", "2", "3") + [("1", "3"), ("4", "5")], [], "sparse"),
    "E9": (cycle("1", "2", "3") + cycle("4", "5", "6"), [], "sparse"),
    "E10": (cycle("1", "2", "3", "4", "5"), ["6"], "extendible"),
    "E11": (cycle("1", "2", "3", "4") + [("3", "5")], ["6"], "extendible"),
    "E12": (cycle("1", "2", "3", "4") + [("2", "5"), ("5", "3")], ["6"], "extendible"),
    "E13": (cycle("0", "1", "2", "3", "4") + star(["5", "6"], ["0", "1", "2", "3", "4"]), [], "extendible"),
}


def to_graph(edges, isolated) -> Graph:
    names: list[str] = []
    for u, v in edges:
        for x in (u, v):
            if x not in names:
                names.append(x)
    for x in isolated:
        if x not in names:
            names.append(x)
    idx = {x: i for i, x in enumerate(names)}
    return Graph.from_edges(len(names), [(idx[u], idx[v]) for u, v in edges])


def tags(g: Graph) -> frozenset[str]:
    rep = classify(g, minimal_witness=False)
    return frozenset(c for c, ok in ((SPARSE, rep.is_p4_sparse), (EXTENDIBLE, rep.is_p4_extendible)) if ok)


def build_entries() -> list[CatalogEntry]:
    out = []
    for bound, table, with_complements in ((SKBound(2, 2), TWO_POLAR, True), (SKBound(2, 1), TWO_ONE_POLAR, False)):
        label = "2polar" if bound.k == 2 else "21polar"
        for name, (edges, iso, fig) in table.items():
            g = to_graph(edges, iso)
            out.append(CatalogEntry(name, tags(g), bound, emit_graph6(g), f"{label}-{fig}"))
        if with_complements:
            for name, (edges, iso, fig) in table.items():
                g = complement(to_graph(edges, iso))
                out.append(CatalogEntry("co" + name, tags(g), bound, emit_graph6(g), f"{label}-{fig}-complement"))
    return out


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--check", action="store_true", help="compare with the installed file instead of writing")
    args = ap.parse_args()
    entries = build_entries()
    ok = True
    for bound in (SKBound(2, 2), SKBound(2, 1)):
        rep = verify_catalog(entries, bound)
        print(f"({bound}): {rep.summary()}")
        for err in rep.errors:
            print("  ", err)
        ok &= rep.ok
    header = "# name class bound graph6 figure\n"
    text = header + "".join(e.line() + "\n" for e in entries)
    if args.check:
        same = OUT.exists() and OUT.read_text() == text
        print("catalog file up to date" if same else "catalog file differs")
        return 0 if same and ok else 1
    if not ok:
        print("not writing: verification failed", file=sys.stderr)
        return 1
    OUT.write_text(text)
    print(f"wrote {len(entries)} entries to {OUT}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
