"""Mine minimal (s,k)-polar obstructions order by order and compare with the catalog.

    python scripts/mine_obstructions.py --orders 5 6 7 8 --bound 2,2
    python scripts/mine_obstructions.py --orders 9 --class p4-sparse

Order 9 takes about a minute per class; the catalog comparison is by
canonical form, so unlisted graphs and missing entries both show up.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass

from polarity.canon import canonical_form
from polarity.obstructions import CLASSES, MINING_LIMIT, catalog_family, load_catalog, mine, parse_class
from polarity.oracle import SKBound


@dataclass(frozen=True)
class MiningConfig:
    orders: tuple[int, ...] = (5, 6, 7, 8)
    classes: tuple[str, ...] = CLASSES
    bound: SKBound = SKBound(2, 2)


def run(cfg: MiningConfig) -> bool:
    catalog = load_catalog()
    agree = True
    for cls in cfg.classes:
        fam = catalog_family(catalog, cfg.bound, cls)
        for n in cfg.orders:
            start = time.perf_counter()
            rep = mine(n, cls, cfg.bound, catalog)
            elapsed = time.perf_counter() - start
            want = {canonical_form(e.graph) for e in fam if e.graph.n == n}
            got = {canonical_form(g) for g in rep.graphs}
            status = "matches catalog" if got == want else f"MISMATCH (catalog has {len(want)})"
            agree &= got == want
            print(f"{cls:14s} ({cfg.bound}) {rep.summary():38s} {status}  [{elapsed:.1f}s]")
            for line in rep.lines():
                print("   ", line)
    return agree


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--orders", type=int, nargs="+", default=[5, 6, 7, 8])
    ap.add_argument("--class", dest="cls", action="append", help="p4-sparse or p4-extendible (repeatable)")
    ap.add_argument("--bound", default="2,2")
    args = ap.parse_args()
    if any(not 1 <= n <= MINING_LIMIT for n in args.orders):
        ap.error(f"orders must lie in 1..{MINING_LIMIT}")
    classes = tuple(parse_class(c) for c in args.cls) if args.cls else CLASSES
    cfg = MiningConfig(tuple(args.orders), classes, SKBound.parse(args.bound))
    return 0 if run(cfg) else 1


if __name__ == "__main__":
    sys.exit(main())
