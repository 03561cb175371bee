"""Time the tree DP on random decomposition trees of growing size.

    python scripts/dp_scaling.py --sizes 1000 10000 100000 --shape ps

Prints the best-of-k wall time of one bottom-up pass plus one witness
reconstruction, and the cost per tree node.  Trees are built before timing.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from dataclasses import dataclass

from polarity.dp import evaluate_tree, result_from_vec
from polarity.generate import random_parse_tree, random_ps_tree
from polarity.properties import PropertyKind


@dataclass(frozen=True)
class ScalingConfig:
    sizes: tuple[int, ...] = (1000, 10000, 100000)
    shape: str = "ps"
    repeats: int = 3
    seed: int = 0
    prop: PropertyKind = PropertyKind.MP


def run(cfg: ScalingConfig) -> list[tuple[int, int, float]]:
    rng = random.Random(cfg.seed)
    make = random_ps_tree if cfg.shape == "ps" else random_parse_tree
    rows = []
    for n in cfg.sizes:
        tree = make(n, rng, 0.4)
        nodes = tree.size()
        best = float("inf")
        for _ in range(cfg.repeats):
            start = time.perf_counter()
            result_from_vec(evaluate_tree(tree, check=False), cfg.prop)
            best = min(best, time.perf_counter() - start)
        rows.append((n, nodes, best))
        print(f"n={n:>8d} nodes={nodes:>8d} time={best:8.3f}s per node={best / nodes * 1e6:6.2f}us", flush=True)
    base = rows[0][2] / rows[0][1]
    print("ratio to smallest:", " ".join(f"{t / k / base:.2f}" for _, k, t in rows))
    return rows


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--sizes", type=int, nargs="+", default=[1000, 10000, 100000])
    ap.add_argument("--shape", choices=("ps", "parse"), default="ps")
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    run(ScalingConfig(tuple(args.sizes), args.shape, args.repeats, args.seed))
    return 0


if __name__ == "__main__":
    sys.exit(main())
