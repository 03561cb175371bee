"""Command-line front end: ``polarity <command> [options] [INPUT]``.

Graph input is read from INPUT (or stdin when INPUT is ``-`` or absent).  In
graph6 mode every non-blank line is one graph and results come out one per
line in the same order; in edge-list mode the whole input is one graph.

Exit status: 0 success, 1 a checked property fails, 2 usage, parse or
class errors.  ``POLARITY_THREADS`` sets the number of worker processes for
batch input (default 1).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable

from .decomposition import NotInClassError, build_parse_tree, build_ps_tree, classify, serialize_tree, tree_to_json
from .dp import Solver
from .graph import Graph, Graph6Error, emit_graph6, parse_edgelist, parse_graph6
from .obstructions import (
    MINING_LIMIT,
    decide_2polar,
    load_catalog,
    mine,
    parse_class,
    verify_catalog,
)
from .oracle import MAX_SUBGRAPH_LIMIT, SKBound, brute_force_max_subgraph
from .properties import parse_property

OK, FAILS, ERROR = 0, 1, 2


@dataclass(frozen=True)
class CliConfig:
    input_format: str = "graph6"
    json_output: bool = False
    threads: int = 1


@dataclass
class Outcome:
    text: str
    status: int = OK


def _read_graphs(source: str, fmt: str) -> list[tuple[str, Graph | Exception]]:
    text = sys.stdin.read() if source in ("-", "") else open(source).read()
    if fmt == "edgelist":
        try:
            return [("edgelist", parse_edgelist(text))]
        except ValueError as exc:
            return [("edgelist", exc)]
    out: list[tuple[str, Graph | Exception]] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            out.append((line, parse_graph6(line)))
        except Graph6Error as exc:
            out.append((line, exc))
    return out


def _format(label: str, payload: dict, human: str, cfg: CliConfig) -> str:
    if cfg.json_output:
        return json.dumps({"input": label, **payload})
    return human


# per-graph workers -----------------------------------------------------------


def _recognize(g: Graph, label: str, cfg: CliConfig, args: dict) -> Outcome:
    rep = classify(g)
    parts = []
    for name, member, witness in (
        ("cograph", rep.is_cograph, rep.cograph_witness),
        ("p4-sparse", rep.is_p4_sparse, rep.sparse_witness),
        ("p4-extendible", rep.is_p4_extendible, rep.extendible_witness),
    ):
        parts.append(f"{name}: yes" if member else f"{name}: no (witness {list(witness or ())})")
    human = ", ".join(parts)
    return Outcome(_format(label, rep.to_json(), human, cfg))


def _tree(g: Graph, label: str, cfg: CliConfig, args: dict) -> Outcome:
    shape = args["shape"]
    if shape == "auto":
        rep = classify(g, minimal_witness=False)
        shape = "ps" if rep.is_p4_sparse else "parse"
    tree = build_ps_tree(g) if shape == "ps" else build_parse_tree(g)
    payload = {"shape": shape, "tree": tree_to_json(tree)}
    return Outcome(_format(label, payload, f"# {shape}-tree n={g.n}\n" + serialize_tree(tree).rstrip(), cfg))


def _max(g: Graph, label: str, cfg: CliConfig, args: dict) -> Outcome:
    prop = args["property"]
    res = Solver.for_graph(g).solve(prop)
    payload = res.to_json()
    human = f"property={prop.label} size={res.size} witness={list(res.witness)}"
    if res.partition is not None:
        human += f" A={list(res.partition[0])} B={list(res.partition[1])}"
    status = OK
    if args["verify"]:
        if g.n > MAX_SUBGRAPH_LIMIT:
            payload["verified"] = None
            human += " verified=skipped"
        else:
            ref = brute_force_max_subgraph(g, prop)
            good = ref.size == res.size
            payload["verified"] = good
            human += f" verified={'yes' if good else 'NO'}"
            status = OK if good else FAILS
    return Outcome(_format(label, payload, human, cfg), status)


def _check2polar(g: Graph, label: str, cfg: CliConfig, args: dict) -> Outcome:
    dec = decide_2polar(g)
    if dec.is_2polar:
        human = "2-polar"
        if dec.partition is not None:
            human += f": A={list(dec.partition[0])}, B={list(dec.partition[1])}"
    else:
        human = f"NOT 2-polar: contains {dec.obstruction} at {list(dec.embedding or ())}"
    return Outcome(_format(label, dec.to_json(), human, cfg), OK if dec.is_2polar else FAILS)


def _run_one(job: tuple[Callable, str, Graph, CliConfig, dict]) -> Outcome:
    fn, label, g, cfg, args = job
    try:
        return fn(g, label, cfg, args)
    except NotInClassError as exc:
        msg = f"error: {exc}"
        if cfg.json_output:
            msg = json.dumps({"input": label, "error": str(exc), "witness": list(exc.witness)})
        return Outcome(msg, ERROR)
    except ValueError as exc:
        msg = json.dumps({"input": label, "error": str(exc)}) if cfg.json_output else f"error: {exc}"
        return Outcome(msg, ERROR)


def _batch(fn: Callable, ns: argparse.Namespace, cfg: CliConfig, args: dict) -> int:
    try:
        items = _read_graphs(ns.input, cfg.input_format)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR
    jobs = []
    results: list[Outcome | None] = []
    for label, g in items:
        if isinstance(g, Exception):
            msg = json.dumps({"input": label, "error": str(g)}) if cfg.json_output else f"error: {g}"
            results.append(Outcome(msg, ERROR))
        else:
            results.append(None)
            jobs.append((fn, label, g, cfg, args))
    if cfg.threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
            done = list(pool.map(_run_one, jobs))
    else:
        done = [_run_one(j) for j in jobs]
    it = iter(done)
    results = [r if r is not None else next(it) for r in results]
    status = OK
    for r in results:
        stream = sys.stderr if r.status == ERROR and not cfg.json_output else sys.stdout
        print(r.text, file=stream)
        status = max(status, r.status)
    return status


# commands without graph input ------------------------------------------------------


def _catalog_verify(ns: argparse.Namespace, cfg: CliConfig) -> int:
    try:
        entries = load_catalog(ns.catalog)
        bound = SKBound.parse(ns.family)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR
    rep = verify_catalog(entries, bound)
    if cfg.json_output:
        print(json.dumps({"family": str(bound), "counts": rep.counts, "ok": rep.ok, "errors": rep.errors}))
    else:
        print(rep.summary())
        for err in rep.errors:
            print(f"  {err}")
    return OK if rep.ok else FAILS


def _mine(ns: argparse.Namespace, cfg: CliConfig) -> int:
    try:
        cls = parse_class(ns.cls)
        bound = SKBound.parse(ns.bound)
        if not 1 <= ns.n <= MINING_LIMIT:
            raise ValueError(f"exhaustive mining is capped at n = {MINING_LIMIT}")
        rep = mine(ns.n, cls, bound)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR
    if cfg.json_output:
        for g, name in zip(rep.graphs, rep.names):
            print(json.dumps({"name": name, "class": cls, "bound": str(bound), "graph6": emit_graph6(g)}))
        print(json.dumps({"order": rep.order, "count": len(rep.graphs)}))
    else:
        for line in rep.lines():
            print(line)
        print(f"# {rep.summary()}")
    return OK


# argument parsing ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="polarity", description="Polar-type subgraph optimisation on P4-sparse and P4-extendible graphs.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object per line")
    graph_in = argparse.ArgumentParser(add_help=False, parents=[common])
    graph_in.add_argument("input", nargs="?", default="-", help="input file (default: stdin)")
    graph_in.add_argument("--format", choices=("graph6", "edgelist"), default="graph6", help="input format")
    sub = ap.add_subparsers(dest="command", required=True)

    sub.add_parser("recognize", parents=[graph_in], help="class membership with a forbidden-subgraph witness")
    p = sub.add_parser("tree", parents=[graph_in], help="print the decomposition tree")
    p.add_argument("--shape", choices=("auto", "ps", "parse"), default="auto")
    p = sub.add_parser("max", parents=[graph_in], help="largest induced subgraph with a property")
    p.add_argument("--property", required=True, help="e.g. polar, split, cluster, MP, McU")
    p.add_argument("--verify", action="store_true", help="compare with exhaustive search (n <= 16)")
    sub.add_parser("check2polar", parents=[graph_in], help="2-polarity via the obstruction catalog")
    p = sub.add_parser("catalog-verify", parents=[common], help="machine-check the obstruction catalog")
    p.add_argument("--family", default="2,2", help="s,k bound of the family (2,2 or 2,1)")
    p.add_argument("--catalog", default=None, help="catalog file (default: bundled)")
    p = sub.add_parser("mine", parents=[common], help="exhaustively list minimal obstructions of one order")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--class", dest="cls", default="p4-sparse")
    p.add_argument("--bound", default="2,2")
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        ns = ap.parse_args(argv)
    except SystemExit as exc:
        return ERROR if exc.code not in (0, None) else OK
    try:
        threads = max(1, int(os.environ.get("POLARITY_THREADS", "1")))
    except ValueError:
        threads = 1
    cfg = CliConfig(getattr(ns, "format", "graph6"), ns.json, threads)
    if ns.command == "catalog-verify":
        return _catalog_verify(ns, cfg)
    if ns.command == "mine":
        return _mine(ns, cfg)
    args: dict = {}
    if ns.command == "max":
        try:
            args = {"property": parse_property(ns.property), "verify": ns.verify}
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return ERROR
    if ns.command == "tree":
        args = {"shape": ns.shape}
    fn = {"recognize": _recognize, "tree": _tree, "max": _max, "check2polar": _check2polar}[ns.command]
    return _batch(fn, ns, cfg, args)


if __name__ == "__main__":
    sys.exit(main())
