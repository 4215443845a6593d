"""Command line entry point.

Exit codes: 0 ok or holds, 1 counterexample found, 2 input error,
3 hypotheses not met.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from .connectivity import connectivity_profile, r_essential_edge_connectivity
from .harness.checks import THEOREMS, run_check
from .harness.generate import GenSpec
from .harness.hunt import hunt
from .harness.mel import emit_mel, read_mel
from .linehamilton import core, corollary_pipeline, line_graph
from .multigraph import GraphInputError
from .packing import UNBOUNDED, pack_spanning_trees, spanning_tree_packing_number
from .reduction import reduce
from .thresholds import bounds_report, format_table

OK, COUNTEREXAMPLE, INPUT_ERROR, UNMET = 0, 1, 2, 3


def _range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return a, b


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _tau(t):
    return "unbounded" if t == UNBOUNDED else t


def cmd_analyze(args) -> int:
    G = read_mel(args.file)
    out = {"n": G.n, "m": G.m, "tau": _tau(spanning_tree_packing_number(G))}
    if G.n >= 2:
        out["profile"] = connectivity_profile(G).as_dict()
    for r in args.r:
        cut = r_essential_edge_connectivity(G, r)
        out[f"r{r}_essential_lambda"] = None if cut is None else cut.value
    _emit(out)
    return OK


def cmd_pack(args) -> int:
    G = read_mel(args.file)
    res = pack_spanning_trees(G, args.k, certificate=args.certificate)
    if res.feasible:
        _emit({"feasible": True, "k": args.k, "trees": [sorted(t) for t in res.trees]})
        return OK
    out = {"feasible": False, "k": args.k}
    if res.certificate is not None:
        c = res.certificate
        out["certificate"] = {"parts": [sorted(p) for p in c.parts],
                              "crossing_count": c.crossing_count, "bound": c.bound}
    _emit(out)
    return UNMET


def cmd_reduce(args) -> int:
    G = read_mel(args.file)
    H, trace = reduce(G, args.k)
    sys.stdout.write(trace.to_jsonl())
    sys.stdout.write(emit_mel(H))
    return OK


def cmd_linegraph(args) -> int:
    sys.stdout.write(emit_mel(line_graph(read_mel(args.file))))
    return OK


def cmd_core(args) -> int:
    res = core(read_mel(args.file), policy=args.policy)
    sys.stdout.write(emit_mel(res.core_graph))
    print("# provenance " + " ".join(map(str, res.provenance)))
    return OK


def cmd_check(args) -> int:
    G = read_mel(args.file)
    if args.theorem == "corollary":
        rep = corollary_pipeline(G)
        _emit(rep)
        return {"holds": OK, "counterexample": COUNTEREXAMPLE}.get(rep["verdict"], UNMET)
    rec = run_check(args.theorem, G, args.m, args.k)
    _emit(rec.as_dict())
    if rec.counterexample:
        return COUNTEREXAMPLE
    return OK if rec.hypotheses_hold else UNMET


def cmd_hunt(args) -> int:
    (n0, n1), (e0, e1) = args.n, args.edges
    spec = GenSpec(n0, n1, e0, e1, mult_max=args.mult_max, lambda_min=args.lambda_min,
                   seed=args.seed, count=args.count)
    summary = hunt(spec, args.theorem, out=args.out, m=args.m, k=args.k, jobs=args.jobs,
                   timings=args.timings)
    _emit(summary)
    return COUNTEREXAMPLE if summary["counterexamples"] else OK


def cmd_thresholds(args) -> int:
    rows = bounds_report(args.k)
    if args.json:
        _emit([r.as_dict() for r in rows])
    else:
        print(format_table(rows))
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="treepack", description="Spanning-tree packing toolkit for multigraphs.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="connectivity profile and packing number")
    a.add_argument("file")
    a.add_argument("--r", type=int, nargs="+", default=[], help="extra r-essential values")
    a.set_defaults(func=cmd_analyze)

    a = sub.add_parser("pack", help="k edge-disjoint spanning trees")
    a.add_argument("file")
    a.add_argument("--k", type=int, required=True)
    a.add_argument("--certificate", action="store_true")
    a.set_defaults(func=cmd_pack)

    a = sub.add_parser("reduce", help="contract to a k-reduced graph")
    a.add_argument("file")
    a.add_argument("--k", type=int, required=True)
    a.set_defaults(func=cmd_reduce)

    a = sub.add_parser("linegraph", help="print L(G)")
    a.add_argument("file")
    a.set_defaults(func=cmd_linegraph)

    a = sub.add_parser("core", help="print the core")
    a.add_argument("file")
    a.add_argument("--policy", choices=("low", "high"), default="low")
    a.set_defaults(func=cmd_core)

    a = sub.add_parser("check", help="check one theorem on one graph")
    a.add_argument("file")
    a.add_argument("--theorem", choices=THEOREMS, required=True)
    a.add_argument("--m", type=int, default=0)
    a.add_argument("--k", type=int, default=0)
    a.set_defaults(func=cmd_check)

    a = sub.add_parser("hunt", help="search generated graphs for counterexamples")
    a.add_argument("--theorem", choices=("main1", "main2"), required=True)
    a.add_argument("--m", type=int, default=0)
    a.add_argument("--k", type=int, default=0)
    a.add_argument("--n", type=_range, required=True, metavar="A..B")
    a.add_argument("--edges", type=_range, required=True, metavar="A..B")
    a.add_argument("--mult-max", type=int, default=1)
    a.add_argument("--lambda-min", type=int, default=0)
    a.add_argument("--seed", type=int, default=0)
    a.add_argument("--count", type=int, default=100)
    a.add_argument("--jobs", type=int, default=1)
    a.add_argument("--out")
    a.add_argument("--timings", action="store_true", help="add runtime_ms to each record")
    a.set_defaults(func=cmd_hunt)

    a = sub.add_parser("thresholds", help="tabulate f(m,k) against the older bound")
    a.add_argument("--k", type=int, required=True)
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_thresholds)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (GraphInputError, OSError) as exc:
        print(f"treepack: error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
