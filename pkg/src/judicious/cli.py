"""Command-line front end.

Exit codes: 0 success, 2 usage or input error, 3 a bound or runtime claim
was violated (or a joint search came back empty), 4 the oracle refused an
instance above its vertex cap.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections.abc import Sequence
from fractions import Fraction
from pathlib import Path
from typing import Any, TextIO

from . import __version__
from .bounds import BOUND_GROUPS, resolve_bounds
from .bounds import report as bound_report
from .errors import JudiciousError, OracleCapError, ProofAssertionError
from .graph import format_weight
from .hunt import complete_tasks, conjecture_bounds, random_tasks, run_hunt, summarize
from .instances import Family, InstanceSpec, WeightLaw, generate
from .io import format_graph, parse_weight, read_graph, read_partition
from .oracle import exact_max_bisection, exact_max_kcut, exact_min_max_part, exists_joint, oracle_cap
from .partitioners import balanced_kcut, judicious_3partition, judicious_bipartition, judicious_kpartition
from .reports import build_run_report, graph_metrics, verify_report

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VIOLATION = 3
EXIT_CAP = 4

ALGORITHMS = {
    # name -> (fixed k or None, bound group)
    "maxd": (2, "maxd"),
    "max32": (3, "max32"),
    "maxk": (None, "maxk"),
    "balanced": (None, "kkkk"),
}


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return parse_weight(text)
    except JudiciousError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _n_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("-")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected N or LO-HI, got {text!r}") from exc
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return a, b


def _emit(data: Any, out: str | None, stdout: TextIO) -> None:
    text = json.dumps(data, indent=2) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        stdout.write(text)


def cmd_gen(args: argparse.Namespace, stdout: TextIO, stderr: TextIO) -> int:
    family = Family(args.family)
    if family is Family.FILE:
        raise UsageError("gen does not read files; use --family complete|complete-tight|apex|isolated-padding|random")
    spec = InstanceSpec(
        family,
        n=args.n,
        k=args.k,
        q=args.q,
        c=args.c,
        n_clique=args.n_clique,
        n_isolated=args.n_isolated,
        edge_prob=args.p,
        weight_law=WeightLaw(args.weight_law),
        seed=args.seed,
    )
    g = generate(spec)
    text = format_graph(g)
    summary = json.dumps(graph_metrics(g))
    if args.output:
        Path(args.output).write_text(text)
        stdout.write(summary + "\n")
    else:
        stdout.write(text)
        stderr.write(summary + "\n")
    return EXIT_OK


def cmd_partition(args: argparse.Namespace, stdout: TextIO, stderr: TextIO) -> int:
    fixed_k, group = ALGORITHMS[args.algo]
    k = args.k
    if fixed_k is not None:
        if k is not None and k != fixed_k:
            raise UsageError(f"--algo {args.algo} builds {fixed_k}-partitions, got --k {k}")
        k = fixed_k
    elif k is None:
        raise UsageError(f"--algo {args.algo} needs --k")
    g = read_graph(args.input)
    ids = resolve_bounds([group] + list(args.bounds or []))
    start = time.perf_counter()
    try:
        if args.algo == "maxd":
            outcome = judicious_bipartition(g)
        elif args.algo == "max32":
            outcome = judicious_3partition(g)
        elif args.algo == "maxk":
            outcome = judicious_kpartition(g, k)
        else:
            outcome = balanced_kcut(g, k)
    except ProofAssertionError as exc:
        stderr.write(f"error: {exc}\n")
        stderr.write(json.dumps(exc.trace, indent=2) + "\n")
        return EXIT_VIOLATION
    elapsed = (time.perf_counter() - start) * 1000
    instance = {"family": "file", "path": args.input}
    rep = build_run_report(g, outcome, args.algo, ids, instance, None if args.no_timing else round(elapsed, 3))
    _emit(rep, args.output, stdout)
    return EXIT_OK if rep["all_satisfied"] else EXIT_VIOLATION


def _default_bounds(k: int) -> list[str]:
    return {2: ["maxd"], 3: ["max32"]}.get(k, ["maxk"])


def cmd_verify(args: argparse.Namespace, stdout: TextIO, stderr: TextIO) -> int:
    if args.report:
        if args.input or args.partition:
            raise UsageError("give either --report or INPUT PARTITION, not both")
        try:
            data = json.loads(Path(args.report).read_text())
        except json.JSONDecodeError as exc:
            raise UsageError(f"{args.report}: not JSON ({exc})") from exc
        table, matches = verify_report(data)
        _emit({"bound_table": table.to_dict(), "all_satisfied": table.all_satisfied, "matches_report": matches}, args.output, stdout)
        if not matches:
            stderr.write("error: recomputed bound table differs from the report\n")
            return EXIT_VIOLATION
        return EXIT_OK if table.all_satisfied else EXIT_VIOLATION
    if not (args.input and args.partition):
        raise UsageError("verify needs INPUT and PARTITION (or --report)")
    g = read_graph(args.input)
    p = read_partition(args.partition, g.n)
    ids = resolve_bounds(args.bounds or _default_bounds(p.k))
    table = bound_report(g, p, ids)
    _emit({"k": p.k, "bound_table": table.to_dict(), "all_satisfied": table.all_satisfied}, args.output, stdout)
    return EXIT_OK if table.all_satisfied else EXIT_VIOLATION


def cmd_oracle(args: argparse.Namespace, stdout: TextIO, stderr: TextIO) -> int:
    g = read_graph(args.input)
    out: dict[str, Any] = {"mode": args.mode, "n": g.n}
    if args.mode == "bisection":
        res = exact_max_bisection(g, cap=args.cap)
        out.update(k=2, optimum=format_weight(res.optimum), witness=[list(x) for x in res.witness.parts], enumerated=res.enumerated)
        _emit(out, args.output, stdout)
        return EXIT_OK
    if args.k is None:
        raise UsageError(f"--mode {args.mode} needs --k")
    out["k"] = args.k
    if args.mode in ("maxcut", "minmax"):
        fn = exact_max_kcut if args.mode == "maxcut" else exact_min_max_part
        res = fn(g, args.k, cap=args.cap)
        out.update(optimum=format_weight(res.optimum), witness=[list(x) for x in res.witness.parts], enumerated=res.enumerated)
        _emit(out, args.output, stdout)
        return EXIT_OK
    # unspecified thresholds default to the conjectured pair
    lower, upper = conjecture_bounds(g, args.k)
    if args.cut_lower is not None:
        lower = args.cut_lower
    if args.part_upper is not None:
        upper = args.part_upper
    res = exists_joint(g, args.k, lower, upper, cap=args.cap)
    out.update(cut_lower=format_weight(lower), part_upper=format_weight(upper), enumerated=res.enumerated)
    if res.witness is None:
        out.update(witness=None, verdict="NONE (exhausted)")
    else:
        out.update(witness=[list(x) for x in res.witness.parts], verdict="witness")
    _emit(out, args.output, stdout)
    return EXIT_OK if res.found else EXIT_VIOLATION


def cmd_hunt(args: argparse.Namespace, stdout: TextIO, stderr: TextIO) -> int:
    lo, hi = args.n_range
    if args.k < 2:
        raise UsageError("--k must be at least 2")
    if hi < args.k:
        raise UsageError(f"--n-range {lo}-{hi} has no order >= k={args.k}")
    if args.exact:
        cap = oracle_cap()
        if hi > cap:
            raise OracleCapError(f"--n-range reaches {hi}, above the oracle cap of {cap}")
    tasks = []
    if args.family in ("complete", "all"):
        tasks += complete_tasks(args.k, range(lo, hi + 1), args.exact)
    if args.family in ("random", "all"):
        tasks += random_tasks(args.k, lo, hi, args.trials, args.seed, args.exact, start=len(tasks))
    sink = open(args.output, "w") if args.output else stdout
    verdicts = []
    try:
        for v in run_hunt(tasks, args.workers):
            verdicts.append(v)
            sink.write(json.dumps(v) + "\n")
        summary = summarize(verdicts)
        sink.write(json.dumps(summary) + "\n")
    finally:
        if sink is not stdout:
            sink.close()
    if args.output:
        stdout.write(json.dumps(summary) + "\n")
    return EXIT_VIOLATION if summary["counterexample"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="judicious",
        description="Judicious graph partitions with exactly checked bounds.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write an instance as an edge list")
    gen.add_argument("--family", required=True, choices=[f.value for f in Family if f is not Family.FILE])
    gen.add_argument("--n", type=int)
    gen.add_argument("--k", type=int)
    gen.add_argument("--q", type=int)
    gen.add_argument("--c", type=_rational)
    gen.add_argument("--n-clique", type=int)
    gen.add_argument("--n-isolated", type=int)
    gen.add_argument("--p", type=float, help="edge probability (random family)")
    gen.add_argument("--weight-law", default="uniform", choices=[w.value for w in WeightLaw])
    gen.add_argument("--seed", type=int)
    gen.add_argument("-o", "--output")
    gen.set_defaults(func=cmd_gen)

    part = sub.add_parser("partition", help="run a constructor and report its bounds")
    part.add_argument("input")
    part.add_argument("--algo", required=True, choices=sorted(ALGORITHMS))
    part.add_argument("--k", type=int)
    part.add_argument("--bounds", nargs="*", help=f"extra bound ids or groups ({', '.join(BOUND_GROUPS)})")
    part.add_argument("--no-timing", action="store_true", help="omit wall time so reports are byte-reproducible")
    part.add_argument("-o", "--output")
    part.set_defaults(func=cmd_partition)

    ver = sub.add_parser("verify", help="evaluate bounds on a given partition or re-check a report")
    ver.add_argument("input", nargs="?")
    ver.add_argument("partition", nargs="?")
    ver.add_argument("--report", help="run report JSON to re-verify")
    ver.add_argument("--bounds", nargs="*")
    ver.add_argument("-o", "--output")
    ver.set_defaults(func=cmd_verify)

    orc = sub.add_parser("oracle", help="exhaustive optimum or joint feasibility")
    orc.add_argument("input")
    orc.add_argument("--mode", required=True, choices=["maxcut", "minmax", "joint", "bisection"])
    orc.add_argument("--k", type=int)
    orc.add_argument("--cut-lower", type=_rational)
    orc.add_argument("--part-upper", type=_rational)
    orc.add_argument("--cap", type=int, help="vertex cap (default $JP_ORACLE_CAP or 13)")
    orc.add_argument("-o", "--output")
    orc.set_defaults(func=cmd_oracle)

    hunt = sub.add_parser("hunt", help="search for counterexamples to the joint conjecture")
    hunt.add_argument("--k", type=int, required=True)
    hunt.add_argument("--n-range", type=_n_range, required=True, metavar="LO-HI")
    hunt.add_argument("--trials", type=int, default=100)
    hunt.add_argument("--seed", type=int, default=0)
    hunt.add_argument("--family", choices=["complete", "random", "all"], default="all")
    mode = hunt.add_mutually_exclusive_group()
    mode.add_argument("--exact", dest="exact", action="store_true", default=True)
    mode.add_argument("--heuristic", dest="exact", action="store_false")
    hunt.add_argument("--workers", type=int, default=1)
    hunt.add_argument("-o", "--output", help="write JSON lines here instead of stdout")
    hunt.set_defaults(func=cmd_hunt)
    return parser


def main(argv: Sequence[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, stdout, stderr)
    except OracleCapError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_CAP
    except ProofAssertionError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_VIOLATION
    except (UsageError, JudiciousError, OSError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
