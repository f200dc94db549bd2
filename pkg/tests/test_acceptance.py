"""End-to-end acceptance checks, one test per criterion.

Each test records a single ``criterion N: PASS|FAIL`` line.  The lines are
printed as they are produced (visible with ``pytest -s`` or when this file
is run as a script) and repeated in pytest's terminal summary.

Expected values are recomputed here from the closed forms, not read back
through :mod:`judicious.bounds`, so a wrong formula there cannot hide.
"""

from __future__ import annotations

import io
import json
import os
import subprocess
import sys
import time
from fractions import Fraction
from pathlib import Path

from judicious import (
    balanced_kcut,
    cut_weight,
    derandomized_balanced_partition,
    judicious_3partition,
    judicious_bipartition,
    judicious_kpartition,
    max_weighted_degree,
    total_weight,
)
from judicious.cli import main as cli_main
from judicious.hunt import complete_tasks, random_tasks, run_hunt, summarize
from judicious.instances import apex_graph, complete_graph, generate, random_suite
from judicious.io import write_graph
from judicious.oracle import exact_max_kcut, exact_min_max_part, exists_joint, stirling2, verify_proposition1

RESULTS: list[str] = []

SUITE_SIZE = 500
SUITE_SEED = 0


def record(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} ({detail})"
    RESULTS.append(line)
    print(line)


_suite_cache: list | None = None


def suite():
    global _suite_cache
    if _suite_cache is None:
        _suite_cache = [generate(s) for s in random_suite(SUITE_SIZE, 2, 40, seed=SUITE_SEED)]
    return _suite_cache


def avg_degree(g) -> Fraction:
    return 2 * total_weight(g) / g.n


def maxd_pair(g):
    w, d, D = total_weight(g), avg_degree(g), max_weighted_degree(g)
    return w / 2 + d / 4, w / 4 + D / 8


def max32_pair(g):
    w, d, D = total_weight(g), avg_degree(g), max_weighted_degree(g)
    return 2 * w / 3 + d / 3, (w + D) / 9


def maxk_upper(g, k):
    w, D = total_weight(g), max_weighted_degree(g)
    return w / k**2 + Fraction(k - 1, 2 * k**2) * D


def kkkk_lower(g, k):
    w, n, d = total_weight(g), g.n, avg_degree(g)
    h = Fraction((k - 2) ** 2, 4 * (n - 1) * (k - 1)) if k % 2 == 0 else Fraction(k - 3, 4 * (n - 1))
    return Fraction(k - 1, k) * w + Fraction(k - 1, 2 * k) * (1 - h) * d


def lemma_lower(g):
    n = g.n
    t = 1 if n % 2 == 0 else 0
    return (Fraction(1, 2) + Fraction(1, 2 * (n - t))) * total_weight(g)


def test_criterion_1_bipartition_tight_on_odd_cliques():
    start = time.perf_counter()
    bad = []
    for n in (3, 5, 7, 9, 11):
        g = complete_graph(n)
        out = judicious_bipartition(g)
        lower, upper = maxd_pair(g)
        if not (out.cut_weight == lower and out.max_part_weight == upper):
            bad.append(n)
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 1
    record(1, ok, f"K_3..K_11 odd, equality on both bounds, {elapsed:.3f}s, failures {bad}")
    assert ok


def test_criterion_2_3partition_tight_on_k3q1():
    start = time.perf_counter()
    bad = []
    for q in range(1, 5):
        g = complete_graph(3 * q + 1)
        out = judicious_3partition(g)
        lower, upper = max32_pair(g)
        if not (out.cut_weight == lower and out.max_part_weight == upper == Fraction(q * q + q, 2)):
            bad.append(q)
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 1
    record(2, ok, f"K_4, K_7, K_10, K_13 equality, {elapsed:.3f}s, failures {bad}")
    assert ok


def test_criterion_3_kpartition_tight_on_kqk1():
    bad = []
    for k in (2, 3, 4, 5):
        for q in (1, 2, 3):
            g = complete_graph(q * k + 1)
            out = judicious_kpartition(g, k)
            if not (out.max_part_weight == Fraction(q * q + q, 2) == maxk_upper(g, k)):
                bad.append((k, q))
    ok = not bad
    record(3, ok, f"12 (k, q) pairs, equality, failures {bad}")
    assert ok


def test_criterion_4_conformance_on_random_suite():
    start = time.perf_counter()
    violations = []
    for idx, g in enumerate(suite()):
        out = judicious_bipartition(g)
        lower, upper = maxd_pair(g)
        if out.cut_weight < lower or out.max_part_weight > upper:
            violations.append((idx, "maxd"))
        if g.n >= 3:
            out = judicious_3partition(g)
            lower, upper = max32_pair(g)
            if out.cut_weight < lower or out.max_part_weight > upper:
                violations.append((idx, "max32"))
        for k in range(2, 7):
            if k > g.n:
                continue
            if judicious_kpartition(g, k).max_part_weight > maxk_upper(g, k):
                violations.append((idx, f"maxk{k}"))
            if balanced_kcut(g, k).cut_weight < kkkk_lower(g, k):
                violations.append((idx, f"kkkk{k}"))
    elapsed = time.perf_counter() - start
    ok = not violations and elapsed < 300
    record(4, ok, f"{SUITE_SIZE} graphs n<=40, {len(violations)} violations, {elapsed:.1f}s")
    assert ok


def test_criterion_5_oracle_confirms_bounds_on_small_graphs():
    failures = []
    small = [g for g in suite() if g.n <= 10]
    for idx, g in enumerate(small):
        for k in range(2, min(6, g.n) + 1):
            if exact_min_max_part(g, k).optimum > maxk_upper(g, k):
                failures.append((idx, f"minmax{k}"))
        if not exists_joint(g, 2, *maxd_pair(g)).found:
            failures.append((idx, "maxd joint"))
        if g.n >= 3 and not exists_joint(g, 3, *max32_pair(g)).found:
            failures.append((idx, "max32 joint"))
    ok = not failures and len(small) > 0
    record(5, ok, f"{len(small)} suite graphs with n<=10, {len(failures)} failures")
    assert ok


def test_criterion_6_apex_example():
    start = time.perf_counter()
    c, n = Fraction(1, 4), 5
    passed = verify_proposition1(c, n)
    g = apex_graph(c, n)
    best = exact_max_kcut(g, 2)
    threshold = total_weight(g) / 2 + c * max_weighted_degree(g)
    elapsed = time.perf_counter() - start
    ok = (
        passed
        and best.optimum == 14
        and threshold == Fraction(115, 8)
        and best.enumerated == stirling2(6, 2) == 2**6 // 2 - 1
        and elapsed < 1
    )
    record(6, ok, f"max cut {best.optimum} < {threshold}, all 2^6 labelings ({best.enumerated} distinct), {elapsed:.3f}s")
    assert ok


def test_criterion_7_balanced_seed_meets_lemma():
    failures = []
    for idx, g in enumerate(suite()):
        if g.n < 2:
            continue
        p = derandomized_balanced_partition(g, 2)
        if cut_weight(g, p) < lemma_lower(g):
            failures.append(idx)
    k4 = cut_weight(complete_graph(4), derandomized_balanced_partition(complete_graph(4), 2))
    ok = not failures and k4 == 4
    record(7, ok, f"{len(suite())} suite graphs, {len(failures)} failures, K_4 cut {k4}")
    assert ok


def test_criterion_8_balanced_cut_tight_exactly_at_residues():
    wrong = []
    checked = 0
    for k in (4, 5):
        residues = {k // 2, (k + 1) // 2}
        for n in range(k, 14):
            g = complete_graph(n)
            best = exact_max_kcut(g, k).optimum
            bound = kkkk_lower(g, k)
            checked += 1
            if n % k in residues:
                if best != bound:
                    wrong.append((k, n, "expected equality"))
            elif not best > bound:
                wrong.append((k, n, "expected strict"))
    ok = not wrong
    record(8, ok, f"{checked} cliques for k in 4, 5; mismatches {wrong}")
    assert ok


def test_criterion_9_conjecture_probe():
    start = time.perf_counter()
    tasks = complete_tasks(4, range(4, 14), exact=True)
    tasks += random_tasks(4, 4, 12, 200, seed=1, exact=True, start=len(tasks))
    workers = min(4, os.cpu_count() or 1)
    summary = summarize(run_hunt(tasks, workers=workers))
    elapsed = time.perf_counter() - start
    ok = (
        summary["instances"] == 210
        and summary["counterexample"] == 0
        and summary["both_tight"] == []
        and elapsed < 1800
    )
    record(
        9,
        ok,
        f"{summary['instances']} instances, {summary['counterexample']} none-verdicts, "
        f"both tight {summary['both_tight']}, {len(summary['degenerate'])} edgeless, {elapsed:.1f}s",
    )
    assert ok


_DETERMINISM_SCRIPT = """
import json, sys
from judicious import balanced_kcut, judicious_3partition, judicious_bipartition, judicious_kpartition
from judicious.instances import generate, random_suite
out = []
for s in random_suite(25, 3, 30, seed=9):
    g = generate(s)
    for r in (judicious_bipartition(g), judicious_3partition(g), judicious_kpartition(g, 3), balanced_kcut(g, 3)):
        out.append([r.partition.assignment, r.trace.to_dict()])
sys.stdout.write(json.dumps(out))
"""


def _fingerprint(hash_seed: str) -> str:
    env = dict(os.environ, PYTHONHASHSEED=hash_seed)
    proc = subprocess.run(
        [sys.executable, "-c", _DETERMINISM_SCRIPT], capture_output=True, text=True, env=env, check=True
    )
    return proc.stdout


def _cli(*argv) -> tuple[int, str]:
    out = io.StringIO()
    code = cli_main([str(a) for a in argv], out, io.StringIO())
    return code, out.getvalue()


def test_criterion_10_determinism_and_reverification(tmp_path: Path):
    same_runs = _fingerprint("1") == _fingerprint("2") == _fingerprint("12345")

    report_ok = True
    for idx, s in enumerate(random_suite(8, 6, 25, seed=10)):
        path = tmp_path / f"g{idx}.wel"
        write_graph(generate(s), path)
        for algo, k in (("maxd", None), ("max32", None), ("maxk", 4), ("balanced", 3)):
            argv = ["partition", path, "--algo", algo, "--no-timing"] + (["--k", k] if k else [])
            first = _cli(*argv, "-o", tmp_path / "a.json")
            second = _cli(*argv, "-o", tmp_path / "b.json")
            a = (tmp_path / "a.json").read_bytes()
            if first[0] != 0 or second[0] != 0 or a != (tmp_path / "b.json").read_bytes():
                report_ok = False
            code, out = _cli("verify", "--report", tmp_path / "a.json")
            verified = json.loads(out)
            if code != 0 or not verified["matches_report"]:
                report_ok = False
            if verified["bound_table"] != json.loads(a)["bound_table"]:
                report_ok = False
    ok = same_runs and report_ok
    record(10, ok, f"identical across 3 interpreter runs: {same_runs}; 32 reports re-verified identically: {report_ok}")
    assert ok


if __name__ == "__main__":
    import tempfile

    tests = [(name, fn) for name, fn in globals().items() if name.startswith("test_criterion_")]
    failed = 0
    for name, fn in sorted(tests, key=lambda item: int(item[0].split("_")[2])):
        try:
            if fn.__code__.co_argcount:
                with tempfile.TemporaryDirectory() as tmp:
                    fn(Path(tmp))
            else:
                fn()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
