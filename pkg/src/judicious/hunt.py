"""Counterexample search for the joint cut / part-weight conjecture.

For a graph G and k, the conjectured partition must cut at least the
balanced k-cut bound (:attr:`BoundId.ConjectureCutLower`) while keeping
every part within the k-part bound (:attr:`BoundId.ConjecturePartUpper`).

In exact mode the oracle decides each instance: either a witness exists
or the whole space of k-partitions is exhausted, which would be a
counterexample.  Two more strict searches decide whether each bound is
individually tight on the instance, that is whether no k-partition beats
it at all (the maximum k-cut equals the cut bound, or the minimum heaviest
part equals the part bound).  Edgeless graphs meet both bounds with
equality for trivial reasons and are flagged ``degenerate`` instead.

Heuristic mode only runs the constructors and reports how close their
outputs come; it can never certify a counterexample.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .bounds import BoundId, BoundParams, eval_bound
from .graph import Partition, WeightedGraph, cut_weight, format_weight, max_part_weight, total_weight
from .instances import complete_graph, generate, random_suite
from .io import graph_to_json
from .oracle import exists_joint, stirling2
from .partitioners import balanced_kcut, judicious_kpartition

__all__ = ["HuntTask", "conjecture_bounds", "hunt_instance", "run_hunt", "complete_tasks", "random_tasks", "summarize"]


@dataclass(frozen=True)
class HuntTask:
    index: int
    instance: dict[str, Any]
    graph: WeightedGraph
    k: int
    exact: bool


def conjecture_bounds(g: WeightedGraph, k: int) -> tuple[Fraction, Fraction]:
    params = BoundParams.from_graph(g, k)
    return eval_bound(BoundId.ConjectureCutLower, params), eval_bound(BoundId.ConjecturePartUpper, params)


def _slacks(g: WeightedGraph, p: Partition, lower: Fraction, upper: Fraction) -> tuple[Fraction, Fraction]:
    return cut_weight(g, p) - lower, upper - max_part_weight(g, p)


def hunt_instance(task: HuntTask) -> dict[str, Any]:
    g, k = task.graph, task.k
    lower, upper = conjecture_bounds(g, k)
    out: dict[str, Any] = {
        "index": task.index,
        "instance": task.instance,
        "n": g.n,
        "k": k,
        "cut_lower": format_weight(lower),
        "part_upper": format_weight(upper),
        "degenerate": total_weight(g) == 0,
    }
    if not task.exact:
        best: tuple[Fraction, Partition] | None = None
        for p in (judicious_kpartition(g, k).partition, balanced_kcut(g, k).partition):
            cs, ps = _slacks(g, p, lower, upper)
            score = min(cs, ps)
            if best is None or score > best[0]:
                best = (score, p)
        score, p = best  # type: ignore[misc]
        cs, ps = _slacks(g, p, lower, upper)
        out.update(
            mode="heuristic",
            verdict="witness" if score >= 0 else "unresolved",
            witness=[list(x) for x in p.parts],
            cut_slack=format_weight(cs),
            part_slack=format_weight(ps),
        )
        return out

    joint = exists_joint(g, k, lower, upper)
    out["mode"] = "exact"
    out["enumerated"] = joint.enumerated
    if joint.witness is None:
        out.update(
            verdict="counterexample",
            graph=graph_to_json(g),
            certificate={"exhausted": joint.enumerated, "stirling": stirling2(g.n, k)},
        )
        return out
    cs, ps = _slacks(g, joint.witness, lower, upper)
    out.update(verdict="witness", witness=[list(x) for x in joint.witness.parts])
    out["cut_slack"] = format_weight(cs)
    out["part_slack"] = format_weight(ps)
    if out["degenerate"]:
        out.update(tight_cut=None, tight_part=None, both_tight=False)
        return out
    w = total_weight(g)
    beats_cut = exists_joint(g, k, lower, w, strict_cut=True)
    beats_part = exists_joint(g, k, Fraction(0), upper, strict_part=True)
    out["tight_cut"] = not beats_cut.found
    out["tight_part"] = not beats_part.found
    out["both_tight"] = out["tight_cut"] and out["tight_part"]
    return out


def complete_tasks(k: int, n_values: Iterable[int], exact: bool, start: int = 0) -> list[HuntTask]:
    return [
        HuntTask(start + i, {"family": "complete", "n": n}, complete_graph(n), k, exact)
        for i, n in enumerate(n for n in n_values if n >= k)
    ]


def random_tasks(k: int, n_min: int, n_max: int, trials: int, seed: int, exact: bool, start: int = 0) -> list[HuntTask]:
    specs = random_suite(trials, max(n_min, k), n_max, seed)
    return [HuntTask(start + i, s.to_dict(), generate(s), k, exact) for i, s in enumerate(specs)]


def run_hunt(tasks: Sequence[HuntTask], workers: int = 1) -> Iterator[dict[str, Any]]:
    """Yield verdicts in task order, whatever order the workers finish in."""
    if workers <= 1:
        yield from map(hunt_instance, tasks)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(hunt_instance, tasks, chunksize=1)


def summarize(verdicts: Iterable[dict[str, Any]]) -> dict[str, Any]:
    verdicts = list(verdicts)
    counts = {v: sum(1 for x in verdicts if x["verdict"] == v) for v in ("witness", "counterexample", "unresolved")}
    slack_pairs = [
        (Fraction(x["cut_slack"]), Fraction(x["part_slack"])) for x in verdicts if "cut_slack" in x
    ]
    return {
        "summary": True,
        "instances": len(verdicts),
        **counts,
        "both_tight": [x["index"] for x in verdicts if x.get("both_tight")],
        "tight_cut": [x["index"] for x in verdicts if x.get("tight_cut")],
        "tight_part": [x["index"] for x in verdicts if x.get("tight_part")],
        "degenerate": [x["index"] for x in verdicts if x.get("degenerate")],
        "min_joint_slack": format_weight(min(min(a, b) for a, b in slack_pairs)) if slack_pairs else None,
    }

