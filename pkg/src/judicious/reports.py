"""Self-contained JSON run reports and their re-verification.

A report embeds the graph and the partition, so :func:`verify_report` can
recompute the bound table from the report alone and compare it with the
stored one.  Every rational is a ``"p/q"`` string.
"""

from __future__ import annotations

from collections.abc import Sequence
from typing import Any

from . import __version__
from .bounds import BoundId, BoundReport, report
from .errors import ParseError
from .graph import (
    Partition,
    WeightedGraph,
    avg_weighted_degree,
    format_weight,
    max_weighted_degree,
    total_weight,
)
from .io import graph_from_json, graph_to_json
from .partitioners import PartitionOutcome

__all__ = ["graph_metrics", "build_run_report", "verify_report", "partition_from_json"]


def graph_metrics(g: WeightedGraph) -> dict[str, Any]:
    out: dict[str, Any] = {"n": g.n, "m": g.edge_count, "w": format_weight(total_weight(g))}
    if g.n:
        out["max_degree"] = format_weight(max_weighted_degree(g))
        out["avg_degree"] = format_weight(avg_weighted_degree(g))
    return out


def build_run_report(
    g: WeightedGraph,
    outcome: PartitionOutcome,
    algorithm: str,
    bound_ids: Sequence[BoundId],
    instance: dict[str, Any] | None = None,
    wall_ms: float | None = None,
) -> dict[str, Any]:
    p = outcome.partition
    table = report(g, p, bound_ids)
    metrics = graph_metrics(g)
    metrics["cut_weight"] = format_weight(outcome.cut_weight)
    metrics["part_weights"] = [format_weight(x) for x in outcome.part_weights]
    return {
        "version": __version__,
        "instance": instance or {},
        "algorithm": algorithm,
        "k": p.k,
        "graph": graph_to_json(g),
        "partition": [list(part) for part in p.parts],
        "metrics": metrics,
        "bounds": [b.value for b in bound_ids],
        "bound_table": table.to_dict(),
        "all_satisfied": table.all_satisfied,
        "trace": outcome.trace.summary(),
        "timing": {"wall_ms": wall_ms},
    }


def partition_from_json(parts: Any, n: int) -> Partition:
    try:
        return Partition.from_parts([[int(v) for v in part] for part in parts], n)
    except TypeError as exc:
        raise ParseError(f"malformed partition in report: {exc}") from exc


def verify_report(data: dict[str, Any]) -> tuple[BoundReport, bool]:
    """Recompute a report's bound table; the flag says whether it matches the stored one."""
    try:
        g = graph_from_json(data["graph"])
        p = partition_from_json(data["partition"], g.n)
        ids = [BoundId(b) for b in data["bounds"]]
        stored = data["bound_table"]
    except (KeyError, ValueError) as exc:
        raise ParseError(f"not a run report: {exc}") from exc
    table = report(g, p, ids)
    return table, table.to_dict() == stored
