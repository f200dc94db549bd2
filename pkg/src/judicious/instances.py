"""Graph families used as evidence, seeded random graphs and file ingestion.

``generate`` accepts an :class:`InstanceSpec`; the plain helper functions
(``complete_graph``, ``apex_graph``, ...) are there for direct use.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any

import numpy as np

from .errors import InvalidGraphError, OracleCapError
from .graph import WeightedGraph, avg_weighted_degree, format_weight, total_weight

__all__ = [
    "Family",
    "WeightLaw",
    "InstanceSpec",
    "GRID_DENOMINATOR",
    "complete_graph",
    "complete_tight",
    "apex_graph",
    "isolated_padding",
    "random_weighted",
    "generate",
    "random_suite",
    "Proposition2Evidence",
    "proposition2_search",
]

GRID_DENOMINATOR = 2**16


class Family(str, Enum):
    COMPLETE = "complete"
    COMPLETE_TIGHT = "complete-tight"
    APEX = "apex"
    ISOLATED_PADDING = "isolated-padding"
    RANDOM = "random"
    FILE = "file"


class WeightLaw(str, Enum):
    UNIT = "unit"
    UNIFORM = "uniform"
    EXPONENTIAL = "exponential"


@dataclass(frozen=True)
class InstanceSpec:
    """Family name plus its parameters; ``generate`` turns it into a graph.

    Unused parameters stay ``None``.  ``to_dict`` gives a JSON-friendly echo
    for reports.
    """

    family: Family
    n: int | None = None
    k: int | None = None
    q: int | None = None
    c: Fraction | None = None
    n_clique: int | None = None
    n_isolated: int | None = None
    edge_prob: float | None = None
    weight_law: WeightLaw = WeightLaw.UNIFORM
    seed: int | None = None
    path: str | None = None

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"family": Family(self.family).value}
        for name in ("n", "k", "q", "n_clique", "n_isolated", "edge_prob", "seed", "path"):
            value = getattr(self, name)
            if value is not None:
                out[name] = value
        if self.c is not None:
            out["c"] = format_weight(self.c)
        if Family(self.family) is Family.RANDOM:
            out["weight_law"] = WeightLaw(self.weight_law).value
        return out


def complete_graph(n: int, weight: Fraction | int = 1) -> WeightedGraph:
    if n < 1:
        raise InvalidGraphError(f"complete graph needs n >= 1, got {n}")
    return WeightedGraph(n, [(u, v, weight) for u, v in itertools.combinations(range(n), 2)])


def complete_tight(k: int, q: int) -> WeightedGraph:
    """Unweighted K_{qk+1}, the equality case of the k-part bound."""
    if k < 2:
        raise InvalidGraphError(f"complete-tight needs k >= 2, got {k}")
    if q < 1:
        raise InvalidGraphError(f"complete-tight needs q >= 1, got {q}")
    return complete_graph(q * k + 1)


def apex_graph(c: Fraction, n: int) -> WeightedGraph:
    """Unit K_n (vertices 0..n-1) plus vertex n joined to each with weight 2cn."""
    c = Fraction(c)
    if not 0 < c <= Fraction(1, 4):
        raise InvalidGraphError(f"apex family needs 0 < c <= 1/4, got {c}")
    if not n > 1 / (4 * c * c):
        raise InvalidGraphError(f"apex family needs n > 1/(4c^2) = {1 / (4 * c * c)}, got n={n}")
    edges = [(u, v, 1) for u, v in itertools.combinations(range(n), 2)]
    edges += [(u, n, 2 * c * n) for u in range(n)]
    return WeightedGraph(n + 1, edges)


def isolated_padding(n_clique: int, n_isolated: int) -> WeightedGraph:
    """Unit K_{n_clique} followed by ``n_isolated`` isolated vertices."""
    if n_clique < 1 or n_isolated < 0:
        raise InvalidGraphError(f"bad padding parameters ({n_clique}, {n_isolated})")
    edges = [(u, v, 1) for u, v in itertools.combinations(range(n_clique), 2)]
    return WeightedGraph(n_clique + n_isolated, edges)


def _draw_weight(rng: np.random.Generator, law: WeightLaw) -> Fraction:
    if law is WeightLaw.UNIT:
        return Fraction(1)
    if law is WeightLaw.UNIFORM:
        # uniform on the grid {1, ..., 2^16} / 2^16
        return Fraction(int(rng.integers(1, GRID_DENOMINATOR, endpoint=True)), GRID_DENOMINATOR)
    # mean-one exponential rounded up to the grid, so no weight is zero
    x = float(rng.exponential(1.0))
    return Fraction(max(1, math.ceil(x * GRID_DENOMINATOR)), GRID_DENOMINATOR)


def random_weighted(
    n: int, edge_prob: float, weight_law: WeightLaw | str = WeightLaw.UNIFORM, seed: int = 0
) -> WeightedGraph:
    """Each pair present independently with ``edge_prob``; weights on a 1/2^16 grid.

    The output depends only on the arguments (numpy's PCG64 stream), so the
    same seed always gives the same edge list.
    """
    law = WeightLaw(weight_law)
    if n < 1:
        raise InvalidGraphError(f"random family needs n >= 1, got {n}")
    if not 0 <= edge_prob <= 1:
        raise InvalidGraphError(f"edge probability must be in [0, 1], got {edge_prob}")
    rng = np.random.default_rng(seed)
    edges = []
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < edge_prob:
            edges.append((u, v, _draw_weight(rng, law)))
    return WeightedGraph(n, edges)


def generate(spec: InstanceSpec) -> WeightedGraph:
    family = Family(spec.family)

    def need(name: str) -> Any:
        value = getattr(spec, name)
        if value is None:
            raise InvalidGraphError(f"family {family.value!r} needs parameter {name!r}")
        return value

    if family is Family.COMPLETE:
        return complete_graph(need("n"))
    if family is Family.COMPLETE_TIGHT:
        return complete_tight(need("k"), need("q"))
    if family is Family.APEX:
        return apex_graph(need("c"), need("n"))
    if family is Family.ISOLATED_PADDING:
        return isolated_padding(need("n_clique"), need("n_isolated"))
    if family is Family.RANDOM:
        return random_weighted(need("n"), need("edge_prob"), spec.weight_law, need("seed"))
    from .io import read_graph

    return read_graph(Path(need("path")))


def random_suite(
    count: int,
    n_min: int = 2,
    n_max: int = 40,
    seed: int = 0,
    laws: tuple[WeightLaw, ...] = (WeightLaw.UNIFORM, WeightLaw.EXPONENTIAL, WeightLaw.UNIT),
) -> list[InstanceSpec]:
    """``count`` reproducible random specs with varied size, density and weight law."""
    rng = np.random.default_rng(seed)
    specs = []
    for i in range(count):
        n = int(rng.integers(n_min, n_max, endpoint=True))
        p = float(rng.choice([0.1, 0.3, 0.5, 0.8, 1.0]))
        law = laws[i % len(laws)]
        specs.append(
            InstanceSpec(Family.RANDOM, n=n, edge_prob=p, weight_law=law, seed=int(rng.integers(2**31)))
        )
    return specs


@dataclass(frozen=True)
class Proposition2Evidence:
    """Why every bipartition of the returned graph has a heavy side.

    ``method`` is ``"oracle"`` when the claim was checked by exhaustion (then
    ``min_max_part`` is the oracle optimum and ``scan`` lists each clique size
    and padding tried), or ``"analytic"`` for the closed-form certificate.
    """

    c: Fraction
    m: int
    p: int
    method: str
    threshold: Fraction
    min_max_part: Fraction
    scan: tuple[tuple[int, int, bool], ...]
    note: str

    def to_dict(self) -> dict[str, Any]:
        fmt = format_weight
        return {
            "c": fmt(self.c),
            "m": self.m,
            "p": self.p,
            "method": self.method,
            "threshold": fmt(self.threshold),
            "min_max_part": fmt(self.min_max_part),
            "scan": [list(s) for s in self.scan],
            "note": self.note,
        }


def _clique_min_side(m: int) -> Fraction:
    # best bipartition of K_m splits it evenly; the larger side has ceil(m/2) vertices
    s = (m + 1) // 2
    return Fraction(s * (s - 1), 2)


def proposition2_search(c: Fraction, cap: int | None = None) -> tuple[WeightedGraph, Proposition2Evidence]:
    """Find K_m plus p isolated vertices where no bipartition keeps both sides light.

    The target is ``max(w(G[X]), w(G[Y])) > w/4 + c*d_w`` for every
    bipartition.  Odd clique sizes m and paddings p with ``m + p`` within the
    oracle cap are scanned in order of ``m + p`` and each candidate is
    settled by the oracle.  When nothing within the cap works, the analytic
    certificate for m = 3 is returned: every bipartition of K_3 + p has a side
    holding an edge (weight 1), and 1 > 3/4 + 6c/(3 + p) exactly when
    p > 24c - 3.
    """
    from .oracle import exact_min_max_part, oracle_cap

    c = Fraction(c)
    if c <= 0:
        raise InvalidGraphError(f"c must be positive, got {c}")
    limit = oracle_cap(cap)
    scan: list[tuple[int, int, bool]] = []
    for size in range(3, limit + 1):
        for m in range(3, size + 1, 2):
            p = size - m
            g = isolated_padding(m, p)
            threshold = total_weight(g) / 4 + c * avg_weighted_degree(g)
            # cheap necessary condition before running the oracle
            if _clique_min_side(m) <= threshold:
                scan.append((m, p, False))
                continue
            best = exact_min_max_part(g, 2, cap=limit).optimum
            ok = best > threshold
            scan.append((m, p, ok))
            if ok:
                return g, Proposition2Evidence(
                    c, m, p, "oracle", threshold, best, tuple(scan),
                    f"oracle over all {2 ** (size - 1) - 1} bipartitions",
                )
    p = max(0, math.floor(24 * c - 3) + 1)
    g = isolated_padding(3, p)
    threshold = total_weight(g) / 4 + c * avg_weighted_degree(g)
    if not Fraction(1) > threshold:
        raise OracleCapError("analytic certificate failed; this is a bug")
    return g, Proposition2Evidence(
        c, 3, p, "analytic", threshold, Fraction(1), tuple(scan),
        f"no candidate with m + p <= {limit}; K_3 + {p} isolated works since {p} > 24c - 3",
    )
