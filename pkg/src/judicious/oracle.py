"""Exhaustive ground truth for small graphs.

Set partitions into exactly ``k`` unlabeled parts are walked as restricted
growth strings: vertex 0 is in part 0 and every later vertex joins an
existing part or opens the next one.  The searches below prune a prefix as
soon as a monotone quantity (a part's induced weight, or the total induced
weight) passes the current limit.  Pruned subtrees are still counted, using
the number of ways each prefix can be completed, so ``enumerated`` always
reports how many partitions were covered, examined or excluded.

Among equally good partitions the lexicographically first restricted growth
string is reported, which makes every witness deterministic.
"""

from __future__ import annotations

import math
import os
from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidPartitionError, OracleCapError
from .graph import (
    Partition,
    WeightedGraph,
    cut_weight,
    max_part_weight,
    max_weighted_degree,
    total_weight,
)

__all__ = [
    "DEFAULT_CAP",
    "oracle_cap",
    "stirling2",
    "OracleResult",
    "JointResult",
    "enumerate_kpartitions",
    "exact_max_kcut",
    "exact_min_max_part",
    "exact_max_bisection",
    "exists_joint",
    "verify_proposition1",
]

DEFAULT_CAP = 13
CAP_ENV = "JP_ORACLE_CAP"


def oracle_cap(cap: int | None = None) -> int:
    """The vertex cap in force: ``cap`` if given, else ``$JP_ORACLE_CAP``, else 13."""
    if cap is not None:
        return cap
    raw = os.environ.get(CAP_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError as exc:
        raise OracleCapError(f"{CAP_ENV} must be an integer, got {raw!r}") from exc


def _check(n: int, k: int, cap: int | None) -> None:
    if k < 2:
        raise InvalidPartitionError(f"k must be at least 2, got {k}")
    if k > n:
        raise InvalidPartitionError(f"k={k} exceeds the number of vertices n={n}")
    limit = oracle_cap(cap)
    if n > limit:
        raise OracleCapError(
            f"n={n} exceeds the oracle cap of {limit} vertices "
            f"(raise it with {CAP_ENV} or the cap argument)"
        )


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind, by the usual recurrence."""
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def _completions(n: int, k: int) -> list[list[int]]:
    # f[r][m]: ways to place r more vertices when m parts are open so that
    # exactly k parts end up used
    f = [[0] * (k + 2) for _ in range(n + 1)]
    f[0][k] = 1
    for r in range(1, n + 1):
        for m in range(k + 1):
            f[r][m] = m * f[r - 1][m] + (f[r - 1][m + 1] if m < k else 0)
    return f


@dataclass(frozen=True)
class OracleResult:
    optimum: Fraction
    witness: Partition
    enumerated: int


@dataclass(frozen=True)
class JointResult:
    """Outcome of a joint feasibility search.

    ``witness`` is ``None`` only after the whole search space was covered,
    in which case ``enumerated`` equals the Stirling number S(n, k).
    """

    witness: Partition | None
    enumerated: int

    @property
    def found(self) -> bool:
        return self.witness is not None


def enumerate_kpartitions(n: int, k: int, cap: int | None = None) -> Iterator[Partition]:
    """Yield every partition of ``0..n-1`` into exactly ``k`` non-empty parts once."""
    _check(n, k, cap)
    labels = [0] * n

    def rec(v: int, m: int) -> Iterator[Partition]:
        if m + (n - v) < k:
            return
        if v == n:
            yield Partition(tuple(labels), k)
            return
        for j in range(min(m + 1, k)):
            labels[v] = j
            yield from rec(v + 1, max(m, j + 1))

    yield from rec(1, 1) if n > 0 else iter(())


class _Search:
    """Depth-first restricted-growth search on a graph's integer weights."""

    def __init__(self, g: WeightedGraph, k: int):
        iv = g.integer_view()
        self.n, self.k = g.n, k
        self.scale = iv.scale
        self.total = iv.total
        # only edges to earlier vertices matter when a vertex is placed
        self.lower = [tuple((u, w) for u, w in iv.nbrs[v] if u < v) for v in range(g.n)]
        self.comp = _completions(g.n, k)
        self.enumerated = 0

    def run(self, load_limit: int | None, total_limit: int | None, size_limit: int | None, objective: str):
        """Return the best labels found (or first feasible for ``objective='any'``).

        Limits are inclusive.  For ``"internal"`` and ``"maxload"`` the
        corresponding limit is tightened to one below each new incumbent, so
        only strictly better solutions replace it.
        """
        n, k, lower, comp = self.n, self.k, self.lower, self.comp
        labels = [0] * n
        loads = [0] * k
        sizes = [0] * k
        best: list[int] | None = None
        lim_load = load_limit
        lim_total = total_limit
        stop = False

        def rec(v: int, m: int, internal: int) -> None:
            nonlocal best, lim_load, lim_total, stop
            # an incumbent may have tightened a limit since this prefix was checked
            if lim_load is not None and max(loads) > lim_load:
                self.enumerated += comp[n - v][m]
                return
            if v == n:
                self.enumerated += 1
                best = list(labels)
                if objective == "any":
                    stop = True
                elif objective == "internal":
                    lim_total = internal - 1
                else:
                    lim_load = max(loads) - 1
                return
            contrib = [0] * k
            for u, w in lower[v]:
                contrib[labels[u]] += w
            rest = n - v - 1
            for j in range(min(m + 1, k)):
                m2 = m + 1 if j == m else m
                ways = comp[rest][m2]
                if ways == 0:
                    continue
                inc = contrib[j]
                nl = loads[j] + inc
                nt = internal + inc
                if (
                    (lim_total is not None and nt > lim_total)
                    or (lim_load is not None and nl > lim_load)
                    or (size_limit is not None and sizes[j] + 1 > size_limit)
                ):
                    self.enumerated += ways
                    continue
                labels[v] = j
                loads[j] = nl
                sizes[j] += 1
                rec(v + 1, m2, nt)
                loads[j] -= inc
                sizes[j] -= 1
                if stop:
                    return

        if n > 0:
            sizes[0] = 1
            rec(1, 1, 0)
        return best


def _scaled_floor(x: Fraction, scale: int, strict: bool) -> int:
    # largest integer i with i <= x*scale (or i < x*scale when strict)
    y = x * scale
    if strict:
        return math.ceil(y) - 1
    return math.floor(y)


def exact_max_kcut(g: WeightedGraph, k: int, cap: int | None = None) -> OracleResult:
    """Maximum k-cut weight over all partitions into exactly ``k`` parts."""
    _check(g.n, k, cap)
    s = _Search(g, k)
    labels = s.run(None, None, None, "internal")
    p = Partition(tuple(labels), k)
    return OracleResult(cut_weight(g, p), p, s.enumerated)


def exact_min_max_part(g: WeightedGraph, k: int, cap: int | None = None) -> OracleResult:
    """Smallest achievable heaviest-part induced weight over all k-partitions."""
    _check(g.n, k, cap)
    s = _Search(g, k)
    labels = s.run(None, None, None, "maxload")
    p = Partition(tuple(labels), k)
    return OracleResult(max_part_weight(g, p), p, s.enumerated)


def exact_max_bisection(g: WeightedGraph, cap: int | None = None) -> OracleResult:
    """Maximum cut over bipartitions whose sides differ in size by at most one.

    ``enumerated`` counts all bipartitions covered, balanced or not.
    """
    _check(g.n, 2, cap)
    s = _Search(g, 2)
    labels = s.run(None, None, (g.n + 1) // 2, "internal")
    p = Partition(tuple(labels), 2)
    return OracleResult(cut_weight(g, p), p, s.enumerated)


def exists_joint(
    g: WeightedGraph,
    k: int,
    cut_lower: Fraction,
    part_upper: Fraction,
    *,
    strict_cut: bool = False,
    strict_part: bool = False,
    cap: int | None = None,
) -> JointResult:
    """Search for a k-partition with cut >= ``cut_lower`` and every part <= ``part_upper``.

    ``strict_cut`` / ``strict_part`` turn the respective comparison strict,
    which is how tightness of either bound is decided.
    """
    _check(g.n, k, cap)
    s = _Search(g, k)
    cut_lower, part_upper = Fraction(cut_lower), Fraction(part_upper)
    total_limit = _scaled_floor(total_weight(g) - cut_lower, s.scale, strict_cut)
    load_limit = _scaled_floor(part_upper, s.scale, strict_part)
    if total_limit < 0 or load_limit < 0:
        return JointResult(None, stirling2(g.n, k))
    labels = s.run(load_limit, total_limit, None, "any")
    witness = None if labels is None else Partition(tuple(labels), k)
    return JointResult(witness, s.enumerated)


def verify_proposition1(c: Fraction, n: int, cap: int | None = None) -> bool:
    """Check by exhaustion that every bipartition of the apex graph cuts < w/2 + c*Delta_w.

    The apex graph is K_n with unit weights plus one vertex joined to all of
    them with weight ``2cn``; see :func:`judicious.instances.apex_graph`.
    """
    from .instances import apex_graph

    c = Fraction(c)
    g = apex_graph(c, n)
    if g.n > oracle_cap(cap):
        raise OracleCapError(f"apex graph has {g.n} vertices, above the oracle cap of {oracle_cap(cap)}")
    best = exact_max_kcut(g, 2, cap).optimum
    return best < total_weight(g) / 2 + c * max_weighted_degree(g)
