"""Closed-form cut and part-weight bounds, evaluated exactly.

Radical-free formulas return a :class:`~fractions.Fraction`.  The reference
bounds from the unweighted literature contain square roots; those come back
as an :class:`Enclosure`, a certified rational interval of width at most
``2**-64`` (collapsed to an exact value when the radicand is a perfect
rational square).

Note on :attr:`BoundId.EdwardskCutLower`: the formula is implemented exactly
as it is usually restated in later work, with the ``-1/2`` inside the
bracket; an earlier printed version of this bound contained an error.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

from .errors import BoundMismatchError, InvalidGraphError, InvalidPartitionError, MissingParameterError
from .graph import (
    Partition,
    WeightedGraph,
    avg_weighted_degree,
    cut_weight,
    format_weight,
    max_part_weight,
    max_weighted_degree,
    total_weight,
)

__all__ = [
    "BoundId",
    "BoundParams",
    "Enclosure",
    "BoundValue",
    "Status",
    "BoundEntry",
    "BoundReport",
    "BOUND_GROUPS",
    "sqrt_enclosure",
    "kkkk_h",
    "eval_bound",
    "report",
    "resolve_bounds",
]

ENCLOSURE_BITS = 64


class BoundId(str, Enum):
    EdwardsLower = "EdwardsLower"
    BSPartUpper = "BSPartUpper"
    BSkPartUpper = "BSkPartUpper"
    EdwardskCutLower = "EdwardskCutLower"
    XuYuCutLower = "XuYuCutLower"
    OddDegCutLower = "OddDegCutLower"
    OddDegPartUpper = "OddDegPartUpper"
    MaxdCutLower = "MaxdCutLower"
    MaxdPartUpper = "MaxdPartUpper"
    Max32CutLower = "Max32CutLower"
    Max32PartUpper = "Max32PartUpper"
    MaxkPartUpper = "MaxkPartUpper"
    Lemma1CutLower = "Lemma1CutLower"
    KkkkCutLower = "KkkkCutLower"
    ConjectureCutLower = "ConjectureCutLower"
    ConjecturePartUpper = "ConjecturePartUpper"

    @property
    def is_lower(self) -> bool:
        return self.value.endswith("Lower")

    @property
    def fixed_k(self) -> int | None:
        return _FIXED_K.get(self)

    @property
    def unweighted_only(self) -> bool:
        return self in _REFERENCE


_FIXED_K = {
    BoundId.EdwardsLower: 2,
    BoundId.BSPartUpper: 2,
    BoundId.OddDegCutLower: 2,
    BoundId.OddDegPartUpper: 2,
    BoundId.MaxdCutLower: 2,
    BoundId.MaxdPartUpper: 2,
    BoundId.Lemma1CutLower: 2,
    BoundId.Max32CutLower: 3,
    BoundId.Max32PartUpper: 3,
}

_REFERENCE = frozenset(
    {
        BoundId.EdwardsLower,
        BoundId.BSPartUpper,
        BoundId.BSkPartUpper,
        BoundId.EdwardskCutLower,
        BoundId.XuYuCutLower,
        BoundId.OddDegCutLower,
        BoundId.OddDegPartUpper,
    }
)

BOUND_GROUPS: dict[str, tuple[BoundId, ...]] = {
    "maxd": (BoundId.MaxdCutLower, BoundId.MaxdPartUpper),
    "max32": (BoundId.Max32CutLower, BoundId.Max32PartUpper),
    "maxk": (BoundId.MaxkPartUpper,),
    "kkkk": (BoundId.KkkkCutLower,),
    "balanced": (BoundId.KkkkCutLower,),
    "lemma1": (BoundId.Lemma1CutLower,),
    "conjecture": (BoundId.ConjectureCutLower, BoundId.ConjecturePartUpper),
    "bs": (BoundId.EdwardsLower, BoundId.BSPartUpper),
    "xuyu": (BoundId.XuYuCutLower, BoundId.BSkPartUpper),
    "odddeg": (BoundId.OddDegCutLower, BoundId.OddDegPartUpper),
}


def resolve_bounds(names: Iterable[str]) -> list[BoundId]:
    """Expand group aliases (``maxd``, ``conjecture``...) and bound names."""
    out: list[BoundId] = []
    for name in names:
        key = name.strip()
        if not key:
            continue
        ids = BOUND_GROUPS.get(key.lower())
        if ids is None:
            try:
                ids = (BoundId(key),)
            except ValueError:
                raise MissingParameterError(f"unknown bound or group {name!r}") from None
        for bid in ids:
            if bid not in out:
                out.append(bid)
    return out


@dataclass(frozen=True)
class Enclosure:
    """Closed rational interval known to contain an irrational bound value."""

    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, x: Fraction) -> bool:
        return self.lo <= x <= self.hi

    def to_dict(self) -> dict[str, str]:
        return {"lo": format_weight(self.lo), "hi": format_weight(self.hi)}


BoundValue = Union[Fraction, Enclosure]


def sqrt_enclosure(v: Fraction, bits: int = ENCLOSURE_BITS) -> BoundValue:
    """Square root of a non-negative rational.

    Exact when ``v`` is the square of a rational, otherwise an enclosure
    ``[r / 2**bits, (r + 1) / 2**bits]`` with ``r = isqrt(floor(v * 4**bits))``.
    """
    v = Fraction(v)
    if v < 0:
        raise ValueError("square root of a negative number")
    p, q = v.numerator, v.denominator
    rp, rq = math.isqrt(p), math.isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Fraction(rp, rq)
    r = math.isqrt((p << (2 * bits)) // q)
    return Enclosure(Fraction(r, 1 << bits), Fraction(r + 1, 1 << bits))


def _affine_sqrt(a: Fraction, b: Fraction, v: Fraction) -> BoundValue:
    # a + b*sqrt(v) with b > 0, to ENCLOSURE_BITS of absolute accuracy.
    extra = max(0, b.numerator.bit_length() - b.denominator.bit_length() + 1)
    root = sqrt_enclosure(v, ENCLOSURE_BITS + extra)
    if isinstance(root, Fraction):
        return a + b * root
    return Enclosure(a + b * root.lo, a + b * root.hi)


@dataclass(frozen=True)
class BoundParams:
    """Graph statistics a bound may depend on.

    ``w`` is the total weight, ``e`` the edge count, ``max_degree`` and
    ``avg_degree`` the maximum and average weighted degrees.  For the
    unweighted reference bounds ``max_degree`` is the ordinary maximum
    degree.
    """

    w: Fraction | None = None
    e: int | None = None
    n: int | None = None
    k: int | None = None
    max_degree: Fraction | None = None
    avg_degree: Fraction | None = None

    @classmethod
    def from_graph(cls, g: WeightedGraph, k: int | None = None) -> BoundParams:
        return cls(
            w=total_weight(g),
            e=g.edge_count,
            n=g.n,
            k=k,
            max_degree=max_weighted_degree(g),
            avg_degree=avg_weighted_degree(g),
        )


def _need(params: BoundParams, bid: BoundId, *names: str) -> list:
    out = []
    for name in names:
        value = getattr(params, name)
        if value is None and name == "avg_degree" and params.w is not None and params.n:
            value = 2 * Fraction(params.w) / params.n
        if value is None:
            raise MissingParameterError(f"{bid.value} needs parameter {name!r}")
        out.append(value if name in ("n", "k", "e") else Fraction(value))
    return out


def kkkk_h(k: int, n: int) -> Fraction:
    """Lower-order correction in the balanced k-cut bound; zero for k = 2, 3."""
    if k % 2 == 0:
        return Fraction((k - 2) ** 2, 4 * (n - 1) * (k - 1))
    return Fraction(k - 3, 4 * (n - 1))


def _check_k(bid: BoundId, k: int, n: int | None) -> None:
    if k < 2:
        raise InvalidPartitionError(f"{bid.value}: k must be >= 2, got {k}")
    if n is not None and n < k:
        raise InvalidPartitionError(f"{bid.value}: n={n} is smaller than k={k}")


def eval_bound(bid: BoundId, params: BoundParams) -> BoundValue:
    """Value of bound ``bid`` for the given graph statistics."""
    bid = BoundId(bid)
    k = bid.fixed_k or params.k
    if k is None:
        raise MissingParameterError(f"{bid.value} needs parameter 'k'")
    _check_k(bid, k, params.n)
    K = Fraction(k)
    half, quarter = Fraction(1, 2), Fraction(1, 4)

    if bid is BoundId.EdwardsLower:
        (e,) = _need(params, bid, "e")
        return _affine_sqrt(Fraction(e, 2) - Fraction(1, 8), Fraction(1), Fraction(e, 8) + Fraction(1, 64))
    if bid is BoundId.BSPartUpper:
        (e,) = _need(params, bid, "e")
        return _affine_sqrt(Fraction(e, 4) - Fraction(1, 16), Fraction(1), Fraction(e, 32) + Fraction(1, 256))
    if bid is BoundId.BSkPartUpper:
        (e,) = _need(params, bid, "e")
        b = (K - 1) / (2 * K * K)
        return _affine_sqrt(e / (K * K) - b * half, b, 2 * e + quarter)
    if bid in (BoundId.EdwardskCutLower, BoundId.XuYuCutLower):
        (e,) = _need(params, bid, "e")
        b = (K - 1) / (2 * K)
        tail = (K - 2) ** 2 / (8 * K) if bid is BoundId.EdwardskCutLower else 17 * K / 8
        return _affine_sqrt((K - 1) / K * e - b * half - tail, b, 2 * e + quarter)
    if bid in (BoundId.OddDegCutLower, BoundId.OddDegPartUpper):
        e, delta = _need(params, bid, "e", "max_degree")
        if delta <= 0:
            raise InvalidGraphError(f"{bid.value}: maximum degree must be positive")
        if bid is BoundId.OddDegCutLower:
            return (delta + 1) / (2 * delta) * e
        return (delta - 1) / (4 * delta) * e + (delta - 1) / 4

    if bid is BoundId.MaxdCutLower:
        w, d = _need(params, bid, "w", "avg_degree")
        return w / 2 + d / 4
    if bid is BoundId.MaxdPartUpper:
        w, delta = _need(params, bid, "w", "max_degree")
        return w / 4 + delta / 8
    if bid is BoundId.Max32CutLower:
        w, d = _need(params, bid, "w", "avg_degree")
        return 2 * w / 3 + d / 3
    if bid is BoundId.Max32PartUpper:
        w, delta = _need(params, bid, "w", "max_degree")
        return w / 9 + delta / 9
    if bid in (BoundId.MaxkPartUpper, BoundId.ConjecturePartUpper):
        w, delta = _need(params, bid, "w", "max_degree")
        return w / (K * K) + (K - 1) / (2 * K * K) * delta
    if bid is BoundId.Lemma1CutLower:
        w, n = _need(params, bid, "w", "n")
        t = 1 if n % 2 == 0 else 0
        return (half + Fraction(1, 2 * (n - t))) * w
    if bid in (BoundId.KkkkCutLower, BoundId.ConjectureCutLower):
        w, n, d = _need(params, bid, "w", "n", "avg_degree")
        return (K - 1) / K * w + (K - 1) / (2 * K) * (1 - kkkk_h(k, n)) * d
    raise AssertionError(f"unhandled bound {bid}")  # pragma: no cover


class Status(str, Enum):
    SATISFIED = "satisfied"
    VIOLATED = "violated"
    INDETERMINATE = "indeterminate"
    NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class BoundEntry:
    """One row of a bound table.

    ``slack`` is measured in the satisfying direction: ``achieved - value``
    for lower bounds and ``value - achieved`` for upper bounds, so a
    satisfied bound always has non-negative slack.
    """

    id: BoundId
    value: BoundValue | None
    achieved: Fraction
    status: Status
    slack: BoundValue | None

    @property
    def satisfied(self) -> bool | None:
        if self.status is Status.SATISFIED:
            return True
        if self.status is Status.VIOLATED:
            return False
        return None

    def to_dict(self) -> dict:
        def enc(x: BoundValue | None):
            if x is None:
                return None
            return x.to_dict() if isinstance(x, Enclosure) else format_weight(x)

        return {
            "id": self.id.value,
            "kind": "lower" if self.id.is_lower else "upper",
            "value": enc(self.value),
            "achieved": format_weight(self.achieved),
            "status": self.status.value,
            "slack": enc(self.slack),
        }


@dataclass(frozen=True)
class BoundReport:
    entries: tuple[BoundEntry, ...]

    def __getitem__(self, bid: BoundId | str) -> BoundEntry:
        bid = BoundId(bid)
        for entry in self.entries:
            if entry.id is bid:
                return entry
        raise KeyError(bid)

    def __iter__(self):
        return iter(self.entries)

    @property
    def all_satisfied(self) -> bool:
        """No entry is violated or indeterminate (not-applicable rows are ignored)."""
        return all(
            e.status in (Status.SATISFIED, Status.NOT_APPLICABLE) for e in self.entries
        )

    @property
    def violations(self) -> list[BoundId]:
        return [e.id for e in self.entries if e.status is Status.VIOLATED]

    def to_dict(self) -> list[dict]:
        return [e.to_dict() for e in self.entries]


def _judge(bid: BoundId, value: BoundValue, achieved: Fraction) -> tuple[Status, BoundValue]:
    if isinstance(value, Enclosure):
        if bid.is_lower:
            slack: BoundValue = Enclosure(achieved - value.hi, achieved - value.lo)
        else:
            slack = Enclosure(value.lo - achieved, value.hi - achieved)
        if slack.lo >= 0:
            return Status.SATISFIED, slack
        if slack.hi < 0:
            return Status.VIOLATED, slack
        return Status.INDETERMINATE, slack
    s = achieved - value if bid.is_lower else value - achieved
    return (Status.SATISFIED if s >= 0 else Status.VIOLATED), s


def report(g: WeightedGraph, p: Partition, ids: Sequence[BoundId | str]) -> BoundReport:
    """Evaluate each bound in ``ids`` (ids or group names) against partition ``p`` of ``g``."""
    ids = resolve_bounds(b.value if isinstance(b, BoundId) else b for b in ids)
    for bid in ids:
        if bid.fixed_k is not None and bid.fixed_k != p.k:
            raise BoundMismatchError(
                f"{bid.value} is a {bid.fixed_k}-partition bound, partition has k={p.k}"
            )
    params = BoundParams.from_graph(g, p.k)
    cut = cut_weight(g, p)
    heaviest = max_part_weight(g, p)
    unweighted = g.is_unweighted
    max_deg = max((g.degree(v) for v in range(g.n)), default=0)
    entries = []
    for bid in ids:
        achieved = cut if bid.is_lower else heaviest
        applicable = not bid.unweighted_only or unweighted
        local = params
        if bid in (BoundId.OddDegCutLower, BoundId.OddDegPartUpper):
            applicable = applicable and max_deg % 2 == 1
            local = BoundParams(w=params.w, e=params.e, n=params.n, k=p.k, max_degree=Fraction(max_deg))
        if not applicable:
            entries.append(BoundEntry(bid, None, achieved, Status.NOT_APPLICABLE, None))
            continue
        value = eval_bound(bid, local)
        status, slack = _judge(bid, value, achieved)
        entries.append(BoundEntry(bid, value, achieved, status, slack))
    return BoundReport(tuple(entries))
