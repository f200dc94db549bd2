"""Exact-weight undirected graphs, partitions, and the weight functionals.

Weights are :class:`fractions.Fraction` throughout.  Absent pairs have weight
zero and are never stored, so sparse instances stay cheap.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Union

from .errors import InvalidGraphError, InvalidPartitionError

__all__ = [
    "Weight",
    "as_weight",
    "WeightedGraph",
    "Partition",
    "total_weight",
    "induced_weight",
    "cut_weight",
    "part_weights",
    "max_part_weight",
    "weight_to_set",
    "weighted_degree",
    "max_weighted_degree",
    "avg_weighted_degree",
    "delete_vertices",
    "format_weight",
]

Weight = Fraction
WeightLike = Union[int, str, Fraction, float]


def as_weight(value: WeightLike) -> Fraction:
    """Convert ``value`` to an exact non-negative :class:`Fraction`.

    Strings may be integers, ``p/q`` rationals or decimals (``"0.1"`` is
    exactly one tenth).  Floats are converted to their exact binary value.
    """
    try:
        w = Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InvalidGraphError(f"not a rational weight: {value!r}") from exc
    if w < 0:
        raise InvalidGraphError(f"negative weight {value!r}")
    return w


@dataclass(frozen=True)
class _IntegerView:
    # Every stored weight multiplied by ``scale`` (the lcm of denominators).
    # All comparisons the constructions make are invariant under a positive
    # rescaling, so the hot loops run on machine-friendly ints.
    scale: int
    nbrs: tuple[tuple[tuple[int, int], ...], ...]
    total: int

    def matrix(self) -> list[list[int]]:
        n = len(self.nbrs)
        m = [[0] * n for _ in range(n)]
        for v, row in enumerate(self.nbrs):
            for u, w in row:
                m[v][u] = w
        return m


class WeightedGraph:
    """Undirected graph on vertices ``0..n-1`` with non-negative rational weights.

    ``edges`` is either a mapping ``{(u, v): w}`` or an iterable of
    ``(u, v, w)`` triples.  Repeated pairs are summed into one weight and
    zero weights are dropped.  Instances are immutable.
    """

    __slots__ = ("_n", "_edges", "_adj", "_int_view")

    def __init__(
        self,
        n: int,
        edges: Mapping[tuple[int, int], WeightLike]
        | Iterable[tuple[int, int, WeightLike]] = (),
    ):
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise InvalidGraphError(f"vertex count must be a non-negative int, got {n!r}")
        items: Iterable[tuple[int, int, WeightLike]]
        if isinstance(edges, Mapping):
            items = ((u, v, w) for (u, v), w in edges.items())
        else:
            items = edges
        acc: dict[tuple[int, int], Fraction] = {}
        for u, v, w in items:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidGraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidGraphError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            acc[key] = acc.get(key, Fraction(0)) + as_weight(w)
        stored = {key: w for key, w in sorted(acc.items()) if w > 0}
        adj: list[dict[int, Fraction]] = [{} for _ in range(n)]
        for (u, v), w in stored.items():
            adj[u][v] = w
            adj[v][u] = w
        self._n = n
        self._edges = MappingProxyType(stored)
        self._adj = tuple(MappingProxyType(dict(sorted(a.items()))) for a in adj)
        self._int_view: _IntegerView | None = None

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> Mapping[tuple[int, int], Fraction]:
        """Read-only map from ``(u, v)`` with ``u < v`` to the positive weight."""
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def neighbors(self, v: int) -> Mapping[int, Fraction]:
        return self._adj[v]

    def weight(self, u: int, v: int) -> Fraction:
        return self._adj[u].get(v, Fraction(0))

    @property
    def is_unweighted(self) -> bool:
        """True when every present edge has weight exactly 1."""
        return all(w == 1 for w in self._edges.values())

    def degree(self, v: int) -> int:
        """Number of neighbours (ignores weights)."""
        return len(self._adj[v])

    def integer_view(self) -> _IntegerView:
        if self._int_view is None:
            scale = 1
            for w in self._edges.values():
                scale = math.lcm(scale, w.denominator)
            nbrs = tuple(
                tuple((u, int(w * scale)) for u, w in a.items()) for a in self._adj
            )
            total = sum(int(w * scale) for w in self._edges.values())
            self._int_view = _IntegerView(scale, nbrs, total)
        return self._int_view

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self._n == other._n and dict(self._edges) == dict(other._edges)

    def __hash__(self) -> int:
        return hash((self._n, tuple(self._edges.items())))

    def __reduce__(self):
        return (WeightedGraph, (self._n, dict(self._edges)))

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self._n}, m={len(self._edges)}, w={total_weight(self)})"


@dataclass(frozen=True)
class Partition:
    """Assignment of each vertex to one of ``k`` non-empty parts."""

    assignment: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "assignment", tuple(self.assignment))
        if self.k < 2:
            raise InvalidPartitionError(f"a partition needs k >= 2 parts, got {self.k}")
        if self.k > len(self.assignment):
            raise InvalidPartitionError(f"k={self.k} exceeds n={len(self.assignment)}")
        used = [False] * self.k
        for v, part in enumerate(self.assignment):
            if not isinstance(part, int) or not 0 <= part < self.k:
                raise InvalidPartitionError(f"vertex {v} has part {part!r} outside [0, {self.k})")
            used[part] = True
        if not all(used):
            empty = [j for j, u in enumerate(used) if not u]
            raise InvalidPartitionError(f"parts {empty} are empty")

    @classmethod
    def from_parts(cls, parts: Iterable[Iterable[int]], n: int | None = None) -> Partition:
        parts = [list(p) for p in parts]
        if n is None:
            n = sum(len(p) for p in parts)
        assignment: list[int | None] = [None] * n
        for j, part in enumerate(parts):
            for v in part:
                if not 0 <= v < n:
                    raise InvalidPartitionError(f"vertex {v} out of range for n={n}")
                if assignment[v] is not None:
                    raise InvalidPartitionError(f"vertex {v} appears in two parts")
                assignment[v] = j
        missing = [v for v, a in enumerate(assignment) if a is None]
        if missing:
            raise InvalidPartitionError(f"vertices {missing} are not assigned")
        return cls(tuple(assignment), len(parts))  # type: ignore[arg-type]

    @property
    def n(self) -> int:
        return len(self.assignment)

    @property
    def parts(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, j in enumerate(self.assignment):
            out[j].append(v)
        return tuple(tuple(p) for p in out)

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.parts)


def format_weight(w: Fraction) -> str:
    """Lossless ``p/q`` rendering used by every file and report writer."""
    w = Fraction(w)
    return f"{w.numerator}/{w.denominator}"


def _check_partition(g: WeightedGraph, p: Partition) -> None:
    if p.n != g.n:
        raise InvalidPartitionError(f"partition covers {p.n} vertices, graph has {g.n}")


def total_weight(g: WeightedGraph) -> Fraction:
    return sum(g.edges.values(), Fraction(0))


def induced_weight(g: WeightedGraph, s: Iterable[int]) -> Fraction:
    """Total weight of edges with both endpoints in ``s``."""
    s = set(s)
    total = Fraction(0)
    for v in s:
        for u, w in g.neighbors(v).items():
            if u > v and u in s:
                total += w
    return total


def cut_weight(g: WeightedGraph, p: Partition) -> Fraction:
    _check_partition(g, p)
    a = p.assignment
    return sum((w for (u, v), w in g.edges.items() if a[u] != a[v]), Fraction(0))


def part_weights(g: WeightedGraph, p: Partition) -> tuple[Fraction, ...]:
    """Induced weight of each part, in part order."""
    _check_partition(g, p)
    out = [Fraction(0)] * p.k
    a = p.assignment
    for (u, v), w in g.edges.items():
        if a[u] == a[v]:
            out[a[u]] += w
    return tuple(out)


def max_part_weight(g: WeightedGraph, p: Partition) -> Fraction:
    return max(part_weights(g, p))


def weight_to_set(g: WeightedGraph, v: int, s: Iterable[int]) -> Fraction:
    """``w_S(v)``: total weight from ``v`` into ``s`` (a self-pair contributes 0)."""
    nb = g.neighbors(v)
    return sum((nb[x] for x in set(s) if x in nb), Fraction(0))


def weighted_degree(g: WeightedGraph, v: int) -> Fraction:
    if g.n == 0:
        raise InvalidGraphError("weighted degree of an empty graph")
    return sum(g.neighbors(v).values(), Fraction(0))


def max_weighted_degree(g: WeightedGraph) -> Fraction:
    if g.n == 0:
        raise InvalidGraphError("maximum weighted degree of an empty graph")
    return max(weighted_degree(g, v) for v in range(g.n))


def avg_weighted_degree(g: WeightedGraph) -> Fraction:
    if g.n == 0:
        raise InvalidGraphError("average weighted degree of an empty graph")
    return 2 * total_weight(g) / g.n


def delete_vertices(g: WeightedGraph, s: Iterable[int]) -> tuple[WeightedGraph, dict[int, int]]:
    """Remove ``s`` and its incident edges.

    Returns the re-indexed remainder and the map from old to new indices of
    the kept vertices (kept vertices keep their relative order).
    """
    s = set(s)
    bad = [v for v in s if not 0 <= v < g.n]
    if bad:
        raise InvalidGraphError(f"vertices {sorted(bad)} out of range for n={g.n}")
    if len(s) >= g.n:
        raise InvalidGraphError("deleting every vertex leaves an empty graph")
    kept = [v for v in range(g.n) if v not in s]
    index = {old: new for new, old in enumerate(kept)}
    edges = {
        (index[u], index[v]): w
        for (u, v), w in g.edges.items()
        if u in index and v in index
    }
    return WeightedGraph(len(kept), edges), index
