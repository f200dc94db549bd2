"""Constructive judicious partitioning.

Every construction follows the same two-stage recipe.  A balanced seed is
built by the method of conditional expectations, so its cut weight is at
least the expected cut of a uniformly random balanced partition.  The seed is
then refined by single-vertex moves until no move strictly increases the cut.
Those two properties (the expectation bound and single-move local
optimality) are all the existence arguments for the bounds actually use about
a "maximum" cut, so the constructions run in polynomial time while keeping
the guarantees.  Each intermediate inequality the arguments rely on is
re-checked at runtime; a failure raises :class:`ProofAssertionError` with the
trace attached instead of returning a possibly wrong partition.

Hot loops use the graph's integer view (weights scaled by the lcm of their
denominators), which is exact.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, NamedTuple

from .bounds import BoundId, BoundParams, eval_bound
from .errors import InvalidGraphError, InvalidPartitionError, ProofAssertionError
from .graph import (
    Partition,
    WeightedGraph,
    cut_weight,
    delete_vertices,
    format_weight,
    part_weights,
    total_weight,
    weight_to_set,
)

__all__ = [
    "Move",
    "AlgorithmTrace",
    "LocalOptimalityCertificate",
    "PartitionOutcome",
    "balanced_capacities",
    "balanced_expectation",
    "default_seed_order",
    "derandomized_balanced_partition",
    "local_search_refine",
    "local_optimality_certificate",
    "judicious_bipartition",
    "judicious_3partition",
    "judicious_kpartition",
    "balanced_kcut",
]


class Move(NamedTuple):
    vertex: int
    source: int
    target: int
    gain: Fraction


def _fmt(x: Any) -> Any:
    if isinstance(x, Fraction):
        return format_weight(x)
    if isinstance(x, (list, tuple)):
        return [_fmt(v) for v in x]
    if isinstance(x, dict):
        return {k: _fmt(v) for k, v in x.items()}
    return x


@dataclass
class AlgorithmTrace:
    """Quantities recorded while a construction runs.

    ``r``, ``c``, ``theta``, ``n3`` and ``i`` are only filled in when the
    3-partition construction has to peel its heaviest part; ``levels``
    holds one record per recursion level of the k-partition construction.
    """

    algorithm: str
    seed_expectation: Fraction | None = None
    moves: list[Move] = field(default_factory=list)
    inner_moves: list[Move] = field(default_factory=list)
    peel_sequence: list[int] = field(default_factory=list)
    pivot: int | None = None
    r: Fraction | None = None
    c: Fraction | None = None
    theta: Fraction | None = None
    n3: int | None = None
    i: int | None = None
    transfers: list[int] = field(default_factory=list)
    r_prime: Fraction | None = None
    u: int | None = None
    branch: str = "seed"
    levels: list[dict[str, Any]] = field(default_factory=list)
    checks: list[str] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        out = {
            "algorithm": self.algorithm,
            "branch": self.branch,
            "seed_expectation": self.seed_expectation,
            "moves": [list(m) for m in self.moves],
            "inner_moves": [list(m) for m in self.inner_moves],
            "peel_sequence": self.peel_sequence,
            "pivot": self.pivot,
            "r": self.r,
            "c": self.c,
            "theta": self.theta,
            "n3": self.n3,
            "i": self.i,
            "transfers": self.transfers,
            "r_prime": self.r_prime,
            "u": self.u,
            "levels": self.levels,
            "checks": self.checks,
        }
        return _fmt(out)

    def summary(self) -> dict[str, Any]:
        """Compact form for reports: counts instead of full move lists."""
        out = self.to_dict()
        out["moves"] = len(self.moves)
        out["inner_moves"] = len(self.inner_moves)
        return out


@dataclass(frozen=True)
class LocalOptimalityCertificate:
    """``margins[v][j] = w_{X_j}(v) - w_{X_part(v)}(v)`` for every vertex and part."""

    margins: tuple[tuple[Fraction, ...], ...]

    @property
    def min_margin(self) -> Fraction:
        return min((m for row in self.margins for m in row), default=Fraction(0))

    @property
    def is_locally_optimal(self) -> bool:
        return self.min_margin >= 0


@dataclass(frozen=True)
class PartitionOutcome:
    partition: Partition
    cut_weight: Fraction
    part_weights: tuple[Fraction, ...]
    trace: AlgorithmTrace

    @property
    def max_part_weight(self) -> Fraction:
        return max(self.part_weights)


class _State:
    """Labelled partition with the table ``to_part[v][j] = w_{X_j}(v)`` (ints)."""

    def __init__(self, nbrs, assign: Sequence[int], k: int):
        n = len(assign)
        self.nbrs = nbrs
        self.k = k
        self.assign = list(assign)
        self.to_part = [[0] * k for _ in range(n)]
        self.size = [0] * k
        self.internal = [0] * k
        for v in range(n):
            row = self.to_part[v]
            for u, w in nbrs[v]:
                row[self.assign[u]] += w
            self.size[self.assign[v]] += 1
        for v in range(n):
            self.internal[self.assign[v]] += self.to_part[v][self.assign[v]]
        self.internal = [x // 2 for x in self.internal]

    def move(self, v: int, b: int) -> None:
        a = self.assign[v]
        if a == b:
            return
        row = self.to_part[v]
        self.internal[a] -= row[a]
        self.internal[b] += row[b]
        for u, w in self.nbrs[v]:
            tp = self.to_part[u]
            tp[a] -= w
            tp[b] += w
        self.size[a] -= 1
        self.size[b] += 1
        self.assign[v] = b

    def members(self, j: int) -> list[int]:
        return [v for v, a in enumerate(self.assign) if a == j]

    def heaviest(self, among: Sequence[int] | None = None) -> int:
        among = range(self.k) if among is None else among
        return max(among, key=lambda j: (self.internal[j], -j))


def _require(ok: bool, claim: str, trace: AlgorithmTrace, **context: Any) -> None:
    if not ok:
        payload = trace.to_dict()
        payload["failed_claim"] = claim
        payload["context"] = _fmt(context)
        raise ProofAssertionError(f"claim failed: {claim}", payload)
    trace.checks.append(claim)


def _check_k(g: WeightedGraph, k: int) -> None:
    if k < 2:
        raise InvalidPartitionError(f"k must be at least 2, got {k}")
    if k > g.n:
        raise InvalidPartitionError(f"k={k} exceeds the number of vertices n={g.n}")


def balanced_capacities(n: int, k: int) -> list[int]:
    """Part sizes of a balanced k-partition; the first ``n mod k`` parts are larger."""
    q, t = divmod(n, k)
    return [q + 1 if p < t else q for p in range(k)]


def balanced_expectation(g: WeightedGraph, k: int) -> Fraction:
    """Expected cut weight of a uniformly random balanced k-partition of ``g``."""
    _check_k(g, k)
    n = g.n
    same = sum(c * (c - 1) for c in balanced_capacities(n, k))
    return total_weight(g) * (1 - Fraction(same, n * (n - 1)))


def default_seed_order(g: WeightedGraph) -> list[int]:
    """Vertices by decreasing weighted degree, ties by index."""
    iv = g.integer_view()
    return sorted(range(g.n), key=lambda v: (-sum(w for _, w in iv.nbrs[v]), v))


def _derandomized(g: WeightedGraph, k: int, order: Sequence[int]) -> list[int]:
    iv = g.integer_view()
    nbrs = iv.nbrs
    n = g.n
    cap = balanced_capacities(n, k)
    assign = [-1] * n
    to_part = [[0] * k for _ in range(n)]  # weight from v to each assigned part
    deg_u = [sum(w for _, w in nbrs[v]) for v in range(n)]  # weight to unassigned others
    part_to_u = [0] * k  # weight between assigned part p and the unassigned set
    w_uu = iv.total  # weight inside the unassigned set
    s = n
    for x in order:
        if assign[x] != -1:
            raise InvalidPartitionError(f"seed order repeats vertex {x}")
        s1 = s - 1
        wu1 = deg_u[x]
        w_rest = w_uu - wu1
        tx = to_part[x]
        best_p, best = -1, None
        for p in range(k):
            c = cap[p]
            if c == 0:
                continue
            # conditional expectation after placing x in p, up to a shared
            # constant and the positive factor s1*(s1-1)
            if s1 >= 2:
                score = (
                    -tx[p] * s1 * (s1 - 1)
                    + (part_to_u[p] - tx[p]) * (s1 - 1)
                    - wu1 * c * (s1 - 1)
                    + 2 * w_rest * (c - 1)
                )
            elif s1 == 1:
                score = -tx[p] + (part_to_u[p] - tx[p]) - wu1 * c
            else:
                score = -tx[p]
            if best is None or score > best:
                best_p, best = p, score
        p = best_p
        assign[x] = p
        cap[p] -= 1
        s = s1
        for q in range(k):
            part_to_u[q] -= tx[q]
        part_to_u[p] += wu1
        w_uu = w_rest
        for y, w in nbrs[x]:
            if assign[y] == -1:
                to_part[y][p] += w
                deg_u[y] -= w
    if -1 in assign:
        raise InvalidPartitionError("seed order does not cover every vertex")
    return assign


def derandomized_balanced_partition(
    g: WeightedGraph, k: int, seed_order: Sequence[int] | None = None
) -> Partition:
    """Balanced k-partition whose cut is at least the random balanced expectation.

    Vertices are placed one at a time (in ``seed_order``, default
    :func:`default_seed_order`) into the part with remaining capacity that
    maximises the conditional expected cut; ties go to the lowest part index.
    """
    _check_k(g, k)
    order = default_seed_order(g) if seed_order is None else list(seed_order)
    if sorted(order) != list(range(g.n)):
        raise InvalidPartitionError("seed_order must be a permutation of the vertices")
    return Partition(tuple(_derandomized(g, k, order)), k)


def _local_search(
    state: _State, allow_empty: bool, scale: int, log: list[Move], relabel: Sequence[int] | None = None
) -> None:
    # first-improvement single-vertex moves, restarting the scan after each move
    n, k = len(state.assign), state.k
    assign, to_part, size = state.assign, state.to_part, state.size
    while True:
        for v in range(n):
            a = assign[v]
            row = to_part[v]
            own = row[a]
            if own == 0 or (not allow_empty and size[a] == 1):
                continue
            target = next((j for j in range(k) if j != a and row[j] < own), None)
            if target is None:
                continue
            gain = Fraction(own - row[target], scale)
            state.move(v, target)
            log.append(Move(v if relabel is None else relabel[v], a, target, gain))
            break
        else:
            return


def local_optimality_certificate(g: WeightedGraph, p: Partition) -> LocalOptimalityCertificate:
    parts = [set(x) for x in p.parts]
    margins = []
    for v in range(g.n):
        to = [weight_to_set(g, v, s) for s in parts]
        own = to[p.assignment[v]]
        margins.append(tuple(t - own for t in to))
    return LocalOptimalityCertificate(tuple(margins))


def _repair_empty(state: _State) -> None:
    # Moving a vertex into an empty part never lowers the cut and never raises
    # any induced weight, so every bound that held still holds afterwards.
    for j in range(state.k):
        if state.size[j] == 0:
            donors = [v for v, a in enumerate(state.assign) if state.size[a] > 1]
            v = max(donors, key=lambda u: (state.to_part[u][state.assign[u]], -u))
            state.move(v, j)


def local_search_refine(
    g: WeightedGraph, p: Partition, allow_empty: bool = False
) -> tuple[Partition, LocalOptimalityCertificate]:
    """Apply strictly improving single-vertex moves until none is left.

    With ``allow_empty=False`` a move that would empty a part is skipped.
    (With non-negative weights the sole vertex of a part never has an
    improving move anyway, so the result always has ``p.k`` non-empty parts.)
    """
    if p.n != g.n:
        raise InvalidPartitionError(f"partition covers {p.n} vertices, graph has {g.n}")
    iv = g.integer_view()
    state = _State(iv.nbrs, p.assignment, p.k)
    _local_search(state, allow_empty, iv.scale, [])
    _repair_empty(state)
    out = Partition(tuple(state.assign), p.k)
    return out, local_optimality_certificate(g, out)


def _seeded_state(g: WeightedGraph, k: int, trace: AlgorithmTrace | None, allow_empty: bool = False) -> _State:
    iv = g.integer_view()
    state = _State(iv.nbrs, _derandomized(g, k, default_seed_order(g)), k)
    log: list[Move] = [] if trace is None else trace.moves
    _local_search(state, allow_empty, iv.scale, log)
    return state


def _outcome(g: WeightedGraph, state: _State, trace: AlgorithmTrace) -> PartitionOutcome:
    _repair_empty(state)
    p = Partition(tuple(state.assign), state.k)
    return PartitionOutcome(p, cut_weight(g, p), part_weights(g, p), trace)


def _params(g: WeightedGraph, k: int) -> BoundParams:
    return BoundParams.from_graph(g, k)


def _seed_checks(g: WeightedGraph, state: _State, trace: AlgorithmTrace, record: bool = True) -> None:
    iv = g.integer_view()
    cut = Fraction(iv.total - sum(state.internal), iv.scale)
    expectation = balanced_expectation(g, state.k)
    if record:
        trace.seed_expectation = expectation
    _require(cut >= expectation, "seed cut >= balanced expectation", trace, cut=cut)
    local_opt = all(
        state.to_part[v][j] >= state.to_part[v][state.assign[v]]
        for v in range(g.n)
        for j in range(state.k)
    )
    _require(local_opt, "single-move local optimality", trace)


def judicious_bipartition(g: WeightedGraph) -> PartitionOutcome:
    """Bipartition with cut >= w/2 + d_w/4 and heavier side <= w/4 + Delta_w/8.

    The locally optimal balanced seed already meets the cut bound.  If its
    heavier side X is too heavy, vertices are moved from X to the other side
    (largest ``w_X(v)`` first) until removing a single vertex v would bring X
    under the threshold while X itself is still above it; moving that v as
    well gives the result.
    """
    if g.n < 2:
        raise InvalidGraphError(f"a bipartition needs n >= 2, got n={g.n}")
    trace = AlgorithmTrace("maxd")
    state = _seeded_state(g, 2, trace)
    _seed_checks(g, state, trace)
    return _maxd_from(g, state, trace)


def _maxd_from(g: WeightedGraph, state: _State, trace: AlgorithmTrace) -> PartitionOutcome:
    # ``state`` must be locally optimal; as with the 3-part version, the seed's
    # cut bound is only needed when nothing is peeled
    iv = g.integer_view()
    params = _params(g, 2)
    W, D = params.w, params.max_degree
    cut_lower = eval_bound(BoundId.MaxdCutLower, params)
    upper = eval_bound(BoundId.MaxdPartUpper, params)
    u_scaled = upper * iv.scale

    X = state.heaviest()
    Y = 1 - X
    if state.internal[X] > u_scaled:
        trace.branch = "peel"
        while True:
            members = state.members(X)
            v = max(members, key=lambda u: (state.to_part[u][X], -u))
            if state.internal[X] - state.to_part[v][X] <= u_scaled:
                break
            state.move(v, Y)
            trace.peel_sequence.append(v)
        trace.pivot = v
        gx = Fraction(state.internal[X], iv.scale)
        _require(gx > upper, "(a) heavy side still above threshold", trace, weight=gx)
        state.move(v, Y)
        cut = Fraction(iv.total - sum(state.internal), iv.scale)
        _require(cut >= 2 * gx, "cut >= 2 w(G[X'])", trace, cut=cut)
        _require(cut > W / 2 + D / 4, "cut > w/2 + Delta/4", trace, cut=cut)
    out = _outcome(g, state, trace)
    _require(out.cut_weight >= cut_lower, "maxd (i)", trace, cut=out.cut_weight)
    _require(out.max_part_weight <= upper, "maxd (ii)", trace, part=out.max_part_weight)
    return out


def judicious_3partition(g: WeightedGraph) -> PartitionOutcome:
    """3-partition with cut >= 2w/3 + d_w/3 and every part <= (w + Delta_w)/9.

    When the heaviest part X3 of the locally optimal seed is too heavy it is
    shrunk to a minimal over-threshold set X3* (every single removal lands
    under the threshold), its vertex x of largest inner degree is dropped to
    give X3', and the rest of the graph is re-bisected.  A final repair moves
    vertices out of an over-threshold side and, if needed, one vertex u back
    into X3'.
    """
    if g.n < 3:
        raise InvalidGraphError(f"a 3-partition needs n >= 3, got n={g.n}")
    trace = AlgorithmTrace("max32")
    state = _seeded_state(g, 3, trace)
    _seed_checks(g, state, trace)
    return _max32_from(g, state, trace)


def _max32_from(g: WeightedGraph, state: _State, trace: AlgorithmTrace) -> PartitionOutcome:
    # ``state`` must be locally optimal; the cut bound of the untouched seed
    # is only relied on when no peeling is needed.
    iv = g.integer_view()
    scale = iv.scale
    n = g.n
    params = _params(g, 3)
    W, D, dw = params.w, params.max_degree, params.avg_degree
    cut_lower = eval_bound(BoundId.Max32CutLower, params)
    U = eval_bound(BoundId.Max32PartUpper, params)
    u_scaled = U * scale

    h = state.heaviest()
    if state.internal[h] <= u_scaled:
        out = _outcome(g, state, trace)
        _require(out.cut_weight >= cut_lower, "max32 (i)", trace, cut=out.cut_weight)
        _require(out.max_part_weight <= U, "max32 (ii)", trace, part=out.max_part_weight)
        return out

    trace.branch = "peel"
    # shrink X3 to X3*: keep (a) w(G[S]) > U, stop once every removal gives <= U
    S = set(state.members(h))
    ws = {v: state.to_part[v][h] for v in S}
    w_s = state.internal[h]
    while True:
        removable = [y for y in S if w_s - ws[y] > u_scaled]
        if not removable:
            break
        y = max(removable, key=lambda u: (ws[u], -u))
        S.remove(y)
        w_s -= ws[y]
        for u, w in iv.nbrs[y]:
            if u in S:
                ws[u] -= w
        trace.peel_sequence.append(y)
    _require(w_s > u_scaled, "(a) w(G[X3*]) > U", trace)
    x = max(S, key=lambda u: (ws[u], -u))
    trace.pivot = x
    X3p = sorted(S - {x})
    n3 = len(X3p)
    trace.n3 = n3
    wx = Fraction(ws[x], scale)  # w_{X3'}(x)
    w_x3p = Fraction(w_s - ws[x], scale)  # w(G[X3'])
    r = U - w_x3p
    trace.r = r
    _require(0 <= r < wx <= D / 3, "0 <= r < w_X3'(x) <= Delta/3", trace, r=r, wx=wx)
    c = 9 * r / D
    trace.c = c
    _require(0 <= c < 3, "0 <= c < 3", trace, c=c)
    x3p_set = set(X3p)
    out_x3p = Fraction(
        sum(w for y in X3p for u, w in iv.nbrs[y] if u not in x3p_set), scale
    )  # w(X3', V - X3')
    theta = out_x3p - 4 * W / 9 - 4 * D / 9 + r
    trace.theta = theta
    _require(theta >= 3 * (wx - r) >= 0, "theta >= 3(w_X3'(x) - r) >= 0", trace, theta=theta)
    m = n - n3
    _require(m >= 3, "n - n3 >= 3", trace, n3=n3)
    i = n - 3 * n3
    trace.i = i
    if n3 >= 2:
        lhs = theta / 2 * (1 - Fraction(1, m))
        rhs = Fraction(m - 1, 3 * m * (n3 - 1)) * W + (2 - c * (n3 + 1)) * (m - 1) / (
            6 * m * (n3 - 1)
        ) * D
        _require(lhs >= rhs, "theta lower bound for n3 >= 2", trace, lhs=lhs, rhs=rhs)
    delta_lb = max((2 * W + 3 * theta) / (3 * n3 - 2 + c), (4 * W - 3 * theta) / (3 * n - 3 * n3 + 2 - c))
    _require(D >= delta_lb, "Delta lower bound from average degrees", trace, bound=delta_lb)

    # bisect G' = G - X3' from a fresh seed
    sub, index = delete_vertices(g, X3p)
    back = sorted(index, key=index.__getitem__)
    sub_iv = sub.integer_view()
    sub_state = _State(sub_iv.nbrs, _derandomized(sub, 2, default_seed_order(sub)), 2)
    _local_search(sub_state, True, sub_iv.scale, trace.inner_moves, relabel=back)
    w_sub = Fraction(sub_iv.total, sub_iv.scale)
    cut_sub = Fraction(sub_iv.total - sum(sub_state.internal), sub_iv.scale)
    tp = 1 if m % 2 == 0 else 0
    _require(
        cut_sub >= (Fraction(1, 2) + Fraction(1, 2 * (m - tp))) * w_sub,
        "bisection of G - X3' meets the balanced-cut bound",
        trace,
        cut=cut_sub,
    )
    assign = [2] * n
    for new, old in enumerate(back):
        assign[old] = sub_state.assign[new]
    state = _State(iv.nbrs, assign, 3)
    cut = Fraction(iv.total - sum(state.internal), scale)
    surplus = cut - 2 * W / 3 - dw / 3
    mt = m - tp
    line1 = (
        Fraction(3 * mt - 5, 18 * mt) * D + 2 * c / (18 * mt) * D
        - Fraction(4 * n - 6 * n3 - 6 * tp, 9 * n * mt) * W
        + theta / 2 * (1 - Fraction(1, mt))
    )
    line2 = (
        (3 * m - 5 + 2 * c) / (18 * m) * D
        - Fraction(4 * n - 6 * n3, 9 * n * m) * W
        + theta / 2 * (1 - Fraction(1, m))
    )
    _require(surplus >= line1 >= line2, "3-cut surplus lower bounds", trace, surplus=surplus)
    if n3 >= 2:
        line3 = (1 - c) * (3 * (m - 1) * (n3 + 1) - 2 * (n3 - 1)) / (18 * m * (n3 - 1)) * D + Fraction(
            12 * n3 * n3 + (11 * i - 3) * n3 + 3 * i * i + i, 9 * n * m * (n3 - 1)
        ) * W
        _require(surplus >= line3, "3-cut surplus bound for n3 >= 2", trace, surplus=surplus)
    _require(cut >= cut_lower, "w(X1', X2', X3') >= 2w/3 + d_w/3", trace, cut=cut)

    if max(state.internal[0], state.internal[1]) > u_scaled:
        trace.branch = "transfer"
        A2 = state.heaviest((0, 1))
        A1 = 1 - A2
        u = -1
        while state.internal[A2] > u_scaled:
            u = max(state.members(A2), key=lambda v: (state.to_part[v][A2], -v))
            state.move(u, A1)
            trace.transfers.append(u)
        trace.u = u
        r1 = U - Fraction(state.internal[A2], scale)
        trace.r_prime = r1
        _require(r1 >= 0 and Fraction(state.to_part[u][A2], scale) >= r1, "0 <= r' <= w_X2''(u)", trace)
        cut = Fraction(iv.total - sum(state.internal), scale)
        _require(cut >= 6 * W / 9 + 6 * D / 9 - r + theta >= 2 * W / 3 + D / 3, "cut after transfers", trace, cut=cut)
        w1 = Fraction(state.internal[A1], scale)
        _require(w1 <= W / 9 - 8 * D / 9 + 2 * r + r1, "w(G[X1'']) upper estimate", trace, w1=w1)
        if w1 > U:
            trace.branch = "u-transfer"
            _require(r1 > (D - r) / 2, "r' > (Delta - r)/2", trace, r_prime=r1)
            wu3 = Fraction(state.to_part[u][2], scale)
            _require(wu3 < r, "w_X3'(u) < r", trace, wu3=wu3)
            state.move(u, 2)
            w3 = Fraction(state.internal[2], scale)
            w2 = Fraction(state.internal[A2], scale)
            w1 = Fraction(state.internal[A1], scale)
            _require(w3 < U, "w(G[X3*]) < U", trace, w3=w3)
            _require(w2 <= U, "w(G[X2*]) <= U", trace, w2=w2)
            _require(w1 <= W / 9 - 8 * D / 9 + 2 * r <= W / 9, "w(G[X1*]) <= w/9", trace, w1=w1)
            cut = Fraction(iv.total - sum(state.internal), scale)
            _require(
                cut > 2 * W / 3 + D / 3 + D / 2 - 3 * r / 2,
                "final 3-cut after moving u",
                trace,
                cut=cut,
            )
    out = _outcome(g, state, trace)
    _require(out.cut_weight >= cut_lower, "max32 (i)", trace, cut=out.cut_weight)
    _require(out.max_part_weight <= U, "max32 (ii)", trace, part=out.max_part_weight)
    return out


def _maxk_assign(
    g: WeightedGraph, k: int, trace: AlgorithmTrace, depth: int, start: Sequence[int] | None = None
) -> list[int]:
    if k == 2:
        base = judicious_bipartition(g)
        trace.levels.append({"depth": depth, "k": 2, "n": g.n, "case": "base", "branch": base.trace.branch})
        return list(base.partition.assignment)
    if g.n == k:
        trace.levels.append({"depth": depth, "k": k, "n": g.n, "case": "singletons"})
        return list(range(k))
    iv = g.integer_view()
    scale = iv.scale
    moves: list[Move] = trace.moves if depth == 0 else []
    if start is None:
        state = _State(iv.nbrs, _derandomized(g, k, default_seed_order(g)), k)
        _local_search(state, False, scale, moves)
        _seed_checks(g, state, trace, record=depth == 0)
    else:
        state = _State(iv.nbrs, start, k)
        _local_search(state, False, scale, moves)
    params = _params(g, k)
    W, D = params.w, params.max_degree
    U = eval_bound(BoundId.MaxkPartUpper, params)
    u_scaled = U * scale
    h = state.heaviest()
    level: dict[str, Any] = {"depth": depth, "k": k, "n": g.n}
    trace.levels.append(level)
    if state.internal[h] <= u_scaled:
        level["case"] = "direct"
        return state.assign

    S = set(state.members(h))
    ws = {v: state.to_part[v][h] for v in S}
    w_s = state.internal[h]
    peel: list[int] = []
    x = -1
    wx = 0
    while w_s > u_scaled:
        x = max(S, key=lambda u: (ws[u], -u))
        wx = ws[x]
        S.remove(x)
        w_s -= wx
        for u, w in iv.nbrs[x]:
            if u in S:
                ws[u] -= w
        peel.append(x)
    level["peel"] = peel
    r = U - Fraction(w_s, scale)
    level["r"] = r
    deg_x = Fraction(sum(w for _, w in iv.nbrs[x]), scale)
    _require(
        0 <= r <= Fraction(wx, scale) <= deg_x / k <= D / k,
        "0 <= r <= w_X1'(x) <= w(x)/k <= Delta/k",
        trace,
        r=r,
        level=depth,
    )
    X1p = sorted(S)
    x1_set = set(X1p)
    boundary = Fraction(sum(w for v in X1p for u, w in iv.nbrs[v] if u not in x1_set), scale)
    w_x1p = Fraction(w_s, scale)
    _require(boundary >= 2 * (k - 1) * w_x1p + k * r, "w(X1', V - X1') >= 2(k-1)w(G[X1']) + kr", trace)
    sub, index = delete_vertices(g, X1p)
    w_sub = Fraction(sub.integer_view().total, sub.integer_view().scale)
    _require(
        w_sub <= Fraction(k - 1, k) ** 2 * W - Fraction((k - 1) * (2 * k - 1), 2 * k * k) * D + (k - 1) * r,
        "w(G') upper estimate",
        trace,
    )
    sub_params = _params(sub, k - 1)
    if sub_params.max_degree <= D - r:
        level["case"] = 1
        part_one = X1p
    else:
        level["case"] = 2
        back = sorted(index, key=index.__getitem__)
        sub_iv = sub.integer_view()
        y_new = max(range(sub.n), key=lambda u: (sum(w for _, w in sub_iv.nbrs[u]), -u))
        y = back[y_new]
        wy_sub = Fraction(sum(w for _, w in sub_iv.nbrs[y_new]), sub_iv.scale)
        _require(wy_sub > D - r, "w_G'(y) > Delta - r", trace, y=y)
        wy1 = Fraction(sum(w for u, w in iv.nbrs[y] if u in x1_set), scale)
        _require(wy1 < r, "w_X1''(y) < r", trace, y=y)
        level["y"] = y
        part_one = sorted(X1p + [y])
        sub, index = delete_vertices(g, part_one)
        sub_params = _params(sub, k - 1)
    _require(sub.n >= k - 1, "remaining graph has at least k - 1 vertices", trace)
    back = sorted(index, key=index.__getitem__)
    sub_assign = _maxk_assign(sub, k - 1, trace, depth + 1)
    sub_upper = eval_bound(BoundId.MaxkPartUpper, sub_params)
    assign = [0] * g.n
    for new, old in enumerate(back):
        assign[old] = sub_assign[new] + 1
    sp = Partition(tuple(sub_assign), k - 1)
    sub_max = max(part_weights(sub, sp))
    _require(sub_max <= sub_upper, "recursive part bound", trace, level=depth)
    _require(sub_upper <= U, "recursive bound implies the k-part bound", trace, level=depth)
    return assign


def judicious_kpartition(g: WeightedGraph, k: int) -> PartitionOutcome:
    """k-partition whose heaviest part weighs at most w/k^2 + (k-1)/(2k^2) Delta_w.

    Works by induction on k: peel the heaviest part of a locally optimal
    seed down to the threshold, set it aside (with one extra vertex of large
    remaining degree when needed) and recurse with k - 1 parts on the rest.
    """
    _check_k(g, k)
    trace = AlgorithmTrace("maxk")
    assign = _maxk_assign(g, k, trace, 0)
    first = trace.levels[0]
    trace.branch = str(first.get("case"))
    if first.get("case") == "base":
        trace.branch = first.get("branch", "seed")
    if "r" in first:
        trace.r = first["r"]
        trace.peel_sequence = list(first["peel"])
    iv = g.integer_view()
    state = _State(iv.nbrs, assign, k)
    out = _outcome(g, state, trace)
    U = eval_bound(BoundId.MaxkPartUpper, _params(g, k))
    _require(out.max_part_weight <= U, "maxk", trace, part=out.max_part_weight)
    return out


def balanced_kcut(g: WeightedGraph, k: int) -> PartitionOutcome:
    """Balanced seed plus local search; cut meets the balanced k-cut bound."""
    _check_k(g, k)
    trace = AlgorithmTrace("balanced")
    state = _seeded_state(g, k, trace)
    _seed_checks(g, state, trace)
    out = _outcome(g, state, trace)
    lower = eval_bound(BoundId.KkkkCutLower, _params(g, k))
    _require(out.cut_weight >= lower, "balanced k-cut bound", trace, cut=out.cut_weight)
    return out
