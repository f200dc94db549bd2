"""Shared fixtures and an independent brute-force reference.

The helpers here deliberately avoid the package's own weight functions and
partition enumerator: labelings are all ``k**n`` tuples from
``itertools.product`` and weights are summed straight from the edge dict.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from judicious import WeightedGraph


def brute_cut(edges: dict, labels) -> Fraction:
    return sum((w for (u, v), w in edges.items() if labels[u] != labels[v]), Fraction(0))


def brute_parts(edges: dict, labels, k: int) -> list[Fraction]:
    out = [Fraction(0)] * k
    for (u, v), w in edges.items():
        if labels[u] == labels[v]:
            out[labels[u]] += w
    return out


def surjective_labelings(n: int, k: int):
    for labels in itertools.product(range(k), repeat=n):
        if len(set(labels)) == k:
            yield labels


def brute_max_cut(edges: dict, n: int, k: int) -> Fraction:
    return max(brute_cut(edges, lab) for lab in surjective_labelings(n, k))


def brute_min_max_part(edges: dict, n: int, k: int) -> Fraction:
    return min(max(brute_parts(edges, lab, k)) for lab in surjective_labelings(n, k))


def brute_joint(edges: dict, n: int, k: int, lower: Fraction, upper: Fraction) -> bool:
    return any(
        brute_cut(edges, lab) >= lower and max(brute_parts(edges, lab, k)) <= upper
        for lab in surjective_labelings(n, k)
    )


def clique(n: int) -> WeightedGraph:
    return WeightedGraph(n, [(u, v, 1) for u, v in itertools.combinations(range(n), 2)])


def random_graph(rng: random.Random, n: int, p: float, weights=(1, 2, 3, Fraction(1, 2), Fraction(5, 3))) -> WeightedGraph:
    edges = [(u, v, rng.choice(weights)) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]
    return WeightedGraph(n, edges)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8, max_weight: int = 12):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    present = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    weight = st.fractions(min_value=Fraction(1, max_weight), max_value=max_weight, max_denominator=max_weight)
    edges = [(u, v, draw(weight)) for (u, v), keep in zip(pairs, present) if keep]
    return WeightedGraph(n, edges)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
