import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from judicious import InvalidGraphError, InvalidPartitionError, OracleCapError, WeightedGraph, total_weight
from judicious.instances import apex_graph
from judicious.oracle import (
    CAP_ENV,
    enumerate_kpartitions,
    exact_max_bisection,
    exact_max_kcut,
    exact_min_max_part,
    exists_joint,
    oracle_cap,
    stirling2,
    verify_proposition1,
)

from conftest import brute_cut, brute_joint, brute_max_cut, brute_min_max_part, clique, graphs, random_graph


def test_stirling_numbers():
    assert [stirling2(5, k) for k in range(6)] == [0, 1, 15, 25, 10, 1]
    assert stirling2(12, 4) == 611501
    assert stirling2(13, 2) == 2**12 - 1


@pytest.mark.parametrize("n,k", [(3, 3), (4, 2), (5, 3), (6, 4), (7, 3), (8, 8)])
def test_enumeration_is_complete_and_duplicate_free(n, k):
    seen = set()
    for p in enumerate_kpartitions(n, k, cap=13):
        key = frozenset(frozenset(part) for part in p.parts)
        assert key not in seen and len(key) == k
        seen.add(key)
    assert len(seen) == stirling2(n, k)


def test_enumeration_first_and_last():
    parts = list(enumerate_kpartitions(4, 2))
    assert parts[0].assignment == (0, 0, 0, 1)
    assert parts[-1].assignment == (0, 1, 1, 1)


def test_examples():
    r = exact_max_kcut(clique(4), 2)
    assert r.optimum == 4 and r.enumerated == stirling2(4, 2)
    assert exact_max_kcut(clique(7), 3).optimum == 16
    assert exact_min_max_part(clique(7), 2).optimum == 6
    assert exact_min_max_part(clique(7), 3).optimum == 3
    assert exact_max_kcut(WeightedGraph(5), 2).optimum == 0
    assert exact_max_bisection(clique(5)).optimum == 6


def test_witness_is_lexicographically_first():
    r = exact_max_kcut(clique(4), 2)
    assert r.witness.assignment == (0, 0, 1, 1)
    r = exact_min_max_part(clique(4), 4)
    assert r.witness.assignment == (0, 1, 2, 3) and r.optimum == 0


def test_bisection_respects_sizes():
    # a star: the unrestricted max cut isolates the hub, a bisection cannot
    star = WeightedGraph(6, [(0, v, 1) for v in range(1, 6)])
    assert exact_max_kcut(star, 2).optimum == 5
    r = exact_max_bisection(star)
    assert r.optimum == 3 and sorted(r.witness.sizes()) == [3, 3]


def test_agrees_with_brute_force_on_random_graphs():
    rng = random.Random(8)
    for _ in range(40):
        n = rng.randint(2, 8)
        g = random_graph(rng, n, rng.random())
        edges = dict(g.edges)
        for k in range(2, min(n, 4) + 1):
            mc = exact_max_kcut(g, k)
            mm = exact_min_max_part(g, k)
            assert mc.optimum == brute_max_cut(edges, n, k)
            assert mm.optimum == brute_min_max_part(edges, n, k)
            assert mc.enumerated == mm.enumerated == stirling2(n, k)
            assert brute_cut(edges, mc.witness.assignment) == mc.optimum


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=2, max_n=7), st.data())
def test_joint_matches_brute_force(g, data):
    k = data.draw(st.integers(2, g.n))
    w = total_weight(g)
    top = int(w) + 2
    lower = data.draw(st.fractions(min_value=0, max_value=top, max_denominator=24))
    upper = data.draw(st.fractions(min_value=0, max_value=top, max_denominator=24))
    result = exists_joint(g, k, lower, upper)
    assert result.found == brute_joint(dict(g.edges), g.n, k, lower, upper)
    if result.found:
        edges = dict(g.edges)
        labels = result.witness.assignment
        assert brute_cut(edges, labels) >= lower
    else:
        assert result.enumerated == stirling2(g.n, k)


def test_strict_comparisons():
    k7 = clique(7)
    assert exists_joint(k7, 2, 12, 21).found
    none = exists_joint(k7, 2, 12, 21, strict_cut=True)
    assert not none.found and none.enumerated == stirling2(7, 2)
    assert exists_joint(k7, 2, 0, 6).found
    assert not exists_joint(k7, 2, 0, 6, strict_part=True).found
    assert not exists_joint(clique(4), 2, 0, Fraction(1, 2)).found


def test_cap_and_environment(monkeypatch):
    monkeypatch.delenv(CAP_ENV, raising=False)
    assert oracle_cap() == 13
    with pytest.raises(OracleCapError):
        exact_max_kcut(clique(14), 2)
    monkeypatch.setenv(CAP_ENV, "5")
    assert oracle_cap() == 5
    with pytest.raises(OracleCapError):
        exact_max_kcut(clique(6), 2)
    assert exact_max_kcut(clique(6), 2, cap=6).optimum == 9
    monkeypatch.setenv(CAP_ENV, "many")
    with pytest.raises(OracleCapError):
        oracle_cap()


def test_bad_k():
    with pytest.raises(InvalidPartitionError):
        exact_max_kcut(clique(3), 4)
    with pytest.raises(InvalidPartitionError):
        exact_min_max_part(clique(3), 1)


def test_pruned_counts_cover_everything():
    g = random_graph(random.Random(3), 12, 0.5)
    r = exact_min_max_part(g, 4)
    assert r.enumerated == stirling2(12, 4) == 611501


def test_proposition1_example():
    g = apex_graph(Fraction(1, 4), 5)
    edges = dict(g.edges)
    labels = list(itertools.product((0, 1), repeat=6))
    assert len(labels) == 2**6
    assert max(brute_cut(edges, lab) for lab in labels) == 14
    assert exact_max_kcut(g, 2).optimum == 14 < Fraction(115, 8)
    assert verify_proposition1(Fraction(1, 4), 5)


def test_proposition1_other_values():
    assert verify_proposition1(Fraction(1, 5), 7)
    with pytest.raises(InvalidGraphError):
        verify_proposition1(Fraction(1, 4), 4)
    with pytest.raises(InvalidGraphError):
        verify_proposition1(Fraction(1, 3), 10)
    with pytest.raises(OracleCapError):
        verify_proposition1(Fraction(1, 10), 26)
