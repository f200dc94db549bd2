import itertools
import pickle
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from judicious import (
    InvalidGraphError,
    InvalidPartitionError,
    Partition,
    WeightedGraph,
    avg_weighted_degree,
    cut_weight,
    delete_vertices,
    induced_weight,
    max_part_weight,
    max_weighted_degree,
    part_weights,
    total_weight,
    weight_to_set,
    weighted_degree,
)
from judicious.instances import apex_graph, complete_tight

from conftest import brute_cut, brute_parts, clique, graphs, random_graph


def test_total_weight_examples():
    assert total_weight(clique(7)) == 21
    assert total_weight(WeightedGraph(5)) == 0
    # 2cn^2 + C(n,2) with c = 1/4, n = 5, summed from the edge list
    g = apex_graph(Fraction(1, 4), 5)
    assert total_weight(g) == sum(g.edges.values()) == Fraction(45, 2)


def test_induced_weight_examples():
    k7 = clique(7)
    assert induced_weight(k7, range(4)) == 6
    assert induced_weight(k7, []) == 0
    assert induced_weight(k7, [3]) == 0
    # K_{3q+1} with q = 2: a part of q + 1 vertices holds C(q+1, 2) edges
    assert induced_weight(complete_tight(3, 2), [0, 1, 2]) == 3


def test_cut_weight_examples():
    assert cut_weight(clique(4), Partition((0, 1, 2, 2), 3)) == 5
    g = clique(5)
    assert cut_weight(g, Partition(tuple(range(5)), 5)) == total_weight(g)
    assert cut_weight(clique(7), Partition((0, 0, 0, 1, 1, 1, 1), 2)) == 12


def test_weight_to_set_examples():
    assert weight_to_set(clique(5), 0, {1, 2}) == 2
    assert weight_to_set(clique(5), 0, set()) == 0
    assert weight_to_set(clique(5), 0, {0, 1}) == 1
    g = apex_graph(Fraction(1, 4), 5)
    assert weight_to_set(g, 5, range(5)) == Fraction(25, 2)


def test_degree_examples():
    k7 = clique(7)
    assert max_weighted_degree(k7) == 6
    assert avg_weighted_degree(k7) == 6
    assert weighted_degree(k7, 3) == 6
    assert max_weighted_degree(apex_graph(Fraction(1, 4), 5)) == Fraction(25, 2)
    assert max_weighted_degree(complete_tight(3, 2)) == 6


@pytest.mark.parametrize("fn", [max_weighted_degree, avg_weighted_degree])
def test_degree_of_empty_graph_rejected(fn):
    with pytest.raises(InvalidGraphError):
        fn(WeightedGraph(0))


def test_weighted_degree_empty_graph_rejected():
    with pytest.raises(InvalidGraphError):
        weighted_degree(WeightedGraph(0), 0)


def test_delete_vertices_examples():
    k7 = clique(7)
    sub, index = delete_vertices(k7, [1, 3, 5])
    assert sub == clique(4)
    assert index == {0: 0, 2: 1, 4: 2, 6: 3}
    same, index = delete_vertices(k7, [])
    assert same == k7 and index == {v: v for v in range(7)}
    g = apex_graph(Fraction(1, 4), 5)
    assert delete_vertices(g, [5])[0] == clique(5)


def test_delete_all_vertices_rejected():
    with pytest.raises(InvalidGraphError):
        delete_vertices(clique(3), [0, 1, 2])
    with pytest.raises(InvalidGraphError):
        delete_vertices(clique(3), [7])


def test_graph_construction_rules():
    g = WeightedGraph(3, [(0, 1, 1), (1, 0, "1/2"), (1, 2, 0)])
    assert dict(g.edges) == {(0, 1): Fraction(3, 2)}
    assert g.weight(1, 0) == Fraction(3, 2) and g.weight(1, 2) == 0
    assert WeightedGraph(2, {(1, 0): "0.1"}).weight(0, 1) == Fraction(1, 10)
    with pytest.raises(InvalidGraphError):
        WeightedGraph(2, [(0, 0, 1)])
    with pytest.raises(InvalidGraphError):
        WeightedGraph(2, [(0, 1, -1)])
    with pytest.raises(InvalidGraphError):
        WeightedGraph(2, [(0, 2, 1)])
    with pytest.raises(InvalidGraphError):
        WeightedGraph(-1)
    with pytest.raises(InvalidGraphError):
        WeightedGraph(2, [(0, 1, "abc")])


def test_graph_is_immutable_and_hashable():
    g = clique(4)
    with pytest.raises(TypeError):
        g.edges[(0, 1)] = 5  # type: ignore[index]
    assert hash(g) == hash(clique(4))
    assert pickle.loads(pickle.dumps(g)) == g
    assert g.is_unweighted and not WeightedGraph(2, [(0, 1, 2)]).is_unweighted


def test_partition_validation():
    assert Partition.from_parts([[2, 0], [1]]).assignment == (0, 1, 0)
    with pytest.raises(InvalidPartitionError):
        Partition((0, 0, 0), 1)
    with pytest.raises(InvalidPartitionError):
        Partition((0, 0, 2), 3)  # part 1 empty
    with pytest.raises(InvalidPartitionError):
        Partition((0, 1), 3)  # k > n
    with pytest.raises(InvalidPartitionError):
        Partition((0, 5), 2)
    with pytest.raises(InvalidPartitionError):
        Partition.from_parts([[0, 1], [1]])
    with pytest.raises(InvalidPartitionError):
        Partition.from_parts([[0], [2]], 3)


def test_partition_must_match_graph():
    with pytest.raises(InvalidPartitionError):
        cut_weight(clique(4), Partition((0, 1, 1), 2))


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=2), st.data())
def test_cut_plus_parts_is_total(g, data):
    k = data.draw(st.integers(2, g.n))
    labels = list(range(k)) + [data.draw(st.integers(0, k - 1)) for _ in range(g.n - k)]
    labels = data.draw(st.permutations(labels))
    p = Partition(tuple(labels), k)
    edges = dict(g.edges)
    assert cut_weight(g, p) == brute_cut(edges, labels)
    assert list(part_weights(g, p)) == brute_parts(edges, labels, k)
    assert cut_weight(g, p) + sum(part_weights(g, p)) == total_weight(g)
    assert max_part_weight(g, p) == max(part_weights(g, p))
    for j, part in enumerate(p.parts):
        assert induced_weight(g, part) == part_weights(g, p)[j]


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=1))
def test_degree_sum_is_twice_total(g):
    assert sum(weighted_degree(g, v) for v in range(g.n)) == 2 * total_weight(g)


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=1), st.data())
def test_weight_to_set_additive(g, data):
    v = data.draw(st.integers(0, g.n - 1))
    s = data.draw(st.sets(st.integers(0, g.n - 1)))
    t = data.draw(st.sets(st.integers(0, g.n - 1))) - s
    assert weight_to_set(g, v, s | t) == weight_to_set(g, v, s) + weight_to_set(g, v, t)


def test_delete_vertices_bookkeeping_on_random_graphs():
    rng = random.Random(1)
    for _ in range(1000):
        n = rng.randint(2, 14)
        g = random_graph(rng, n, rng.random())
        s = set(rng.sample(range(n), rng.randint(0, n - 1)))
        sub, index = delete_vertices(g, s)
        rest = set(range(n)) - s
        crossing = sum((w for (u, v), w in g.edges.items() if (u in s) != (v in s)), Fraction(0))
        assert total_weight(sub) == total_weight(g) - induced_weight(g, s) - crossing
        for (u, v), w in sub.edges.items():
            back = {new: old for old, new in index.items()}
            assert g.weight(back[u], back[v]) == w
        assert sorted(index) == sorted(rest)


def test_integer_view_matches_weights():
    g = WeightedGraph(3, [(0, 1, "1/6"), (1, 2, "3/4")])
    iv = g.integer_view()
    assert iv.scale == 12
    assert iv.total == 2 + 9
    m = iv.matrix()
    assert m[0][1] == m[1][0] == 2 and m[2][1] == 9
    for (u, v), w in g.edges.items():
        assert Fraction(m[u][v], iv.scale) == w


def test_complete_graph_pairs():
    g = clique(6)
    assert set(g.edges) == set(itertools.combinations(range(6), 2))
