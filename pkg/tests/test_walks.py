from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bicyclic_estrada.enumerate import enumerate_connected
from bicyclic_estrada.graph import Graph, build_theta, path_graph, subgraph_delete
from bicyclic_estrada.walks import (
    DOMINATED,
    DOMINATES,
    EQUAL,
    INCOMPARABLE,
    UNDETERMINED,
    compare_sequences,
    dominance,
    moment_table,
    spectral_moment,
    spectral_moments,
    walk_count,
    walk_count_through,
    walk_table,
    walk_table_through,
)


def dfs_walks(G, u, v, k, through=None):
    """Enumerate every vertex sequence of length k+1 by explicit DFS."""
    count = 0

    def go(x, steps, seen):
        nonlocal count
        if steps == k:
            if x == v and (through is None or seen):
                count += 1
            return
        for y in G.neighbors(x):
            go(y, steps + 1, seen or y == through)

    go(u, 0, u == through)
    return count


class TestExamples:
    def test_k0_k1(self):
        G = build_theta(3, 2, 1)
        for u, v in product(range(G.n), repeat=2):
            assert walk_count(G, u, v, 0) == int(u == v)
            assert walk_count(G, u, v, 1) == int(G.has_edge(u, v))

    def test_theta_degree_counts(self):
        G = build_theta(3, 3, 2)
        assert walk_count(G, 0, 0, 2) == 3
        internal = [w for w in range(G.n) if G.degree(w) == 2]
        assert all(walk_count(G, w, w, 2) == 2 for w in internal)

    def test_moments_basic(self):
        G = build_theta(2, 2, 1)
        assert spectral_moment(G, 0) == G.n
        assert spectral_moment(G, 2) == 2 * G.m
        assert spectral_moment(G, 3) == 12

    def test_through(self):
        P = path_graph(3)
        assert walk_count_through(P, 0, 0, 1, 2) == 1
        G = build_theta(3, 2, 2)
        for k in range(8):
            assert walk_count_through(G, 0, 3, 0, k) == walk_count(G, 0, 3, k)

    def test_through_decomposition(self):
        G = build_theta(4, 3, 2)
        for u in range(G.n):
            for v in range(G.n):
                if u == v:
                    continue
                H, m = subgraph_delete(G, [v])
                for k in range(12):
                    assert walk_count(G, u, u, k) == walk_count(H, m[u], m[u], k) + walk_count_through(
                        G, u, u, v, k
                    )

    def test_k23_parity(self):
        moments = spectral_moments(build_theta(2, 2, 2), 25)
        assert all(moments[k] == 0 for k in range(1, 26, 2))

    def test_big_integers(self):
        G = build_theta(2, 2, 1)
        M = spectral_moment(G, 200)
        assert M > 2**64
        assert isinstance(M, int)

    def test_negative_k(self):
        with pytest.raises(ValueError):
            walk_count(path_graph(2), 0, 1, -1)
        with pytest.raises(ValueError):
            walk_count(path_graph(2), 0, 5, 1)

    def test_moment_table(self):
        t = moment_table(build_theta(2, 2, 1), 10)
        assert t.K == 10 and t.endpoints is None and t[0] == 4


class TestDominance:
    def test_same_pair_equal(self):
        G = build_theta(3, 2, 1)
        assert dominance(G, 1, 2, G, 1, 2, 20).classification == EQUAL

    @pytest.mark.parametrize("params", [(2, 2, 1), (3, 3, 2), (5, 3, 2), (4, 4, 4)])
    def test_theta_hubs(self, params):
        G = build_theta(*params)
        hubs = [x for x in range(G.n) if G.degree(x) == 3]
        assert dominance(G, hubs[0], hubs[0], G, hubs[1], hubs[1], 40).classification == EQUAL
        for w in range(G.n):
            if w not in hubs:
                verdict = dominance(G, w, w, G, hubs[0], hubs[0], 40)
                assert verdict.classification == DOMINATED
                assert verdict.first_strict == 2

    def test_dominates_mirror(self):
        G = build_theta(3, 3, 2)
        w = next(x for x in range(G.n) if G.degree(x) == 2)
        v = dominance(G, 0, 0, G, w, w, 30)
        assert v.classification == DOMINATES and v.weakly_dominates and not v.weakly_dominated

    def test_sequence_classes(self):
        assert compare_sequences([0, 1, 3], [0, 2, 2], 2).classification == INCOMPARABLE
        assert compare_sequences([0, 1], [0, 1], 0).classification == UNDETERMINED
        with pytest.raises(ValueError):
            dominance(path_graph(2), 0, 0, path_graph(2), 0, 0, 0)


def small_graphs():
    for n in range(1, 7):
        yield from (gc.graph for gc in enumerate_connected(n))
    yield Graph(5, [(0, 1), (2, 3)])


def test_dfs_oracle_all_small_graphs():
    checked = 0
    for G in small_graphs():
        K = 8 if G.n <= 5 else 6
        for u in range(G.n):
            rows = [walk_table(G, u, v, K).counts for v in range(G.n)]
            for v in range(G.n):
                for k in range(K + 1):
                    assert rows[v][k] == dfs_walks(G, u, v, k)
                checked += 1
    assert checked > 500


def test_dfs_oracle_through():
    G = build_theta(3, 2, 1)
    for u, v, w in product(range(G.n), repeat=3):
        for k in range(7):
            assert walk_count_through(G, u, v, w, k) == dfs_walks(G, u, v, k, through=w)


@st.composite
def random_graphs(draw):
    n = draw(st.integers(2, 8))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return Graph(n, edges)


@settings(max_examples=80, deadline=None)
@given(random_graphs(), st.data())
def test_recurrence_and_trace(G, data):
    K = 12
    u = data.draw(st.integers(0, G.n - 1))
    rows = [walk_table(G, u, v, K).counts for v in range(G.n)]
    for v in range(G.n):
        for k in range(K):
            assert rows[v][k + 1] == sum(rows[x][k] for x in G.neighbors(v))
    moments = spectral_moments(G, K)
    for k in range(K + 1):
        assert moments[k] == sum(walk_count(G, x, x, k) for x in range(G.n))
    A = G.matrix().astype(object)
    P = np.identity(G.n, dtype=object)
    for k in range(K + 1):
        assert int(np.trace(P)) == moments[k]
        P = P.dot(A)


@settings(max_examples=60, deadline=None)
@given(random_graphs(), st.data())
def test_through_bounded(G, data):
    u, v, w = (data.draw(st.integers(0, G.n - 1)) for _ in range(3))
    full = walk_table(G, u, v, 10).counts
    through = walk_table_through(G, u, v, w, 10).counts
    assert all(0 <= t <= f for t, f in zip(through, full))
