import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bicyclic_estrada.enumerate import enumerate_connected
from bicyclic_estrada.graph import (
    Graph,
    build_g1,
    build_g2,
    build_infty,
    build_theta,
    path_graph,
    subgraph_delete,
)
from bicyclic_estrada.polynomial import IntPolynomial
from bicyclic_estrada.spectra import (
    EigenError,
    charpoly_exact,
    charpoly_recursive,
    compare_estrada,
    eigenvalues,
    estrada_eig,
    estrada_index,
    estrada_moments,
    estrada_via_charpoly,
    estrada_via_moments,
    g12_quartics,
    interlacing_check,
    jacobi_eigenvalues,
    moment_tail_bound,
)
from bicyclic_estrada.walks import spectral_moments


def hub(G):
    return max(range(G.n), key=G.degree)


class TestEigenvalues:
    def test_k1_k2(self):
        assert eigenvalues(Graph(1)).eigenvalues == (0.0,)
        assert np.allclose(eigenvalues(path_graph(2)).eigenvalues, [1, -1], atol=1e-14)

    def test_k23(self):
        s = math.sqrt(6)
        assert np.allclose(eigenvalues(build_theta(2, 2, 2)).eigenvalues, [s, 0, 0, 0, -s], atol=1e-12)

    @pytest.mark.parametrize("n", [5, 8, 13])
    def test_g1_minus_hub(self, n):
        G = build_g1(n)
        H, _ = subgraph_delete(G, [hub(G)])
        expected = [math.sqrt(2)] + [0.0] * (n - 3) + [-math.sqrt(2)]
        assert np.allclose(eigenvalues(H).eigenvalues, expected, atol=1e-9)

    def test_invariants_on_all_small_graphs(self):
        for n in range(2, 7):
            for gc in enumerate_connected(n):
                G = gc.graph
                spec = eigenvalues(G)
                lam = np.array(spec.eigenvalues)
                tol = n * max(spec.tolerance, 1e-12)
                assert abs(lam.sum()) <= tol
                assert abs((lam**2).sum() - 2 * G.m) <= 10 * tol
                assert lam[0] <= max(G.degrees()) + tol
                assert np.allclose(lam, np.linalg.eigvalsh(G.matrix(float))[::-1], atol=1e-10)

    def test_non_convergence_reported(self):
        a = build_theta(4, 3, 2).matrix(float)
        with pytest.raises(EigenError):
            jacobi_eigenvalues(a, tol=1e-12, max_sweeps=1)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(2, 20), st.randoms(use_true_random=False))
    def test_matches_numpy(self, n, rnd):
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rnd.random() < 0.3]
        G = Graph(n, edges)
        ours = np.array(eigenvalues(G).eigenvalues)
        assert np.allclose(ours, np.linalg.eigvalsh(G.matrix(float))[::-1], atol=1e-10)


class TestEstrada:
    def test_examples(self):
        assert estrada_index(Graph(1)) == 1.0
        assert estrada_index(path_graph(2)) == pytest.approx(math.e + 1 / math.e, abs=1e-13)
        r = math.sqrt(17)
        expected = math.exp((1 + r) / 2) + 1 + math.exp(-1) + math.exp((1 - r) / 2)
        assert estrada_index(build_theta(2, 2, 1)) == pytest.approx(expected, abs=1e-12)

    def test_moments_route(self):
        value, _ = estrada_via_moments(path_graph(2), 0)
        assert value == 2
        with pytest.raises(ValueError):
            estrada_via_moments(path_graph(4), 0)
        value, tail = estrada_via_moments(path_graph(2), 20)
        assert abs(value - (math.e + 1 / math.e)) <= 1e-12
        assert tail < 1e-12

    def test_tail_bound(self):
        tails = [moment_tail_bound(10, 5, K) for K in range(4, 60)]
        assert all(a > b for a, b in zip(tails, tails[1:]))
        with pytest.raises(ValueError):
            moment_tail_bound(10, 5, 3)

    def test_three_routes_agree(self):
        for G in [build_g1(9), build_g2(9), build_infty(3, 5, 2), build_theta(4, 3, 3)]:
            eig = estrada_eig(G)
            mom = estrada_moments(G)
            cp = estrada_via_charpoly(charpoly_exact(G))
            assert abs(eig.value - mom.value) <= eig.error + mom.error
            assert abs(eig.value - cp.value) <= eig.error + cp.error
            assert mom.error <= 1e-9

    def test_charpoly_route_rejects_complex(self):
        with pytest.raises(EigenError):
            estrada_via_charpoly(IntPolynomial([1, 0, 1]))

    def test_compare(self):
        cmp = compare_estrada(build_g2(8), build_g1(8))
        assert cmp.sign == 1 and cmp.margin > 0
        assert compare_estrada(build_g1(8), build_g2(8)).sign == -1
        assert compare_estrada(build_g1(6), build_g1(6)).sign == 0


class TestCharpoly:
    def test_k2(self):
        assert charpoly_recursive(path_graph(2), 0) == IntPolynomial([-1, 0, 1])
        assert charpoly_recursive(path_graph(2), 1) == IntPolynomial([-1, 0, 1])

    @pytest.mark.parametrize("n", range(5, 31))
    def test_g1_g2_quartics(self, n):
        f, g = g12_quartics(n)
        G1, G2 = build_g1(n), build_g2(n)
        assert charpoly_recursive(G1, hub(G1)) == f.shift(n - 4)
        assert charpoly_recursive(G2, hub(G2)) == g.shift(n - 4)

    @pytest.mark.parametrize("n", range(5, 31))
    def test_quartic_values(self, n):
        f, g = g12_quartics(n)
        assert f.eval_at_sqrt(n - 1) == (2 * (n - 4) - (n + 1) * (n - 1) + (n - 1) ** 2, -4)
        r, s = g.eval_at_sqrt(Fraction(2 * n - 3, 2))
        assert s == 0 and r == Fraction(n, 2) - Fraction(45, 4)

    def test_quartics_domain(self):
        with pytest.raises(ValueError):
            g12_quartics(4)

    def test_exact_matches_recursive_on_small_graphs(self):
        for n in range(1, 7):
            for gc in enumerate_connected(n):
                G = gc.graph
                exact = charpoly_exact(G)
                assert exact.leading == 1 and exact.degree == n
                assert exact[n - 2] == -G.m if n >= 2 else True
                assert exact[0] == round(np.linalg.det(-G.matrix(float)))
                for v in range(G.n):
                    assert charpoly_recursive(G, v) == exact

    def test_charpoly_matches_moments(self):
        G = build_infty(4, 3, 2)
        lam = [x for x, m in [(float(a), m) for a, _, m in charpoly_exact(G).real_roots()] for _ in range(m)]
        for k, mk in enumerate(spectral_moments(G, 10)):
            assert math.isclose(sum(x**k for x in lam), mk, rel_tol=1e-9, abs_tol=1e-9)

    def test_bad_vertex(self):
        with pytest.raises(ValueError):
            charpoly_recursive(path_graph(2), 2)


class TestInterlacing:
    @pytest.mark.parametrize("n", [5, 9, 15])
    def test_g1_hub(self, n):
        G = build_g1(n)
        rep = interlacing_check(G, hub(G))
        assert rep.min_margin >= -rep.tolerance
        sub, _ = subgraph_delete(G, [hub(G)])
        big, small = eigenvalues(G), eigenvalues(sub)
        for i in range(1, n - 1):
            assert big[i] >= small[i] - 1e-10

    @pytest.mark.parametrize("n", [6, 9, 15])
    def test_g2_hub(self, n):
        G = build_g2(n)
        sub, _ = subgraph_delete(G, [hub(G)])
        big, small = eigenvalues(G), eigenvalues(sub)
        interlacing_check(G, hub(G))
        for i in range(1, n):
            assert big[i] <= small[i - 1] + 1e-10

    def test_p2(self):
        rep = interlacing_check(path_graph(2), 0)
        assert rep.upper_margins == pytest.approx((1.0,)) and rep.lower_margins == pytest.approx((1.0,))
        with pytest.raises(ValueError):
            interlacing_check(Graph(1), 0)

    def test_all_vertices_small_bicyclic(self, classes):
        for gc in classes(7):
            for v in range(gc.graph.n):
                interlacing_check(gc.graph, v)
