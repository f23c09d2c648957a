import math
import random

import numpy as np
import pytest
import sympy

from conftest import random_connected, random_graph, random_tree, random_unicyclic
from signed_inertia.core import SignedGraph
from signed_inertia.families import (
    make_complete_multipartite,
    make_cycle,
    make_path,
    make_star,
)
from signed_inertia.inertia import (
    ConvergenceError,
    InertiaTriple,
    Spectrum,
    cycle_inertia,
    cycle_spectrum_closed_form,
    exact_inertia,
    exact_inertia_matrix,
    float_spectrum,
    jacobi_eigenvalues,
    pendant_reduce,
    positive_inertia,
)


def descartes_inertia(rows) -> InertiaTriple:
    """Exact inertia from the characteristic polynomial (all roots are real)."""
    x = sympy.symbols("x")
    n = len(rows)
    if n == 0:
        return InertiaTriple(0, 0, 0)
    coeffs = sympy.Matrix(rows).charpoly(x).all_coeffs()
    z = 0
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
        z += 1

    def changes(cs):
        signs = [c > 0 for c in cs if c != 0]
        return sum(a != b for a, b in zip(signs, signs[1:]))

    deg = len(coeffs) - 1
    neg = [c * (-1) ** (deg - i) for i, c in enumerate(coeffs)]
    return InertiaTriple(changes(coeffs), changes(neg), z)


class TestExact:
    @pytest.mark.parametrize(
        "g, expected",
        [
            (SignedGraph(1), (0, 0, 1)),
            (SignedGraph(0), (0, 0, 0)),
            (make_cycle(4), (1, 1, 2)),
            (make_cycle(3, False), (2, 1, 0)),
            (make_path(4), (2, 2, 0)),
            (SignedGraph.from_edges(4, [(0, 1, -1), (1, 2, -1), (2, 3, 1)]), (2, 2, 0)),
        ],
    )
    def test_examples(self, g, expected):
        assert exact_inertia(g) == expected

    def test_matches_characteristic_polynomial(self):
        rng = random.Random(8)
        for _ in range(80):
            g = random_graph(rng, rng.randint(1, 8), rng.uniform(0.2, 0.8))
            assert exact_inertia(g) == descartes_inertia(g.adjacency().tolist())

    def test_general_integer_matrices(self):
        rng = random.Random(9)
        for _ in range(60):
            n = rng.randint(1, 6)
            a = [[0] * n for _ in range(n)]
            for i in range(n):
                for j in range(i, n):
                    a[i][j] = a[j][i] = rng.randint(-3, 3) if rng.random() < 0.7 else 0
            assert exact_inertia_matrix(a) == descartes_inertia(a)

    def test_zero_diagonal_needs_2x2_pivots(self):
        assert exact_inertia_matrix([[0, 1], [1, 0]]) == (1, 1, 0)
        assert exact_inertia_matrix([[0, 0], [0, 0]]) == (0, 0, 2)


class TestJacobi:
    def test_matches_lapack(self):
        rng = np.random.default_rng(1)
        for n in (1, 2, 3, 7, 16, 33):
            a = rng.normal(size=(n, n))
            a = a + a.T
            ours = jacobi_eigenvalues(a)
            ref = np.sort(np.linalg.eigvalsh(a))[::-1]
            assert np.allclose(ours, ref, atol=1e-10)

    def test_batched(self):
        rng = np.random.default_rng(2)
        a = rng.normal(size=(4, 3, 5, 5))
        a = a + np.swapaxes(a, -1, -2)
        got = jacobi_eigenvalues(a)
        assert got.shape == (4, 3, 5)
        assert np.allclose(got, np.linalg.eigvalsh(a)[..., ::-1], atol=1e-10)

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            jacobi_eigenvalues(np.zeros((2, 3)))
        with pytest.raises(ValueError):
            jacobi_eigenvalues(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_sweep_cap(self):
        with pytest.raises(ConvergenceError):
            jacobi_eigenvalues(make_cycle(9).adjacency(), max_sweeps=1)

    def test_examples(self):
        assert float_spectrum(SignedGraph.from_edges(2, [(0, 1)])).values == pytest.approx((1, -1))
        assert float_spectrum(make_cycle(6)).values == pytest.approx((2, 1, 1, -1, -1, -2))
        assert float_spectrum(SignedGraph(1)).values == (0.0,)

    def test_agrees_with_exact_on_random_graphs(self):
        rng = random.Random(12)
        for _ in range(200):
            g = random_graph(rng, rng.randint(1, 10), rng.uniform(0.1, 0.9))
            assert float_spectrum(g).inertia() == exact_inertia(g)


class TestSpectrum:
    def test_ordering_enforced(self):
        with pytest.raises(ValueError):
            Spectrum((1.0, 2.0))

    def test_inertia_with_tolerance(self):
        s = Spectrum((2.0, 1e-12, -1e-12, -3.0))
        assert s.inertia() == (1, 1, 2)
        assert s.inertia(1e-14) == (2, 2, 0)


class TestCycles:
    def test_closed_form_examples(self):
        assert cycle_spectrum_closed_form(4, True).values == pytest.approx((2, 0, 0, -2))
        assert cycle_spectrum_closed_form(3, False).values == pytest.approx((1, 1, -2))
        r2 = math.sqrt(2)
        assert cycle_spectrum_closed_form(4, False).values == pytest.approx((r2, r2, -r2, -r2))

    def test_exact_zeros(self):
        assert cycle_spectrum_closed_form(8, True).values.count(0.0) == 2
        assert cycle_spectrum_closed_form(6, False).values.count(0.0) == 2

    @pytest.mark.parametrize(
        "n, balanced, expected",
        [(4, True, (1, 1, 2)), (4, False, (2, 2, 0)), (5, True, (3, 2, 0)), (5, False, (2, 3, 0)), (6, False, (2, 2, 2))],
    )
    def test_inertia_examples(self, n, balanced, expected):
        assert cycle_inertia(n, balanced) == expected

    def test_inertia_agrees_with_closed_form_signs(self):
        for n in range(3, 41):
            for balanced in (True, False):
                assert cycle_inertia(n, balanced) == cycle_spectrum_closed_form(n, balanced).inertia()

    def test_small_orders_rejected(self):
        with pytest.raises(ValueError):
            cycle_inertia(2, True)
        with pytest.raises(ValueError):
            cycle_spectrum_closed_form(2, False)


class TestPendantReduction:
    def test_star(self):
        residual, k = pendant_reduce(make_star(3))
        assert k == 1 and residual == SignedGraph(2)
        assert positive_inertia(make_star(3)) == 1

    def test_path(self):
        residual, k = pendant_reduce(make_path(4))
        assert k == 2 and residual.n == 0

    def test_cycle_is_fixed(self):
        assert pendant_reduce(make_cycle(6)) == (make_cycle(6), 0)

    def test_positive_inertia_examples(self):
        assert positive_inertia(make_path(9)) == 4
        assert positive_inertia(make_complete_multipartite([2, 3])) == 1
        assert positive_inertia(make_cycle(5, False)) == 2

    def test_identity_on_trees_and_unicyclic(self):
        rng = random.Random(21)
        for n in range(1, 13):
            for _ in range(15):
                g = random_tree(rng, n)
                assert positive_inertia(g) == exact_inertia(g).p_plus
                if n >= 3:
                    g = random_unicyclic(rng, n)
                    assert positive_inertia(g) == exact_inertia(g).p_plus

    def test_identity_on_denser_graphs(self):
        rng = random.Random(22)
        for _ in range(100):
            g = random_connected(rng, rng.randint(2, 9), 0.15)
            assert positive_inertia(g) == exact_inertia(g).p_plus
