import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blockspectra import (
    ConvergenceError,
    NotPositiveDefiniteError,
    block_path,
    build_graph,
    complete_graph,
    delete_vertex_components,
    eig_sym,
    laplacian,
    path_graph,
    perron_of_inverse,
    principal_submatrix,
    spd_solve,
    star_graph,
)
from _util import clique_tree

RNG = np.random.default_rng(20240817)

small_clique_trees = st.builds(
    clique_tree,
    st.lists(st.integers(2, 4), min_size=1, max_size=3),
    st.lists(st.integers(0, 100), min_size=2, max_size=2),
)


def random_symmetric(n, scale=5.0):
    m = RNG.normal(size=(n, n)) * scale
    return m + m.T


def random_spd(n):
    m = RNG.normal(size=(n, n))
    return m @ m.T + n * np.eye(n)


class TestLaplacian:
    def test_single_edge(self):
        assert np.array_equal(laplacian(complete_graph(2)), [[1, -1], [-1, 1]])

    def test_short_path(self):
        expected = [[1, -1, 0], [-1, 2, -1], [0, -1, 1]]
        assert np.array_equal(laplacian(path_graph(3)), expected)

    def test_weighted_entries(self):
        g = build_graph(3, [(1, 2), (2, 3)], {(1, 2): 2.0, (2, 3): 0.5})
        lap = laplacian(g)
        assert lap[0, 1] == -2.0
        assert lap[1, 1] == 2.5

    @pytest.mark.parametrize("g", [
        block_path(4, 3), star_graph(6), complete_graph(7),
        build_graph(4, [(1, 2), (2, 3), (3, 4)], {(1, 2): 0.3, (3, 4): 7.25}),
    ])
    def test_row_sums_vanish(self, g):
        assert np.abs(laplacian(g).sum(axis=1)).max() <= 1e-12

    def test_exactly_symmetric(self):
        lap = laplacian(block_path(5, 4))
        assert np.array_equal(lap, lap.T)


class TestEigSym:
    @pytest.mark.parametrize("n", range(2, 13))
    def test_complete_graph_spectrum(self, n):
        values = eig_sym(laplacian(complete_graph(n))).values
        assert abs(values[0]) <= 1e-9
        assert np.abs(values[1:] - n).max() <= 1e-9

    def test_short_path_spectrum(self):
        values = eig_sym(laplacian(path_graph(3))).values
        assert np.allclose(values, [0.0, 1.0, 3.0], atol=1e-10)

    def test_zero_matrix(self):
        dec = eig_sym(np.zeros((4, 4)))
        assert np.array_equal(dec.values, np.zeros(4))
        assert np.array_equal(dec.vectors, np.eye(4))

    def test_one_by_one(self):
        dec = eig_sym(np.array([[3.5]]))
        assert dec.values[0] == 3.5

    def test_reconstruction_and_orthonormality(self):
        for n in (2, 5, 12, 30):
            m = random_symmetric(n)
            dec = eig_sym(m)
            norm = np.linalg.norm(m)
            recon = dec.vectors @ np.diag(dec.values) @ dec.vectors.T
            assert np.linalg.norm(m - recon) <= 1e-10 * norm
            gram = dec.vectors.T @ dec.vectors
            assert np.abs(gram - np.eye(n)).max() <= 1e-10

    def test_matches_reference_eigensolver(self):
        for n in (3, 6, 11, 25):
            m = random_symmetric(n)
            ours = eig_sym(m).values
            reference = np.linalg.eigvalsh(m)
            assert np.abs(ours - reference).max() <= 1e-9 * max(np.abs(reference).max(), 1.0)

    def test_eigenvalues_ascending(self):
        values = eig_sym(random_symmetric(15)).values
        assert np.all(np.diff(values) >= 0)

    @pytest.mark.parametrize("g", [
        path_graph(7), star_graph(5), block_path(4, 3), complete_graph(6),
    ])
    def test_connected_laplacian_kernel_is_constant_vector(self, g):
        dec = eig_sym(laplacian(g))
        assert abs(dec.values[0]) <= 1e-10
        expected = np.ones(g.n) / math.sqrt(g.n)
        assert np.abs(dec.vectors[:, 0] - expected).max() <= 1e-10

    def test_sign_convention(self):
        dec = eig_sym(random_symmetric(9))
        for j in range(9):
            col = dec.vectors[:, j]
            assert col[int(np.argmax(np.abs(col)))] > 0

    def test_deterministic(self):
        m = random_symmetric(10)
        a = eig_sym(m)
        b = eig_sym(m)
        assert np.array_equal(a.values, b.values)
        assert np.array_equal(a.vectors, b.vectors)

    def test_asymmetric_rejected(self):
        with pytest.raises(ValueError, match="symmetric"):
            eig_sym(np.array([[1.0, 2.0], [3.0, 4.0]]))

    def test_non_square_rejected(self):
        with pytest.raises(ValueError, match="square"):
            eig_sym(np.ones((2, 3)))

    def test_sweep_cap_triggers(self):
        with pytest.raises(ConvergenceError):
            eig_sym(laplacian(path_graph(5)), max_sweeps=0)


class TestPrincipalSubmatrix:
    def test_single_vertex(self):
        assert np.array_equal(principal_submatrix(laplacian(path_graph(3)), [1]), [[1.0]])

    def test_pair(self):
        got = principal_submatrix(laplacian(path_graph(3)), [1, 2])
        assert np.array_equal(got, [[1, -1], [-1, 2]])

    def test_clique_remainder(self):
        got = principal_submatrix(laplacian(complete_graph(4)), [2, 3, 4])
        assert np.array_equal(got, 4 * np.eye(3) - np.ones((3, 3)))

    def test_order_is_ascending(self):
        lap = laplacian(path_graph(4))
        assert np.array_equal(
            principal_submatrix(lap, [3, 1]), principal_submatrix(lap, [1, 3])
        )

    def test_empty_rejected(self):
        with pytest.raises(ValueError, match="empty"):
            principal_submatrix(laplacian(path_graph(3)), [])

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError, match="out of range"):
            principal_submatrix(laplacian(path_graph(3)), [4])


class TestSpdSolve:
    def test_scalar(self):
        assert np.allclose(spd_solve(np.array([[2.0]]), np.array([4.0])), [2.0])

    def test_identity(self):
        b = np.array([1.0, -2.0, 3.0])
        assert np.array_equal(spd_solve(np.eye(3), b), b)

    def test_grounded_path_block(self):
        m = np.array([[1.0, -1.0], [-1.0, 2.0]])
        assert np.allclose(spd_solve(m, np.ones(2)), [3.0, 2.0], atol=1e-12)

    def test_matches_reference_solver(self):
        for n in (2, 5, 17):
            m = random_spd(n)
            b = RNG.normal(size=n)
            x = spd_solve(m, b)
            assert np.allclose(x, np.linalg.solve(m, b), atol=1e-9)
            assert np.linalg.norm(m @ x - b) <= 1e-9 * np.linalg.norm(b)

    def test_indefinite_rejected(self):
        with pytest.raises(NotPositiveDefiniteError):
            spd_solve(np.array([[1.0, 2.0], [2.0, 1.0]]), np.ones(2))

    def test_singular_rejected(self):
        with pytest.raises(NotPositiveDefiniteError):
            spd_solve(np.zeros((2, 2)), np.ones(2))

    def test_shape_mismatch_rejected(self):
        with pytest.raises(ValueError, match="shape"):
            spd_solve(np.eye(2), np.ones(3))


class TestPerronOfInverse:
    def test_pendant_block(self):
        data = perron_of_inverse(np.array([[1.0]]))
        assert data.value == pytest.approx(1.0, abs=1e-12)
        assert np.array_equal(data.vector, [1.0])

    def test_two_vertex_block(self):
        m = np.array([[1.0, -1.0], [-1.0, 2.0]])
        data = perron_of_inverse(m)
        assert data.value == pytest.approx((3 + math.sqrt(5)) / 2, abs=1e-10)
        assert (data.vector > 0).all()
        assert data.vector.sum() == pytest.approx(1.0, abs=1e-12)

    def test_eigen_equation_residual(self):
        g = block_path(4, 2)
        lap = laplacian(g)
        comp = delete_vertex_components(g, 4)[0]
        m = principal_submatrix(lap, comp)
        data = perron_of_inverse(m)
        # M^{-1} v = rho v  <=>  M v = v / rho
        assert np.linalg.norm(m @ data.vector - data.vector / data.value) <= 1e-10

    def test_chain_center_components_tie_at_reciprocal_lambda2(self):
        g = block_path(4, 3)
        lap = laplacian(g)
        halves = delete_vertex_components(g, 7)
        rhos = [perron_of_inverse(principal_submatrix(lap, c)).value for c in halves]
        assert abs(rhos[0] - rhos[1]) <= 1e-9 * rhos[0]
        assert round(1.0 / rhos[0], 5) == 0.32938

    @settings(max_examples=40, deadline=None)
    @given(small_clique_trees, st.integers(0, 100))
    def test_matches_reciprocal_smallest_eigenvalue(self, g, pick):
        v = 1 + pick % g.n
        comps = delete_vertex_components(g, v)
        if not comps:
            return
        lap = laplacian(g)
        for comp in comps:
            m = principal_submatrix(lap, comp)
            rho = perron_of_inverse(m).value
            smallest = eig_sym(m).values[0]
            assert abs(rho - 1.0 / smallest) <= 1e-10
            assert (perron_of_inverse(m).vector > 0).all()

    def test_iteration_cap_triggers(self):
        m = np.array([[1.0, -1.0], [-1.0, 2.0]])
        with pytest.raises(ConvergenceError):
            perron_of_inverse(m, max_iter=1, rq_tol=0.0)
