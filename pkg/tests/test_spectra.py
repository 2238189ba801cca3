import numpy as np
import pytest

from conftest import random_graph
from kcut.graphs import Graph, laplacian, named_graph
from kcut.spectra import (
    eigendecompose,
    idempotent_basis,
    lambda_max,
    top_idempotent_diag_constant,
)


def test_eigendecompose_identity():
    spec = eigendecompose(np.eye(3))
    assert np.array_equal(spec.distinct_values, [1.0])
    assert np.array_equal(spec.multiplicities, [3])


def test_eigendecompose_complete_graph():
    for n in (3, 5, 9):
        L = laplacian(named_graph("complete", (n,))).L
        spec = eigendecompose(L)
        assert np.allclose(spec.distinct_values, [0.0, float(n)], atol=1e-9)
        assert np.array_equal(spec.multiplicities, [1, n - 1])


def test_eigendecompose_petersen():
    # adjacency spectrum {3, 1, -2} with multiplicities {1, 5, 4}; L = 3I - A
    L = laplacian(named_graph("petersen")).L
    spec = eigendecompose(L)
    assert np.allclose(spec.distinct_values, [0.0, 2.0, 5.0], atol=1e-9)
    assert np.array_equal(spec.multiplicities, [1, 5, 4])


def test_eigendecompose_rejects_asymmetric():
    with pytest.raises(ValueError, match="symmetric"):
        eigendecompose(np.array([[0.0, 1.0], [0.5, 0.0]]))


def test_eigendecompose_residuals(rng):
    for _ in range(50):
        n = int(rng.integers(2, 41))
        M = rng.standard_normal((n, n))
        M = (M + M.T) / 2.0
        spec = eigendecompose(M)
        Q = spec.eigenbasis
        assert np.max(np.abs(Q.T @ Q - np.eye(n))) <= 1e-8
        assert np.max(np.abs(spec.reconstruct() - M)) <= 1e-8
        assert int(spec.multiplicities.sum()) == n


def test_exact_spectra_of_generators_match_numeric():
    graphs = [
        named_graph("complete", (7,)),
        named_graph("complete_multipartite", (3, 2)),
        named_graph("cycle", (8,)),
        named_graph("cycle", (9,)),
        named_graph("hamming", (2, 3, 1)),
        named_graph("hamming", (3, 2, 2)),
    ]
    for g in graphs:
        spec = eigendecompose(laplacian(g).L)
        exact = g.exact_laplacian_spectrum
        assert exact is not None
        assert len(exact) == len(spec.distinct_values)
        for (val, mult), got_val, got_mult in zip(
            exact, spec.distinct_values, spec.multiplicities
        ):
            assert abs(val - got_val) <= 1e-9
            assert mult == got_mult


def test_lambda_max_examples():
    assert abs(lambda_max(named_graph("complete_multipartite", (3, 2))) - 6.0) <= 1e-9
    c5 = named_graph("cycle", (5,))
    assert abs(lambda_max(c5) - (2.0 - 2.0 * np.cos(4 * np.pi / 5))) <= 1e-9
    h = named_graph("hamming", (2, 3, 2))
    assert abs(lambda_max(h) - 6.0) <= 1e-8  # q(q-1)^(d-1) with d=2, q=3


def test_idempotents_k2():
    g = named_graph("complete", (2,))
    basis = idempotent_basis(g)
    assert len(basis.projectors) == 2
    assert np.allclose(basis.projectors[0], np.full((2, 2), 0.5), atol=1e-12)
    assert np.allclose(basis.projectors[1], np.eye(2) - 0.5, atol=1e-12)


def test_idempotents_petersen_traces():
    basis = idempotent_basis(named_graph("petersen"))
    assert np.array_equal(basis.multiplicities, [1, 5, 4])
    assert np.allclose(basis.eigenvalues, [0.0, 2.0, 5.0], atol=1e-9)


def test_idempotents_disconnected_zero_split():
    # disjoint union of two K_2: F_0 = J/4 plus a separate trace-1 idempotent
    W = np.zeros((4, 4))
    W[0, 1] = W[1, 0] = 1.0
    W[2, 3] = W[3, 2] = 1.0
    basis = idempotent_basis(Graph(n=4, weights=W))
    assert np.allclose(basis.projectors[0], np.full((4, 4), 0.25), atol=1e-10)
    assert basis.eigenvalues[0] == 0.0 and basis.eigenvalues[1] == 0.0
    assert basis.multiplicities[0] == 1 and basis.multiplicities[1] == 1
    P = basis.projectors[1]
    assert np.max(np.abs(P @ P - P)) <= 1e-8
    assert abs(np.trace(P) - 1.0) <= 1e-8


def test_idempotent_identities_on_named_graphs():
    graphs = [
        named_graph("complete", (6,)),
        named_graph("complete_multipartite", (3, 2)),
        named_graph("cycle", (7,)),
        named_graph("petersen"),
        named_graph("coxeter"),
        named_graph("kneser", (6, 2)),
        named_graph("hamming", (2, 3, 1)),
    ]
    for g in graphs:
        basis = idempotent_basis(g)
        Fs = basis.projectors
        total = sum(Fs)
        assert np.max(np.abs(total - np.eye(g.n))) <= 1e-8
        L = laplacian(g).L
        recon = sum(lam * F for lam, F in zip(basis.eigenvalues, Fs))
        assert np.max(np.abs(recon - L)) <= 1e-8
        for i, Fi in enumerate(Fs):
            assert abs(np.trace(Fi) - basis.multiplicities[i]) <= 1e-8
            for j, Fj in enumerate(Fs):
                expect = Fi if i == j else np.zeros_like(Fi)
                assert np.max(np.abs(Fi @ Fj - expect)) <= 1e-8


def test_walk_regular_constant_diagonals():
    for g in [named_graph("petersen"), named_graph("cycle", (6,)),
              named_graph("cycle", (9,)), named_graph("hamming", (2, 3, 1)),
              named_graph("hamming", (3, 2, 2))]:
        basis = idempotent_basis(g)
        for F in basis.projectors:
            d = np.diag(F)
            assert d.max() - d.min() <= 1e-8


def test_top_idempotent_diag_constant():
    assert top_idempotent_diag_constant(named_graph("petersen"))
    assert top_idempotent_diag_constant(named_graph("cycle", (6,)))
    star = Graph(
        n=4,
        weights=np.array(
            [[0, 1, 1, 1], [1, 0, 0, 0], [1, 0, 0, 0], [1, 0, 0, 0]], dtype=float
        ),
    )
    assert not top_idempotent_diag_constant(star)
