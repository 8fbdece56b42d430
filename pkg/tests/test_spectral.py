import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mmseq.corr import WeightProfile, correlation_table_fft
from mmseq.oracle import dense_B_matrix, dense_harmonic_matrix, dense_R_matrix, dense_toeplitz, dense_W_matrix
from mmseq.solvers.corr import corr_surrogate
from mmseq.spectral import (
    EigBoundPair,
    SpectrumVector,
    circulant_spectrum,
    hermitian_toeplitz_eig_bounds,
    lambda_a,
    lambda_b,
    lambda_u_css,
    lambda_w,
    r_infinity_norm,
    toeplitz_matvec,
    toeplitz_spectrum,
)

from conftest import hermitian_toeplitz, rand_hermitian_toeplitz_col, rand_set


def reconstruct(spec: SpectrumVector) -> np.ndarray:
    H = dense_harmonic_matrix(spec.length_l)
    return H.conj().T @ np.diag(spec.values) @ H / (2 * spec.length_l)


# ---- circulant embedding -------------------------------------------------------


def test_spectrum_scalar():
    spec = circulant_spectrum([5.0], [0.0])
    np.testing.assert_allclose(spec.values, [5, 5])
    np.testing.assert_allclose(reconstruct(spec), [[5]])


def test_reconstruct_2x2():
    T = np.array([[1, 2], [3, 1]])
    spec = toeplitz_spectrum(T[:, 0], T[0, :])
    assert np.max(np.abs(reconstruct(spec) - T)) < 1e-12


def test_reconstruct_random_hermitian(rng):
    t = rand_hermitian_toeplitz_col(rng, 32)
    T = hermitian_toeplitz(t)
    spec = toeplitz_spectrum(T[:, 0], T[0, :])
    assert np.max(np.abs(reconstruct(spec) - T)) < 1e-10


def test_spectrum_length_mismatch():
    with pytest.raises(ValueError):
        circulant_spectrum([1, 2], [0])
    with pytest.raises(ValueError):
        toeplitz_spectrum([1, 2], [1])


def test_real_refuses_complex_spectrum():
    spec = toeplitz_spectrum([1, 1j], [1, 1j])  # not Hermitian
    with pytest.raises(ValueError):
        spec.real()


# ---- matvec --------------------------------------------------------------------


def test_matvec_examples(rng):
    eye = toeplitz_spectrum([1, 0, 0], [1, 0, 0])
    v = rng.standard_normal(3) + 1j * rng.standard_normal(3)
    np.testing.assert_allclose(toeplitz_matvec(eye, v), v, atol=1e-15)
    spec = toeplitz_spectrum([1, 3], [1, 2])
    np.testing.assert_allclose(toeplitz_matvec(spec, [1, 0]), [1, 3], atol=1e-15)


def test_matvec_random(rng):
    col = rng.standard_normal(64) + 1j * rng.standard_normal(64)
    row = rng.standard_normal(64) + 1j * rng.standard_normal(64)
    row[0] = col[0]
    T = dense_toeplitz(col, row)
    v = rng.standard_normal((64, 3)) + 1j * rng.standard_normal((64, 3))
    spec = toeplitz_spectrum(col, row)
    assert np.max(np.abs(toeplitz_matvec(spec, v) - T @ v)) < 1e-9
    assert np.max(np.abs(toeplitz_matvec(spec, v[:, 0]) - T @ v[:, 0])) < 1e-9
    with pytest.raises(ValueError):
        toeplitz_matvec(spec, v[:10])


# ---- eigenvalue bounds ------------------------------------------------------------


def test_eig_bounds_trivial():
    assert hermitian_toeplitz_eig_bounds([1, 0, 0, 0]) == EigBoundPair(1.0, 1.0)
    assert hermitian_toeplitz_eig_bounds(np.zeros(5)) == EigBoundPair(0.0, 0.0)
    with pytest.raises(ValueError):
        hermitian_toeplitz_eig_bounds([1j, 0])


@pytest.mark.parametrize("l", [4, 8, 16, 32])
def test_sandwich_property(l):
    r = np.random.default_rng(l)
    for _ in range(50):
        t = rand_hermitian_toeplitz_col(r, l)
        ev = np.linalg.eigvalsh(hermitian_toeplitz(t))
        lo, hi = hermitian_toeplitz_eig_bounds(t)
        assert lo <= ev[0] + 1e-10
        assert ev[-1] <= hi + 1e-10


def test_lambda_u_zero_and_tridiagonal(rng):
    assert lambda_u_css(np.zeros(8)) == 0.0
    for l in (2, 5, 16):
        r1 = rng.standard_normal()
        c = np.zeros(2 * l)
        c[1], c[-1] = r1, r1
        R = r1 * (np.eye(l, k=1) + np.eye(l, k=-1))
        assert lambda_u_css(c) >= np.linalg.eigvalsh(R)[-1] - 1e-12
    with pytest.raises(ValueError):
        lambda_u_css(np.zeros(3))


# ---- weighted bounds -------------------------------------------------------------------


def test_lambda_w_examples():
    e0 = np.zeros(8)
    e0[0] = 1
    assert lambda_w(e0, 8) == pytest.approx(8)
    assert lambda_w(np.zeros(8), 8) == 0
    ones = np.ones(8)
    assert lambda_w(ones, 8) <= np.linalg.eigvalsh(dense_W_matrix(ones, 8))[0] + 1e-12


def test_lambda_b_examples():
    assert lambda_b(5, 3) == 0
    assert lambda_b(-2, 3) == -6
    assert lambda_b(-2, 1) == -2
    with pytest.raises(ValueError):
        lambda_b(1.0, 0)


def test_lambda_b_bounds_dense(rng):
    for _ in range(30):
        n, m = rng.integers(2, 10), rng.integers(1, 4)
        w = rng.random(n) * (rng.random(n) < 0.7)
        lb = lambda_b(lambda_w(w, n), m)
        assert lb <= np.linalg.eigvalsh(dense_B_matrix(w, n, m))[0] + 1e-9


def test_lambda_a_examples(rng):
    assert lambda_a(np.ones(8), 4) == 8
    assert lambda_a([0, 1, 0, 0], 2) == 2
    X = rand_set(rng, 8, 2)
    s = corr_surrogate(X)
    H = dense_harmonic_matrix(8)
    assert s.lambda_a >= np.linalg.eigvalsh(H.conj().T @ np.diag(s.a) @ H)[-1] - 1e-9
    with pytest.raises(ValueError):
        lambda_a(np.ones(5), 2)


# ---- infinity norm -------------------------------------------------------------------------


def test_r_infinity_examples(rng):
    tab = correlation_table_fft(np.ones((2, 1), dtype=complex))
    np.testing.assert_allclose(dense_R_matrix(tab, np.ones(2)), [[2, 1], [1, 2]])
    assert r_infinity_norm(tab, np.ones(2)) == pytest.approx(3)
    assert r_infinity_norm(correlation_table_fft(rand_set(rng, 8, 2)), np.zeros(8)) == 0


def test_r_infinity_random(rng):
    X = rand_set(rng, 16, 3)
    w = rng.random(16)
    tab = correlation_table_fft(X)
    dense = np.max(np.sum(np.abs(dense_R_matrix(tab, w)), axis=1))
    assert r_infinity_norm(tab, w) == pytest.approx(dense, rel=1e-9)


# ---- structural identities -----------------------------------------------------------------------


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 12), st.integers(1, 3), st.integers(0, 2**32 - 1))
def test_step_denominator_dominates(n, m, seed):
    r = np.random.default_rng(seed)
    X = rand_set(r, n, m)
    w = r.random(n) * (r.random(n) < 0.8)
    x = X.T.ravel()
    tab = correlation_table_fft(X)
    A = dense_R_matrix(tab, w) - dense_B_matrix(w, n, m) * np.outer(x, x.conj())
    lhs = np.linalg.eigvalsh(A)[-1]
    assert lhs <= r_infinity_norm(tab, w) - lambda_b(lambda_w(w, n), m) + 1e-8


def test_hadamard_with_rank_one_unimodular_keeps_spectrum(rng):
    for _ in range(20):
        n, m = rng.integers(2, 8), rng.integers(1, 4)
        w = rng.random(n)
        B = dense_B_matrix(w, n, m)
        x = rand_set(rng, n * m, 1)[:, 0]
        ev1 = np.linalg.eigvalsh(B * np.outer(x, x.conj()))
        np.testing.assert_allclose(ev1, np.linalg.eigvalsh(B), atol=1e-8)


def test_kron_spectrum_products(rng):
    for _ in range(20):
        a, b = rng.integers(1, 7, size=2)
        A = rng.standard_normal((a, a)) + 1j * rng.standard_normal((a, a))
        A = A + A.conj().T
        B = rng.standard_normal((b, b))
        B = B + B.T
        prods = np.sort(np.outer(np.linalg.eigvalsh(A), np.linalg.eigvalsh(B)).ravel())
        np.testing.assert_allclose(np.linalg.eigvalsh(np.kron(A, B)), prods, atol=1e-8)


def test_weight_profile_object_accepted():
    assert lambda_w(WeightProfile.uniform(4), 4) == lambda_w(np.ones(4), 4)
