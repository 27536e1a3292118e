import numpy as np
import pytest

from qwiener import laurent as L
from qwiener.errors import AliasError, ConvergenceError, DomainError, NotInvertibleError, NotPositiveError


def test_cl_eval_both_directions():
    a = L.CLaurent(-2, [1.0, 2.0, 3.0, 4.0])  # z^-2 + 2 z^-1 + 3 + 4 z
    z = 0.7 * np.exp(0.3j)
    assert L.cl_eval(a, z) == pytest.approx(z**-2 + 2 / z + 3 + 4 * z)
    with pytest.raises(DomainError):
        L.cl_eval(a, 0)


def test_product_is_polynomial_product(rng):
    a = L.CLaurent(-1, rng.standard_normal(4) + 0j)
    b = L.CLaurent(2, rng.standard_normal(3) + 0j)
    z = np.exp(0.9j)
    assert (a * b)(z) == pytest.approx(a(z) * b(z))


def test_circle_sample_and_interp_round_trip(rng):
    a = L.CLaurent(-3, rng.standard_normal(7) + 1j * rng.standard_normal(7))
    s = L.circle_sample(a, 16)
    np.testing.assert_allclose(s[5], a(np.exp(2j * np.pi * 5 / 16)))
    back = L.circle_interp(s, -3, 3)
    np.testing.assert_allclose(back.coeffs, a.coeffs, atol=1e-13)
    with pytest.raises(AliasError):
        L.circle_interp(s, -1, 1)
    with pytest.raises(ValueError):
        L.circle_sample(a, 12)


def test_circle_min_abs_finds_near_zero():
    # 1 - 0.99 z vanishes close to theta = 0
    cm = L.circle_min_abs(L.CLaurent(0, [1.0, -0.99]))
    assert cm.min_abs == pytest.approx(0.01, rel=1e-6)
    assert min(cm.theta, 2 * np.pi - cm.theta) < 1e-6
    assert cm.lower_bound <= cm.min_abs


def test_scalar_inverse_of_geometric_symbol():
    r = L.scalar_invert_real(L.CLaurent(0, [1.0, -0.5]))
    np.testing.assert_allclose(r.window(0, 5).real, 0.5 ** np.arange(6), atol=1e-12)
    assert np.max(np.abs(r.window(-5, -1))) < 1e-12
    with pytest.raises(NotInvertibleError):
        L.scalar_invert_real(L.CLaurent(0, [1.0, -1.0]))


def test_mat_invert(rng):
    a = L.Mat2Laurent(-1, 0.2 * rng.standard_normal((3, 2, 2)) + 0j)
    a = a + L.Mat2Laurent.constant(3 * np.eye(2))
    g = L.mat_invert(a)
    assert L.residual_identity(a, g) < 1e-9


def test_winding_number():
    assert L.winding_number(L.CLaurent(0, [0.1, 1.0])) == 1
    assert L.winding_number(L.CLaurent(-2, [1.0, 0.0, 0.1])) == -2
    assert L.winding_number(L.CLaurent(0, [1.0, 0.1])) == 0


def test_tilde_is_adjoint_on_circle(rng):
    a = L.Mat2Laurent(-1, rng.standard_normal((3, 2, 2)) + 1j * rng.standard_normal((3, 2, 2)))
    z = np.exp(0.4j)
    np.testing.assert_allclose(a.tilde()(z), a(z).conj().T, atol=1e-13)


def test_bauer_factorization_matrix(rng):
    # W = A A~ for a plus-invertible A
    a = L.Mat2Laurent(0, np.stack([2 * np.eye(2), 0.3 * rng.standard_normal((2, 2))]) + 0j)
    w = L.cl_mul(a, a.tilde())
    fac = L.mat_spectral_factorize_report(w)
    assert fac.residual < 1e-6
    assert fac.factor.min_deg >= 0
    assert L.winding_number(L.cl_det(fac.factor)) == 0
    a1 = fac.factor.coeffs.sum(axis=0)
    np.testing.assert_allclose(a1, a1.conj().T, atol=1e-10)
    assert np.all(np.linalg.eigvalsh(a1) > 0)


def test_bauer_rejects_non_positive():
    w = L.Mat2Laurent.constant(np.diag([1.0, -1.0]))
    with pytest.raises(NotPositiveError):
        L.mat_spectral_factorize(w)


def test_bauer_reports_slow_convergence():
    # nearly singular symbol: tiny section budget cannot reach the tolerance
    w = L.Mat2Laurent(-1, np.stack([-0.4999 * np.eye(2), np.eye(2), -0.4999 * np.eye(2)]))
    with pytest.raises(ConvergenceError):
        L.mat_spectral_factorize(w, n_section=16, eps=1e-12)
