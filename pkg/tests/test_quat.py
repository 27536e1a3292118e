import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from oracles import chi_naive, qmul_table
from qwiener.errors import DomainError, StructureError
from qwiener.quat import (
    E1, E2, E3, ONE, SliceBasis, chi, chi_inv, chi_structure_defect, qabs, qconj, qinv,
    qmul, qpow, sphere_conjugate, split, unsplit,
)

quats = arrays(float, 4, elements=st.floats(-5, 5, allow_nan=False, allow_infinity=False))


@settings(max_examples=200, deadline=None)
@given(quats, quats)
def test_qmul_matches_table(p, q):
    np.testing.assert_allclose(qmul(p, q), qmul_table(p, q), atol=1e-12)


def test_units_square_to_minus_one():
    for e in (E1, E2, E3):
        np.testing.assert_array_equal(qmul(e, e), -ONE)
    np.testing.assert_array_equal(qmul(E1, E2), E3)
    np.testing.assert_array_equal(qmul(E2, E1), -E3)


@settings(max_examples=100, deadline=None)
@given(quats, quats)
def test_norm_and_conjugate_are_multiplicative(p, q):
    assert abs(qabs(qmul(p, q)) - qabs(p) * qabs(q)) <= 1e-12 * (1 + qabs(p) * qabs(q))
    np.testing.assert_allclose(qconj(qmul(p, q)), qmul(qconj(q), qconj(p)), atol=1e-11)


def test_qinv(rng):
    p = rng.standard_normal(4)
    np.testing.assert_allclose(qmul(p, qinv(p)), ONE, atol=1e-14)
    with pytest.raises(DomainError):
        qinv(np.zeros(4))


def test_qpow_agrees_with_repeated_product(rng):
    p = rng.standard_normal(4)
    np.testing.assert_allclose(qpow(p, 3), qmul(p, qmul(p, p)), rtol=1e-12)
    np.testing.assert_allclose(qpow(p, -2), qinv(qmul(p, p)), rtol=1e-12)


def test_sphere_conjugate_stays_on_sphere(rng):
    p, q = rng.standard_normal(4), rng.standard_normal(4)
    s = sphere_conjugate(p, q)
    assert s[0] == pytest.approx(p[0])
    assert np.linalg.norm(s[1:]) == pytest.approx(np.linalg.norm(p[1:]))


def test_basis_validation():
    with pytest.raises(DomainError):
        SliceBasis(E1, E1)
    with pytest.raises(DomainError):
        SliceBasis(ONE, E2)
    assert np.allclose(SliceBasis(E1, E2).k, E3)


def test_random_basis_is_right_handed(rng):
    b = SliceBasis.random(rng)
    assert np.linalg.det(b.frame) == pytest.approx(1.0)


def test_chi_matches_explicit_coordinates(rng):
    for _ in range(20):
        b = SliceBasis.random(rng)
        p = rng.standard_normal(4)
        np.testing.assert_allclose(chi(p, b), chi_naive(p, b.i, b.j), atol=1e-12)


def test_chi_is_a_ring_homomorphism(rng):
    for _ in range(50):
        b = SliceBasis.random(rng)
        p, q = rng.standard_normal(4), rng.standard_normal(4)
        np.testing.assert_allclose(chi(qmul(p, q), b), chi(p, b) @ chi(q, b), atol=1e-12)
        np.testing.assert_allclose(np.linalg.det(chi(p, b)), qabs(p) ** 2)


def test_split_round_trip(rng):
    b = SliceBasis.random(rng)
    p = rng.standard_normal((7, 4))
    np.testing.assert_allclose(unsplit(*split(p, b), b), p, atol=1e-14)
    np.testing.assert_allclose(chi_inv(chi(p, b), b), p, atol=1e-14)


def test_chi_inv_rejects_unstructured():
    m = np.array([[1, 2], [3, 4]], dtype=complex)
    assert chi_structure_defect(m) > 0
    with pytest.raises(StructureError):
        chi_inv(m)
