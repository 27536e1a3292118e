import numpy as np
import pytest

from qwiener import continuous as C
from qwiener import hardy as H
from qwiener.checks import wh_counterexample
from qwiener.errors import GridError, SizeError
from qwiener.quat import E1, E2, E3, ONE, SliceBasis, qabs, qmul, split, unsplit

DU = 0.01


def random_hardy(rng, n, basis=None, du=DU):
    basis = basis or SliceBasis.random(rng)
    return H.HardyElement(basis, du, rng.standard_normal(n) + 1j * rng.standard_normal(n),
                          rng.standard_normal(n) + 1j * rng.standard_normal(n))


def test_norm_examples(rng):
    b = SliceBasis(E1, E2)
    assert H.hardy_norm(H.HardyElement.zeros(10, DU, b)) == 0
    box = H.HardyElement(b, DU, np.ones(100), np.zeros(100))  # nodes 0 .. 0.99
    assert H.hardy_norm(box) ** 2 == pytest.approx(2 * np.pi)
    F = random_hardy(rng, 30)
    swapped = H.HardyElement(F.basis, DU, F.samples2, F.samples1)
    assert H.hardy_norm(swapped) == pytest.approx(H.hardy_norm(F))


def test_quaternion_kernel_round_trip(rng):
    F = random_hardy(rng, 12)
    back = H.HardyElement.from_quaternion_kernel(F.quaternion_kernel(), DU, F.basis)
    np.testing.assert_allclose(back.samples1, F.samples1, atol=1e-14)
    np.testing.assert_allclose(back.samples2, F.samples2, atol=1e-14)


def test_projections(rng):
    b = SliceBasis.random(rng)
    g = H.LineElement(b, DU, -0.2, rng.standard_normal(50) + 0j, rng.standard_normal(50) + 1j)
    P, Q = H.project_P(g), H.project_Q(g)
    assert P.n == 30
    np.testing.assert_array_equal(P.samples1, g.samples1[20:])
    assert not np.any(Q.samples1[20:])
    r = H.reconstruct(g)
    np.testing.assert_array_equal(r.samples1, g.samples1)
    np.testing.assert_array_equal(r.samples2, g.samples2)
    assert H.line_inner(H.embed(P, g), Q) == 0
    # P o P = P
    PP = H.project_P(H.embed(P, g))
    np.testing.assert_array_equal(PP.samples1, P.samples1)


def test_projection_of_half_supported(rng):
    b = SliceBasis.random(rng)
    pos = H.LineElement(b, DU, 0.0, rng.standard_normal(10) + 0j, np.zeros(10))
    assert not np.any(H.project_Q(pos).samples1)
    np.testing.assert_array_equal(H.project_P(pos).samples1, pos.samples1)
    neg = H.LineElement(b, DU, -0.1, rng.standard_normal(10) + 0j, np.zeros(10))
    assert H.hardy_norm(H.project_P(neg)) == 0
    later = H.LineElement(b, DU, 0.05, np.ones(3), np.zeros(3))
    np.testing.assert_array_equal(H.project_P(later).samples1, [0, 0, 0, 0, 0, 1, 1, 1])


def test_wh_identity_and_constants(rng):
    F = random_hardy(rng, 20)
    out = H.wh_apply(C.CElement.constant(ONE, DU), F)
    np.testing.assert_allclose(out.samples1, F.samples1, atol=1e-14)
    q = rng.standard_normal(4)
    out = H.wh_apply(C.CElement.constant(q, DU), F)
    np.testing.assert_allclose(out.quaternion_kernel(), qmul(q, F.quaternion_kernel()), atol=1e-12)
    assert H.hardy_norm(out) == pytest.approx(float(qabs(q)) * H.hardy_norm(F))


def test_wh_plus_kernel_matches_dense_convolution(rng):
    b = SliceBasis(E1, E2)
    n = 60
    F = H.HardyElement(b, DU, np.where(np.arange(n) < 20, 1.0, 0.0), np.zeros(n))
    q = rng.standard_normal(4)
    Phi = C.CElement(np.zeros(4), 0.0, DU, np.outer(np.linspace(1, 2, 15), q))
    out = H.wh_apply(Phi, F).quaternion_kernel()
    f = F.quaternion_kernel()
    dense = np.zeros((n, 4))
    for u in range(n):
        for v in range(n):
            if 0 <= u - v < 15:
                dense[u] += DU * qmul(Phi.samples[u - v], f[v])
    np.testing.assert_allclose(out, dense, atol=1e-10)


def test_wh_right_linearity(rng):
    F = random_hardy(rng, 40)
    Phi = C.CElement(rng.standard_normal(4), -0.1, DU, rng.standard_normal((20, 4)))
    z = 0.3 - 1.2j
    lhs = H.wh_apply(Phi, F.scale_right(z))
    rhs = H.wh_apply(Phi, F).scale_right(z)
    np.testing.assert_allclose(lhs.samples1, rhs.samples1, atol=1e-12)
    np.testing.assert_allclose(lhs.samples2, rhs.samples2, atol=1e-12)
    # scale_right is right multiplication of the quaternion kernel
    zq = unsplit(z, 0, F.basis)
    np.testing.assert_allclose(F.scale_right(z).quaternion_kernel(), qmul(F.quaternion_kernel(), zq), atol=1e-12)


def test_product_branches(rng):
    def elem(a, b):
        return C.CElement.from_function(rng.standard_normal(4), lambda u: np.outer(np.cos(3 * u), rng.standard_normal(4)), a, b, DU)

    F = random_hardy(rng, 801)
    res = H.wh_product_test(elem(-1, 1), elem(0, 1), F)
    assert res.is_wh and res.branch == "Psi plus"
    res = H.wh_product_test(elem(-1, 0), elem(-1, 1), F)
    assert res.is_wh and res.branch == "Phi minus"
    res = H.wh_product_test(elem(0, 1), elem(-1, 1), F)
    assert not res.is_wh and res.branch == "none"


def test_counterexample():
    res = H.wh_product_test(*wh_counterexample())
    assert res.defect > 1e-2


def test_size_and_grid_errors(rng):
    F = random_hardy(rng, 50)
    wide = C.CElement(ONE, -1.0, DU, np.ones((201, 4)))
    with pytest.raises(SizeError):
        H.wh_product_test(wide, wide, F)
    with pytest.raises(GridError):
        H.wh_apply(C.CElement.constant(ONE, 0.02), F)
    with pytest.raises(ValueError):
        H.HardyElement(F.basis, DU, np.ones(3), np.ones(4))
