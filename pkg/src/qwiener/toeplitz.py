"""Toeplitz operators on the quaternionic Hardy space, at finite section size.

l2(H) is a right module: the symbol coefficients act on the left of the
vector entries, (T xi)_r = sum_c phi_{r-c} xi_c.
"""

from dataclasses import dataclass

import numpy as np

from .discrete import ZERO, QSeries, star
from .errors import SizeError
from .kernels import qmatmul
from .quat import as_quat, qabs, qmul


def project(f, sign):
    """Hardy projections: ``"plus"`` keeps degrees >= 0, ``"minus"`` keeps <= -1."""
    if f.is_zero:
        return ZERO
    if sign in ("plus", "+", 1):
        if f.max_deg < 0:
            return ZERO
        lo = max(f.min_deg, 0)
        return QSeries(lo, f.window(lo, f.max_deg))
    if sign in ("minus", "-", -1):
        if f.min_deg > -1:
            return ZERO
        hi = min(f.max_deg, -1)
        return QSeries(f.min_deg, f.window(f.min_deg, hi))
    raise ValueError(f"unknown projection sign {sign!r}")


@dataclass(frozen=True)
class ToeplitzSection:
    symbol: QSeries
    n: int

    def matrix(self):
        """Entry (r, c) is phi_{r-c}; shape (n, n, 4)."""
        n = self.n
        d = np.arange(n)[:, None] - np.arange(n)[None, :]
        return self.symbol.window(-(n - 1), n - 1)[d + n - 1]


def toeplitz_apply(section, xi):
    xi = as_quat(np.asarray(xi, dtype=float)).reshape(-1, 4)
    if len(xi) != section.n:
        raise SizeError(f"vector of length {len(xi)} for section of size {section.n}")
    return qmul(section.matrix(), xi[None, :, :]).sum(axis=1)


def toeplitz_apply_star(section, xi):
    """Same operator through the series route: p(phi * xi) on degrees 0..n-1."""
    xi = as_quat(np.asarray(xi, dtype=float)).reshape(-1, 4)
    prod = star(section.symbol, QSeries(0, xi))
    return prod.window(0, section.n - 1)


def bandwidth(f):
    """Extent of the support around degree 0: max(|min_deg|, |max_deg|) + 1.

    Zero for the zero series.  This, not the raw support width, bounds how
    far truncation of a section can reach.
    """
    if f.is_zero:
        return 0
    return max(abs(f.min_deg), abs(f.max_deg)) + 1


@dataclass(frozen=True)
class ProductTest:
    is_toeplitz: bool
    equals_T_star: bool
    defect_norm: float
    diagonal_defect: float
    window: int


def _check_size(phi, psi, n):
    need = 4 * bandwidth(phi) + 4 * bandwidth(psi)
    if n <= need:
        raise SizeError(f"section size {n} must exceed {need}")
    return bandwidth(phi) + bandwidth(psi)


def product_section(phi, psi, n):
    return qmatmul(
        np.ascontiguousarray(ToeplitzSection(phi, n).matrix()),
        np.ascontiguousarray(ToeplitzSection(psi, n).matrix()),
    )


def _diagonal_defect(m):
    n = m.shape[0]
    worst = 0.0
    for d in range(-(n - 1), n):
        diag = np.diagonal(m, offset=d).T  # (len, 4)
        if len(diag) > 1:
            worst = max(worst, float(np.max(qabs(diag - diag[0]))))
    return worst


def toeplitz_product_test(phi, psi, n, tol=1e-12):
    """Is the finite section of T_phi T_psi Toeplitz, and equal to T_{phi*psi}?

    Rows and columns [n - w, n) are discarded, w being the combined
    bandwidth: that margin is contaminated by truncating the semi-infinite
    product.  The top-left corner, where a non-Toeplitz defect lives, is
    kept.
    """
    w = _check_size(phi, psi, n)
    m = n - w
    prod = product_section(phi, psi, n)[:m, :m]
    ref = ToeplitzSection(star(phi, psi), n).matrix()[:m, :m]
    scale = max(1.0, phi.norm() * psi.norm())
    defect = float(np.max(qabs(prod - ref))) if m else 0.0
    diag = _diagonal_defect(prod)
    return ProductTest(diag <= tol * scale, defect <= tol * scale, defect, diag, m)


def zero_product_probe(phi, psi, n, tol=1e-12):
    """True iff the inner window of the section of T_phi T_psi vanishes."""
    w = _check_size(phi, psi, n)
    if phi.is_zero or psi.is_zero:
        return True
    m = n - w
    prod = product_section(phi, psi, n)[:m, :m]
    return float(np.sqrt(np.sum(prod**2))) <= tol
