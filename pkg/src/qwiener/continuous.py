"""The continuous quaternionic Wiener algebra on the imaginary line.

An element is ``F(p) = c + int e^{pu} f(u) du`` for ``p = it``.  The kernel
``f`` is stored as samples on a uniform grid ``u0 + k du`` whose nodes lie
on the lattice ``du * Z``.  Every integral is the rectangle sum over the
nodes, so an element is exactly the discrete series ``c + du sum f_k z^k``
in ``z = exp(i t du)``: products, inverses and truncations stay consistent
on the lattice, and the only error against the true integrals is the
first-order quadrature error.
"""

from dataclasses import dataclass

import numpy as np

from . import discrete, laurent
from .errors import GridError, NotInvertibleError, NotPlusError, StructureError
from .kernels import qconv
from .quat import DEFAULT_BASIS, as_quat, chi, qabs, qinv, qmul

EPS_C = 1e-6
TAU_PM = 1e-14


def _lattice_index(u0, du):
    k = round(u0 / du)
    if abs(k * du - u0) > 1e-9 * max(du, abs(u0)):
        raise GridError(f"u0={u0} is not on the lattice du*Z (du={du})")
    return int(k)


def quad_weights(n, du):
    return np.full(n, du)


@dataclass(frozen=True, eq=False)
class CElement:
    """c + kernel sampled at u0 + k du, k = 0..len(samples)-1."""

    c: np.ndarray
    u0: float
    du: float
    samples: np.ndarray

    def __post_init__(self):
        if not self.du > 0:
            raise GridError("du must be positive")
        object.__setattr__(self, "c", as_quat(np.array(self.c, dtype=float)))
        s = np.array(self.samples, dtype=float).reshape(-1, 4)
        object.__setattr__(self, "samples", s)
        object.__setattr__(self, "u0", float(self.u0))
        object.__setattr__(self, "du", float(self.du))

    @classmethod
    def constant(cls, c, du=0.01):
        return cls(c, 0.0, du, np.zeros((0, 4)))

    @classmethod
    def from_function(cls, c, func, a, b, du):
        """Sample ``func`` (returning (n, 4) quaternions) on [a, b] with step du."""
        k0 = round(a / du)
        k1 = round(b / du)
        u = du * np.arange(k0, k1 + 1)
        return cls(c, k0 * du, du, np.asarray(func(u), dtype=float).reshape(-1, 4))

    @property
    def k0(self):
        return _lattice_index(self.u0, self.du)

    @property
    def n(self):
        return len(self.samples)

    @property
    def nodes(self):
        return self.du * (self.k0 + np.arange(self.n))

    @property
    def support(self):
        if self.n == 0:
            return (0.0, 0.0)
        return (self.u0, self.u0 + (self.n - 1) * self.du)

    @property
    def weights(self):
        return quad_weights(self.n, self.du)

    def kernel_l1(self):
        return float(self.weights @ qabs(self.samples)) if self.n else 0.0

    def kernel_mass(self):
        """Integral of the kernel (a quaternion)."""
        return self.weights @ self.samples if self.n else np.zeros(4)

    def norm(self):
        return float(qabs(self.c)) + self.kernel_l1()

    def __sub__(self, other):
        return _combine(self, other, -1.0)

    def __add__(self, other):
        return _combine(self, other, 1.0)

    def __repr__(self):
        return f"CElement(c={self.c.tolist()}, u0={self.u0}, du={self.du}, n={self.n})"


def _check_du(a, b):
    if abs(a.du - b.du) > 1e-12 * a.du:
        raise GridError(f"grid steps differ: {a.du} vs {b.du}")


def _place(parts, du):
    """Sum lattice-indexed kernels [(k0, samples), ...] into one array."""
    parts = [(k, s) for k, s in parts if len(s)]
    if not parts:
        return 0, np.zeros((0, 4))
    lo = min(k for k, _ in parts)
    hi = max(k + len(s) for k, s in parts)
    out = np.zeros((hi - lo, 4))
    for k, s in parts:
        out[k - lo : k - lo + len(s)] += s
    return lo, out


def _combine(a, b, sign):
    _check_du(a, b)
    lo, s = _place([(a.k0, a.samples), (b.k0, sign * b.samples)], a.du)
    return CElement(a.c + sign * b.c, lo * a.du, a.du, s)


def cstar(f1, f2):
    """Star product: constant c1 c2, kernel c1 f2 + f1 c2 + (f1 o f2)."""
    _check_du(f1, f2)
    du = f1.du
    parts = []
    if f2.n:
        parts.append((f2.k0, qmul(f1.c, f2.samples)))
    if f1.n:
        parts.append((f1.k0, qmul(f1.samples, f2.c)))
    if f1.n and f2.n:
        parts.append((f1.k0 + f2.k0, du * qconv(f1.samples, f2.samples)))
    lo, s = _place(parts, du)
    return CElement(qmul(f1.c, f2.c), lo * du, du, s)


def ceval(F, i, t):
    """F(it) = c + du sum_k e^{i t u_k} f(u_k), the exponential acting on the left."""
    i = as_quat(i)
    if F.n == 0:
        return F.c.copy()
    tu = t * F.nodes
    w = F.weights
    cos_part = (w * np.cos(tu)) @ F.samples
    sin_part = (w * np.sin(tu)) @ F.samples
    return F.c + cos_part + qmul(i, sin_part)


@dataclass(frozen=True)
class TGrid:
    t_max: float
    n_t: int

    def __post_init__(self):
        if self.n_t < 2 or not self.t_max > 0:
            raise GridError("need n_t >= 2 and t_max > 0")

    @property
    def t(self):
        return np.linspace(-self.t_max, self.t_max, self.n_t)


DEFAULT_GRID = TGrid(40.0, 801)


def _fourier(F, t):
    """Rows e^{i t u_k} w_k, shape (len(t), n)."""
    return np.exp(1j * np.outer(t, F.nodes)) * F.weights


def omega_c(F, basis=DEFAULT_BASIS, grid=DEFAULT_GRID):
    """omega(F)(it) = chi(c) + int e^{itu} chi(f(u)) du on the grid; shape (n_t, 2, 2)."""
    t = grid.t if isinstance(grid, TGrid) else np.atleast_1d(np.asarray(grid, dtype=float))
    out = np.broadcast_to(chi(F.c, basis), (len(t), 2, 2)).copy()
    if F.n:
        k = chi(F.samples, basis).reshape(F.n, 4)
        out += (_fourier(F, t) @ k).reshape(len(t), 2, 2)
    return out


def value_matrix(F, basis=DEFAULT_BASIS, grid=DEFAULT_GRID):
    """chi(F(it)) for the unit basis.i: the pointwise value on the slice.

    Writing F(it) = A(t) + B(t) j, this is [[A, B], [-conj B, conj A]]; it
    differs from omega(F)(it), whose second row uses A(-t) and B(-t).
    """
    om = omega_c(F, basis, grid)
    a, b = om[:, 0, 0], om[:, 0, 1]
    out = np.empty_like(om)
    out[:, 0, 0] = a
    out[:, 0, 1] = b
    out[:, 1, 0] = -np.conj(b)
    out[:, 1, 1] = np.conj(a)
    return out


@dataclass(frozen=True)
class CInvertibilityVerdict:
    invertible: bool
    mode: str  # "NeumannCertificate" or "GridEvidence"
    min_abs_det: float
    witness_t: float
    tail_det: float


def is_invertible_c(F, basis=DEFAULT_BASIS, grid=DEFAULT_GRID, tol=1e-8):
    """Neumann certificate when ||f||_1 < |c|, otherwise grid evidence.

    det omega(F)(it) tends to |c|^2 as |t| grows; that limit is reported
    as ``tail_det`` and must itself exceed ``tol``.
    """
    c_abs = float(qabs(F.c))
    tail = c_abs**2
    # a relative margin keeps round-off from certifying a borderline element
    if F.kernel_l1() < c_abs * (1 - 1e-9):
        t = grid.t
        det = np.linalg.det(omega_c(F, basis, grid))
        k = int(np.argmin(np.abs(det)))
        return CInvertibilityVerdict(True, "NeumannCertificate", float(abs(det[k])), float(t[k]), tail)
    t = grid.t
    det = np.abs(np.linalg.det(omega_c(F, basis, grid)))
    k = int(np.argmin(det))
    ok = det[k] > tol and tail > tol
    witness = float(t[k]) if det[k] <= tail else float("inf")
    return CInvertibilityVerdict(bool(ok), "GridEvidence", float(min(det[k], tail)), witness, tail)


def to_series(F):
    """Lattice series c delta_0 + du f_k in powers of z = exp(i t du)."""
    lo, s = _place([(0, F.c[None]), (F.k0, F.samples * F.weights[:, None])], F.du)
    return discrete.QSeries(lo, s)


def from_series(e, c, du):
    """Inverse of to_series for a series whose constant part is ``c``."""
    kern = e - discrete.QSeries.constant(c)
    if kern.is_zero:
        return CElement(c, 0.0, du, np.zeros((0, 4)))
    return CElement(c, kern.min_deg * du, du, kern.coeffs / du)


def omega_residual(F, G, basis=DEFAULT_BASIS, grid=DEFAULT_GRID):
    """sup over the grid of the spectral norm of omega(F) omega(G) - I."""
    prod = omega_c(F, basis, grid) @ omega_c(G, basis, grid)
    return float(np.max(np.linalg.norm(prod - np.eye(2), ord=2, axis=(1, 2))))


def cstar_residual(F, G):
    """(|constant - 1|, kernel L1 mass) of F * G - 1."""
    P = cstar(F, G)
    return float(qabs(P.c - np.array([1.0, 0, 0, 0]))), P.kernel_l1()


def _invert_series(s, tol, eps):
    """Discrete inverse g = s^c * N^{-1}, window doubling until ||s*g - 1|| <= eps."""
    n_sym = discrete.real_part_series(discrete.symmetrize(s))
    sc = discrete.conj_series(s)
    w = max(16, 4 * s.width, 4 * abs(s.min_deg), 4 * abs(s.max_deg))
    while True:
        r = laurent.scalar_invert_real(n_sym, out_window=w + s.width, tol=tol)
        rq = discrete.QSeries(r.min_deg, np.column_stack([r.coeffs.real, np.zeros((r.width, 3))]))
        g = discrete.QSeries(-w, discrete.star(sc, rq).window(-w, w))
        if w >= laurent.MAX_WINDOW or discrete.inverse_residual(s, g) <= eps:
            return g
        w *= 2


def invert_c(F, basis=DEFAULT_BASIS, grid=DEFAULT_GRID, tol=1e-8, eps=EPS_C):
    """Inverse in the continuous algebra.

    The symbol of F is exactly the discrete symbol of
    ``to_series(F)`` at z = exp(i t du), so that series is inverted in the
    discrete algebra (window widened until the l1 residual is below
    eps / 10) and mapped back with constant c^{-1}.
    """
    verdict = is_invertible_c(F, basis, grid, tol)
    if not verdict.invertible:
        raise NotInvertibleError(
            f"det omega(F) ~ {verdict.min_abs_det:.3e} at t={verdict.witness_t:.6g}",
            verdict.min_abs_det,
            verdict.witness_t,
        )
    c_inv = qinv(F.c)
    if F.n == 0:
        return CElement(c_inv, 0.0, F.du, np.zeros((0, 4)))
    e = _invert_series(to_series(F), tol, eps / 10)
    G = from_series(e, c_inv, F.du)
    resid = omega_residual(F, G, basis, grid)
    if resid > eps:
        raise StructureError(f"omega(F) omega(G) - I = {resid:.3e} on the grid; refine the grid")
    return G


def membership_pm(F):
    u = F.nodes
    mags = qabs(F.samples) if F.n else np.zeros(0)
    plus = not np.any(mags[u < 0] > TAU_PM)
    minus = not np.any(mags[u > 0] > TAU_PM)
    return {"plus": bool(plus), "minus": bool(minus)}


def winding_on_line(F, basis=DEFAULT_BASIS, grid=DEFAULT_GRID):
    """Net turns of det omega(F)(it) as t runs over the grid."""
    det = np.linalg.det(omega_c(F, basis, grid))
    phase = np.unwrap(np.angle(det))
    return int(np.rint((phase[-1] - phase[0]) / (2 * np.pi)))


def truncate(F, lo=None, hi=None):
    keep = np.ones(F.n, dtype=bool)
    u = F.nodes
    if lo is not None:
        keep &= u >= lo - 1e-12 * F.du
    if hi is not None:
        keep &= u <= hi + 1e-12 * F.du
    s = np.where(keep[:, None], F.samples, 0.0)
    nz = np.flatnonzero(np.any(s != 0, axis=1))
    if len(nz) == 0:
        return CElement(F.c, 0.0, F.du, np.zeros((0, 4)))
    return CElement(F.c, u[nz[0]], F.du, s[nz[0] : nz[-1] + 1])


def invert_plus_c(F, basis=DEFAULT_BASIS, grid=DEFAULT_GRID, tol=1e-8, eps=EPS_C):
    """Inverse inside the plus subalgebra (kernels vanishing for u < 0)."""
    if not membership_pm(F)["plus"]:
        raise NotPlusError("kernel has mass at u < 0")
    verdict = is_invertible_c(F, basis, grid, tol)
    if not verdict.invertible:
        raise NotInvertibleError("not invertible", verdict.min_abs_det, verdict.witness_t)
    if verdict.mode != "NeumannCertificate":
        turns = winding_on_line(F, basis, grid)
        if turns != 0:
            raise NotInvertibleError(
                f"det omega(F) winds {turns} times along the line: zeros in the half-plane",
                verdict.min_abs_det,
                turns,
            )
    G = invert_c(F, basis, grid, tol, eps)
    neg = G.nodes < 0
    leak = float(G.weights[neg] @ qabs(G.samples[neg])) if np.any(neg) else 0.0
    if leak > eps:
        raise StructureError(f"inverse has mass {leak:.3e} at u < 0")
    return truncate(G, lo=0.0)


@dataclass(frozen=True)
class SlicePositivity:
    positive: bool
    hermitian: bool
    hermitian_defect: float
    min_eigenvalue: float
    witness_t: float


def is_strictly_positive_on_slice(F, basis=DEFAULT_BASIS, grid=DEFAULT_GRID, tol=1e-10):
    """Positivity of the values F(it), t real, on the slice of ``basis.i``.

    chi(F(it)) is Hermitian exactly when F(it) is real, and then its
    eigenvalue is F(it) itself.  The verdict depends on the slice.
    """
    vals = value_matrix(F, basis, grid)
    herm = np.max(np.abs(vals - np.conj(np.swapaxes(vals, 1, 2))), axis=(1, 2))
    defect = float(np.max(herm))
    eig = np.linalg.eigvalsh(0.5 * (vals + np.conj(np.swapaxes(vals, 1, 2))))[:, 0]
    k = int(np.argmin(eig))
    hermitian = defect <= max(tol, 1e-12 * F.norm())
    return SlicePositivity(
        bool(hermitian and eig[k] > tol), bool(hermitian), defect, float(eig[k]), float(grid.t[k])
    )
