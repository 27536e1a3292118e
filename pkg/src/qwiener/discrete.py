"""The discrete quaternionic Wiener algebra.

Elements are finitely supported series ``f(p) = sum_u p^u f_u`` with
quaternion coefficients written on the right of the powers.  The product
is the coefficient convolution ``(f * g)_u = sum_k f_{u-k} g_k``.
"""

from dataclasses import dataclass, field

import numpy as np
import scipy.signal

from . import laurent
from .errors import (
    ClassificationError,
    DomainError,
    NotInvertibleError,
    NotPlusError,
    NotPositiveError,
    StructureError,
)
from .kernels import qconv
from .laurent import CLaurent, Mat2Laurent
from .quat import (
    DEFAULT_BASIS,
    TAU_STRUCT,
    as_quat,
    chi,
    chi_inv,
    chi_structure_defect,
    qabs,
    qconj,
    qinv,
    qmul,
    split,
)

EPS_INV = 1e-9
EPS_FACT = 1e-6
TAU_ROOT = 1e-7


def _trim(min_deg, coeffs):
    nz = np.flatnonzero(np.any(coeffs != 0.0, axis=1))
    if len(nz) == 0:
        return 0, coeffs[:0]
    return min_deg + int(nz[0]), coeffs[nz[0] : nz[-1] + 1]


@dataclass(frozen=True, eq=False)
class QSeries:
    """Finitely supported quaternion Laurent series in normal (trimmed) form."""

    min_deg: int
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=float).reshape(-1, 4)
        m, c = _trim(int(self.min_deg), c)
        c.setflags(write=False)
        object.__setattr__(self, "min_deg", m)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def constant(cls, q):
        return cls(0, as_quat(q)[None])

    @classmethod
    def monomial(cls, u, q):
        return cls(u, as_quat(q)[None])

    @classmethod
    def from_dict(cls, terms):
        """Build from ``{degree: quaternion}``."""
        if not terms:
            return cls(0, np.zeros((0, 4)))
        lo, hi = min(terms), max(terms)
        c = np.zeros((hi - lo + 1, 4))
        for u, q in terms.items():
            c[u - lo] += as_quat(q)
        return cls(lo, c)

    @property
    def max_deg(self):
        return self.min_deg + len(self.coeffs) - 1

    @property
    def width(self):
        return len(self.coeffs)

    @property
    def is_zero(self):
        return self.width == 0

    def degrees(self):
        return np.arange(self.min_deg, self.min_deg + self.width)

    def coeff(self, u):
        k = u - self.min_deg
        if 0 <= k < self.width:
            return self.coeffs[k].copy()
        return np.zeros(4)

    def window(self, lo, hi):
        out = np.zeros((hi - lo + 1, 4))
        a, b = max(lo, self.min_deg), min(hi, self.max_deg)
        if a <= b:
            out[a - lo : b - lo + 1] = self.coeffs[a - self.min_deg : b - self.min_deg + 1]
        return out

    def norm(self):
        """Wiener norm sum_u |f_u|."""
        return float(np.sum(qabs(self.coeffs))) if self.width else 0.0

    def is_plus(self):
        return self.is_zero or self.min_deg >= 0

    def is_minus(self):
        return self.is_zero or self.max_deg <= 0

    def __add__(self, other):
        return _combine(self, other, 1.0)

    def __sub__(self, other):
        return _combine(self, other, -1.0)

    def __neg__(self):
        return QSeries(self.min_deg, -self.coeffs)

    def scale(self, r):
        return QSeries(self.min_deg, self.coeffs * float(r))

    def rmul(self, q):
        """Right multiplication of every coefficient by the quaternion q."""
        return QSeries(self.min_deg, qmul(self.coeffs, q))

    def lmul(self, q):
        return QSeries(self.min_deg, qmul(q, self.coeffs))

    def __call__(self, p):
        return eval_at(self, p)

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.min_deg == other.min_deg and np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash((self.min_deg, self.coeffs.tobytes()))

    def __repr__(self):
        return f"QSeries(min_deg={self.min_deg}, coeffs={self.coeffs.tolist()!r})"


ZERO = QSeries(0, np.zeros((0, 4)))
UNIT = QSeries.constant([1.0, 0.0, 0.0, 0.0])


def _combine(f, g, sign):
    if f.is_zero:
        return QSeries(g.min_deg, sign * g.coeffs)
    if g.is_zero:
        return f
    lo, hi = min(f.min_deg, g.min_deg), max(f.max_deg, g.max_deg)
    return QSeries(lo, f.window(lo, hi) + sign * g.window(lo, hi))


def star(f, g):
    """The star product: exact convolution with f_{u-k} g_k in that order."""
    if f.is_zero or g.is_zero:
        return ZERO
    return QSeries(f.min_deg + g.min_deg, qconv(f.coeffs, g.coeffs))


def eval_at(f, p):
    """f(p) = sum_u p^u f_u, with p^u = (p^{-1})^{-u} for negative u.

    Powers of ``p`` live in the complex plane of ``p``, so they are taken
    from its polar form; the result is ``s + I t`` with
    ``s = sum r^u cos(u phi) f_u`` and ``t = sum r^u sin(u phi) f_u``.
    """
    p = as_quat(p)
    if f.is_zero:
        return np.zeros(4)
    r = float(qabs(p))
    if r == 0.0:
        if f.min_deg < 0:
            raise DomainError("p = 0 with negative powers present")
        return f.coeff(0)
    im = float(np.linalg.norm(p[1:]))
    phi = np.arctan2(im, p[0])
    unit = np.concatenate([[0.0], p[1:] / im]) if im > 0 else np.zeros(4)
    u = f.degrees()
    ru = r ** u.astype(float)
    s = (ru * np.cos(u * phi)) @ f.coeffs
    t = (ru * np.sin(u * phi)) @ f.coeffs
    return s + qmul(unit, t)


def pointwise_star_identity(f, g, p):
    """Both sides of (f*g)(p) = f(p) g(f(p)^{-1} p f(p))."""
    lhs = eval_at(star(f, g), p)
    fp = eval_at(f, p)
    if not np.any(fp):
        return lhs, np.zeros(4)
    moved = qmul(qmul(qinv(fp), p), fp)
    return lhs, qmul(fp, eval_at(g, moved))


def conj_series(f):
    """f^c: conjugate every coefficient, keep the degrees."""
    return QSeries(f.min_deg, qconj(f.coeffs))


def adjoint_series(f):
    """Reflected conjugate sum_u p^{-u} conj(f_u); its omega is omega(f)^* on the circle."""
    if f.is_zero:
        return f
    return QSeries(-f.max_deg, qconj(f.coeffs)[::-1])


def symmetrize(f):
    """N = f * f^c, whose coefficients are real."""
    n = star(f, conj_series(f))
    if n.is_zero:
        return n
    scale = max(1.0, f.norm() ** 2)
    if np.max(np.abs(n.coeffs[:, 1:])) > 1e-13 * scale:
        raise StructureError("symmetrization has non-real coefficients")
    c = np.zeros_like(n.coeffs)
    c[:, 0] = n.coeffs[:, 0]
    return QSeries(n.min_deg, c)


def real_part_series(n):
    """Complex restriction of a real-coefficient series as a CLaurent."""
    if n.is_zero:
        return CLaurent(0, [])
    return CLaurent(n.min_deg, n.coeffs[:, 0].astype(complex))


def omega(f, basis=DEFAULT_BASIS):
    """Coefficientwise chi: the 2x2 matrix symbol of f."""
    if f.is_zero:
        return Mat2Laurent(0, np.zeros((0, 2, 2)))
    return Mat2Laurent(f.min_deg, chi(f.coeffs, basis))


def omega_inv(a, basis=DEFAULT_BASIS, tol=TAU_STRUCT):
    if a.width == 0:
        return ZERO
    defect = chi_structure_defect(a.coeffs)
    bad = np.flatnonzero(defect > tol)
    if len(bad):
        u = a.min_deg + int(bad[0])
        raise StructureError(f"coefficient at degree {u} violates chi structure ({defect[bad[0]]:.3e})")
    return QSeries(a.min_deg, chi_inv(a.coeffs, basis, tol))


def det_omega(f, basis=DEFAULT_BASIS):
    """det omega(f) computed from the matrix symbol and cross-checked
    against the complex restriction of f * f^c."""
    det = laurent.cl_det(omega(f, basis))
    sym = real_part_series(symmetrize(f))
    scale = max(1.0, f.norm() ** 2)
    if (det - sym).width and (det - sym).norm() > 1e-12 * scale * max(1, det.width):
        raise StructureError("det omega(f) disagrees with the symmetrization")
    return sym


@dataclass(frozen=True)
class InvertibilityVerdict:
    invertible: bool
    min_abs_det: float
    lower_bound: float
    witness_theta: float
    reason: str = ""


def _circle_roots(n_sym):
    """Roots of z^{-min_deg} N(z) (ascending coefficients) near the unit circle."""
    if n_sym.width < 2:
        return np.zeros(0, dtype=complex)
    roots = np.roots(n_sym.coeffs.real[::-1])
    return roots[np.abs(np.abs(roots) - 1.0) <= TAU_ROOT]


def is_invertible(f, basis=DEFAULT_BASIS, tol=1e-8):
    """Invertibility in the full algebra: det omega(f) has no zero on |z| = 1.

    det omega(f) equals the symmetrization, whose coefficients are real
    and basis independent, so the verdict does not depend on ``basis``.
    """
    if f.is_zero:
        return InvertibilityVerdict(False, 0.0, 0.0, 0.0, "zero series")
    n_sym = real_part_series(symmetrize(f))
    cm = laurent.circle_min_abs(n_sym)
    theta = cm.theta if cm.theta <= np.pi else 2 * np.pi - cm.theta
    roots = _circle_roots(n_sym)
    if len(roots):
        theta = float(np.min(np.abs(np.angle(roots))))
        return InvertibilityVerdict(False, cm.min_abs, cm.lower_bound, theta, "root on circle")
    if cm.min_abs <= tol:
        return InvertibilityVerdict(False, cm.min_abs, cm.lower_bound, theta, "grid minimum below tol")
    return InvertibilityVerdict(True, cm.min_abs, cm.lower_bound, theta)


def _truncate(f, lo, hi):
    return QSeries(lo, f.window(lo, hi))


def invert(f, basis=DEFAULT_BASIS, out_window=None, tol=1e-8, eps=EPS_INV):
    """Two-sided inverse via g = f^c * N^{-1} with N = f * f^c real and central."""
    verdict = is_invertible(f, basis, tol)
    if not verdict.invertible:
        raise NotInvertibleError(
            f"not invertible: |det omega| ~ {verdict.min_abs_det:.3e} at theta={verdict.witness_theta:.6g}",
            verdict.min_abs_det,
            verdict.witness_theta,
        )
    if f.width == 1:
        return QSeries(-f.min_deg, qinv(f.coeffs[0])[None])
    n_sym = real_part_series(symmetrize(f))
    fc = conj_series(f)
    auto = out_window is None
    w = max(16, 4 * f.width) if auto else int(out_window)
    while True:
        r = laurent.scalar_invert_real(n_sym, out_window=w + f.width, tol=tol)
        rq = QSeries(r.min_deg, np.column_stack([r.coeffs.real, np.zeros((r.width, 3))]))
        g = _truncate(star(fc, rq), -w, w)
        if not auto or w >= laurent.MAX_WINDOW or inverse_residual(f, g) <= eps:
            return g
        w *= 2


def inverse_residual(f, g):
    """max(||f*g - 1||, ||g*f - 1||) in the Wiener norm."""
    return max((star(f, g) - UNIT).norm(), (star(g, f) - UNIT).norm())


@dataclass(frozen=True)
class ZeroEntry:
    theta: float
    kind: str  # "Spherical" or "Isolated"
    unit: np.ndarray | None
    residual: float


@dataclass(frozen=True)
class ZeroReport:
    entries: list = field(default_factory=list)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def _cluster_angles(thetas, gap=1e-4):
    thetas = np.sort(thetas)
    groups = []
    for t in thetas:
        if groups and t - groups[-1][-1] <= gap:
            groups[-1].append(t)
        else:
            groups.append([t])
    return [float(np.mean(g)) for g in groups]


def _s_t(f, theta):
    u = f.degrees()
    return np.cos(u * theta) @ f.coeffs, np.sin(u * theta) @ f.coeffs


def classify_zeros(f, basis=DEFAULT_BASIS, tol=1e-6):
    """Zeros of f on the unit sphere, one entry per sphere [cos t + I sin t].

    The angles come from the roots of det omega(f) on the circle; each
    sphere is Spherical when f vanishes identically on it (s = t = 0),
    otherwise Isolated with the unique unit I = -s t^{-1}.
    """
    if f.is_zero:
        raise ClassificationError("zero series vanishes everywhere")
    n_sym = real_part_series(symmetrize(f))
    if n_sym.width < 2:
        return ZeroReport([])
    roots = np.roots(n_sym.coeffs.real[::-1])
    near = roots[np.abs(np.abs(roots) - 1.0) <= TAU_ROOT ** 0.5]
    # keep only roots that really sit on the circle; multiple roots spread ~sqrt(eps)
    thetas = np.abs(np.angle(near))
    entries = []
    scale = max(f.norm(), 1e-300)
    for theta in _cluster_angles(thetas):
        group = near[np.abs(np.abs(np.angle(near)) - theta) <= 1e-4]
        if abs(np.abs(np.mean(np.abs(group))) - 1.0) > TAU_ROOT:
            continue
        s, t = _s_t(f, theta)
        if qabs(s) <= tol * scale and qabs(t) <= tol * scale:
            res = max(float(qabs(s)), float(qabs(t)))
            entries.append(ZeroEntry(theta, "Spherical", None, res))
            continue
        if qabs(t) <= tol * scale:
            raise ClassificationError(
                f"theta={theta:.6g}: s={s.tolist()}, t={t.tolist()}, t vanishes but s does not"
            )
        unit = -qmul(s, qinv(t))
        sq = qmul(unit, unit)
        defect = float(qabs(sq + np.array([1.0, 0.0, 0.0, 0.0])))
        if defect > tol or abs(unit[0]) > tol:
            raise ClassificationError(
                f"theta={theta:.6g}: s={s.tolist()}, t={t.tolist()}, |I^2+1|={defect:.3e}"
            )
        unit = np.concatenate([[0.0], unit[1:] / np.linalg.norm(unit[1:])])
        point = np.cos(theta) * np.array([1.0, 0, 0, 0]) + np.sin(theta) * unit
        res = float(qabs(eval_at(f, point)))
        entries.append(ZeroEntry(theta, "Isolated", unit, res))
    return ZeroReport(entries)


def is_invertible_plus(f, basis=DEFAULT_BASIS, tol=1e-8):
    """Invertibility inside the plus subalgebra: det omega(f) zero-free on the closed disc."""
    if not f.is_plus():
        raise NotPlusError("series has negative degrees")
    if f.is_zero:
        return InvertibilityVerdict(False, 0.0, 0.0, 0.0, "zero series")
    n_sym = real_part_series(symmetrize(f))
    poly = np.concatenate([np.zeros(n_sym.min_deg), n_sym.coeffs.real])
    roots = np.roots(poly[::-1]) if len(poly) > 1 else np.zeros(0)
    cm = laurent.circle_min_abs(n_sym)
    if len(roots):
        k = int(np.argmin(np.abs(roots)))
        smallest = roots[k]
        if abs(smallest) <= 1.0 + TAU_ROOT:
            return InvertibilityVerdict(
                False, cm.min_abs, cm.lower_bound, float(np.angle(smallest)),
                f"det root {complex(smallest):.6g} in the closed disc",
            )
    if cm.min_abs <= tol:
        return InvertibilityVerdict(False, cm.min_abs, cm.lower_bound, cm.theta, "grid minimum below tol")
    return InvertibilityVerdict(True, cm.min_abs, cm.lower_bound, cm.theta)


def invert_plus(f, basis=DEFAULT_BASIS, out_window=None, tol=1e-8, eps=EPS_INV):
    """Inverse inside the plus subalgebra.

    1/N is expanded as a power series by recursive division, so the
    result has no negative degrees at all.
    """
    verdict = is_invertible_plus(f, basis, tol)
    if not verdict.invertible:
        raise NotInvertibleError(f"not invertible in the plus algebra: {verdict.reason}",
                                 verdict.min_abs_det, verdict.witness_theta)
    n_sym = symmetrize(f)
    den = n_sym.window(0, n_sym.max_deg)[:, 0]
    fc = conj_series(f)
    auto = out_window is None
    w = max(16, 4 * f.width) if auto else int(out_window)
    while True:
        impulse = np.zeros(w + 1)
        impulse[0] = 1.0
        rec = scipy.signal.lfilter([1.0], den, impulse)
        rq = QSeries(0, np.column_stack([rec, np.zeros((w + 1, 3))]))
        g = _truncate(star(fc, rq), 0, w)
        if not auto or w >= laurent.MAX_WINDOW or (star(f, g) - UNIT).norm() <= eps:
            return g
        w *= 2


@dataclass(frozen=True)
class PositivityVerdict:
    positive: bool
    min_eigenvalue: float
    witness_theta: float
    lower_bound: float
    reason: str = ""


def is_hermitian_series(f, tol=1e-12):
    d = f - adjoint_series(f)
    return d.is_zero or d.norm() <= tol * max(1.0, f.norm())


def is_strictly_positive(f, basis=DEFAULT_BASIS, tol=1e-10):
    """omega(f)(e^{it}) > 0 for every t.

    Requires Hermitian coefficients f_{-u} = conj(f_u); otherwise the
    values are not Hermitian matrices and the verdict is negative.
    """
    if f.is_zero:
        return PositivityVerdict(False, 0.0, 0.0, 0.0, "zero series")
    if not is_hermitian_series(f):
        return PositivityVerdict(False, float("nan"), float("nan"), float("nan"), "not Hermitian-symmetric")
    w = omega(f, basis)
    lam, theta = laurent.min_eigenvalue_on_circle(w)
    n = laurent.next_pow2(16 * max(w.width, 4))
    lip = float(np.sum(np.abs(np.arange(w.min_deg, w.max_deg + 1)) * qabs(f.coeffs)))
    lower = lam - np.pi / n * lip
    if lam <= tol:
        return PositivityVerdict(False, lam, theta, lower, "eigenvalue below tol")
    return PositivityVerdict(True, lam, theta, lower)


@dataclass(frozen=True)
class SpectralFactor:
    factor: QSeries
    residual: float
    section: int


def spectral_factorize_report(f, basis=DEFAULT_BASIS, tol=1e-10, n_section=512, eps=EPS_FACT):
    verdict = is_strictly_positive(f, basis, tol)
    if not verdict.positive:
        raise NotPositiveError(f"not strictly positive: {verdict.reason}",
                               verdict.min_eigenvalue, verdict.witness_theta)
    fact = laurent.mat_spectral_factorize_report(omega(f, basis), n_section, tol, eps)
    a = fact.factor
    # J1-reality A_n = J1 conj(A_n) J1^* is exactly the chi structure
    f_plus = omega_inv(a, basis, TAU_STRUCT)
    resid = (f - star(f_plus, adjoint_series(f_plus))).norm()
    return SpectralFactor(f_plus, float(resid), fact.section)


def spectral_factorize(f, basis=DEFAULT_BASIS, tol=1e-10, n_section=512, eps=EPS_FACT):
    """f = f_+ * f_+^# with f_+ invertible in the plus subalgebra, f_+(1) > 0."""
    return spectral_factorize_report(f, basis, tol, n_section, eps).factor


def random_series(rng, lo, hi, scale=1.0):
    return QSeries(lo, scale * rng.standard_normal((hi - lo + 1, 4)))


def split_series(f, basis=DEFAULT_BASIS):
    """(a_u, b_u) with f_u = a_u + b_u j."""
    return split(f.coeffs, basis)
