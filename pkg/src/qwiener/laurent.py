"""Classical complex Wiener algebra: scalar and 2x2 Laurent polynomials.

Provides the machinery the quaternionic layer leans on: Cauchy products,
circle sampling through the FFT, inversion of real scalar symbols and of
2x2 matrix symbols, and matrix spectral factorization by Bauer's method
(Cholesky of a growing block Toeplitz section).
"""

from dataclasses import dataclass

import numpy as np
import scipy.linalg
import scipy.optimize

from .errors import (
    AliasError,
    ConvergenceError,
    DomainError,
    NotInvertibleError,
    NotPositiveError,
)

TAU_ALIAS = 1e-8
EPS_INV = 1e-9
EPS_FACT = 1e-6
MAX_WINDOW = 2**14


def _trim(min_deg, coeffs):
    if len(coeffs) == 0:
        return 0, coeffs
    nz = np.flatnonzero(np.any(coeffs.reshape(len(coeffs), -1) != 0, axis=1))
    if len(nz) == 0:
        return 0, coeffs[:0]
    return min_deg + int(nz[0]), coeffs[nz[0] : nz[-1] + 1]


def next_pow2(n):
    return 1 << max(1, int(np.ceil(np.log2(max(n, 2)))))


def grid_size(width, factor=4):
    """Smallest power of two >= factor * (2 * width + 1)."""
    return next_pow2(factor * (2 * width + 1))


@dataclass(frozen=True, eq=False)
class CLaurent:
    """Scalar Laurent polynomial sum_u c_u z^u, u = min_deg, ..."""

    min_deg: int
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coeffs, dtype=complex))
        m, c = _trim(int(self.min_deg), c)
        object.__setattr__(self, "min_deg", m)
        object.__setattr__(self, "coeffs", c)

    @property
    def max_deg(self):
        return self.min_deg + len(self.coeffs) - 1

    @property
    def width(self):
        return len(self.coeffs)

    def norm(self):
        return float(np.sum(np.abs(self.coeffs)))

    def coeff(self, u):
        k = u - self.min_deg
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0j

    def window(self, lo, hi):
        out = np.zeros(hi - lo + 1, dtype=complex)
        for u in range(max(lo, self.min_deg), min(hi, self.max_deg) + 1):
            out[u - lo] = self.coeffs[u - self.min_deg]
        return out

    def __add__(self, other):
        return _add(self, other, 1.0)

    def __sub__(self, other):
        return _add(self, other, -1.0)

    def __mul__(self, other):
        if isinstance(other, CLaurent):
            if self.width == 0 or other.width == 0:
                return CLaurent(0, [])
            return CLaurent(self.min_deg + other.min_deg, np.convolve(self.coeffs, other.coeffs))
        return CLaurent(self.min_deg, self.coeffs * other)

    __rmul__ = __mul__

    def __call__(self, z):
        return cl_eval(self, z)

    def __repr__(self):
        return f"CLaurent(min_deg={self.min_deg}, coeffs={self.coeffs!r})"


@dataclass(frozen=True, eq=False)
class Mat2Laurent:
    """2x2 complex matrix Laurent polynomial; coeffs has shape (n, 2, 2)."""

    min_deg: int
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=complex).reshape(-1, 2, 2)
        m, c = _trim(int(self.min_deg), c)
        object.__setattr__(self, "min_deg", m)
        object.__setattr__(self, "coeffs", c)

    @property
    def max_deg(self):
        return self.min_deg + len(self.coeffs) - 1

    @property
    def width(self):
        return len(self.coeffs)

    def norm(self):
        """Wiener norm with the spectral norm on each coefficient."""
        if self.width == 0:
            return 0.0
        return float(np.sum(np.linalg.norm(self.coeffs, ord=2, axis=(1, 2))))

    def entry(self, r, c):
        return CLaurent(self.min_deg, self.coeffs[:, r, c])

    def coeff(self, u):
        k = u - self.min_deg
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return np.zeros((2, 2), dtype=complex)

    def tilde(self):
        """The adjoint symbol: coefficient (A_u)^* placed at degree -u."""
        c = np.conj(np.swapaxes(self.coeffs, 1, 2))[::-1]
        return Mat2Laurent(-self.max_deg, c) if self.width else self

    def __add__(self, other):
        return _add(self, other, 1.0)

    def __sub__(self, other):
        return _add(self, other, -1.0)

    def __matmul__(self, other):
        return cl_mul(self, other)

    def __call__(self, z):
        return cl_eval(self, z)

    def __repr__(self):
        return f"Mat2Laurent(min_deg={self.min_deg}, width={self.width})"

    @classmethod
    def constant(cls, m):
        return cls(0, np.asarray(m, dtype=complex)[None])

    @classmethod
    def from_entries(cls, a11, a12, a21, a22):
        parts = (a11, a12, a21, a22)
        live = [p for p in parts if p.width]
        if not live:
            return cls(0, np.zeros((0, 2, 2)))
        lo = min(p.min_deg for p in live)
        hi = max(p.max_deg for p in live)
        c = np.zeros((hi - lo + 1, 2, 2), dtype=complex)
        for idx, p in zip(((0, 0), (0, 1), (1, 0), (1, 1)), parts):
            c[:, idx[0], idx[1]] = p.window(lo, hi)
        return cls(lo, c)


def _add(a, b, sign):
    cls = type(a)
    if a.width == 0:
        return cls(b.min_deg, sign * b.coeffs)
    if b.width == 0:
        return a
    lo = min(a.min_deg, b.min_deg)
    hi = max(a.max_deg, b.max_deg)
    out = np.zeros((hi - lo + 1,) + a.coeffs.shape[1:], dtype=complex)
    out[a.min_deg - lo : a.max_deg - lo + 1] += a.coeffs
    out[b.min_deg - lo : b.max_deg - lo + 1] += sign * b.coeffs
    return cls(lo, out)


def cl_mul(a, b):
    """Exact Cauchy product of two matrix Laurent polynomials."""
    if a.width == 0 or b.width == 0:
        return Mat2Laurent(0, np.zeros((0, 2, 2)))
    out = np.zeros((a.width + b.width - 1, 2, 2), dtype=complex)
    if a.width >= b.width:
        for k in range(b.width):
            out[k : k + a.width] += a.coeffs @ b.coeffs[k]
    else:
        for k in range(a.width):
            out[k : k + b.width] += a.coeffs[k] @ b.coeffs
    return Mat2Laurent(a.min_deg + b.min_deg, out)


def cl_eval(a, z):
    """Evaluate sum_u z^u C_u by Horner's rule outward from degree 0."""
    z = complex(z)
    shape = a.coeffs.shape[1:]
    if a.width == 0:
        return np.zeros(shape, dtype=complex)
    if z == 0 and a.min_deg < 0:
        raise DomainError("evaluation at z = 0 with negative powers present")
    pos = [a.coeff(u) for u in range(max(0, a.min_deg), a.max_deg + 1)]
    acc = np.zeros(shape, dtype=complex)
    for c in reversed(pos):
        acc = acc * z + c
    if a.min_deg > 0:
        acc = acc * z**a.min_deg
    if a.min_deg < 0:
        neg = [a.coeff(u) for u in range(a.min_deg, min(-1, a.max_deg) + 1)]
        zi = 1.0 / z
        nacc = np.zeros(shape, dtype=complex)
        # neg[0] is the most negative degree
        for c in neg:
            nacc = nacc * zi + c
        top = min(-1, a.max_deg)
        nacc = nacc * zi ** (-top)
        acc = acc + nacc
    return acc


def circle_sample(a, n):
    """Values at z_k = exp(2 pi i k / n), k = 0..n-1 (exact, folds degrees mod n)."""
    if n < 2 or n & (n - 1):
        raise ValueError("n must be a power of two")
    shape = a.coeffs.shape[1:]
    buf = np.zeros((n,) + shape, dtype=complex)
    if a.width:
        idx = np.arange(a.min_deg, a.max_deg + 1) % n
        np.add.at(buf, idx, a.coeffs)
    return n * np.fft.ifft(buf, axis=0)


def circle_interp(samples, min_deg, max_deg, tol=TAU_ALIAS):
    """Recover coefficients on [min_deg, max_deg] from circle samples.

    Raises AliasError when the samples carry energy outside the window.
    """
    samples = np.asarray(samples, dtype=complex)
    n = samples.shape[0]
    if max_deg - min_deg + 1 > n:
        raise AliasError(f"window of width {max_deg - min_deg + 1} exceeds {n} samples")
    full = np.fft.fft(samples, axis=0) / n
    idx = np.arange(min_deg, max_deg + 1) % n
    inside = np.zeros(n, dtype=bool)
    inside[idx] = True
    mags = np.abs(full).reshape(n, -1).sum(axis=1)
    total = mags.sum()
    if total > 0 and mags[~inside].max(initial=0.0) > tol * total:
        raise AliasError(
            f"support energy {mags[~inside].max():.3e} outside window [{min_deg}, {max_deg}]"
        )
    coeffs = full[idx]
    if samples.ndim == 1:
        return CLaurent(min_deg, coeffs)
    return Mat2Laurent(min_deg, coeffs)


def _refine_min(fun, grid_t, values, n_candidates=4):
    """Polish the smallest grid values of fun(t) >= 0 by bounded Brent search."""
    n = len(grid_t)
    step = grid_t[1] - grid_t[0]
    order = np.argsort(values)[:n_candidates]
    best_v = float(values[order[0]])
    best_t = float(grid_t[order[0]])
    for k in order:
        t0 = grid_t[k]
        res = scipy.optimize.minimize_scalar(
            fun, bounds=(t0 - step, t0 + step), method="bounded", options={"xatol": 1e-14}
        )
        if res.fun < best_v:
            best_v, best_t = float(res.fun), float(res.x)
    return best_v, best_t % (2 * np.pi)


@dataclass(frozen=True)
class CircleMinimum:
    """Grid minimum of |g| on the unit circle with a Lipschitz lower bound."""

    min_abs: float
    theta: float
    lower_bound: float
    n_grid: int


def circle_min_abs(a, oversample=16):
    """Minimum of |a(e^{it})| (or |det| for matrices) over an oversampled grid.

    The lower bound subtracts (pi / n) * sum |u| |a_u|, a bound on the
    variation between neighbouring grid nodes.
    """
    if isinstance(a, Mat2Laurent):
        det = cl_det(a)
    else:
        det = a
    n = next_pow2(oversample * max(det.width, 4))
    vals = np.abs(circle_sample(det, n))
    t = 2 * np.pi * np.arange(n) / n
    lip = float(np.sum(np.abs(np.arange(det.min_deg, det.max_deg + 1)) * np.abs(det.coeffs)))

    def f(s):
        return abs(cl_eval(det, np.exp(1j * s)))

    m, theta = _refine_min(f, t, vals)
    lower = float(vals.min()) - np.pi / n * lip
    return CircleMinimum(m, theta, lower, n)


def cl_det(a):
    e = a.entry
    return e(0, 0) * e(1, 1) - e(0, 1) * e(1, 0)


def cl_adjugate(a):
    e = a.entry
    zero = CLaurent(0, [])
    return Mat2Laurent.from_entries(e(1, 1), zero - e(0, 1), zero - e(1, 0), e(0, 0))


def _default_window(width):
    return max(16, 4 * width)


def scalar_invert_real(n_sym, out_window=None, tol=1e-8, eps=EPS_INV):
    """Invert a scalar symbol with real coefficients on the circle.

    The reciprocal is sampled on a power-of-two grid and interpolated onto
    [-out_window, out_window].  With ``out_window=None`` the window starts
    at four times the input support and doubles until the Wiener-norm
    residual drops below ``eps``.
    """
    if n_sym.width == 0:
        raise NotInvertibleError("zero symbol", 0.0, 0.0)
    if np.max(np.abs(n_sym.coeffs.imag)) > 1e-12 * max(1.0, n_sym.norm()):
        raise DomainError("symbol coefficients are not real")
    cm = circle_min_abs(n_sym)
    if cm.min_abs <= tol:
        raise NotInvertibleError(
            f"symbol vanishes near theta={cm.theta:.6g} (min |N| = {cm.min_abs:.3e})",
            cm.min_abs,
            cm.theta,
        )
    real = CLaurent(n_sym.min_deg, n_sym.coeffs.real)
    one = CLaurent(0, [1.0])
    auto = out_window is None
    w = _default_window(n_sym.width) if auto else int(out_window)
    while True:
        m = grid_size(w + n_sym.width)
        vals = circle_sample(real, m)
        full = np.fft.fft(1.0 / vals) / m
        idx = np.arange(-w, w + 1) % m
        r = CLaurent(-w, full[idx].real)
        resid = (real * r - one).norm()
        if not auto or resid <= eps or w >= MAX_WINDOW:
            return r
        w *= 2


def residual_identity(a, g):
    """Wiener norm of a*g - I for matrix symbols."""
    return (cl_mul(a, g) - Mat2Laurent.constant(np.eye(2))).norm()


def mat_invert(a, out_window=None, tol=1e-8, eps=EPS_INV):
    """Inverse of a 2x2 matrix symbol in the Wiener algebra."""
    det = cl_det(a)
    cm = circle_min_abs(det)
    if cm.min_abs <= tol:
        raise NotInvertibleError(
            f"det vanishes near theta={cm.theta:.6g} (min |det| = {cm.min_abs:.3e})",
            cm.min_abs,
            cm.theta,
        )
    if det.width and np.max(np.abs(det.coeffs.imag)) <= 1e-12 * max(1.0, det.norm()):
        adj = cl_adjugate(a)
        auto = out_window is None
        w = _default_window(a.width) if auto else int(out_window)
        while True:
            rdet = scalar_invert_real(det, out_window=w + 2 * a.width, tol=tol)
            g = cl_mul(adj, Mat2Laurent(rdet.min_deg, rdet.coeffs[:, None, None] * np.eye(2)))
            g = Mat2Laurent(-w, np.stack([g.coeff(u) for u in range(-w, w + 1)]))
            if not auto or residual_identity(a, g) <= eps or w >= MAX_WINDOW:
                return g
            w *= 2
    auto = out_window is None
    w = _default_window(a.width) if auto else int(out_window)
    while True:
        m = grid_size(w + a.width)
        vals = circle_sample(a, m)
        inv = np.linalg.inv(vals)
        full = np.fft.fft(inv, axis=0) / m
        idx = np.arange(-w, w + 1) % m
        g = Mat2Laurent(-w, full[idx])
        if not auto or residual_identity(a, g) <= eps or w >= MAX_WINDOW:
            return g
        w *= 2


def winding_number(a, n=None):
    """Winding number of a scalar symbol around 0 along the unit circle."""
    if n is None:
        n = next_pow2(64 * max(a.width, 4))
    vals = circle_sample(a, n)
    phase = np.unwrap(np.angle(np.append(vals, vals[:1])))
    return int(np.rint((phase[-1] - phase[0]) / (2 * np.pi)))


def min_eigenvalue_on_circle(w, oversample=16):
    """Smallest eigenvalue of the Hermitian values W(e^{it}) over a grid."""
    n = next_pow2(oversample * max(w.width, 4))
    vals = circle_sample(w, n)
    herm = 0.5 * (vals + np.conj(np.swapaxes(vals, 1, 2)))
    eig = np.linalg.eigvalsh(herm)[:, 0]
    k = int(np.argmin(eig))
    return float(eig[k]), 2 * np.pi * k / n


def is_hermitian_symbol(w, tol=1e-12):
    diff = w - w.tilde()
    return diff.width == 0 or diff.norm() <= tol * max(1.0, w.norm())


def _block_toeplitz(w, n):
    """Hermitian block Toeplitz matrix with block (r, c) = W_{r-c}."""
    t = np.zeros((2 * n, 2 * n), dtype=complex)
    for d in range(-(n - 1), n):
        blk = w.coeff(d)
        if not np.any(blk):
            continue
        for r in range(max(0, d), min(n, n + d)):
            c = r - d
            t[2 * r : 2 * r + 2, 2 * c : 2 * c + 2] = blk
    return t


def _normalize_at_one(a):
    """Right-multiply by the unitary making A(1) positive definite."""
    a1 = a.coeffs.sum(axis=0)
    h = a1 @ a1.conj().T
    evals, evecs = np.linalg.eigh(h)
    inv_sqrt = (evecs / np.sqrt(evals)) @ evecs.conj().T
    u = a1.conj().T @ inv_sqrt
    return Mat2Laurent(a.min_deg, a.coeffs @ u)


def bauer_section(w, n):
    """Factor coefficients A_0..A_{n-1} from the last block row of the section Cholesky."""
    t = _block_toeplitz(w, n)
    try:
        low = scipy.linalg.cholesky(t, lower=True, check_finite=False)
    except np.linalg.LinAlgError as exc:
        raise NotPositiveError(f"block Toeplitz section of size {n} is not positive definite") from exc
    last = low[2 * n - 2 : 2 * n]
    blocks = last.reshape(2, n, 2).transpose(1, 0, 2)  # blocks[m] = L_{n-1, m}
    return Mat2Laurent(0, blocks[::-1])


@dataclass(frozen=True)
class Factorization:
    factor: Mat2Laurent
    residual: float
    section: int


def mat_spectral_factorize_report(w, n_section=512, tol=1e-10, eps=EPS_FACT):
    """Bauer factorization W = A A~ with A analytic, invertible in the plus algebra."""
    if not is_hermitian_symbol(w):
        raise NotPositiveError("symbol is not Hermitian (C_{-u} != C_u^*)")
    lam, t_min = min_eigenvalue_on_circle(w)
    if lam <= tol:
        raise NotPositiveError(
            f"min eigenvalue {lam:.3e} at theta={t_min:.6g}", min_eig=lam, witness=t_min
        )
    half = max(abs(w.min_deg), abs(w.max_deg))
    n = next_pow2(max(16, 4 * (half + 1)))
    last_resid = np.inf
    while n <= max(n_section, 16):
        a = _normalize_at_one(bauer_section(w, n))
        resid = (w - cl_mul(a, a.tilde())).norm()
        last_resid = resid
        if resid <= eps:
            return Factorization(a, float(resid), n)
        n *= 2
    raise ConvergenceError(
        f"Bauer residual {last_resid:.3e} above {eps:g} at section size {n // 2}"
    )


def mat_spectral_factorize(w, n_section=512, tol=1e-10, eps=EPS_FACT):
    return mat_spectral_factorize_report(w, n_section, tol, eps).factor
