"""Hardy space of the right half-plane in kernel form, and Wiener-Hopf operators.

An element is a pair of complex kernels (f1, f2) on the nodes ``k du``,
k = 0..N-1, of one slice; it stands for the quaternionic kernel
``f1 + f2 j``.  Projections and the Wiener-Hopf truncation are support
operations on those kernels.
"""

from dataclasses import dataclass

import numpy as np

from .continuous import CElement, _check_du, _lattice_index, cstar
from .errors import GridError, SizeError
from .quat import DEFAULT_BASIS, qabs, split, unsplit


def _complex(x):
    return np.array(x, dtype=complex).reshape(-1)


@dataclass(frozen=True, eq=False)
class HardyElement:
    basis: object
    du: float
    samples1: np.ndarray
    samples2: np.ndarray

    def __post_init__(self):
        if not self.du > 0:
            raise GridError("du must be positive")
        s1, s2 = _complex(self.samples1), _complex(self.samples2)
        if s1.shape != s2.shape:
            raise ValueError("the two kernels must have the same length")
        object.__setattr__(self, "samples1", s1)
        object.__setattr__(self, "samples2", s2)
        object.__setattr__(self, "du", float(self.du))

    @property
    def n(self):
        return len(self.samples1)

    @property
    def length(self):
        return max(self.n - 1, 0) * self.du

    @property
    def nodes(self):
        return self.du * np.arange(self.n)

    def quaternion_kernel(self):
        return unsplit(self.samples1, self.samples2, self.basis)

    @classmethod
    def from_quaternion_kernel(cls, q, du, basis=DEFAULT_BASIS):
        z, w = split(np.asarray(q, dtype=float).reshape(-1, 4), basis)
        return cls(basis, du, z, w)

    @classmethod
    def zeros(cls, n, du, basis=DEFAULT_BASIS):
        return cls(basis, du, np.zeros(n, complex), np.zeros(n, complex))

    def scale_right(self, z):
        """Right multiplication by a complex number z of the slice."""
        return HardyElement(self.basis, self.du, self.samples1 * z, self.samples2 * np.conj(z))

    def __add__(self, other):
        return HardyElement(self.basis, self.du, self.samples1 + other.samples1, self.samples2 + other.samples2)

    def __sub__(self, other):
        return HardyElement(self.basis, self.du, self.samples1 - other.samples1, self.samples2 - other.samples2)


def hardy_norm(F):
    """||F||, with ||F||^2 = 2 pi du sum(|f1|^2 + |f2|^2)."""
    return float(np.sqrt(2 * np.pi * F.du * np.sum(np.abs(F.samples1) ** 2 + np.abs(F.samples2) ** 2)))


@dataclass(frozen=True, eq=False)
class LineElement:
    """Kernel pair on the nodes u_min + k du of the whole line."""

    basis: object
    du: float
    u_min: float
    samples1: np.ndarray
    samples2: np.ndarray

    def __post_init__(self):
        if not self.du > 0:
            raise GridError("du must be positive")
        s1, s2 = _complex(self.samples1), _complex(self.samples2)
        if s1.shape != s2.shape:
            raise ValueError("the two kernels must have the same length")
        object.__setattr__(self, "samples1", s1)
        object.__setattr__(self, "samples2", s2)
        object.__setattr__(self, "u_min", float(self.u_min))
        object.__setattr__(self, "du", float(self.du))

    @property
    def k0(self):
        return _lattice_index(self.u_min, self.du)

    @property
    def n(self):
        return len(self.samples1)

    @property
    def nodes(self):
        return self.du * (self.k0 + np.arange(self.n))


def line_inner(a, b):
    """<a, b> = 2 pi du sum(conj(a1) b1 + conj(a2) b2) over the common nodes."""
    if a.k0 != b.k0 or a.n != b.n or a.du != b.du:
        raise GridError("line elements live on different windows")
    return 2 * np.pi * a.du * complex(np.vdot(a.samples1, b.samples1) + np.vdot(a.samples2, b.samples2))


def project_P(g):
    """Part with kernel support u >= 0, as a Hardy element on [0, max node]."""
    keep = g.nodes >= 0
    if not np.any(keep):
        return HardyElement.zeros(0, g.du, g.basis)
    first = int(np.argmax(keep))
    lead = g.k0 + first  # > 0 when the window starts to the right of 0
    pad = np.zeros(lead, complex)
    return HardyElement(
        g.basis, g.du, np.concatenate([pad, g.samples1[first:]]), np.concatenate([pad, g.samples2[first:]])
    )


def project_Q(g):
    neg = g.nodes < 0
    return LineElement(g.basis, g.du, g.u_min, np.where(neg, g.samples1, 0), np.where(neg, g.samples2, 0))


def embed(F, like):
    """Place a Hardy element on the window of the line element ``like``."""
    out1 = np.zeros(like.n, complex)
    out2 = np.zeros(like.n, complex)
    for k in range(F.n):
        idx = k - like.k0
        if 0 <= idx < like.n:
            out1[idx] = F.samples1[k]
            out2[idx] = F.samples2[k]
        elif F.samples1[k] != 0 or F.samples2[k] != 0:
            raise GridError("Hardy element reaches outside the line window")
    return LineElement(like.basis, like.du, like.u_min, out1, out2)


def reconstruct(g):
    """P g + Q g on the window of g."""
    p = embed(project_P(g), g)
    q = project_Q(g)
    return LineElement(g.basis, g.du, g.u_min, p.samples1 + q.samples1, p.samples2 + q.samples2)


def wh_apply(Phi, F):
    """T_Phi F: the kernel c f + du sum phi(u - v) f(v), kept on the nodes of F."""
    _check_du(Phi, CElement.constant([1.0, 0, 0, 0], F.du))
    if F.n == 0:
        return F
    prod = cstar(Phi, CElement(np.zeros(4), 0.0, F.du, F.quaternion_kernel()))
    out = np.zeros((F.n, 4))
    if prod.n:
        lo = prod.k0
        idx = lo + np.arange(prod.n)
        sel = (idx >= 0) & (idx < F.n)
        out[idx[sel]] = prod.samples[sel]
    return HardyElement.from_quaternion_kernel(out, F.du, F.basis)


def extent(Phi):
    """Reach of the kernel of Phi around u = 0."""
    if Phi.n == 0 or not np.any(qabs(Phi.samples) > 0):
        return 0.0
    a, b = Phi.support
    return max(abs(a), abs(b))


@dataclass(frozen=True)
class WHProductTest:
    is_wh: bool
    defect: float
    margin: float
    branch: str  # "Phi minus", "Psi plus" or "none"


def wh_product_test(Phi, Psi, F, tol=1e-8):
    """Compare T_Phi T_Psi F with T_{Phi * Psi} F on [0, L - w].

    w is the combined reach of both kernels; beyond L - w the comparison is
    polluted by the finite window.
    """
    from .continuous import membership_pm

    w = extent(Phi) + extent(Psi)
    if F.length < 2 * w or F.n == 0:
        raise SizeError(f"window length {F.length} must be at least twice the combined reach {w}")
    m = int(np.floor((F.length - w) / F.du + 1e-9)) + 1
    two_step = wh_apply(Phi, wh_apply(Psi, F))
    one_step = wh_apply(cstar(Phi, Psi), F)
    d = np.maximum(
        np.abs(two_step.samples1[:m] - one_step.samples1[:m]),
        np.abs(two_step.samples2[:m] - one_step.samples2[:m]),
    )
    defect = float(np.max(d)) if m else 0.0
    if membership_pm(Phi)["minus"]:
        branch = "Phi minus"
    elif membership_pm(Psi)["plus"]:
        branch = "Psi plus"
    else:
        branch = "none"
    return WHProductTest(defect <= tol, defect, (m - 1) * F.du, branch)
