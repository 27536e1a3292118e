"""Quaternion arithmetic and the complex representation chi on a chosen slice.

Quaternions are float arrays whose last axis has length 4, ordered
``(x0, x1, x2, x3)`` for ``x0 + x1 e1 + x2 e2 + x3 e3``.  Every function
broadcasts over leading axes.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, StructureError

ONE = np.array([1.0, 0.0, 0.0, 0.0])
E1 = np.array([0.0, 1.0, 0.0, 0.0])
E2 = np.array([0.0, 0.0, 1.0, 0.0])
E3 = np.array([0.0, 0.0, 0.0, 1.0])

TAU_STRUCT = 1e-9


def quat(x0=0.0, x1=0.0, x2=0.0, x3=0.0):
    return np.array([x0, x1, x2, x3], dtype=float)


def as_quat(p):
    p = np.asarray(p, dtype=float)
    if p.shape[-1:] != (4,):
        raise ValueError(f"expected trailing axis of length 4, got shape {p.shape}")
    return p


def qmul(p, q):
    p = as_quat(p)
    q = as_quat(q)
    a0, a1, a2, a3 = np.moveaxis(p, -1, 0)
    b0, b1, b2, b3 = np.moveaxis(q, -1, 0)
    return np.stack(
        [
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        ],
        axis=-1,
    )


def qconj(p):
    p = as_quat(p)
    return p * np.array([1.0, -1.0, -1.0, -1.0])


def qabs(p):
    return np.linalg.norm(as_quat(p), axis=-1)


def qinv(p):
    p = as_quat(p)
    n2 = np.sum(p * p, axis=-1)
    if np.any(n2 == 0.0):
        raise DomainError("zero quaternion")
    return qconj(p) / n2[..., None]


def real_part(p):
    return as_quat(p)[..., 0]


def imag_abs(p):
    return np.linalg.norm(as_quat(p)[..., 1:], axis=-1)


def sphere_conjugate(p0, q):
    """Return ``q^{-1} p0 q``, a point of the sphere ``[p0]``."""
    return qmul(qmul(qinv(q), p0), q)


def qpow(p, n):
    """Integer power of a quaternion via its polar form in the slice of ``p``."""
    p = as_quat(p)
    r = qabs(p)
    if n < 0 and np.any(r == 0.0):
        raise DomainError("zero quaternion raised to a negative power")
    im = imag_abs(p)
    phi = np.arctan2(im, p[..., 0])
    unit = np.where(im[..., None] > 0, p[..., 1:] / np.where(im > 0, im, 1.0)[..., None], 0.0)
    rn = r ** float(n)
    out = np.empty(p.shape)
    out[..., 0] = rn * np.cos(n * phi)
    out[..., 1:] = (rn * np.sin(n * phi))[..., None] * unit
    return out


def random_quat(rng, size=None, scale=1.0):
    shape = (4,) if size is None else (*np.atleast_1d(size), 4)
    return scale * rng.standard_normal(shape)


def random_unit_imag(rng):
    v = rng.standard_normal(3)
    return np.concatenate([[0.0], v / np.linalg.norm(v)])


@dataclass(frozen=True)
class SliceBasis:
    """A pair of orthogonal imaginary units ``(i, j)``.

    Complex numbers of the plane spanned by 1 and ``i`` are stored as
    ordinary Python/numpy complex values; the basis gives them their
    geometric meaning.
    """

    i: np.ndarray
    j: np.ndarray

    def __post_init__(self):
        i = as_quat(np.array(self.i, dtype=float))
        j = as_quat(np.array(self.j, dtype=float))
        for name, u in (("i", i), ("j", j)):
            if abs(u[0]) > 1e-12 or abs(np.linalg.norm(u) - 1.0) > 1e-12:
                raise DomainError(f"{name} must be a unit imaginary quaternion")
        if np.linalg.norm(qmul(i, j) + qmul(j, i)) > 1e-12:
            raise DomainError("i and j must anticommute")
        object.__setattr__(self, "i", i)
        object.__setattr__(self, "j", j)

    @property
    def k(self):
        return qmul(self.i, self.j)

    @property
    def frame(self):
        """Rows 1, i, j, ij as a 4x4 orthogonal matrix."""
        return np.stack([ONE, self.i, self.j, self.k])

    @classmethod
    def default(cls):
        return cls(E1, E2)

    @classmethod
    def random(cls, rng):
        i = random_unit_imag(rng)
        v = rng.standard_normal(3)
        v -= v.dot(i[1:]) * i[1:]
        j = np.concatenate([[0.0], v / np.linalg.norm(v)])
        return cls(i, j)

    def to_dict(self):
        return {"i": [float(x) for x in self.i], "j": [float(x) for x in self.j]}

    def __eq__(self, other):
        if not isinstance(other, SliceBasis):
            return NotImplemented
        return np.array_equal(self.i, other.i) and np.array_equal(self.j, other.j)

    def __hash__(self):
        return hash((tuple(self.i), tuple(self.j)))


DEFAULT_BASIS = SliceBasis.default()


def to_frame(p, basis):
    """Coordinates of ``p`` along (1, i, j, ij).

    The frame is orthonormal and right handed, so quaternion products
    computed on frame coordinates agree with products in the standard
    coordinates.
    """
    return as_quat(p) @ basis.frame.T


def from_frame(c, basis):
    return as_quat(c) @ basis.frame


def split(p, basis=DEFAULT_BASIS):
    """Write ``p = z + w j`` with ``z, w`` in the plane of ``basis.i``."""
    c = to_frame(p, basis)
    z = c[..., 0] + 1j * c[..., 1]
    w = c[..., 2] + 1j * c[..., 3]
    return z, w


def unsplit(z, w, basis=DEFAULT_BASIS):
    z = np.asarray(z, dtype=complex)
    w = np.asarray(w, dtype=complex)
    c = np.stack([z.real, z.imag, w.real, w.imag], axis=-1)
    return from_frame(c, basis)


def chi(p, basis=DEFAULT_BASIS):
    """The ring homomorphism p = z + wj  ->  [[z, w], [-conj(w), conj(z)]]."""
    z, w = split(p, basis)
    m = np.empty(z.shape + (2, 2), dtype=complex)
    m[..., 0, 0] = z
    m[..., 0, 1] = w
    m[..., 1, 0] = -np.conj(w)
    m[..., 1, 1] = np.conj(z)
    return m


def chi_structure_defect(m):
    m = np.asarray(m, dtype=complex)
    return np.maximum(
        np.abs(m[..., 1, 1] - np.conj(m[..., 0, 0])),
        np.abs(m[..., 1, 0] + np.conj(m[..., 0, 1])),
    )


def chi_inv(m, basis=DEFAULT_BASIS, tol=TAU_STRUCT):
    m = np.asarray(m, dtype=complex)
    defect = chi_structure_defect(m)
    if np.any(defect > tol):
        raise StructureError(f"matrix is not in the image of chi (defect {np.max(defect):.3e})")
    # average the redundant entries so round-off is split evenly
    z = 0.5 * (m[..., 0, 0] + np.conj(m[..., 1, 1]))
    w = 0.5 * (m[..., 0, 1] - np.conj(m[..., 1, 0]))
    return unsplit(z, w, basis)
