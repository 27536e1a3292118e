# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled quaternion kernels.

Arrays are C-contiguous float64 with a trailing axis of length 4 holding
(x0, x1, x2, x3).
"""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def qconv(const double[:, ::1] a, const double[:, ::1] b):
    """Cauchy convolution out[u] = sum_k a[u-k] * b[k] (quaternion product)."""
    cdef Py_ssize_t n = a.shape[0], m = b.shape[0]
    if n == 0 or m == 0:
        return np.zeros((0, 4))
    out_arr = np.zeros((n + m - 1, 4))
    cdef double[:, ::1] out = out_arr
    cdef Py_ssize_t i, k
    cdef double a0, a1, a2, a3, b0, b1, b2, b3
    for i in range(n):
        a0 = a[i, 0]; a1 = a[i, 1]; a2 = a[i, 2]; a3 = a[i, 3]
        if a0 == 0.0 and a1 == 0.0 and a2 == 0.0 and a3 == 0.0:
            continue
        for k in range(m):
            b0 = b[k, 0]; b1 = b[k, 1]; b2 = b[k, 2]; b3 = b[k, 3]
            out[i + k, 0] += a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3
            out[i + k, 1] += a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2
            out[i + k, 2] += a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1
            out[i + k, 3] += a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0
    return out_arr


def qmatmul(const double[:, :, ::1] a, const double[:, :, ::1] b):
    """Quaternion matrix product: out[r, c] = sum_k a[r, k] * b[k, c]."""
    cdef Py_ssize_t nr = a.shape[0], nk = a.shape[1], nc = b.shape[1]
    if b.shape[0] != nk:
        raise ValueError("inner dimensions differ")
    out_arr = np.zeros((nr, nc, 4))
    cdef double[:, :, ::1] out = out_arr
    cdef Py_ssize_t r, c, k
    cdef double a0, a1, a2, a3, b0, b1, b2, b3
    for r in range(nr):
        for k in range(nk):
            a0 = a[r, k, 0]; a1 = a[r, k, 1]; a2 = a[r, k, 2]; a3 = a[r, k, 3]
            if a0 == 0.0 and a1 == 0.0 and a2 == 0.0 and a3 == 0.0:
                continue
            for c in range(nc):
                b0 = b[k, c, 0]; b1 = b[k, c, 1]; b2 = b[k, c, 2]; b3 = b[k, c, 3]
                out[r, c, 0] += a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3
                out[r, c, 1] += a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2
                out[r, c, 2] += a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1
                out[r, c, 3] += a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0
    return out_arr
