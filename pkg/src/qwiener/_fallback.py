"""Pure numpy versions of the compiled kernels in ``_kernels.pyx``."""

import numpy as np


def qconv(a, b):
    a = np.ascontiguousarray(a, dtype=float)
    b = np.ascontiguousarray(b, dtype=float)
    if len(a) == 0 or len(b) == 0:
        return np.zeros((0, 4))

    def cv(i, k):
        return np.convolve(a[:, i], b[:, k])

    out = np.empty((len(a) + len(b) - 1, 4))
    out[:, 0] = cv(0, 0) - cv(1, 1) - cv(2, 2) - cv(3, 3)
    out[:, 1] = cv(0, 1) + cv(1, 0) + cv(2, 3) - cv(3, 2)
    out[:, 2] = cv(0, 2) - cv(1, 3) + cv(2, 0) + cv(3, 1)
    out[:, 3] = cv(0, 3) + cv(1, 2) - cv(2, 1) + cv(3, 0)
    return out


def qmatmul(a, b):
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape[1] != b.shape[0]:
        raise ValueError("inner dimensions differ")

    def mm(i, k):
        return a[:, :, i] @ b[:, :, k]

    out = np.empty((a.shape[0], b.shape[1], 4))
    out[..., 0] = mm(0, 0) - mm(1, 1) - mm(2, 2) - mm(3, 3)
    out[..., 1] = mm(0, 1) + mm(1, 0) + mm(2, 3) - mm(3, 2)
    out[..., 2] = mm(0, 2) - mm(1, 3) + mm(2, 0) + mm(3, 1)
    out[..., 3] = mm(0, 3) + mm(1, 2) - mm(2, 1) + mm(3, 0)
    return out


def qconv_fft(a, b):
    """Same product as ``qconv`` through real FFTs; O((n + m) log(n + m)).

    Rounding error is relative to |a| |b| rather than to each output entry,
    so the direct kernels are preferred for short inputs.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if len(a) == 0 or len(b) == 0:
        return np.zeros((0, 4))
    size = len(a) + len(b) - 1
    nfft = 1 << (size - 1).bit_length()
    fa = np.fft.rfft(a, nfft, axis=0)
    fb = np.fft.rfft(b, nfft, axis=0)
    a0, a1, a2, a3 = fa.T
    b0, b1, b2, b3 = fb.T
    prod = np.stack(
        [
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        ],
        axis=1,
    )
    return np.fft.irfft(prod, nfft, axis=0)[:size]
