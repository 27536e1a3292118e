"""Hot-loop dispatch.

The compiled extension is used when it imports; otherwise the numpy
fallback. Setting ``QWIENER_PURE=1`` forces the fallback.  Long
convolutions go through the FFT whichever backend is active.
"""

import os

from . import _fallback

BACKEND = "fallback"
if os.environ.get("QWIENER_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None
    else:
        BACKEND = "compiled"
else:
    _compiled = None

_impl = _compiled if _compiled is not None else _fallback

qmatmul = _impl.qmatmul
qconv_direct = _impl.qconv
qconv_fft = _fallback.qconv_fft

# below this size (and whenever one factor is short) the direct sum is faster
FFT_MIN_LEN = 64
FFT_MIN_WORK = 2**15


def qconv(a, b):
    """Quaternion Cauchy convolution out[u] = sum_k a[u-k] b[k]."""
    n, m = len(a), len(b)
    if min(n, m) > FFT_MIN_LEN and n * m > FFT_MIN_WORK:
        return qconv_fft(a, b)
    return qconv_direct(a, b)


__all__ = ["BACKEND", "qconv", "qconv_direct", "qconv_fft", "qmatmul"]
