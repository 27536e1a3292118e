"""Compare the compiled kernels with the numpy fallback (and the FFT route for qconv).

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import timeit

import numpy as np

from qwiener import _fallback

try:
    from qwiener import _kernels as compiled
except ImportError:
    compiled = None


def cases(rng):
    for n, m in [(8, 8), (64, 64), (512, 256), (4096, 512)]:
        yield f"qconv {n}x{m}", "qconv", (rng.standard_normal((n, 4)), rng.standard_normal((m, 4)))
    for n in (16, 64, 128):
        a, b = rng.standard_normal((n, n, 4)), rng.standard_normal((n, n, 4))
        yield f"qmatmul {n}x{n}", "qmatmul", (a, b)


def best(fn, args, repeat):
    number = 1
    while timeit.timeit(lambda: fn(*args), number=number) < 0.05:
        number *= 4
    return min(timeit.repeat(lambda: fn(*args), number=number, repeat=repeat)) / number


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    rng = np.random.default_rng(0)
    print(f"{'case':<20}{'fallback':>12}{'compiled':>12}{'speedup':>10}{'fft':>12}")
    for name, op, data in cases(rng):
        t_py = best(getattr(_fallback, op), data, args.repeat)
        if compiled is None:
            print(f"{name:<20}{t_py * 1e3:>10.3f}ms{'n/a':>12}{'':>10}")
            continue
        ref, got = getattr(_fallback, op)(*data), getattr(compiled, op)(*data)
        assert np.allclose(ref, got, atol=1e-9 * max(1.0, np.abs(ref).max()))
        t_c = best(getattr(compiled, op), data, args.repeat)
        fft = ""
        if op == "qconv":
            fft = f"{best(_fallback.qconv_fft, data, args.repeat) * 1e3:>10.3f}ms"
        print(f"{name:<20}{t_py * 1e3:>10.3f}ms{t_c * 1e3:>10.3f}ms{t_py / t_c:>9.1f}x{fft}")


if __name__ == "__main__":
    main()
