"""Seeded property suites.

Each ``check_*`` function draws its own random cases from a
``numpy.random.Generator`` and returns a :class:`CheckResult`.  The CLI
``check`` command and the acceptance tests both run these.
"""

import time
from dataclasses import dataclass, field

import numpy as np

from . import continuous as C
from . import discrete as D
from . import hardy as H
from . import laurent as L
from . import toeplitz as T
from .errors import NotInvertibleError
from .quat import (
    E1,
    E2,
    E3,
    ONE,
    SliceBasis,
    chi,
    qabs,
    qmul,
    random_quat,
    random_unit_imag,
    sphere_conjugate,
)
from .serialize import parse, render, same_value


@dataclass
class CheckResult:
    key: str
    title: str
    cases: int = 0
    failures: int = 0
    budget: float | None = None
    elapsed: float = 0.0
    metrics: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    @property
    def properties_ok(self):
        return self.failures == 0 and self.cases > 0

    @property
    def within_budget(self):
        return self.budget is None or self.elapsed < self.budget

    @property
    def passed(self):
        return self.properties_ok and self.within_budget

    def fail(self, note):
        self.failures += 1
        if len(self.notes) < 5:
            self.notes.append(note)

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        extra = ", ".join(f"{k}={_fmt(v)}" for k, v in self.metrics.items())
        budget = f" (budget {self.budget:g}s)" if self.budget else ""
        return (
            f"[{status}] {self.key} {self.title}: {self.cases - self.failures}/{self.cases} ok, "
            f"{self.elapsed:.2f}s{budget}" + (f"; {extra}" if extra else "")
        )

    def to_dict(self):
        return {
            "key": self.key,
            "title": self.title,
            "passed": self.passed,
            "cases": self.cases,
            "failures": self.failures,
            "elapsed": self.elapsed,
            "budget": self.budget,
            "metrics": {k: float(v) if isinstance(v, (float, np.floating)) else v for k, v in self.metrics.items()},
            "notes": self.notes,
        }


def _fmt(v):
    if isinstance(v, (float, np.floating)):
        return f"{v:.3g}"
    return str(v)


def _count(default, cases):
    return default if cases is None else max(1, min(default, int(cases)))


def unit_ball_quat(rng, size):
    v = rng.standard_normal((size, 4))
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    return v * rng.uniform(0, 1, (size, 1)) ** 0.25


def random_unit_ball_series(rng, max_width=16, lo_range=8):
    width = int(rng.integers(1, max_width + 1))
    lo = int(rng.integers(-lo_range, lo_range + 1))
    return D.QSeries(lo, unit_ball_quat(rng, width))


def dominant_series(rng, lo, hi, factor=2.0):
    """Random series on [lo, hi] with |f_0| > factor * sum of the others."""
    c = rng.standard_normal((hi - lo + 1, 4))
    rest = sum(float(qabs(c[k])) for k in range(len(c)) if k + lo != 0)
    q0 = rng.standard_normal(4)
    q0 *= (factor * (1 + rng.uniform(0.05, 1.0)) * max(rest, 1e-3)) / np.linalg.norm(q0)
    c[-lo] = q0
    return D.QSeries(lo, c)


class _Timer:
    def __init__(self, result):
        self.result = result

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.result

    def __exit__(self, *exc):
        self.result.elapsed = time.perf_counter() - self.t0
        return False


# 1 --------------------------------------------------------------------------


def check_omega_homomorphism(rng, cases=None):
    r = CheckResult("1", "omega(f*g) = omega(f) omega(g)", budget=5.0)
    n = _count(500, cases)
    worst = 0.0
    with _Timer(r):
        for _ in range(n):
            f, g = random_unit_ball_series(rng), random_unit_ball_series(rng)
            basis = SliceBasis.random(rng)
            d = D.omega(D.star(f, g), basis) - L.cl_mul(D.omega(f, basis), D.omega(g, basis))
            defect = float(np.max(np.abs(d.coeffs))) if d.width else 0.0
            worst = max(worst, defect)
            r.cases += 1
            if defect > 1e-12:
                r.fail(f"defect {defect:.3e}")
        # integer coefficients: every product and sum is exact in floating point
        exact = 0.0
        for _ in range(max(1, n // 10)):
            f = D.QSeries(int(rng.integers(-4, 5)), rng.integers(-3, 4, (int(rng.integers(1, 9)), 4)))
            g = D.QSeries(int(rng.integers(-4, 5)), rng.integers(-3, 4, (int(rng.integers(1, 9)), 4)))
            d = D.omega(D.star(f, g)) - L.cl_mul(D.omega(f), D.omega(g))
            e = float(np.max(np.abs(d.coeffs))) if d.width else 0.0
            exact = max(exact, e)
            r.cases += 1
            if e != 0.0:
                r.fail(f"integer case defect {e:.3e}")
    r.metrics.update(max_defect=worst, integer_defect=exact)
    return r


# 2 --------------------------------------------------------------------------


def check_det_identity(rng, cases=None):
    r = CheckResult("2", "det omega(f) = f * f^c restricted to the slice", budget=5.0)
    n = _count(200, cases)
    bases = [SliceBasis.random(rng) for _ in range(10)]
    worst = 0.0
    with _Timer(r):
        for _ in range(n):
            f = random_unit_ball_series(rng)
            sym = D.star(f, D.conj_series(f))
            imag = float(np.max(np.abs(sym.coeffs[:, 1:])))
            for b in bases:
                det = L.cl_det(D.omega(f, b))
                lo, hi = min(det.min_deg, sym.min_deg), max(det.max_deg, sym.max_deg)
                defect = max(float(np.max(np.abs(det.window(lo, hi) - sym.window(lo, hi)[:, 0]))), imag)
                worst = max(worst, defect)
                r.cases += 1
                if defect > 1e-12:
                    r.fail(f"defect {defect:.3e}")
    r.metrics.update(max_defect=worst, bases=len(bases))
    return r


# 3 --------------------------------------------------------------------------


def check_wiener_levy(rng, cases=None):
    r = CheckResult("3", "invert dominant series; refuse p - q on the sphere", budget=30.0)
    n = _count(200, cases)
    worst = 0.0
    with _Timer(r):
        for _ in range(n):
            lo = int(rng.integers(-6, 1))
            f = dominant_series(rng, lo, int(rng.integers(0, 7)))
            g = D.invert(f)
            res = D.inverse_residual(f, g)
            worst = max(worst, res)
            r.cases += 1
            if res > 1e-8:
                r.fail(f"residual {res:.3e}")
        for _ in range(max(1, n // 10)):
            q = rng.standard_normal(4)
            q /= np.linalg.norm(q)
            f = D.QSeries(0, [-q, ONE])
            r.cases += 1
            try:
                D.invert(f)
                r.fail("p - q was inverted")
            except NotInvertibleError as exc:
                expected = float(np.arccos(np.clip(q[0], -1, 1)))
                if exc.witness is None or abs(exc.witness - expected) > 1e-4:
                    r.fail(f"witness {exc.witness} vs expected {expected:.6f}")
    r.metrics.update(max_residual=worst)
    return r


# 4 --------------------------------------------------------------------------


def check_plus_algebra(rng, cases=None):
    r = CheckResult("4", "plus-algebra inversion")
    n = _count(100, cases)
    worst = 0.0
    with _Timer(r):
        r.cases += 1
        if D.is_invertible_plus(D.QSeries.monomial(1, ONE)).invertible:
            r.fail("p accepted as plus-invertible")
        try:
            D.invert_plus(D.QSeries.monomial(1, ONE))
            r.fail("invert_plus(p) succeeded")
        except NotInvertibleError:
            pass
        for _ in range(n):
            f = dominant_series(rng, 0, int(rng.integers(1, 8)))
            g = D.invert_plus(f)
            res = D.inverse_residual(f, g)
            worst = max(worst, res)
            r.cases += 1
            if res > 1e-8:
                r.fail(f"residual {res:.3e}")
            if not g.is_plus():
                r.fail(f"inverse has degree {g.min_deg}")
    r.metrics.update(max_residual=worst)
    return r


# 5 --------------------------------------------------------------------------


def check_factorization(rng, cases=None):
    r = CheckResult("5", "spectral factorization of h * h^#", budget=60.0)
    n = _count(50, cases)
    worst = 0.0
    with _Timer(r):
        for _ in range(n):
            h = dominant_series(rng, 0, int(rng.integers(1, 4)), factor=1.5)
            f = D.star(h, D.adjoint_series(h))
            rep = D.spectral_factorize_report(f, n_section=512)
            again = D.spectral_factorize(f, n_section=512)
            worst = max(worst, rep.residual)
            r.cases += 1
            if rep.residual > 1e-6:
                r.fail(f"residual {rep.residual:.3e}")
            if not (rep.factor.is_plus() and D.is_invertible_plus(rep.factor).invertible):
                r.fail("factor is not plus-invertible")
            if not (again.min_deg == rep.factor.min_deg and np.array_equal(again.coeffs, rep.factor.coeffs)):
                r.fail("two runs differ")
            if rep.section > 512:
                r.fail(f"section {rep.section} > 512")
    r.metrics.update(max_residual=worst)
    return r


# 6 --------------------------------------------------------------------------


def check_zero_classification(rng, cases=None):
    r = CheckResult("6", "zero classification on the unit sphere")
    n = _count(50, cases)
    with _Timer(r):
        rep = D.classify_zeros(D.QSeries(0, [ONE, 0 * ONE, ONE]))
        r.cases += 1
        if not (len(rep) == 1 and rep.entries[0].kind == "Spherical" and abs(rep.entries[0].theta - np.pi / 2) < 1e-6):
            r.fail(f"p^2 + 1: {rep.entries}")
        rep = D.classify_zeros(D.QSeries(0, [-E2, ONE]))
        r.cases += 1
        ok = len(rep) == 1 and rep.entries[0].kind == "Isolated"
        if ok:
            e = rep.entries[0]
            ok = np.allclose(e.unit, E2, atol=1e-8) and float(qabs(D.eval_at(D.QSeries(0, [-E2, ONE]), E2))) <= 1e-10
        if not ok:
            r.fail(f"p - e2: {rep.entries}")
        for _ in range(n):
            q0 = np.concatenate([[rng.uniform(-0.95, 0.95)], random_unit_imag(rng)[1:]])
            q0[1:] *= np.sqrt(1 - q0[0] ** 2)
            f = D.star(D.QSeries(0, [-q0, ONE]), D.QSeries(0, [-q0 * [1, -1, -1, -1], ONE]))
            rep = D.classify_zeros(f)
            r.cases += 1
            expected = float(np.arccos(q0[0]))
            if not (len(rep) == 1 and rep.entries[0].kind == "Spherical" and abs(rep.entries[0].theta - expected) < 1e-5):
                r.fail(f"spherical product at q0={q0.tolist()}: {rep.entries}")
    return r


# 7 --------------------------------------------------------------------------


def _banded(rng, lo, hi):
    return D.QSeries(lo, unit_ball_quat(rng, hi - lo + 1))


def check_toeplitz_products(rng, cases=None):
    r = CheckResult("7", "Toeplitz products at n = 64")
    n = _count(200, cases)
    size = 64
    worst = 0.0
    weakest = np.inf
    with _Timer(r):
        for k in range(n):
            if k % 2 == 0:
                phi = _banded(rng, -int(rng.integers(0, 6)), 0)
                a = int(rng.integers(-5, 1))
                psi = _banded(rng, a, a + int(rng.integers(0, 6)))
            else:
                a = int(rng.integers(-5, 1))
                phi = _banded(rng, a, a + int(rng.integers(0, 6)))
                psi = _banded(rng, 0, int(rng.integers(0, 6)))
            res = T.toeplitz_product_test(phi, psi, size)
            worst = max(worst, res.defect_norm, res.diagonal_defect)
            r.cases += 1
            if not (res.is_toeplitz and res.equals_T_star):
                r.fail(f"if-branch defect {res.defect_norm:.3e}")
        for _ in range(n):
            phi = _banded(rng, -int(rng.integers(0, 5)), int(rng.integers(1, 6)))
            psi = _banded(rng, -int(rng.integers(1, 6)), int(rng.integers(0, 5)))
            res = T.toeplitz_product_test(phi, psi, size)
            weakest = min(weakest, res.diagonal_defect)
            r.cases += 1
            if res.is_toeplitz:
                r.fail("both-violating pair gave a Toeplitz product")
        for _ in range(n):
            phi = _banded(rng, -int(rng.integers(0, 6)), int(rng.integers(0, 6)))
            psi = _banded(rng, 0, int(rng.integers(0, 6)))
            r.cases += 1
            if T.zero_product_probe(phi, psi, size):
                r.fail("zero product with psi plus")
    r.metrics.update(max_if_defect=worst, min_violating_defect=weakest)
    return r


# 8 --------------------------------------------------------------------------


def _box_omega(c, q, a, b, t, basis):
    """Exact omega of c + q 1_[a,b] on the line."""
    small = np.abs(t) < 1e-12
    ts = np.where(small, 1.0, t)
    ph = np.where(small, b - a, (np.exp(1j * ts * b) - np.exp(1j * ts * a)) / (1j * ts))
    return chi(c, basis) + ph[:, None, None] * chi(q, basis)


def check_continuous_multiplicativity(rng, cases=None):
    r = CheckResult("8", "continuous multiplicativity, first order in du")
    n = _count(10, cases)
    grid = C.TGrid(10.0, 201)
    steps = [0.02, 0.01, 0.005]
    fitted = 0.0
    ratios = []
    with _Timer(r):
        for _ in range(n):
            basis = SliceBasis.random(rng)
            parts = []
            for _ in range(2):
                a = 0.1 * int(rng.integers(-10, 5))
                b = a + 0.1 * int(rng.integers(2, 10))
                parts.append((random_quat(rng), 0.5 * random_quat(rng), a, b))
            exact = np.eye(2)
            for c, q, a, b in parts:
                exact = exact @ _box_omega(c, q, a, b, grid.t, basis)
            defects = []
            for du in steps:
                Fs = [C.CElement.from_function(c, lambda u, q=q: np.outer(np.ones_like(u), q), a, b, du) for c, q, a, b in parts]
                approx = C.omega_c(C.cstar(*Fs), basis, grid)
                defects.append(float(np.max(np.linalg.norm(approx - exact, ord=2, axis=(1, 2)))))
            fitted = max(fitted, max(d / h for d, h in zip(defects, steps)))
            case_ratios = [defects[k] / defects[k + 1] for k in range(len(steps) - 1)]
            ratios.extend(case_ratios)
            r.cases += 1
            if any(not (1.6 <= q <= 2.4) for q in case_ratios):
                r.fail(f"halving ratios {case_ratios}")
        # the lattice product itself is exact
        F1 = C.CElement.from_function(random_quat(rng), lambda u: np.outer(np.cos(u), random_quat(rng)), -1, 1, 0.01)
        F2 = C.CElement.from_function(random_quat(rng), lambda u: np.outer(np.exp(-u), random_quat(rng)), 0, 2, 0.01)
        lattice = float(np.max(np.abs(C.omega_c(C.cstar(F1, F2), grid=grid) - C.omega_c(F1, grid=grid) @ C.omega_c(F2, grid=grid))))
        r.cases += 1
        if lattice > 1e-12:
            r.fail(f"lattice product defect {lattice:.3e}")
    r.metrics.update(C=fitted, ratio_min=min(ratios), ratio_max=max(ratios), lattice_defect=lattice)
    return r


# 9 --------------------------------------------------------------------------


def random_neumann_element(rng, du=0.02):
    c = random_quat(rng)
    c *= rng.uniform(1.0, 2.0) / np.linalg.norm(c)
    a = 0.1 * int(rng.integers(-10, 5))
    b = min(a + 0.1 * int(rng.integers(3, 12)), 1.0)
    q1, q2 = random_quat(rng), random_quat(rng)

    def kern(u):
        s = np.sin(np.pi * (u - a) / (b - a)) ** 2
        return np.outer(s, q1) + np.outer(s * (u - a), q2)

    F = C.CElement.from_function(c, kern, a, b, du)
    rho = rng.uniform(0.2, 0.8)
    scale = rho * float(qabs(c)) / F.kernel_l1()
    return C.CElement(c, F.u0, du, F.samples * scale)


def check_continuous_inversion(rng, cases=None):
    r = CheckResult("9", "continuous inversion of Neumann-certified elements")
    n = _count(50, cases)
    bases = [SliceBasis.random(rng) for _ in range(5)]
    worst_omega = worst_mass = 0.0
    with _Timer(r):
        for _ in range(n):
            F = random_neumann_element(rng)
            verdicts = [C.is_invertible_c(F, b) for b in bases]
            r.cases += 1
            if len({(v.invertible, v.mode) for v in verdicts}) != 1 or not verdicts[0].invertible:
                r.fail("verdicts differ across bases")
            spread = max(v.min_abs_det for v in verdicts) - min(v.min_abs_det for v in verdicts)
            if spread > 1e-9:
                r.fail(f"det minimum differs across bases by {spread:.3e}")
            G = C.invert_c(F, bases[0])
            om = max(C.omega_residual(F, G, b) for b in bases[:2])
            const, mass = C.cstar_residual(F, G)
            worst_omega = max(worst_omega, om)
            worst_mass = max(worst_mass, const + mass)
            if om > 1e-6 or const + mass > 1e-6:
                r.fail(f"omega residual {om:.3e}, cstar residual {const + mass:.3e}")
        # negative control: mass -1 packed next to u = 0 cancels the constant at t = 0
        F = C.CElement.from_function(ONE, lambda u: np.outer(-np.ones_like(u) / 0.05, ONE), 0.0, 0.04, 0.01)
        verdicts = [C.is_invertible_c(F, b) for b in bases]
        r.cases += 1
        if any(v.invertible for v in verdicts):
            r.fail("cancelling element accepted")
    r.metrics.update(max_omega_residual=worst_omega, max_cstar_residual=worst_mass)
    return r


# 10 -------------------------------------------------------------------------


def sign_exp_element(c=2.0, cutoff=12.0, du=0.01):
    """c + e1 sign(u) exp(-|u|) on [-cutoff, cutoff]."""
    return C.CElement.from_function(
        [c, 0, 0, 0], lambda u: np.outer(np.sign(u) * np.exp(-np.abs(u)), E1), -cutoff, cutoff, du
    )


def check_slice_positivity(rng, cases=None):
    r = CheckResult("10", "slice-dependent positivity")
    with _Timer(r):
        F = sign_exp_element()
        on = C.is_strictly_positive_on_slice(F, SliceBasis(E1, E2))
        off = C.is_strictly_positive_on_slice(F, SliceBasis(E2, E3))
        r.cases += 2
        if not on.positive:
            r.fail(f"not positive on (e1, e2): {on}")
        if off.hermitian:
            r.fail(f"Hermitian on (e2, e3): {off}")
    r.metrics.update(min_eig_e1=on.min_eigenvalue, hermitian_defect_e2=off.hermitian_defect)
    return r


# 11 -------------------------------------------------------------------------


def _random_kernel_element(rng, a, b, du):
    q1, q2, c = random_quat(rng), random_quat(rng), random_quat(rng)
    return C.CElement.from_function(c, lambda u: np.outer(np.exp(-(u * u)), q1) + np.outer(u, 0.3 * q2), a, b, du)


def check_wiener_hopf(rng, cases=None):
    r = CheckResult("11", "Wiener-Hopf products")
    n = _count(100, cases)
    du = 0.05
    worst = 0.0
    with _Timer(r):
        for k in range(n):
            a = 0.05 * int(rng.integers(-20, 0))
            b = 0.05 * int(rng.integers(1, 21))
            if k % 2 == 0:
                Phi = _random_kernel_element(rng, a, 0.0, du)
                Psi = _random_kernel_element(rng, a, b, du)
            else:
                Phi = _random_kernel_element(rng, a, b, du)
                Psi = _random_kernel_element(rng, 0.0, b, du)
            w = H.extent(Phi) + H.extent(Psi)
            m = int(round(4 * w / du)) + 1
            basis = SliceBasis.random(rng)
            F = H.HardyElement(basis, du, rng.standard_normal(m) + 1j * rng.standard_normal(m),
                               rng.standard_normal(m) + 1j * rng.standard_normal(m))
            res = H.wh_product_test(Phi, Psi, F)
            worst = max(worst, res.defect)
            r.cases += 1
            if res.defect > 1e-8 or res.branch == "none":
                r.fail(f"if-branch defect {res.defect:.3e} ({res.branch})")
        Phi, Psi, F = wh_counterexample()
        res = H.wh_product_test(Phi, Psi, F)
        r.cases += 1
        if res.defect <= 1e-2:
            r.fail(f"counterexample defect only {res.defect:.3e}")
    r.metrics.update(max_if_defect=worst, counterexample_defect=res.defect)
    return r


def wh_counterexample(du=0.01):
    """Phi plus with mass 1, Psi minus with mass 1, F a box at the origin."""
    one = lambda u: np.outer(np.ones_like(u), ONE)  # noqa: E731
    Phi = C.CElement.from_function(np.zeros(4), one, 0.0, 1.0 - du, du)
    Psi = C.CElement.from_function(np.zeros(4), one, -1.0 + du, 0.0, du)
    n = int(round(8.0 / du)) + 1
    box = np.where(np.arange(n) * du < 1.0, 1.0, 0.0).astype(complex)
    return Phi, Psi, H.HardyElement(SliceBasis(E1, E2), du, box, np.zeros(n, complex))


# module invariants ------------------------------------------------------------


def check_quaternion_invariants(rng, cases=None):
    r = CheckResult("quat", "quaternion and chi invariants")
    n = _count(200, cases)
    with _Timer(r):
        for _ in range(n):
            b = SliceBasis.random(rng)
            p, q = random_quat(rng), random_quat(rng)
            r.cases += 1
            if np.max(np.abs(chi(qmul(p, q), b) - chi(p, b) @ chi(q, b))) > 1e-12:
                r.fail("chi not multiplicative")
            if abs(qabs(qmul(p, q)) - qabs(p) * qabs(q)) > 1e-12 * (1 + qabs(p) * qabs(q)):
                r.fail("norm not multiplicative")
            s = sphere_conjugate(p, q)
            if abs(s[0] - p[0]) > 1e-12 or abs(np.linalg.norm(s[1:]) - np.linalg.norm(p[1:])) > 1e-12:
                r.fail("sphere conjugate left the sphere")
    return r


def check_operator_invariants(rng, cases=None):
    r = CheckResult("ops", "Toeplitz dual path, P + Q, Hardy scaling")
    n = _count(50, cases)
    with _Timer(r):
        for _ in range(n):
            phi = _banded(rng, -int(rng.integers(0, 6)), int(rng.integers(0, 6)))
            sec = T.ToeplitzSection(phi, 24)
            xi = random_quat(rng, 24)
            r.cases += 1
            if np.max(np.abs(T.toeplitz_apply(sec, xi) - T.toeplitz_apply_star(sec, xi))) > 1e-12:
                r.fail("Toeplitz matrix and series paths disagree")
            g = H.LineElement(SliceBasis.random(rng), 0.1, -0.1 * int(rng.integers(1, 20)),
                              rng.standard_normal(40) + 0j, rng.standard_normal(40) + 0j)
            back = H.reconstruct(g)
            if not (np.array_equal(back.samples1, g.samples1) and np.array_equal(back.samples2, g.samples2)):
                r.fail("P + Q does not reconstruct")
            if H.line_inner(H.embed(H.project_P(g), g), H.project_Q(g)) != 0:
                r.fail("P g and Q g not orthogonal")
            F = H.HardyElement(g.basis, 0.1, g.samples1, g.samples2)
            q = random_quat(rng)
            scaled = H.hardy_norm(H.wh_apply(C.CElement.constant(q, 0.1), F))
            if abs(scaled - float(qabs(q)) * H.hardy_norm(F)) > 1e-10 * scaled:
                r.fail("constant symbol does not scale the norm by |c|")
    return r


def serialization_fixtures(rng, n=100):
    out = []
    for k in range(n):
        kind = k % 4
        if kind == 0:
            out.append(D.QSeries(int(rng.integers(-5, 6)), rng.standard_normal((int(rng.integers(1, 9)), 4))))
        elif kind == 1:
            du = float(rng.choice([0.01, 0.02, 0.05, 0.1]))
            out.append(C.CElement(random_quat(rng), du * int(rng.integers(-20, 20)), du,
                                  rng.standard_normal((int(rng.integers(0, 12)), 4))))
        elif kind == 2:
            m = int(rng.integers(0, 12))
            out.append(H.HardyElement(SliceBasis.random(rng), 0.05, rng.standard_normal(m) + 1j * rng.standard_normal(m),
                                      rng.standard_normal(m) + 1j * rng.standard_normal(m)))
        else:
            out.append(rng.standard_normal((int(rng.integers(1, 9)), 4)))
    return out


def check_serialization(rng, cases=None):
    r = CheckResult("ser", "document round trip")
    with _Timer(r):
        for x in serialization_fixtures(rng, _count(100, cases)):
            text = render(x)
            back = parse(text).value
            r.cases += 1
            if not (same_value(x, back) and render(back) == text):
                r.fail(f"round trip changed a {type(x).__name__}")
    return r


ACCEPTANCE = [
    check_omega_homomorphism,
    check_det_identity,
    check_wiener_levy,
    check_plus_algebra,
    check_factorization,
    check_zero_classification,
    check_toeplitz_products,
    check_continuous_multiplicativity,
    check_continuous_inversion,
    check_slice_positivity,
    check_wiener_hopf,
]

SUITES = ACCEPTANCE + [check_quaternion_invariants, check_operator_invariants, check_serialization]


def run_all(seed, cases=None, suites=SUITES):
    """Run every suite with its own generator spawned from ``seed``."""
    children = np.random.SeedSequence(seed).spawn(len(suites))
    return [fn(np.random.default_rng(s), cases) for fn, s in zip(suites, children)]
