"""Acceptance criteria 1-12, each at its stated tolerance and runtime budget.

Run alone with ``pytest tests/test_acceptance.py`` or ``python3 tests/test_acceptance.py``;
one PASS/FAIL line per criterion is printed either way.
"""

import io
import json

import numpy as np
import pytest

from qwiener import checks, cli

SEED = 42
LINES = {}


def _record(key, ok, text):
    LINES[key] = f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {text}"
    print(LINES[key])


def _run(index, fn):
    result = fn(np.random.default_rng([SEED, index]))
    _record(str(index), result.passed, result.line().split(" ", 2)[2])
    assert result.properties_ok, result.notes
    assert result.within_budget, f"took {result.elapsed:.2f}s, budget {result.budget}s"
    return result


@pytest.mark.acceptance
def test_01_omega_homomorphism():
    r = _run(1, checks.check_omega_homomorphism)
    assert r.metrics["integer_defect"] == 0.0 and r.metrics["max_defect"] <= 1e-12


@pytest.mark.acceptance
def test_02_det_identity():
    r = _run(2, checks.check_det_identity)
    assert r.metrics["max_defect"] <= 1e-12


@pytest.mark.acceptance
def test_03_wiener_levy_round_trip():
    r = _run(3, checks.check_wiener_levy)
    assert r.metrics["max_residual"] <= 1e-8


@pytest.mark.acceptance
def test_04_plus_algebra():
    r = _run(4, checks.check_plus_algebra)
    assert r.metrics["max_residual"] <= 1e-8


@pytest.mark.acceptance
def test_05_spectral_factorization():
    r = _run(5, checks.check_factorization)
    assert r.metrics["max_residual"] <= 1e-6


@pytest.mark.acceptance
def test_06_zero_classification():
    _run(6, checks.check_zero_classification)


@pytest.mark.acceptance
def test_07_toeplitz_products():
    r = _run(7, checks.check_toeplitz_products)
    assert r.metrics["max_if_defect"] <= 1e-12


@pytest.mark.acceptance
def test_08_continuous_multiplicativity():
    r = _run(8, checks.check_continuous_multiplicativity)
    assert 1.6 <= r.metrics["ratio_min"] and r.metrics["ratio_max"] <= 2.4


@pytest.mark.acceptance
def test_09_continuous_inversion():
    r = _run(9, checks.check_continuous_inversion)
    assert r.metrics["max_omega_residual"] <= 1e-6 and r.metrics["max_cstar_residual"] <= 1e-6


@pytest.mark.acceptance
def test_10_slice_positivity():
    _run(10, checks.check_slice_positivity)


@pytest.mark.acceptance
def test_11_wiener_hopf_products():
    r = _run(11, checks.check_wiener_hopf)
    assert r.metrics["max_if_defect"] <= 1e-8 and r.metrics["counterexample_defect"] > 1e-2


@pytest.mark.acceptance
def test_12_cli_check_and_round_trip():
    out = io.StringIO()
    code = cli.main(["check", "--seed", str(SEED), "--json"], stream=out)
    report = json.loads(out.getvalue())
    keys = [s["key"] for s in report["suites"] if s["cases"] and not s["failures"]]
    wanted = [str(k) for k in range(1, 12)] + ["ser"]
    ser = next(s for s in report["suites"] if s["key"] == "ser")
    ok = code == 0 and all(k in keys for k in wanted) and ser["cases"] == 100
    _record("12", ok, f"qwiener check --seed {SEED} exit {code}; {report['passed']}/{len(report['suites'])} suites; "
            f"round trip {ser['cases'] - ser['failures']}/{ser['cases']}")
    assert ok


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
