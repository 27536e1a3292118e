import io
import json
import os
import subprocess
import sys

import numpy as np
import pytest

from qwiener import cli
from qwiener import continuous as C
from qwiener import discrete as D
from qwiener.errors import StructureError
from qwiener.hardy import HardyElement
from qwiener.quat import E1, E2, ONE, SliceBasis
from qwiener.serialize import read_document, write_document


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(map(str, argv)), stream=out)
    return code, out.getvalue()


@pytest.fixture
def files(tmp_path):
    paths = {}

    def put(name, value, basis=None):
        p = tmp_path / f"{name}.json"
        write_document(p, value, basis)
        paths[name] = p
        return p

    put("geom", D.QSeries(0, [ONE, -0.5 * E1]))
    put("pe2", D.QSeries(0, [-E2, ONE]))
    put("pos", D.QSeries(-1, [-E2, 4 * ONE, E2]))
    put("p", D.QSeries.monomial(1, ONE))
    put("one", D.UNIT)
    put("sph", D.QSeries(0, [ONE, np.zeros(4), ONE]))
    put("vec", np.array([ONE, np.zeros(4), np.zeros(4)]))
    put("cel", C.CElement.from_function(ONE, lambda u: np.outer(0.4 * np.ones_like(u), E2), 0, 1, 0.01))
    put("hardy", HardyElement(SliceBasis(E1, E2), 0.01, np.ones(200), np.zeros(200)))
    bad = tmp_path / "bad.json"
    bad.write_text("{ not json\n")
    paths["bad"] = bad
    paths["dir"] = tmp_path
    return paths


def test_invert_geometric(files, tmp_path):
    out_path = tmp_path / "inv.json"
    code, text = run("invert", files["geom"], "-o", out_path)
    assert code == 0
    resid = float(text.split("residual |f*g - 1| = ")[1].split()[0])
    assert resid <= 1e-8
    g = read_document(out_path).value
    assert (D.star(D.QSeries(0, [ONE, -0.5 * E1]), g) - D.UNIT).norm() <= 1e-8


def test_invert_refuses_with_witness(files):
    code, text = run("invert", files["pe2"], "--json")
    assert code == cli.EXIT_NOT_INVERTIBLE
    report = json.loads(text)
    assert report["witness"] == pytest.approx(np.pi / 2, abs=1e-6)


def test_malformed_and_missing(files):
    assert run("invert", files["bad"])[0] == cli.EXIT_IO
    assert run("invert", files["dir"] / "missing.json")[0] == cli.EXIT_IO
    assert run("invert", files["vec"])[0] == cli.EXIT_IO  # wrong kind
    assert run("invert", files["geom"], "--basis", "e1,e1")[0] == cli.EXIT_IO


def test_invert_continuous(files):
    code, text = run("invert", files["cel"], "--continuous", "--json")
    assert code == 0
    report = json.loads(text)
    assert report["certificate"] == "NeumannCertificate"
    assert report["omega_residual"] <= 1e-6
    code, _ = run("invert", files["cel"], "--continuous", "--plus")
    assert code == 0


def test_factor(files, tmp_path):
    assert run("factor", files["pos"])[0] == 0
    assert run("factor", files["p"])[0] == cli.EXIT_NOT_POSITIVE
    out_path = tmp_path / "fp.json"
    assert run("factor", files["one"], "-o", out_path)[0] == 0
    assert (read_document(out_path).value - D.UNIT).norm() < 1e-12


def test_zeros(files):
    code, text = run("zeros", files["sph"])
    assert code == 0 and "θ=1.5708 Spherical" in text
    code, text = run("zeros", files["pe2"], "--json")
    (z,) = json.loads(text)["zeros"]
    assert z["kind"] == "Isolated"
    np.testing.assert_allclose(z["unit"], E2, atol=1e-10)


def test_toeplitz_shift(files):
    code, text = run("toeplitz", files["p"], files["vec"], "--json")
    assert code == 0
    np.testing.assert_array_equal(json.loads(text)["result"], [[0, 0, 0, 0], ONE, [0, 0, 0, 0]])
    code, text = run("toeplitz", files["p"], files["vec"], "--n", 40, "--psi", files["one"])
    assert code == 0 and "Toeplitz: True" in text


def test_wh(files, tmp_path):
    out_path = tmp_path / "wh.json"
    code, text = run("wh", files["cel"], files["hardy"], "--L", 4.0, "-o", out_path)
    assert code == 0
    assert read_document(out_path).value.n == 401
    code, text = run("wh", files["cel"], files["hardy"], "--L", 4.0, "--psi", files["cel"], "--json")
    report = json.loads(text)
    assert report["product_test"]["branch"] == "Psi plus" and report["product_test"]["is_wh"]


def test_structure_errors_exit_4(files, monkeypatch):
    def broken(*args, **kwargs):
        raise StructureError("broken")

    monkeypatch.setattr(cli.D, "classify_zeros", broken)
    assert run("zeros", files["sph"])[0] == cli.EXIT_STRUCTURE


def test_check_small_and_deterministic():
    code, a = run("check", "--seed", 7, "--cases", 3, "--json")
    assert code == 0
    _, b = run("check", "--seed", 7, "--cases", 3, "--json")
    strip = lambda t: [(s["key"], s["cases"], s["failures"]) for s in json.loads(t)["suites"]]  # noqa: E731
    assert strip(a) == strip(b)


def test_seed_from_environment(monkeypatch):
    monkeypatch.setenv("QWIENER_SEED", "11")
    code, text = run("check", "--cases", 2, "--json")
    assert code == 0 and json.loads(text)["seed"] == 11


def test_console_script_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "qwiener.cli", "zeros", str(files["sph"])],
        capture_output=True, text=True, env=dict(os.environ),
    )
    assert proc.returncode == 0 and "Spherical" in proc.stdout
