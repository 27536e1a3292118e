import numpy as np
import pytest

from qwiener import discrete as D
from qwiener.checks import serialization_fixtures
from qwiener.errors import DocumentError
from qwiener.quat import E1, E3, SliceBasis
from qwiener.serialize import parse, read_document, render, same_value, write_document


def test_round_trip_is_exact(rng):
    for x in serialization_fixtures(rng, 100):
        text = render(x)
        back = parse(text).value
        assert same_value(x, back)
        assert render(back) == text


def test_one_line_per_document(rng):
    text = render(D.random_series(rng, -2, 2))
    assert text.count("\n") == 1 and text.endswith("\n")


def test_basis_is_kept(rng, tmp_path):
    b = SliceBasis(E3, E1)
    f = D.random_series(rng, 0, 2)
    path = tmp_path / "f.json"
    write_document(path, f, b)
    doc = read_document(path)
    assert doc.basis == b and doc.kind == "qseries" and doc.value == f


def test_negative_zero_survives():
    f = D.QSeries(0, [[-0.0, 1.0, 0.0, 0.0]])
    back = parse(render(f)).value
    assert np.signbit(back.coeffs[0, 0])


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        '{"kind": "banana"}',
        '{"kind": "qseries", "min_deg": 0}',
        '{"kind": "qseries", "min_deg": 0.5, "coeffs": [[1,0,0,0]]}',
        '{"kind": "qseries", "min_deg": 0, "coeffs": [[1,0,0]]}',
        '{"kind": "qseries", "min_deg": 0, "coeffs": [["a",0,0,0]]}',
        '{"kind": "celement", "c": [1,0,0,0], "u0": 0.005, "du": 0.01, "samples": []}',
        '{"kind": "celement", "c": [1,0,0,0], "u0": 0, "du": -1, "samples": []}',
        '{"kind": "qvec", "entries": [[1,0,0,0]], "basis": {"i": [0,1,0,0], "j": [0,1,0,0]}}',
        '[1, 2]',
        "",
    ],
)
def test_malformed_documents(text):
    with pytest.raises(DocumentError):
        parse(text)


def test_missing_file(tmp_path):
    with pytest.raises(DocumentError):
        read_document(tmp_path / "nope.json")
