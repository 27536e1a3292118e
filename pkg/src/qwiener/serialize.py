"""One-line JSON documents for the four value kinds the command line reads and writes.

Floats are written with ``repr`` precision, so parsing a rendered
document gives back the same bits.
"""

import json
import math
from dataclasses import dataclass

import numpy as np

from .continuous import CElement
from .discrete import QSeries
from .errors import DocumentError
from .hardy import HardyElement
from .quat import DEFAULT_BASIS, SliceBasis

KINDS = ("qseries", "celement", "hardy", "qvec")


@dataclass(frozen=True, eq=False)
class SeriesDocument:
    kind: str
    value: object
    basis: SliceBasis = DEFAULT_BASIS


def _floats(a):
    return [float(x) for x in np.asarray(a, dtype=float).reshape(-1)]


def _quats(a):
    return [_floats(row) for row in np.asarray(a, dtype=float).reshape(-1, 4)]


def _complexes(a):
    return [[float(z.real), float(z.imag)] for z in np.asarray(a, dtype=complex).reshape(-1)]


def infer_kind(value):
    if isinstance(value, QSeries):
        return "qseries"
    if isinstance(value, CElement):
        return "celement"
    if isinstance(value, HardyElement):
        return "hardy"
    return "qvec"


def render(value, basis=None):
    """Render a value (or a SeriesDocument) as a single line ending in a newline."""
    if isinstance(value, SeriesDocument):
        value, basis, kind = value.value, value.basis, value.kind
    else:
        kind = infer_kind(value)
    if kind == "hardy":
        basis = value.basis
    doc = {"kind": kind}
    if basis is not None and basis != DEFAULT_BASIS:
        doc["basis"] = basis.to_dict()
    if kind == "qseries":
        doc["min_deg"] = int(value.min_deg)
        doc["coeffs"] = _quats(value.coeffs)
    elif kind == "celement":
        doc["c"] = _floats(value.c)
        doc["u0"] = float(value.u0)
        doc["du"] = float(value.du)
        doc["samples"] = _quats(value.samples)
    elif kind == "hardy":
        doc["du"] = float(value.du)
        doc["samples1"] = _complexes(value.samples1)
        doc["samples2"] = _complexes(value.samples2)
    elif kind == "qvec":
        doc["entries"] = _quats(value)
    else:
        raise DocumentError(f"unknown kind {kind!r}")
    return json.dumps(doc, allow_nan=False, separators=(",", ":")) + "\n"


def _need(doc, key):
    if key not in doc:
        raise DocumentError(f"missing field {key!r}")
    return doc[key]


def _array(x, shape_tail, what):
    try:
        a = np.array(x, dtype=float)
    except (TypeError, ValueError) as exc:
        raise DocumentError(f"{what}: not numeric") from exc
    if a.size == 0:
        a = a.reshape((0,) + shape_tail)
    if a.shape[1:] != shape_tail or a.ndim != 1 + len(shape_tail):
        raise DocumentError(f"{what}: expected shape (n, {', '.join(map(str, shape_tail))}), got {a.shape}")
    if not np.all(np.isfinite(a)):
        raise DocumentError(f"{what}: non-finite entry")
    return a


def _real(x, what):
    if isinstance(x, bool) or not isinstance(x, (int, float)) or not math.isfinite(x):
        raise DocumentError(f"{what}: expected a finite number")
    return float(x)


def parse(text):
    """Parse one document; returns a SeriesDocument."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise DocumentError(f"expected exactly one document line, found {len(lines)}")
    try:
        doc = json.loads(lines[0])
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    kind = _need(doc, "kind")
    if kind not in KINDS:
        raise DocumentError(f"unknown kind {kind!r}")
    basis = DEFAULT_BASIS
    if "basis" in doc:
        b = doc["basis"]
        try:
            basis = SliceBasis(_array([b["i"]], (4,), "basis.i")[0], _array([b["j"]], (4,), "basis.j")[0])
        except (KeyError, TypeError, ValueError) as exc:
            raise DocumentError(f"bad basis: {exc}") from exc
    try:
        if kind == "qseries":
            m = _need(doc, "min_deg")
            if isinstance(m, bool) or not isinstance(m, int):
                raise DocumentError("min_deg must be an integer")
            value = QSeries(m, _array(_need(doc, "coeffs"), (4,), "coeffs"))
        elif kind == "celement":
            c = _array([_need(doc, "c")], (4,), "c")[0]
            value = CElement(
                c,
                _real(_need(doc, "u0"), "u0"),
                _real(_need(doc, "du"), "du"),
                _array(_need(doc, "samples"), (4,), "samples"),
            )
            value.k0  # noqa: B018  (lattice check)
        elif kind == "hardy":
            s1 = _array(_need(doc, "samples1"), (2,), "samples1")
            s2 = _array(_need(doc, "samples2"), (2,), "samples2")
            value = HardyElement(
                basis, _real(_need(doc, "du"), "du"), s1[:, 0] + 1j * s1[:, 1], s2[:, 0] + 1j * s2[:, 1]
            )
        else:
            value = _array(_need(doc, "entries"), (4,), "entries")
    except DocumentError:
        raise
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc
    return SeriesDocument(kind, value, basis)


def read_document(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return parse(fh.read())
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from exc


def write_document(path, value, basis=None):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render(value, basis))


def same_value(a, b):
    """Bitwise equality of two parsed values of the same kind."""
    if type(a) is not type(b):
        return False
    if isinstance(a, QSeries):
        return a == b
    if isinstance(a, CElement):
        return (
            np.array_equal(a.c, b.c) and a.u0 == b.u0 and a.du == b.du and np.array_equal(a.samples, b.samples)
        )
    if isinstance(a, HardyElement):
        return (
            a.basis == b.basis
            and a.du == b.du
            and np.array_equal(a.samples1, b.samples1)
            and np.array_equal(a.samples2, b.samples2)
        )
    return np.array_equal(np.asarray(a), np.asarray(b))
