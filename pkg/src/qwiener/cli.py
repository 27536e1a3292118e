"""Command-line front end: ``qwiener invert|factor|zeros|toeplitz|wh|check``.

Exit codes: 0 success, 1 input/output or parse problem, 2 not invertible,
3 not positive, 4 structure violation.
"""

import argparse
import json
import os
import sys

import numpy as np

from . import checks
from . import continuous as C
from . import discrete as D
from . import hardy as H
from . import toeplitz as T
from .errors import (
    ClassificationError,
    DocumentError,
    NotInvertibleError,
    NotPositiveError,
    QWienerError,
    StructureError,
)
from .quat import E1, E2, E3, SliceBasis, qabs
from .serialize import read_document, render, write_document

EXIT_OK, EXIT_IO, EXIT_NOT_INVERTIBLE, EXIT_NOT_POSITIVE, EXIT_STRUCTURE = 0, 1, 2, 3, 4
DEFAULT_SEED = 42

_NAMED = {"e1": E1, "e2": E2, "e3": E3}


def parse_basis(text):
    """``"e1,e2"`` or ``"a,b,c:d,e,f"`` (imaginary parts of i and j)."""
    if ":" in text:
        parts = text.split(":")
    else:
        parts = text.split(",")
    if len(parts) != 2:
        raise DocumentError(f"bad basis {text!r}")
    units = []
    for p in parts:
        p = p.strip()
        sign = -1.0 if p.startswith("-") else 1.0
        name = p.lstrip("+-").lower()
        if name in _NAMED:
            units.append(sign * _NAMED[name])
        else:
            try:
                v = [float(x) for x in p.split(",")]
            except ValueError as exc:
                raise DocumentError(f"bad basis component {p!r}") from exc
            if len(v) != 3:
                raise DocumentError(f"basis component {p!r} needs three numbers")
            units.append(np.array([0.0, *v]))
    try:
        return SliceBasis(units[0], units[1])
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc


class Reporter:
    def __init__(self, as_json, stream=None):
        self.as_json = as_json
        self.stream = stream or sys.stdout
        self.data = {}

    def add(self, key, value, text=None):
        self.data[key] = value
        if not self.as_json and text is not None:
            print(text, file=self.stream)

    def finish(self, code):
        self.data.setdefault("exit_code", code)
        if self.as_json:
            print(json.dumps(_plain(self.data)), file=self.stream)
        return code


def _plain(x):
    if isinstance(x, dict):
        return {k: _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, np.ndarray):
        return _plain(x.tolist())
    if isinstance(x, (np.floating, float)):
        return float(x) if np.isfinite(x) else str(x)
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, complex):
        return [x.real, x.imag]
    return x


def _load(path, kinds):
    doc = read_document(path)
    if doc.kind not in kinds:
        raise DocumentError(f"{path}: expected {' or '.join(kinds)}, got {doc.kind}")
    return doc


def _basis(args, doc):
    return parse_basis(args.basis) if getattr(args, "basis", None) else doc.basis


def _emit(rep, args, value, basis):
    if getattr(args, "output", None):
        write_document(args.output, value, basis)
        rep.add("output", args.output, f"wrote {args.output}")
    else:
        rep.add("document", render(value, basis).strip(), None if rep.as_json else render(value, basis).rstrip())


def cmd_invert(args, rep):
    if args.continuous:
        doc = _load(args.input, ("celement",))
        F, basis = doc.value, _basis(args, doc)
        verdict = C.is_invertible_c(F, basis, tol=args.tol)
        rep.add("certificate", verdict.mode, f"certificate: {verdict.mode}")
        G = C.invert_plus_c(F, basis, tol=args.tol) if args.plus else C.invert_c(F, basis, tol=args.tol)
        om = C.omega_residual(F, G, basis)
        const, mass = C.cstar_residual(F, G)
        rep.add("omega_residual", om, f"sup |omega(F) omega(G) - I| = {om:.3e}")
        rep.add("residual", const + mass, f"residual |F*G - 1| = {const + mass:.3e}")
        _emit(rep, args, G, basis)
        return EXIT_OK
    doc = _load(args.input, ("qseries",))
    f, basis = doc.value, _basis(args, doc)
    others = f.norm() - float(qabs(f.coeff(0)))
    mode = "NeumannCertificate" if float(qabs(f.coeff(0))) > others else "CircleCheck"
    rep.add("certificate", mode, f"certificate: {mode}")
    if args.plus:
        g = D.invert_plus(f, basis, out_window=args.window, tol=args.tol)
    else:
        g = D.invert(f, basis, out_window=args.window, tol=args.tol)
    res = D.inverse_residual(f, g)
    rep.add("residual", res, f"residual |f*g - 1| = {res:.3e}")
    _emit(rep, args, g, basis)
    return EXIT_OK


def cmd_factor(args, rep):
    doc = _load(args.input, ("qseries",))
    f, basis = doc.value, _basis(args, doc)
    out = D.spectral_factorize_report(f, basis, tol=args.tol, n_section=args.section)
    rep.add("residual", out.residual, f"residual |f - f+ * f+^#| = {out.residual:.3e}")
    rep.add("section", out.section, f"section size {out.section}")
    _emit(rep, args, out.factor, basis)
    return EXIT_OK


def cmd_zeros(args, rep):
    doc = _load(args.input, ("qseries",))
    report = D.classify_zeros(doc.value, _basis(args, doc), tol=args.tol)
    entries = []
    for e in report:
        unit = None if e.unit is None else [float(x) for x in e.unit]
        entries.append({"theta": e.theta, "kind": e.kind, "unit": unit, "residual": e.residual})
        extra = "" if unit is None else f" I=({', '.join(f'{x:.6g}' for x in unit)})"
        if not rep.as_json:
            print(f"θ={e.theta:.4f} {e.kind}{extra}", file=rep.stream)
    if not entries and not rep.as_json:
        print("no zeros on the unit sphere", file=rep.stream)
    rep.data["zeros"] = entries
    return EXIT_OK


def cmd_toeplitz(args, rep):
    phi = _load(args.symbol, ("qseries",)).value
    xi = _load(args.vector, ("qvec",)).value
    n = args.n or len(xi)
    if len(xi) < n:
        xi = np.vstack([xi, np.zeros((n - len(xi), 4))])
    sec = T.ToeplitzSection(phi, n)
    out = T.toeplitz_apply(sec, xi[:n])
    rep.add("result", out, None)
    if not rep.as_json:
        for k, q in enumerate(out):
            print(f"{k:4d}  " + "  ".join(f"{x: .6g}" for x in q), file=rep.stream)
    if args.psi:
        psi = _load(args.psi, ("qseries",)).value
        res = T.toeplitz_product_test(phi, psi, n)
        rep.add(
            "product_test",
            {"is_toeplitz": res.is_toeplitz, "equals_T_star": res.equals_T_star,
             "defect": res.defect_norm, "window": res.window},
            f"T_phi T_psi Toeplitz: {res.is_toeplitz} (defect vs T_phi*psi {res.defect_norm:.3e} on {res.window} rows)",
        )
    if args.output:
        write_document(args.output, out)
    return EXIT_OK


def _resize(F, L):
    m = int(round(L / F.du)) + 1
    s1 = np.zeros(m, complex)
    s2 = np.zeros(m, complex)
    k = min(m, F.n)
    s1[:k], s2[:k] = F.samples1[:k], F.samples2[:k]
    return H.HardyElement(F.basis, F.du, s1, s2)


def cmd_wh(args, rep):
    Phi = _load(args.phi, ("celement",)).value
    F = _load(args.hardy, ("hardy",)).value
    if args.L is not None:
        F = _resize(F, args.L)
    out = H.wh_apply(Phi, F)
    rep.add("norm_in", H.hardy_norm(F), f"|F| = {H.hardy_norm(F):.6g}")
    rep.add("norm_out", H.hardy_norm(out), f"|T_Phi F| = {H.hardy_norm(out):.6g}")
    if args.psi:
        Psi = _load(args.psi, ("celement",)).value
        res = H.wh_product_test(Phi, Psi, F)
        rep.add(
            "product_test",
            {"is_wh": res.is_wh, "defect": res.defect, "margin": res.margin, "branch": res.branch},
            f"T_Phi T_Psi vs T_(Phi*Psi): defect {res.defect:.3e} on [0, {res.margin:g}] (branch: {res.branch})",
        )
    _emit(rep, args, out, F.basis)
    return EXIT_OK


def cmd_check(args, rep):
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("QWIENER_SEED", DEFAULT_SEED))
    rep.add("seed", seed, f"seed {seed}")
    results = checks.run_all(seed, args.cases)
    for r in results:
        if not rep.as_json:
            print(r.line(), file=rep.stream)
            for note in r.notes:
                print(f"    {note}", file=rep.stream)
    ok = sum(r.properties_ok for r in results)
    rep.data["suites"] = [r.to_dict() for r in results]
    rep.add("passed", ok, f"{ok}/{len(results)} suites passed")
    return EXIT_OK if ok == len(results) else EXIT_STRUCTURE


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable report on stdout")

    p = argparse.ArgumentParser(prog="qwiener", description="Quaternionic Wiener algebra toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("invert", parents=[common], help="invert a series or continuous element")
    s.add_argument("input")
    s.add_argument("-o", "--output")
    s.add_argument("--window", type=int, help="output window half-width (discrete)")
    s.add_argument("--tol", type=float, default=1e-8)
    s.add_argument("--basis", help='slice basis, e.g. "e1,e2" or "0,0,1:1,0,0"')
    s.add_argument("--continuous", action="store_true", help="input is a celement document")
    s.add_argument("--plus", action="store_true", help="invert inside the plus subalgebra")
    s.set_defaults(func=cmd_invert)

    s = sub.add_parser("factor", parents=[common], help="spectral factorization f = f+ * f+^#")
    s.add_argument("input")
    s.add_argument("-o", "--output")
    s.add_argument("--tol", type=float, default=1e-10)
    s.add_argument("--section", type=int, default=512, help="largest block Toeplitz section")
    s.add_argument("--basis")
    s.set_defaults(func=cmd_factor)

    s = sub.add_parser("zeros", parents=[common], help="classify zeros on the unit sphere")
    s.add_argument("input")
    s.add_argument("--tol", type=float, default=1e-6)
    s.add_argument("--basis")
    s.set_defaults(func=cmd_zeros)

    s = sub.add_parser("toeplitz", parents=[common], help="apply a Toeplitz section to a vector")
    s.add_argument("symbol")
    s.add_argument("vector")
    s.add_argument("--n", type=int, help="section size (default: vector length)")
    s.add_argument("--psi", help="second symbol: run the product test")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_toeplitz)

    s = sub.add_parser("wh", parents=[common], help="apply a Wiener-Hopf operator to a Hardy element")
    s.add_argument("phi")
    s.add_argument("hardy")
    s.add_argument("--L", type=float, help="window length [0, L]")
    s.add_argument("--psi", help="second symbol: run the product test")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_wh)

    s = sub.add_parser("check", parents=[common], help="run the seeded property suites")
    s.add_argument("--seed", type=int, help=f"default: $QWIENER_SEED or {DEFAULT_SEED}")
    s.add_argument("--cases", type=int, help="cap on random cases per suite")
    s.set_defaults(func=cmd_check)
    return p


def main(argv=None, stream=None):
    args = build_parser().parse_args(argv)
    rep = Reporter(args.json, stream)
    try:
        code = args.func(args, rep)
    except NotInvertibleError as exc:
        rep.add("error", str(exc), str(exc))
        rep.add("witness", exc.witness, f"witness: {exc.witness}")
        code = EXIT_NOT_INVERTIBLE
    except NotPositiveError as exc:
        rep.add("error", str(exc), str(exc))
        code = EXIT_NOT_POSITIVE
    except (StructureError, ClassificationError) as exc:
        rep.add("error", str(exc), f"structure error: {exc}")
        code = EXIT_STRUCTURE
    except (DocumentError, OSError, QWienerError, ValueError) as exc:
        rep.add("error", str(exc), f"error: {exc}")
        code = EXIT_IO
    return rep.finish(code)


if __name__ == "__main__":
    sys.exit(main())
