"""Command-line front end.

Every subcommand reads JSON (or PD text for ``parse``) and writes JSON.
Exit codes: 0 success, 1 mathematical failure (verification, residual
or remainder out of tolerance), 2 input error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import fixtures
from .alexander import AlexanderError, alexander_polynomials, denominator_check
from .coloring import (ArcColoring, ColoringError, ShadowColoring, check_shadow,
                       connected_sum_coloring, factor_coloring, find_generic_shadow,
                       verify_arc_coloring)
from .diagram import DiagramError, OrientedDiagram, parse_pd, wirtinger
from .exact import ROOTS, to_complex
from .laurent import LaurentError, LaurentPoly, laurent_equal_up_to_unit
from .parabolic import same_up_to_sign
from .serialize import (FormatError, decode_coloring, decode_matrix, dumps, encode_coloring,
                        encode_poly, fmt_float)
from .volume import DegenerateError, complex_volume, cs_difference, solution_from_shadow

TOL_RESIDUAL = 1e-9
TOL_COEFF = 1e-9


class InputError(Exception):
    """Bad command-line input; maps to exit code 2."""


class MathFailure(Exception):
    """Checked property failed; maps to exit code 1."""

    def __init__(self, payload):
        super().__init__("mathematical check failed")
        self.payload = payload


def _num(x) -> float | None:
    return fmt_float(x) if math.isfinite(x) else None


def _positive(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return v


# --- input -----------------------------------------------------------------

def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _load_json(path: str):
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg})") from exc


def _example(args, name: str):
    x = None if args.mode == "exact" else ROOTS[args.root]
    return fixtures.shadow_coloring(name, x=x), None


def _inputs(args, count: int = 1) -> list:
    """Colourings from ``--input`` files and/or ``--example`` names."""
    try:
        out = [decode_coloring(_load_json(p)) for p in args.input or []]
    except (ColoringError, DiagramError) as exc:
        raise InputError(str(exc)) from exc
    out += [_example(args, n) for n in args.example or []]
    if len(out) != count:
        raise InputError(f"expected {count} input(s), got {len(out)}")
    for col, _ in out:
        if args.mode == "exact" and not col.is_exact():
            raise InputError("--mode exact needs an exact colouring")
    return out


def _arc(col) -> ArcColoring:
    return col.arc if isinstance(col, ShadowColoring) else col


def _floating(col, args):
    return col.to_complex(args.root) if col.is_exact() and args.mode == "floating" else col


# --- subcommands -------------------------------------------------------------

def cmd_parse(args):
    if args.pd:
        text = args.pd
    elif args.input:
        text = _read(args.input[0])
    elif args.example:
        return {"diagram": fixtures.builtin(args.example[0]).to_json()}
    else:
        raise InputError("parse needs --pd, --input or --example")
    d = parse_pd(text)
    return {"diagram": d.to_json(), "signs": [c.sign for c in d.crossings]}


def _diagram_from(args) -> OrientedDiagram:
    if args.example:
        return fixtures.builtin(args.example[0])
    if not args.input:
        raise InputError("need --input or --example")
    data = _load_json(args.input[0])
    if isinstance(data, dict) and "arc_colors" in data:
        return decode_coloring(data)[0].diagram
    if isinstance(data, dict) and "diagram" in data:
        data = data["diagram"]
    return OrientedDiagram.from_json(data)


def cmd_wirtinger(args):
    pres = wirtinger(_diagram_from(args))
    return {"generators": list(pres.generators),
            "relators": [str(r) for r in pres.relators],
            "letters": [[[g, e] for g, e in r.letters] for r in pres.relators]}


def cmd_verify(args):
    (col, _), = _inputs(args)
    col = _floating(col, args)
    report = verify_arc_coloring(_arc(col), args.tol_coeff)
    out = {"ok": report.ok,
           "crossings": [{"crossing": c.crossing, "ok": c.ok, "residual": _num(c.residual)}
                         for c in report.checks],
           "max_residual": _num(report.max_residual)}
    if isinstance(col, ShadowColoring):
        out["shadow"] = check_shadow(col)
        out["ok"] = out["ok"] and all(out["shadow"].values())
    if not out["ok"]:
        raise MathFailure(out)
    return out


def cmd_shadow(args):
    (col, _), = _inputs(args)
    shadow = find_generic_shadow(_arc(col))
    return encode_coloring(shadow)


def _shadow_of(col) -> ShadowColoring:
    return col if isinstance(col, ShadowColoring) else find_generic_shadow(col)


def cmd_volume(args):
    (col, _), = _inputs(args)
    shadow = _shadow_of(col)
    cv = complex_volume(shadow, root=args.root, tol=args.tol_residual)
    out = {"w0": [fmt_float(cv.w0.real), fmt_float(cv.w0.imag)], "vol": fmt_float(cv.vol),
           "cs": fmt_float(cv.cs), "max_residual": _num(cv.max_residual),
           "residual_ok": cv.residual_ok}
    if not cv.residual_ok:
        raise MathFailure(out)
    return out


def cmd_alexander(args):
    (col, _), = _inputs(args)
    arc = _arc(col)
    pres = wirtinger(arc.diagram)
    res = alexander_polynomials(pres, arc, j=args.remove_column, mode=args.mode,
                                root=args.root, tol=args.tol_coeff)
    return {"delta": encode_poly(res.delta), "delta_prime": encode_poly(res.delta_prime),
            "removed_column": res.removed_column,
            "division_remainder_norm": _num(res.remainder_norm)}


def _conjugator(text: str):
    if text == "canonical":
        return "canonical"
    try:
        return decode_matrix(json.loads(text))
    except (json.JSONDecodeError, FormatError) as exc:
        raise InputError(f"--conjugator must be 'canonical' or a JSON matrix: {exc}") from exc


def cmd_consum(args):
    if args.arc1 is None or args.arc2 is None:
        raise InputError("consum needs --arc1 and --arc2")
    (c1, _), (c2, _) = _inputs(args, 2)
    res = connected_sum_coloring(_arc(c1), args.arc1, _arc(c2), args.arc2,
                                 conjugator=_conjugator(args.conjugator))
    return encode_coloring(res.coloring, res.splice, res.conjugator)


def cmd_factor(args):
    (col, splice), = _inputs(args)
    if splice is None:
        raise InputError("factor needs a colouring with a 'splice' record")
    left, right = factor_coloring(_arc(col), splice)
    return {"first": encode_coloring(left), "second": encode_coloring(right)}


def example_checks(mode: str = "floating", tol_residual: float = TOL_RESIDUAL,
                   tol_coeff: float = TOL_COEFF) -> dict:
    """End-to-end reproduction of the worked 3_1 # 4_1 example."""
    checks = {}
    x = None if mode == "exact" else ROOTS["minus"]
    shadows = {n: fixtures.shadow_coloring(n, x=x) for n in fixtures.NAMES}

    expected = [fixtures.trefoil_regions(), fixtures.figure_eight_regions(x)]
    expected.append(fixtures.expected_regions("3_1#4_1", x))
    checks["region_colors"] = all(
        verify_arc_coloring(shadows[n].arc).ok
        and all(same_up_to_sign(a, b) for a, b in zip(shadows[n].regions, e))
        for n, e in zip(fixtures.NAMES, expected))

    w = [to_complex(v, "minus") for v in solution_from_shadow(shadows["3_1#4_1"])]
    target = [-3, -1, -1, 5, 6]
    xs = ROOTS["minus"]
    target += [-4 * xs + 1, -8 * xs - 2, -9 * xs + 3, -7 * xs + 3]
    checks["closed_form_solution"] = all(abs(a - b) < 1e-12 for a, b in zip(w, target))

    vols = {}
    for root in ROOTS:
        per_root = shadows if mode == "exact" else \
            {n: fixtures.shadow_coloring(n, x=ROOTS[root]) for n in fixtures.NAMES}
        vols[root] = {n: complex_volume(per_root[n], root=root, tol=tol_residual)
                      for n in fixtures.NAMES}
    minus = vols["minus"]
    checks["residuals"] = all(v.max_residual < tol_residual for r in vols.values()
                              for v in r.values())
    checks["trefoil_volume"] = abs(minus["3_1"].vol) < 1e-3 and \
        abs(minus["3_1"].cs - 1.6449) < 1e-3
    checks["figure_eight_volume"] = abs(minus["4_1"].vol - 2.0299) < 1e-3 and \
        abs(vols["plus"]["4_1"].vol + 2.0299) < 1e-3 and abs(minus["4_1"].cs) < 1e-6
    checks["additivity"] = all(
        abs(r["3_1#4_1"].vol - r["3_1"].vol - r["4_1"].vol) < 1e-9
        and cs_difference(r["3_1#4_1"].cs, r["3_1"].cs + r["4_1"].cs) < 1e-9
        for r in vols.values())

    t = LaurentPoly.t()
    one = LaurentPoly.const(1)
    d31 = one + t * t
    d41 = one - 4 * t + t * t
    want = {"3_1": d31, "4_1": d41, "3_1#4_1": (one - t) ** 2 * d31 * d41}
    alex = {}
    for n in fixtures.NAMES:
        arc = shadows[n].arc
        alex[n] = alexander_polynomials(wirtinger(arc.diagram), arc, mode=mode, tol=tol_coeff)
    checks["alexander"] = all(laurent_equal_up_to_unit(alex[n].delta, want[n], tol_coeff)
                              for n in fixtures.NAMES)
    checks["product_formula"] = laurent_equal_up_to_unit(
        alex["3_1#4_1"].delta, (one - t) ** 2 * alex["3_1"].delta * alex["4_1"].delta, tol_coeff) \
        and laurent_equal_up_to_unit(alex["3_1#4_1"].delta_prime,
                                     alex["3_1"].delta_prime * alex["4_1"].delta_prime, tol_coeff)
    checks["denominator"] = all(max(denominator_check(shadows[n].arc, mode=mode)) < tol_coeff
                                for n in fixtures.NAMES)
    return {k: "pass" if v else "fail" for k, v in checks.items()}


def cmd_check_example(args):
    checks = example_checks(args.mode, args.tol_residual, args.tol_coeff)
    out = {"checks": checks, "ok": all(v == "pass" for v in checks.values())}
    if not out["ok"]:
        raise MathFailure(out)
    return out


COMMANDS = {
    "parse": (cmd_parse, "parse a PD code into diagram JSON"),
    "wirtinger": (cmd_wirtinger, "Wirtinger presentation of a diagram"),
    "verify": (cmd_verify, "check an arc (and shadow) colouring"),
    "shadow": (cmd_shadow, "search a generic shadow colouring"),
    "volume": (cmd_volume, "complex volume of a shadow colouring"),
    "alexander": (cmd_alexander, "twisted Alexander polynomials"),
    "consum": (cmd_consum, "connected sum of two colourings"),
    "factor": (cmd_factor, "split a composite colouring into its summands"),
    "check-example": (cmd_check_example, "reproduce the worked 3_1 # 4_1 example"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="knotrep", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--input", action="append", metavar="PATH",
                       help="input file (repeat for consum)")
        p.add_argument("--example", action="append", choices=fixtures.NAMES,
                       help="use a built-in colouring instead of a file")
        p.add_argument("--mode", choices=("floating", "exact"), default="floating")
        p.add_argument("--root", choices=tuple(ROOTS), default="minus",
                       help="root of x^2 + x + 1 used to evaluate exact values")
        p.add_argument("--tol-residual", type=_positive, default=TOL_RESIDUAL)
        p.add_argument("--tol-coeff", type=_positive, default=TOL_COEFF)
        p.add_argument("--output", metavar="PATH", help="write JSON here instead of stdout")
        if name == "parse":
            p.add_argument("--pd", help="PD code given inline")
        if name == "alexander":
            p.add_argument("--remove-column", type=int, metavar="J",
                           help="generator column to delete (default: last)")
        if name == "consum":
            p.add_argument("--arc1", type=int, metavar="ID")
            p.add_argument("--arc2", type=int, metavar="ID")
            p.add_argument("--conjugator", default="canonical",
                           help="'canonical' or a JSON matrix [m11, m12, m21, m22]")
    return parser


def _emit(payload, args):
    text = dumps(payload)
    if getattr(args, "output", None):
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    func = COMMANDS[args.command][0]
    try:
        payload = func(args)
    except MathFailure as exc:
        _emit(exc.payload, args)
        return 1
    except (AlexanderError, LaurentError, DegenerateError, ColoringError) as exc:
        _emit({"error": str(exc)}, args)
        return 1
    except (InputError, FormatError, DiagramError, KeyError, ValueError) as exc:
        sys.stderr.write(f"knotrep {args.command}: {exc}\n")
        return 2
    _emit(payload, args)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
