"""JSON encoding of diagrams, colourings and polynomials.

Scalars are written as ``[re, im]`` floats rounded to 15 significant
digits, or, for exact values, as ``{"u": [p, q], "v": [r, s]}`` meaning
``p/q + (r/s) x``.  A vector is ``[alpha, beta]`` of such scalars; the flat
form ``[re_a, im_a, re_b, im_b]`` is accepted on input.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .coloring import ArcColoring, ShadowColoring
from .diagram import OrientedDiagram, SpliceRecord
from .exact import QOmega, is_exact
from .laurent import LaurentPoly
from .parabolic import Mat2, ParabolicVector


class FormatError(ValueError):
    pass


def fmt_float(x: float) -> float:
    """15 significant digits, with ``-0.0`` folded to ``0.0``."""
    y = float(f"{float(x):.15g}")
    return 0.0 if y == 0 else y


def encode_scalar(c):
    if is_exact(c):
        q = c if isinstance(c, QOmega) else QOmega(c)
        return {"u": [q.u.numerator, q.u.denominator], "v": [q.v.numerator, q.v.denominator]}
    c = complex(c)
    return [fmt_float(c.real), fmt_float(c.imag)]


def decode_scalar(obj):
    if isinstance(obj, dict):
        try:
            u = Fraction(*obj.get("u", [0, 1]))
            v = Fraction(*obj.get("v", [0, 1]))
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"bad exact scalar {obj!r}") from exc
        if v == 0:
            return int(u) if u.denominator == 1 else u
        return QOmega(u, v)
    if isinstance(obj, bool):
        raise FormatError(f"bad scalar {obj!r}")
    if isinstance(obj, int):
        return obj
    if isinstance(obj, float):
        return complex(obj)
    if isinstance(obj, list) and len(obj) == 2 and all(isinstance(x, (int, float)) for x in obj):
        return complex(obj[0], obj[1])
    raise FormatError(f"bad scalar {obj!r}")


def encode_vector(v: ParabolicVector) -> list:
    return [encode_scalar(v.alpha), encode_scalar(v.beta)]


def decode_vector(obj) -> ParabolicVector:
    if not isinstance(obj, list):
        raise FormatError(f"bad vector {obj!r}")
    if len(obj) == 4 and all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in obj):
        alpha, beta = complex(obj[0], obj[1]), complex(obj[2], obj[3])
    elif len(obj) == 2:
        alpha, beta = decode_scalar(obj[0]), decode_scalar(obj[1])
    else:
        raise FormatError(f"bad vector {obj!r}")
    try:
        return ParabolicVector(alpha, beta)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def encode_matrix(m: Mat2) -> list:
    return [encode_scalar(x) for x in m]


def decode_matrix(obj) -> Mat2:
    if not isinstance(obj, list) or len(obj) != 4:
        raise FormatError("a matrix is a list of four scalars [m11, m12, m21, m22]")
    return Mat2(*(decode_scalar(x) for x in obj))


def encode_poly(p: LaurentPoly) -> dict:
    return {str(k): encode_scalar(c) for k, c in p.coeffs.items()}


def decode_poly(obj) -> LaurentPoly:
    return LaurentPoly({int(k): decode_scalar(c) for k, c in obj.items()})


def encode_coloring(coloring: ArcColoring | ShadowColoring, splice: SpliceRecord | None = None,
                    conjugator: Mat2 | None = None) -> dict:
    arc = coloring.arc if isinstance(coloring, ShadowColoring) else coloring
    out = {"diagram": arc.diagram.to_json(),
           "arc_colors": {str(k): encode_vector(v) for k, v in enumerate(arc.colors)}}
    if isinstance(coloring, ShadowColoring):
        out["region_colors"] = {str(k): encode_vector(v) for k, v in enumerate(coloring.regions)}
        out["p"] = encode_vector(coloring.p)
    if splice is not None:
        out["splice"] = splice.to_json()
    if conjugator is not None:
        out["conjugator"] = encode_matrix(conjugator)
    return out


def _indexed(obj, n: int, what: str) -> list:
    if isinstance(obj, list):
        items = dict(enumerate(obj))
    elif isinstance(obj, dict):
        try:
            items = {int(k): v for k, v in obj.items()}
        except ValueError as exc:
            raise FormatError(f"{what} keys must be integers") from exc
    else:
        raise FormatError(f"{what} must be a list or an object")
    if sorted(items) != list(range(n)):
        raise FormatError(f"{what} must cover ids 0..{n - 1}")
    return [decode_vector(items[k]) for k in range(n)]


def decode_coloring(data: dict):
    """Returns ``(ArcColoring or ShadowColoring, SpliceRecord or None)``."""
    if not isinstance(data, dict) or "diagram" not in data or "arc_colors" not in data:
        raise FormatError("colouring JSON needs 'diagram' and 'arc_colors'")
    diagram = OrientedDiagram.from_json(data["diagram"])
    arc = ArcColoring(diagram, _indexed(data["arc_colors"], diagram.n_arcs, "arc_colors"))
    splice = SpliceRecord.from_json(data["splice"]) if "splice" in data else None
    if "region_colors" in data and "p" in data:
        regions = _indexed(data["region_colors"], diagram.n_faces, "region_colors")
        return ShadowColoring(arc, regions, decode_vector(data["p"])), splice
    return arc, splice


def dumps(obj) -> str:
    """Deterministic JSON text (insertion-ordered keys, two-space indent)."""
    return json.dumps(obj, indent=2) + "\n"


__all__ = [
    "FormatError", "fmt_float", "encode_scalar", "decode_scalar", "encode_vector",
    "decode_vector", "encode_matrix", "decode_matrix", "encode_poly", "decode_poly",
    "encode_coloring", "decode_coloring", "dumps",
]
