"""Dilogarithm potential of a diagram and the complex volume of a colouring.

Every crossing contributes (``s`` = crossing sign)::

    s * ( -Li2(c/b) - Li2(c/d) + Li2(a c / (b d)) + Li2(b/a) + Li2(d/a)
          - pi^2/6 + log(b/a) log(d/a) )

in the region variables around it.  At the point ``w_k = det(p, s_k)``
built from a shadow colouring, every ``w_k dW/dw_k`` is an integer multiple
of ``2 pi i``, and ``W_0 = W - sum_k (w_k dW/dw_k) log w_k`` equals
``i (vol + i cs)`` modulo ``pi^2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernels
from .coloring import ColoringError, ShadowColoring, check_shadow
from .diagram import OrientedDiagram
from .parabolic import det2

PI2 = math.pi ** 2
TWO_PI_I = 2j * math.pi

RESIDUAL_TOL = 1e-9
INTEGRALITY_TOL = 1e-9
BRANCH_TOL = 1e-12


class DegenerateError(ValueError):
    """Region variables hit a zero or a dilogarithm branch point."""


def dilog(z) -> complex:
    """Principal-branch ``Li2(z) = -int_0^z log(1 - t) / t dt``."""
    return kernels.li2(complex(z))


def crossing_potential(sign: int, wa, wb, wc, wd) -> complex:
    """Potential of one crossing from its four quadrant variables."""
    if any(w == 0 for w in (wa, wb, wc, wd)):
        raise DegenerateError("region variables must be nonzero")
    wa, wb, wc, wd = (complex(w) for w in (wa, wb, wc, wd))
    log = kernels.clog
    val = (-dilog(wc / wb) - dilog(wc / wd) + dilog(wa * wc / (wb * wd))
           + dilog(wb / wa) + dilog(wd / wa) - PI2 / 6
           + log(wb / wa) * log(wd / wa))
    return val if sign > 0 else -val


@dataclass(frozen=True)
class PotentialTables:
    """Flattened crossing terms fed to the kernels.

    Dilogarithm terms are ``coef * Li2(prod w[faces]**exps)`` with repeated
    faces merged; log-product terms are ``coef * log(w_b/w_a) log(w_d/w_a)``.
    """

    coef: np.ndarray
    faces: np.ndarray
    exps: np.ndarray
    lp_coef: np.ndarray
    lp_idx: np.ndarray
    const: float
    n_faces: int


def _merge(pairs):
    acc = {}
    for f, e in pairs:
        acc[f] = acc.get(f, 0) + e
    items = [(f, e) for f, e in acc.items() if e != 0]
    items += [(0, 0)] * (4 - len(items))
    return items


@lru_cache(maxsize=64)
def potential_tables(diagram: OrientedDiagram) -> PotentialTables:
    coef, faces, exps, lp_coef, lp_idx = [], [], [], [], []
    const = 0.0
    for c in diagram.crossings:
        a, b, cc, d = c.quadrants
        s = float(c.sign)
        for k, pairs in ((-s, [(cc, 1), (b, -1)]),
                         (-s, [(cc, 1), (d, -1)]),
                         (s, [(a, 1), (cc, 1), (b, -1), (d, -1)]),
                         (s, [(b, 1), (a, -1)]),
                         (s, [(d, 1), (a, -1)])):
            merged = _merge(pairs)
            coef.append(k)
            faces.append([f for f, _ in merged])
            exps.append([e for _, e in merged])
        lp_coef.append(s)
        lp_idx.append([a, b, d])
        const -= s * PI2 / 6
    return PotentialTables(np.array(coef), np.array(faces, dtype=np.int64),
                           np.array(exps, dtype=np.int64), np.array(lp_coef),
                           np.array(lp_idx, dtype=np.int64), const, diagram.n_faces)


def _as_array(diagram: OrientedDiagram, w) -> np.ndarray:
    if isinstance(w, dict):
        missing = [f for f in range(diagram.n_faces) if f not in w]
        if missing:
            raise DegenerateError(f"missing region variables for faces {missing}")
        w = [w[f] for f in range(diagram.n_faces)]
    if len(w) != diagram.n_faces:
        raise DegenerateError(f"need {diagram.n_faces} region variables, got {len(w)}")
    arr = np.array([complex(x) for x in w], dtype=np.complex128)
    if np.any(arr == 0):
        raise DegenerateError("region variables must be nonzero")
    return arr


def solution_degeneracy(diagram: OrientedDiagram, w, tol: float = BRANCH_TOL):
    """Reason ``w`` is unusable (zero entry, Li2 argument at 1), else ``None``."""
    try:
        arr = _as_array(diagram, w)
    except (DegenerateError, TypeError):
        return "zero or missing region variable"
    t = potential_tables(diagram)
    for fs, es in zip(t.faces, t.exps):
        if not es.any():
            continue
        u = np.prod(arr[fs] ** es.astype(float))
        if abs(1 - u) < tol:
            return "dilogarithm argument at the branch point 1"
    return None


def potential(diagram: OrientedDiagram, w) -> complex:
    """``W(w)``: the sum of crossing potentials."""
    arr = _as_array(diagram, w)
    t = potential_tables(diagram)
    return kernels.potential(arr, t.coef, t.faces, t.exps, t.lp_coef, t.lp_idx, t.const)


def potential_gradient(diagram: OrientedDiagram, w) -> np.ndarray:
    """``g_k = w_k dW/dw_k`` for every face, analytically."""
    reason = solution_degeneracy(diagram, w)
    if reason is not None:
        raise DegenerateError(reason)
    arr = _as_array(diagram, w)
    t = potential_tables(diagram)
    return np.array(kernels.log_gradient(arr, t.coef, t.faces, t.exps, t.lp_coef,
                                         t.lp_idx, t.n_faces), dtype=np.complex128)


def finite_difference_gradient(diagram: OrientedDiagram, w, rel_step: float = 1e-6) -> np.ndarray:
    """Central differences of ``W`` in ``w_k`` times ``w_k``."""
    arr = _as_array(diagram, w)
    out = np.empty(len(arr), dtype=np.complex128)
    for k in range(len(arr)):
        h = rel_step * abs(arr[k])
        plus, minus = arr.copy(), arr.copy()
        plus[k] += h
        minus[k] -= h
        out[k] = arr[k] * (potential(diagram, plus) - potential(diagram, minus)) / (2 * h)
    return out


def hyperbolicity_residuals(diagram: OrientedDiagram, w) -> np.ndarray:
    """``|exp(g_k) - 1|`` per face."""
    g = potential_gradient(diagram, w)
    return np.abs(np.exp(g) - 1)


def solution_from_shadow(shadow: ShadowColoring) -> list:
    """``w_k = det(p, s_k)``, exact when the shadow colouring is exact."""
    w = [det2(shadow.p, s) for s in shadow.regions]
    if any(x == 0 for x in w):
        raise DegenerateError("det(p, s_k) = 0: p violates the genericity condition")
    return w


@dataclass(frozen=True)
class W0Result:
    value: complex
    gradient: np.ndarray
    max_residual: float
    max_integrality_error: float
    flagged: bool


def w0_value(diagram: OrientedDiagram, w, tol: float = RESIDUAL_TOL) -> W0Result:
    """``W_0 = W - sum_k g_k log w_k`` with principal logarithms.

    Off a solution the value is still returned, with ``flagged`` set.
    """
    arr = _as_array(diagram, w)
    g = potential_gradient(diagram, arr)
    residual = float(np.max(np.abs(np.exp(g) - 1)))
    m = g / TWO_PI_I
    integrality = float(np.max(np.abs(m - np.round(m.real))))
    val = potential(diagram, arr) - sum(gk * kernels.clog(wk) for gk, wk in zip(g, arr))
    flagged = residual >= tol or integrality >= INTEGRALITY_TOL
    return W0Result(complex(val), g, residual, integrality, flagged)


def reduce_cs(cs: float) -> float:
    """Reduce into ``(-pi^2/2, pi^2/2]``."""
    r = cs - PI2 * math.floor(cs / PI2 + 0.5)
    if r <= -PI2 / 2:
        r += PI2
    elif r > PI2 / 2:
        r -= PI2
    return r


def cs_difference(a: float, b: float) -> float:
    """Distance between two Chern-Simons values modulo ``pi^2``."""
    return abs(reduce_cs(a - b))


@dataclass(frozen=True)
class ComplexVolume:
    vol: float
    cs: float
    w0: complex = 0j
    max_residual: float = 0.0
    residual_ok: bool = True

    def __post_init__(self):
        if not -PI2 / 2 < self.cs <= PI2 / 2:
            raise ValueError("cs outside its reduction window")

    @property
    def value(self) -> complex:
        return complex(self.vol, self.cs)


def complex_volume(shadow: ShadowColoring, root="minus", tol: float = RESIDUAL_TOL,
                   check: bool = True) -> ComplexVolume:
    """``vol + i cs`` from ``W_0`` at the closed-form solution."""
    if check:
        report = check_shadow(shadow if not _needs_root(shadow) else shadow.to_complex(root))
        if not all(report.values()):
            bad = [k for k, v in report.items() if not v]
            raise ColoringError(f"shadow colouring fails: {', '.join(bad)}")
    w = solution_from_shadow(shadow)
    if _needs_root(shadow):
        from .exact import to_complex
        w = [to_complex(x, root) for x in w]
    res = w0_value(shadow.diagram, w, tol)
    w0 = res.value
    return ComplexVolume(vol=w0.imag, cs=reduce_cs(-w0.real), w0=w0,
                         max_residual=res.max_residual, residual_ok=not res.flagged)


def _needs_root(shadow: ShadowColoring) -> bool:
    from .exact import QOmega
    vals = [x for v in (*shadow.arc.colors, *shadow.regions, shadow.p) for x in v]
    return any(isinstance(x, QOmega) and not x.is_rational() for x in vals)


__all__ = [
    "dilog", "crossing_potential", "potential", "potential_gradient",
    "finite_difference_gradient", "hyperbolicity_residuals", "solution_from_shadow",
    "w0_value", "complex_volume", "ComplexVolume", "reduce_cs", "cs_difference",
    "DegenerateError",
]
