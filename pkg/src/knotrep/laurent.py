"""Laurent polynomials in ``t`` and their determinants.

Coefficients are complex floats (floating mode) or exact ``int`` /
``Fraction`` / :class:`~knotrep.exact.QOmega` values (exact mode).  In
floating mode coefficients below ``ZERO_TOL * max(1, max |c|)`` are dropped.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .exact import QOmega, is_exact, reciprocal, to_complex

ZERO_TOL = 1e-9
SAMPLE_RADIUS = 0.8
OVERSAMPLE = 4
FIT_TOL = 1e-8


class LaurentError(ArithmeticError):
    pass


class LaurentPoly:
    """Finite sum ``sum_k c_k t^k`` over integer exponents ``k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        coeffs = dict(coeffs or {})
        out = {}
        exact = all(is_exact(c) for c in coeffs.values())
        if exact:
            out = {int(k): c for k, c in coeffs.items() if c != 0}
        else:
            vals = {int(k): complex(to_complex(c)) for k, c in coeffs.items()}
            scale = max([1.0] + [abs(c) for c in vals.values()])
            out = {k: c for k, c in vals.items() if abs(c) > ZERO_TOL * scale}
        self.coeffs = dict(sorted(out.items()))

    @classmethod
    def const(cls, c) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, c, k: int) -> LaurentPoly:
        return cls({k: c})

    @classmethod
    def t(cls) -> LaurentPoly:
        return cls({1: 1})

    @classmethod
    def from_list(cls, coeffs, low: int = 0) -> LaurentPoly:
        """``coeffs[i]`` is the coefficient of ``t**(low + i)``."""
        return cls({low + i: c for i, c in enumerate(coeffs)})

    @staticmethod
    def _lift(other):
        if isinstance(other, LaurentPoly):
            return other
        return LaurentPoly.const(other)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_exact(self) -> bool:
        return all(is_exact(c) for c in self.coeffs.values())

    @property
    def min_degree(self) -> int:
        if not self.coeffs:
            raise LaurentError("zero polynomial has no degree")
        return next(iter(self.coeffs))

    @property
    def max_degree(self) -> int:
        if not self.coeffs:
            raise LaurentError("zero polynomial has no degree")
        return next(reversed(self.coeffs))

    def __getitem__(self, k: int):
        return self.coeffs.get(k, 0)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return LaurentPoly({k: c * other for k, c in self.coeffs.items()})
        out = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                out[i + j] = out.get(i + j, 0) + a * b
        return LaurentPoly(out)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n: int):
        out = LaurentPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def shift(self, p: int) -> LaurentPoly:
        """Multiply by ``t**p``."""
        return LaurentPoly({k + p: c for k, c in self.coeffs.items()})

    def __call__(self, t):
        return sum((c * t ** k for k, c in self.coeffs.items()), 0)

    def to_complex(self, root="minus") -> LaurentPoly:
        return LaurentPoly({k: to_complex(c, root) for k, c in self.coeffs.items()})

    def distance(self, other) -> float:
        """Max coefficient difference (complex; exact values go through ``root=minus``)."""
        other = self._lift(other)
        keys = set(self.coeffs) | set(other.coeffs)
        return max([0.0] + [abs(to_complex(self[k]) - to_complex(other[k])) for k in keys])

    def divmod(self, divisor: LaurentPoly):
        """Long division by a polynomial with an invertible leading coefficient."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly(), LaurentPoly()
        lo = divisor.min_degree
        d = divisor.shift(-lo)
        dn = d.max_degree
        lead = reciprocal(d[dn])
        rem = dict(self.coeffs)
        quot = {}
        exact = self.is_exact() and d.is_exact()
        top = max(rem)
        low = min(rem)
        for k in range(top, low + dn - 1, -1):
            c = rem.get(k, 0)
            if c == 0:
                continue
            q = c * lead
            quot[k - dn] = q
            for j, dc in d.coeffs.items():
                rem[k - dn + j] = rem.get(k - dn + j, 0) - q * dc
            if not exact:
                rem[k] = 0
        return LaurentPoly(quot).shift(-lo), LaurentPoly(rem)

    def canonical(self) -> LaurentPoly:
        """Lowest degree shifted to 0 and the lowest coefficient's sign fixed."""
        if self.is_zero():
            return self
        p = self.shift(-self.min_degree)
        return -p if _negative(p[0]) else p

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, complex, float, QOmega)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    def __repr__(self):
        return f"LaurentPoly({self.coeffs!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in self.coeffs.items():
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def _negative(c) -> bool:
    if isinstance(c, QOmega):
        return c.u < 0 or (c.u == 0 and c.v < 0)
    if is_exact(c):
        return c < 0
    c = complex(c)
    if abs(c.real) > ZERO_TOL * max(1.0, abs(c)):
        return c.real < 0
    return c.imag < 0


def laurent_equal_up_to_unit(a: LaurentPoly, b: LaurentPoly, tol: float = ZERO_TOL) -> bool:
    """``a == +-t^p b`` for some integer ``p``; zero tolerance when both are exact."""
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    a = a.shift(-a.min_degree)
    b = b.shift(-b.min_degree)
    if a.is_exact() and b.is_exact():
        return a == b or a == -b
    return min(a.distance(b), a.distance(-b)) < tol


ONE_MINUS_T_SQ = LaurentPoly({0: 1, 1: -2, 2: 1})


def _window(m):
    n = len(m)
    los, his = [], []
    for row in m:
        for e in row:
            if not e.is_zero():
                los.append(e.min_degree)
                his.append(e.max_degree)
    if not los:
        return 0, 0
    lo, hi = min(los), max(his)
    return n * lo, n * hi


def _check_square(m):
    n = len(m)
    if any(len(row) != n for row in m):
        raise LaurentError("determinant needs a square matrix")
    return n


def det_laurent(m, exact: bool | None = None) -> LaurentPoly:
    """Determinant of a square matrix of :class:`LaurentPoly` entries.

    Evaluation at sample points, then interpolation inside the degree
    window ``[n * mindeg, n * maxdeg]``.  Floating mode samples a circle of
    radius ``SAMPLE_RADIUS`` and fits by least squares; exact mode samples
    integers and interpolates exactly.
    """
    n = _check_square(m)
    if n == 0:
        return LaurentPoly.const(1)
    if exact is None:
        exact = all(e.is_exact() for row in m for e in row)
    lo, hi = _window(m)
    size = hi - lo + 1
    if exact:
        xs = list(range(2, 2 + size))
        ys = [_exact_det([[e(Fraction(x)) for e in row] for row in m]) * Fraction(x) ** (-lo)
              for x in xs]
        return LaurentPoly.from_list(_newton_coefficients(xs, ys), lo)
    count = size + OVERSAMPLE
    ts = SAMPLE_RADIUS * np.exp(2j * math.pi * np.arange(count) / count)
    dense = [[_to_dense(e) for e in row] for row in m]
    vals = np.array([np.linalg.det(np.array([[f(t) for f in row] for row in dense]))
                     for t in ts]) * ts ** (-lo)
    vander = np.vander(ts, size, increasing=True)
    coef, *_ = np.linalg.lstsq(vander, vals, rcond=None)
    fit = np.max(np.abs(vander @ coef - vals)) / max(1.0, np.max(np.abs(vals)))
    if fit > FIT_TOL:
        raise LaurentError(f"interpolation residual {fit:.3e} exceeds {FIT_TOL}")
    return LaurentPoly.from_list(coef.tolist(), lo)


def _to_dense(e: LaurentPoly):
    items = [(k, complex(to_complex(c))) for k, c in e.coeffs.items()]
    return lambda t: sum((c * t ** k for k, c in items), 0j)


def _exact_det(rows):
    """Gaussian elimination over an exact field."""
    a = [list(r) for r in rows]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        p = a[col][col]
        det = det * p
        inv = reciprocal(p)
        for r in range(col + 1, n):
            f = a[r][col] * inv
            if f != 0:
                for c in range(col, n):
                    a[r][c] = a[r][c] - f * a[col][c]
    return det


def _newton_coefficients(xs, ys):
    """Monomial coefficients of the interpolating polynomial, exactly."""
    n = len(xs)
    dd = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) * reciprocal(Fraction(xs[i] - xs[i - j]))
    coef = [0] * n
    coef[0] = dd[n - 1]
    # Horner on the Newton form, from the innermost term outward
    for i in range(n - 2, -1, -1):
        new = [0] * n
        for k in range(n - 1):
            new[k + 1] = coef[k]
        for k in range(n):
            new[k] = new[k] - xs[i] * coef[k]
        new[0] = new[0] + dd[i]
        coef = new
    return coef


def det_cofactor(m) -> LaurentPoly:
    """Laplace expansion along the first row (test oracle, O(n!))."""
    n = _check_square(m)
    if n == 0:
        return LaurentPoly.const(1)
    if n == 1:
        return m[0][0]
    total = LaurentPoly()
    for j in range(n):
        if m[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total
