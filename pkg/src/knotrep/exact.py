"""Exact arithmetic in the cyclotomic field Q(x), x^2 + x + 1 = 0.

Elements are stored as ``u + v*x`` with rational ``u`` and ``v``.  The
type mixes freely with ``int`` and :class:`fractions.Fraction`, so code
written against the usual arithmetic operators runs unchanged in exact
mode and in floating mode.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

ROOT_MINUS = complex(-0.5, -math.sqrt(3) / 2)
ROOT_PLUS = complex(-0.5, math.sqrt(3) / 2)
ROOTS = {"minus": ROOT_MINUS, "plus": ROOT_PLUS}


class QOmega:
    """An element ``u + v*x`` of Q(x) with x a primitive cube root of unity."""

    __slots__ = ("u", "v")

    def __init__(self, u=0, v=0):
        self.u = Fraction(u)
        self.v = Fraction(v)

    @classmethod
    def x(cls) -> QOmega:
        return cls(0, 1)

    @staticmethod
    def _coerce(other):
        if isinstance(other, QOmega):
            return other
        if isinstance(other, (int, Rational)):
            return QOmega(other, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QOmega(self.u + o.u, self.v + o.v)

    __radd__ = __add__

    def __neg__(self):
        return QOmega(-self.u, -self.v)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QOmega(self.u - o.u, self.v - o.v)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        # x^2 = -1 - x
        a, b, c, d = self.u, self.v, o.u, o.v
        return QOmega(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """Field norm ``|z|^2 = u^2 - uv + v^2`` (the same for both roots)."""
        return self.u * self.u - self.u * self.v + self.v * self.v

    def conjugate(self) -> QOmega:
        # conj(x) = x^2 = -1 - x
        return QOmega(self.u - self.v, -self.v)

    def inverse(self) -> QOmega:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(x)")
        c = self.conjugate()
        return QOmega(c.u / n, c.v / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = QOmega(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return self.u == o.u and self.v == o.v

    def __hash__(self):
        if self.v == 0:
            return hash(self.u)
        return hash((self.u, self.v))

    def __bool__(self):
        return bool(self.u) or bool(self.v)

    def is_rational(self) -> bool:
        return self.v == 0

    def to_complex(self, root: complex | str = ROOT_MINUS) -> complex:
        if isinstance(root, str):
            root = ROOTS[root]
        return complex(self.u) + complex(self.v) * root

    def __complex__(self):
        raise TypeError(
            "QOmega needs an explicit root; use to_complex(root)")

    def __repr__(self):
        return f"QOmega({self.u}, {self.v})"

    def __str__(self):
        if self.v == 0:
            return str(self.u)
        if self.u == 0:
            return f"{self.v}*x"
        sign = "+" if self.v > 0 else "-"
        return f"{self.u} {sign} {abs(self.v)}*x"


def is_exact(value) -> bool:
    """True for ints, rationals and Q(x) elements."""
    return isinstance(value, (int, Rational, QOmega)) and not isinstance(value, bool)


def to_complex(value, root: complex | str = ROOT_MINUS) -> complex:
    if isinstance(value, QOmega):
        return value.to_complex(root)
    return complex(value)


def conj(value):
    if isinstance(value, QOmega):
        return value.conjugate()
    if isinstance(value, (int, Rational)):
        return value
    return value.conjugate()


def abs2(value):
    """Squared modulus, exact when possible."""
    if isinstance(value, QOmega):
        return value.norm()
    if isinstance(value, (int, Rational)):
        return value * value
    return abs(value) ** 2


def is_zero(value, tol: float = 0.0) -> bool:
    if is_exact(value):
        return value == 0
    return abs(value) <= tol


def reciprocal(value):
    """``1 / value`` without leaving exact arithmetic."""
    if isinstance(value, QOmega):
        return value.inverse()
    if isinstance(value, (int, Rational)):
        return Fraction(1) / value
    return 1 / value


def cube_root_check(root: complex) -> float:
    """Residual of x^2 + x + 1 at a floating root, for sanity checks."""
    return abs(root * root + root + 1)

