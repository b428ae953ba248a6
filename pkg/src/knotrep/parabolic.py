"""Parabolic elements of PSL(2, C) as vectors in C^2 \\ {0} modulo sign.

A vector ``(alpha, beta)`` stands for the trace-2 matrix

    [[1 + alpha*beta, -alpha**2],
     [beta**2,        1 - alpha*beta]]

and the quandle operation ``a * b = b a b^-1`` becomes the matrix of ``b``
acting on the column vector ``a``.  Entries may be complex floats or exact
:class:`~knotrep.exact.QOmega` values; every routine here uses only field
operations so both modes share one code path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .exact import abs2, conj, is_exact, is_zero, reciprocal, to_complex

#: Default tolerance for sign-insensitive equality in floating mode.
EQ_TOL = 1e-9


class Mat2(NamedTuple):
    m11: object
    m12: object
    m21: object
    m22: object

    def __matmul__(self, other):
        if isinstance(other, Mat2):
            a, b, c, d = self
            e, f, g, h = other
            return Mat2(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
        if isinstance(other, ParabolicVector):
            return ParabolicVector(self.m11 * other.alpha + self.m12 * other.beta,
                                   self.m21 * other.alpha + self.m22 * other.beta)
        return NotImplemented

    def __add__(self, other):
        return Mat2(*(x + y for x, y in zip(self, other)))

    def __sub__(self, other):
        return Mat2(*(x - y for x, y in zip(self, other)))

    def scale(self, c) -> Mat2:
        return Mat2(*(c * x for x in self))

    def det(self):
        return self.m11 * self.m22 - self.m12 * self.m21

    def trace(self):
        return self.m11 + self.m22

    def inverse(self) -> Mat2:
        return self.adjugate().scale(reciprocal(self.det()))

    def adjugate(self) -> Mat2:
        """Inverse for determinant-one matrices, without division."""
        return Mat2(self.m22, -self.m12, -self.m21, self.m11)

    def is_exact(self) -> bool:
        return all(is_exact(x) for x in self)

    def to_complex(self, root="minus") -> Mat2:
        return Mat2(*(to_complex(x, root) for x in self))

    def frobenius2(self):
        return sum(abs2(x) for x in self)

    def allclose(self, other, tol=1e-12) -> bool:
        if self.is_exact() and other.is_exact():
            return tuple(self) == tuple(other)
        return all(abs(complex(x) - complex(y)) <= tol for x, y in zip(self, other))


IDENTITY = Mat2(1, 0, 0, 1)


@dataclass(frozen=True)
class ParabolicVector:
    """Representative ``(alpha, beta)`` of a parabolic element."""

    alpha: object
    beta: object

    def __post_init__(self):
        if is_zero(self.alpha) and is_zero(self.beta):
            raise ValueError("invalid parabolic vector: (0, 0)")

    def __iter__(self):
        yield self.alpha
        yield self.beta

    def __neg__(self):
        return ParabolicVector(-self.alpha, -self.beta)

    def scale(self, c) -> ParabolicVector:
        return ParabolicVector(c * self.alpha, c * self.beta)

    def is_exact(self) -> bool:
        return is_exact(self.alpha) and is_exact(self.beta)

    def to_complex(self, root="minus") -> ParabolicVector:
        return ParabolicVector(to_complex(self.alpha, root), to_complex(self.beta, root))

    def norm2(self):
        return abs2(self.alpha) + abs2(self.beta)

    def __mul__(self, other):
        if isinstance(other, ParabolicVector):
            return quandle_mul(self, other)
        return NotImplemented

    def __repr__(self):
        return f"ParabolicVector({self.alpha!r}, {self.beta!r})"


def to_matrix(v: ParabolicVector) -> Mat2:
    a, b = v.alpha, v.beta
    ab = a * b
    return Mat2(1 + ab, -(a * a), b * b, 1 - ab)


def to_matrix_inverse(v: ParabolicVector) -> Mat2:
    a, b = v.alpha, v.beta
    ab = a * b
    return Mat2(1 - ab, a * a, -(b * b), 1 + ab)


def quandle_mul(a: ParabolicVector, b: ParabolicVector) -> ParabolicVector:
    """``a * b``: the matrix of ``b`` applied to ``a``."""
    return to_matrix(b) @ a


def quandle_div(a: ParabolicVector, b: ParabolicVector) -> ParabolicVector:
    """``a *^-1 b``, the inverse of ``* b``."""
    return to_matrix_inverse(b) @ a


def hopf(v: ParabolicVector):
    """Fixed point ``alpha / beta`` on the Riemann sphere; ``inf`` when beta = 0."""
    if is_zero(v.beta):
        return float("inf")
    return v.alpha * reciprocal(v.beta)


def det2(a: ParabolicVector, b: ParabolicVector):
    return a.alpha * b.beta - b.alpha * a.beta


def chordal(a: ParabolicVector, b: ParabolicVector) -> float:
    """Chordal distance between the Hopf images of ``a`` and ``b``."""
    a, b = _as_complex(a), _as_complex(b)
    return abs(det2(a, b)) / (abs(a.alpha) ** 2 + abs(a.beta) ** 2) ** 0.5 \
        / (abs(b.alpha) ** 2 + abs(b.beta) ** 2) ** 0.5


def hopf_separated(a: ParabolicVector, b: ParabolicVector, tol: float = 1e-9) -> bool:
    """``h(a) != h(b)``; exact comparison when both vectors are exact."""
    if a.is_exact() and b.is_exact():
        return det2(a, b) != 0
    return chordal(a, b) > tol


def same_up_to_sign(a: ParabolicVector, b: ParabolicVector, tol: float = EQ_TOL) -> bool:
    if a.is_exact() and b.is_exact():
        return (a.alpha == b.alpha and a.beta == b.beta) or \
            (a.alpha == -b.alpha and a.beta == -b.beta)
    a, b = _as_complex(a), _as_complex(b)
    scale = max(1.0, abs(b.alpha), abs(b.beta))
    plus = max(abs(a.alpha - b.alpha), abs(a.beta - b.beta))
    minus = max(abs(a.alpha + b.alpha), abs(a.beta + b.beta))
    return min(plus, minus) <= tol * scale


def sign_distance(a: ParabolicVector, b: ParabolicVector) -> float:
    """Entrywise distance between ``a`` and the nearer of ``+b``/``-b``."""
    a, b = _as_complex(a), _as_complex(b)
    plus = max(abs(a.alpha - b.alpha), abs(a.beta - b.beta))
    minus = max(abs(a.alpha + b.alpha), abs(a.beta + b.beta))
    return min(plus, minus)


def _as_complex(v: ParabolicVector) -> ParabolicVector:
    if v.is_exact() and not all(_is_plain(x) for x in v):
        raise TypeError("exact Q(x) vector needs an explicit root before "
                        "floating comparison; call to_complex(root)")
    return ParabolicVector(complex(v.alpha), complex(v.beta))


def _is_plain(x) -> bool:
    from .exact import QOmega
    return not isinstance(x, QOmega) or x.is_rational()


def _complement(v: ParabolicVector) -> ParabolicVector:
    """Some ``u`` with ``det2(v, u) = 1``."""
    a, b = v.alpha, v.beta
    # pick the larger pivot in floating mode for conditioning
    if v.is_exact():
        use_a = a != 0
    else:
        use_a = abs(complex(a)) >= abs(complex(b))
    if use_a:
        return ParabolicVector(0, reciprocal(a))
    return ParabolicVector(-reciprocal(b), 0)


def _basis(v: ParabolicVector) -> Mat2:
    u = _complement(v)
    return Mat2(v.alpha, u.alpha, v.beta, u.beta)


@dataclass(frozen=True)
class ConjugatorFamily:
    """All ``g`` in SL(2, C) with ``g . source = +-target``.

    Members are ``sign * base @ (I + s * N)`` where ``N`` is the nilpotent
    part of the source matrix, ``s`` ranges over C and ``sign`` over +-1.
    """

    source: ParabolicVector
    target: ParabolicVector
    base: Mat2
    nilpotent: Mat2

    def member(self, s, sign: int = 1) -> Mat2:
        g = self.base @ (IDENTITY + self.nilpotent.scale(s))
        return g.scale(sign) if sign != 1 else g


def conjugators(target: ParabolicVector, source: ParabolicVector):
    """Return ``(family, canonical)`` for conjugating ``source`` onto ``target``.

    ``g @ to_matrix(source) @ g^-1 == to_matrix(target)`` for every member.
    The canonical member minimizes ``||g - I||_F`` over the family (the
    minimizer in the continuous parameter is unique; between the two signs
    the smaller norm wins, ``+`` on ties).
    """
    # g M_v g^-1 = M_{g v} for g in SL(2): conjugation is the linear action
    base = _basis(target) @ _basis(source).adjugate()
    m = to_matrix(source)
    nil = Mat2(m.m11 - 1, m.m12, m.m21, m.m22 - 1)
    family = ConjugatorFamily(source, target, base, nil)

    best = None
    for sign in (1, -1):
        a = base.scale(sign) - IDENTITY
        b = (base @ nil).scale(sign)
        bb = sum(abs2(x) for x in b)
        ba = sum(conj(x) * y for x, y in zip(b, a))
        s = -ba / bb
        g = family.member(s, sign)
        cost = (g - IDENTITY).frobenius2()
        if not is_exact(cost):
            cost = float(cost.real) if isinstance(cost, complex) else float(cost)
        if best is None or cost < best[0]:
            best = (cost, g)
    return family, best[1]


def apply(g: Mat2, v: ParabolicVector) -> ParabolicVector:
    return g @ v


def random_vector(rng, scale: float = 1.0) -> ParabolicVector:
    """A random complex representative, components ~ N(0, scale)."""
    z = rng.normal(size=4) * scale
    return ParabolicVector(complex(z[0], z[1]), complex(z[2], z[3]))


def matrix_close_up_to_sign(a: Mat2, b: Mat2, tol: float) -> bool:
    plus = max(abs(complex(x) - complex(y)) for x, y in zip(a, b))
    minus = max(abs(complex(x) + complex(y)) for x, y in zip(a, b))
    return min(plus, minus) < tol


__all__ = [
    "Mat2", "IDENTITY", "ParabolicVector", "ConjugatorFamily", "to_matrix",
    "to_matrix_inverse", "quandle_mul", "quandle_div", "hopf", "det2",
    "chordal", "hopf_separated", "same_up_to_sign", "sign_distance",
    "conjugators", "apply",
]
