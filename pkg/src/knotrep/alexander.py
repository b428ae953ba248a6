"""Twisted Alexander polynomials of arc-coloured diagrams.

A lift sends generator ``j`` to the matrix of colour ``a_j`` and the
abelianisation sends every generator to ``t``, so

    Phi(w) = t^(exponent sum of w) * product of to_matrix(a_j)^(+-1)

and ``Phi`` extends linearly to the group ring.  With ``M`` the Alexander
matrix ``Phi(d r_k / d alpha_j)`` of a presentation with one relator
dropped, and ``M_j`` the square matrix obtained by deleting block column
``j``::

    Delta  = det M_j / det Phi(1 - alpha_j) = det M_j / (1 - t)^2
    Delta' = det M_j

Both are defined up to ``+-t^p``; results are returned in canonical form
(lowest degree 0, lowest coefficient "positive", see
:meth:`LaurentPoly.canonical`).
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import ArcColoring
from .diagram import Presentation, wirtinger
from .exact import to_complex
from .fox import GroupRingElement, GroupWord, fox_derivative
from .laurent import (ONE_MINUS_T_SQ, ZERO_TOL, LaurentError, LaurentPoly,
                      det_laurent, laurent_equal_up_to_unit)
from .parabolic import IDENTITY, Mat2, ParabolicVector, to_matrix, to_matrix_inverse


class AlexanderError(ValueError):
    pass


class LaurentMat2:
    """2x2 matrix over Laurent polynomials."""

    __slots__ = ("entries",)

    def __init__(self, m11, m12, m21, m22):
        self.entries = tuple(e if isinstance(e, LaurentPoly) else LaurentPoly.const(e)
                             for e in (m11, m12, m21, m22))

    @classmethod
    def zero(cls) -> LaurentMat2:
        return cls(0, 0, 0, 0)

    @classmethod
    def from_mat2(cls, m: Mat2, power: int = 0) -> LaurentMat2:
        return cls(*(LaurentPoly.monomial(x, power) for x in m))

    def __add__(self, other):
        return LaurentMat2(*(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other):
        return LaurentMat2(*(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self):
        return LaurentMat2(*(-a for a in self.entries))

    def __matmul__(self, other):
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return LaurentMat2(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def det(self) -> LaurentPoly:
        a, b, c, d = self.entries
        return a * d - b * c

    def rows(self):
        return [list(self.entries[:2]), list(self.entries[2:])]

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def distance(self, other) -> float:
        return max(a.distance(b) for a, b in zip(self.entries, other.entries))

    def __eq__(self, other):
        return isinstance(other, LaurentMat2) and self.entries == other.entries

    __hash__ = None

    def __repr__(self):
        return "LaurentMat2(" + ", ".join(str(e) for e in self.entries) + ")"


def _colors(lift) -> list:
    if isinstance(lift, ArcColoring):
        return list(lift.colors)
    return [v if isinstance(v, ParabolicVector) else ParabolicVector(*v) for v in lift]


def word_matrix(w: GroupWord, colors) -> Mat2:
    """Product of ``to_matrix(a_j)^(+-1)`` along ``w``."""
    m = IDENTITY
    for g, e in w.letters:
        if g >= len(colors):
            raise AlexanderError(f"generator {g + 1} has no colour")
        m = m @ (to_matrix(colors[g]) if e > 0 else to_matrix_inverse(colors[g]))
    return m


def phi(e, lift) -> LaurentMat2:
    """``Phi`` of a group-ring element (or a single word).

    ``lift`` is an :class:`ArcColoring` or any sequence of colours indexed
    by generator.
    """
    colors = _colors(lift)
    if isinstance(e, GroupWord):
        e = GroupRingElement.word(e)
    out = LaurentMat2.zero()
    for w, c in e.terms.items():
        m = word_matrix(w, colors)
        out = out + LaurentMat2.from_mat2(m.scale(c), w.exponent_sum())
    return out


def phi_one_minus(j: int, lift) -> LaurentMat2:
    """``Phi(1 - alpha_j)``."""
    e = GroupRingElement.one() - GroupRingElement.word(GroupWord.gen(j))
    return phi(e, lift)


@dataclass(frozen=True)
class AlexanderMatrix:
    """Blocks ``Phi(d r_k / d alpha_j)``, one row per kept relator."""

    blocks: tuple
    generators: tuple
    relators: tuple

    @property
    def shape(self) -> tuple:
        return len(self.blocks), len(self.generators)

    def scalar(self, remove_column: int | None = None) -> list:
        """Expand to a matrix of Laurent polynomials, optionally deleting a block column."""
        out = []
        for row in self.blocks:
            top, bottom = [], []
            for j, b in enumerate(row):
                if j == remove_column:
                    continue
                r = b.rows()
                top += r[0]
                bottom += r[1]
            out += [top, bottom]
        return out

    def minor(self, j: int) -> list:
        if not 0 <= j < len(self.generators):
            raise AlexanderError(f"column {j} out of range")
        return self.scalar(remove_column=j)


def _kept_relators(pres: Presentation, n: int) -> tuple:
    rel = tuple(pres.relators)
    if len(rel) == n:
        rel = rel[:-1]
    if len(rel) != n - 1:
        raise AlexanderError(
            f"need {n - 1} relators for {n} generators (or {n}, the last is dropped), got {len(rel)}")
    return rel


def alexander_matrix(pres: Presentation, lift) -> AlexanderMatrix:
    """Alexander matrix of ``pres`` with one relator dropped.

    A presentation with as many relators as generators has its last
    relator dropped first.
    """
    colors = _colors(lift)
    n = len(pres.generators)
    if len(colors) != n:
        raise AlexanderError(f"{n} generators but {len(colors)} colours")
    rel = _kept_relators(pres, n)
    blocks = tuple(tuple(phi(fox_derivative(r, j), colors) for j in range(n)) for r in rel)
    return AlexanderMatrix(blocks, tuple(pres.generators), rel)


def _resolve_mode(lift, mode: str, root):
    colors = _colors(lift)
    if mode == "exact":
        if not all(v.is_exact() for v in colors):
            raise AlexanderError("exact mode needs an exact colouring")
        return colors
    if mode != "floating":
        raise AlexanderError(f"unknown mode {mode!r}")
    return [v.to_complex(root) for v in colors]


@dataclass(frozen=True)
class AlexanderResult:
    delta: LaurentPoly
    delta_prime: LaurentPoly
    removed_column: int
    remainder_norm: float


def alexander_polynomials(pres: Presentation, lift, j: int | None = None, mode="floating",
                          root="minus", tol: float = ZERO_TOL) -> AlexanderResult:
    """``Delta`` and ``Delta'`` together, with the division remainder."""
    colors = _resolve_mode(lift, mode, root)
    m = alexander_matrix(pres, colors)
    j = len(pres.generators) - 1 if j is None else j
    det = det_laurent(m.minor(j), exact=(mode == "exact"))
    if det.is_zero():
        raise AlexanderError("det M_j vanishes: degenerate colouring")
    q, r = det.divmod(ONE_MINUS_T_SQ)
    scale = max(1.0, max(abs(to_complex(c)) for c in det.coeffs.values()))
    rnorm = r.distance(LaurentPoly()) / scale
    if (mode == "exact" and not r.is_zero()) or rnorm > tol:
        raise AlexanderError(f"det M_j not divisible by (1-t)^2 (remainder {rnorm:.3e})")
    return AlexanderResult(q.canonical(), det.canonical(), j, rnorm)


def twisted_alexander(pres: Presentation, lift, j: int | None = None, mode="floating",
                      root="minus", tol: float = ZERO_TOL) -> LaurentPoly:
    """``Delta``, canonicalised.  ``j`` defaults to the last generator."""
    return alexander_polynomials(pres, lift, j, mode, root, tol).delta


def normalized_alexander(pres: Presentation, lift, j: int | None = None, mode="floating",
                         root="minus", tol: float = ZERO_TOL) -> LaurentPoly:
    """``Delta' = det M_j``, canonicalised."""
    return alexander_polynomials(pres, lift, j, mode, root, tol).delta_prime


def coloring_alexander(coloring: ArcColoring, j: int | None = None, drop: int | None = None,
                       mode="floating", root="minus", tol: float = ZERO_TOL) -> AlexanderResult:
    """Wirtinger presentation of the coloured diagram, relator ``drop`` removed."""
    pres = wirtinger(coloring.diagram)
    n = len(pres.generators)
    pres = pres.drop(n - 1 if drop is None else drop)
    return alexander_polynomials(pres, coloring, j, mode, root, tol)


def denominator_check(lift, mode="floating", root="minus") -> list:
    """``det Phi(1 - alpha_j) - (1 - t)^2`` coefficient error per generator."""
    colors = _resolve_mode(lift, mode, root)
    out = []
    for j in range(len(colors)):
        d = phi_one_minus(j, colors).det()
        out.append(d.distance(ONE_MINUS_T_SQ))
    return out


@dataclass(frozen=True)
class SplitPresentation:
    """Composite presentation built from two summands, shared generator in the middle.

    Generators: ``d1``'s arcs other than ``arc1``, then the shared arc,
    then ``d2``'s arcs other than ``arc2``.  Relators: ``d1``'s minus
    ``drop1``, then ``d2``'s minus ``drop2`` (rewritten in these
    generators), so the matrix is block diagonal once the shared column
    is removed.
    """

    presentation: Presentation
    colors: tuple
    shared: int
    n_first: int


def split_presentation(c1: ArcColoring, arc1: int, c2: ArcColoring, arc2: int,
                       drop1: int | None = None, drop2: int | None = None) -> SplitPresentation:
    d1, d2 = c1.diagram, c2.diagram
    n1, n2 = d1.n_arcs, d2.n_arcs
    order1 = [a for a in range(n1) if a != arc1]
    order2 = [a for a in range(n2) if a != arc2]
    map1 = {a: i for i, a in enumerate(order1)}
    shared = len(order1)
    map1[arc1] = shared
    map2 = {a: shared + 1 + i for i, a in enumerate(order2)}
    map2[arc2] = shared
    r1 = list(wirtinger(d1).relators)
    r2 = list(wirtinger(d2).relators)
    del r1[n1 - 1 if drop1 is None else drop1]
    del r2[n2 - 1 if drop2 is None else drop2]
    rel = tuple(r.substitute(map1) for r in r1) + tuple(r.substitute(map2) for r in r2)
    gens = tuple(f"a{k + 1}" for k in range(n1 + n2 - 1))
    colors = [None] * (n1 + n2 - 1)
    for a, i in map1.items():
        colors[i] = c1[a]
    for a in order2:
        colors[map2[a]] = c2[a]
    return SplitPresentation(Presentation(gens, rel), tuple(colors), shared, len(r1))


def is_block_diagonal(m: AlexanderMatrix, split: SplitPresentation) -> bool:
    """Off-diagonal blocks vanish once the shared column is deleted."""
    for k, row in enumerate(m.blocks):
        first_row = k < split.n_first
        for j, b in enumerate(row):
            if j == split.shared:
                continue
            if first_row != (j < split.shared) and not b.is_zero():
                return False
    return True


def diagonal_blocks(m: AlexanderMatrix, split: SplitPresentation) -> tuple:
    """The two square diagonal blocks, scalar-expanded."""
    full = m.minor(split.shared)
    k = 2 * split.n_first
    top = [row[:k] for row in full[:k]]
    bottom = [row[k:] for row in full[k:]]
    return top, bottom


__all__ = [
    "AlexanderError", "LaurentMat2", "phi", "phi_one_minus", "word_matrix",
    "AlexanderMatrix", "alexander_matrix", "twisted_alexander", "normalized_alexander",
    "alexander_polynomials", "AlexanderResult", "coloring_alexander", "denominator_check",
    "laurent_equal_up_to_unit", "split_presentation", "SplitPresentation",
    "is_block_diagonal", "diagonal_blocks", "LaurentError",
]
