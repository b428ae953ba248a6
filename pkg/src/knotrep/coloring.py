"""Arc colourings, region colourings and shadow colourings of diagrams.

Colouring rule: crossing a strand coloured ``a`` from its right-hand side
to its left-hand side multiplies by ``a``, i.e. ``left = right * a``.  The
same rule colours arcs at crossings (the strand being the over-arc) and
regions across every arc.  This handedness reproduces the region colours
of the 3_1 # 4_1 example, see :data:`REGION_RULE`.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .diagram import OrientedDiagram, SpliceRecord, connected_sum
from .exact import ROOTS, to_complex
from .parabolic import (EQ_TOL, IDENTITY, Mat2, ParabolicVector, conjugators,
                        det2, hopf_separated, quandle_div, quandle_mul,
                        same_up_to_sign, sign_distance)

#: ``left = right * a`` across a strand coloured ``a``.
REGION_RULE = "left = right * arc"

#: Seed of the pseudo-random tail of the shadow search.
SHADOW_SEED = 20150901
SEARCH_RADIUS = 10
RANDOM_BUDGET = 2000

GENERIC_TOL = 1e-9


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class ArcColoring:
    diagram: OrientedDiagram
    colors: tuple

    def __init__(self, diagram: OrientedDiagram, colors):
        if isinstance(colors, dict):
            missing = [k for k in diagram.arcs if k not in colors]
            if missing:
                raise ColoringError(f"missing arc colour for arcs {missing}")
            colors = tuple(colors[k] for k in diagram.arcs)
        colors = tuple(colors)
        if len(colors) != diagram.n_arcs:
            raise ColoringError(
                f"expected {diagram.n_arcs} arc colours, got {len(colors)}")
        object.__setattr__(self, "diagram", diagram)
        object.__setattr__(self, "colors", colors)

    def __getitem__(self, arc: int) -> ParabolicVector:
        return self.colors[arc]

    def is_exact(self) -> bool:
        return all(v.is_exact() for v in self.colors)

    def to_complex(self, root="minus") -> ArcColoring:
        return ArcColoring(self.diagram, [v.to_complex(root) for v in self.colors])

    def map(self, g: Mat2) -> ArcColoring:
        """Conjugate every colour by ``g`` (acts linearly on vectors)."""
        return ArcColoring(self.diagram, [g @ v for v in self.colors])


class CrossingCheck(NamedTuple):
    crossing: int
    ok: bool
    residual: float


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list:
        return [c.crossing for c in self.checks if not c.ok]

    @property
    def max_residual(self) -> float:
        return max(c.residual for c in self.checks)


def _expected_out(c, colors):
    """Under-out colour predicted from the under-in and over colours."""
    if c.sign > 0:
        return quandle_mul(colors[c.under_in], colors[c.over])
    return quandle_div(colors[c.under_in], colors[c.over])


def verify_arc_coloring(coloring: ArcColoring, tol: float = EQ_TOL) -> VerificationReport:
    colors = coloring.colors
    checks = []
    for i, c in enumerate(coloring.diagram.crossings):
        predicted = _expected_out(c, colors)
        actual = colors[c.under_out]
        if predicted.is_exact() and actual.is_exact():
            ok = same_up_to_sign(predicted, actual)
            res = 0.0 if ok else math.inf
        else:
            res = sign_distance(predicted, actual)
            ok = res <= tol * max(1.0, abs(complex(actual.alpha)), abs(complex(actual.beta)))
        checks.append(CrossingCheck(i, ok, res))
    return VerificationReport(tuple(checks))


def strand_sides(diagram: OrientedDiagram):
    """All ``(right_face, left_face, arc)`` triples, one per strand segment end.

    Every edge of the diagram shows up at both of its ends.
    """
    out = []
    for c in diagram.crossings:
        for r, l in c.over_sides():
            out.append((r, l, c.over))
        r, l = c.under_in_sides()
        out.append((r, l, c.under_in))
        r, l = c.under_out_sides()
        out.append((r, l, c.under_out))
    return out


def region_coloring(coloring: ArcColoring, seed_face: int, seed_color: ParabolicVector,
                    tol: float = EQ_TOL) -> dict:
    """Propagate ``seed_color`` from ``seed_face`` to every face.

    Faces reached along several paths are checked to agree up to sign.
    """
    if not isinstance(seed_color, ParabolicVector):
        seed_color = ParabolicVector(*seed_color)
    diagram = coloring.diagram
    if not 0 <= seed_face < diagram.n_faces:
        raise ColoringError(f"unknown face {seed_face}")
    adj = [[] for _ in range(diagram.n_faces)]
    for r, l, arc in strand_sides(diagram):
        adj[r].append((l, arc, True))
        adj[l].append((r, arc, False))

    colors = {seed_face: seed_color}
    queue = deque([seed_face])
    while queue:
        f = queue.popleft()
        s = colors[f]
        for g, arc, to_left in adj[f]:
            a = coloring.colors[arc]
            t = quandle_mul(s, a) if to_left else quandle_div(s, a)
            if g in colors:
                if not same_up_to_sign(colors[g], t, tol):
                    raise ColoringError(
                        f"inconsistent region colour at face {g} (broken arc colouring?)")
            else:
                colors[g] = t
                queue.append(g)
    return dict(sorted(colors.items()))


@dataclass(frozen=True)
class ShadowColoring:
    arc: ArcColoring
    regions: tuple
    p: ParabolicVector

    def __init__(self, arc: ArcColoring, regions, p):
        if isinstance(regions, dict):
            regions = tuple(regions[f] for f in range(arc.diagram.n_faces))
        if len(regions) != arc.diagram.n_faces:
            raise ColoringError("need one region colour per face")
        if not isinstance(p, ParabolicVector):
            p = ParabolicVector(*p)
        object.__setattr__(self, "arc", arc)
        object.__setattr__(self, "regions", tuple(regions))
        object.__setattr__(self, "p", p)

    @property
    def diagram(self) -> OrientedDiagram:
        return self.arc.diagram

    def is_exact(self) -> bool:
        return self.arc.is_exact() and all(s.is_exact() for s in self.regions) \
            and self.p.is_exact()

    def to_complex(self, root="minus") -> ShadowColoring:
        return ShadowColoring(self.arc.to_complex(root),
                              [s.to_complex(root) for s in self.regions],
                              self.p.to_complex(root))

    def with_p(self, p) -> ShadowColoring:
        return ShadowColoring(self.arc, self.regions, p)


def check_regions(shadow: ShadowColoring, tol: float = EQ_TOL) -> bool:
    """Region rule across every strand, up to sign."""
    for r, l, arc in strand_sides(shadow.diagram):
        t = quandle_mul(shadow.regions[r], shadow.arc.colors[arc])
        if not same_up_to_sign(shadow.regions[l], t, tol):
            return False
    return True


def genericity_failures(arc: ArcColoring, regions, tol: float = GENERIC_TOL) -> list:
    """Strand sides where ``h(a) != h(s) != h(s*a) != h(a)`` fails."""
    bad = []
    for r, l, k in strand_sides(arc.diagram):
        a, s, sa = arc.colors[k], regions[r], regions[l]
        if not (hopf_separated(a, s, tol) and hopf_separated(s, sa, tol)
                and hopf_separated(sa, a, tol)):
            bad.append((r, l, k))
    return bad


def p_condition(shadow_or_arc, regions=None, p=None, tol: float = GENERIC_TOL) -> bool:
    """``h(p)`` avoids every arc colour and region colour."""
    if isinstance(shadow_or_arc, ShadowColoring):
        arc, regions, p = shadow_or_arc.arc, shadow_or_arc.regions, shadow_or_arc.p
    else:
        arc = shadow_or_arc
    return all(hopf_separated(p, v, tol) for v in itertools.chain(arc.colors, regions))


def check_shadow(shadow: ShadowColoring, tol: float = GENERIC_TOL) -> dict:
    return {
        "arc_coloring": verify_arc_coloring(shadow.arc).ok,
        "region_rule": check_regions(shadow),
        "generic": not genericity_failures(shadow.arc, shadow.regions, tol),
        "p_condition": p_condition(shadow, tol=tol),
    }


def spiral_vectors(radius: int = SEARCH_RADIUS):
    """Nonzero integer vectors by ring ``max(|u|, |v|)``, then by angle."""
    for r in range(1, radius + 1):
        ring = [(u, v) for u in range(-r, r + 1) for v in range(-r, r + 1)
                if max(abs(u), abs(v)) == r]
        ring.sort(key=lambda uv: math.atan2(uv[1], uv[0]) % (2 * math.pi))
        for u, v in ring:
            yield ParabolicVector(u, v)


def random_vectors(seed: int = SHADOW_SEED, count: int = RANDOM_BUDGET):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        z = rng.normal(size=4)
        yield ParabolicVector(complex(z[0], z[1]), complex(z[2], z[3]))


def candidate_vectors(radius: int = SEARCH_RADIUS, seed: int = SHADOW_SEED,
                      count: int = RANDOM_BUDGET):
    yield from spiral_vectors(radius)
    yield from random_vectors(seed, count)


def find_generic_shadow(coloring: ArcColoring, seed_face: int = 0, seeds=None, ps=None,
                        tol: float = GENERIC_TOL) -> ShadowColoring:
    """Search a region colouring and ``p`` meeting the genericity conditions.

    ``seeds`` and ``ps`` override the default candidate enumeration (small
    integer vectors in spiral order, then seeded random complex vectors).
    Besides the Hopf-image conditions, ``p`` must keep every dilogarithm
    argument of the resulting closed-form solution away from 1 (at both
    roots of ``x^2 + x + 1`` for exact colourings, whose search stays on
    the integer candidates so that the result remains exact).
    """
    from .volume import solution_degeneracy

    report = verify_arc_coloring(coloring)
    if not report.ok:
        raise ColoringError(f"arc colouring fails at crossings {report.failures}")
    exact = coloring.is_exact()
    default = (lambda: spiral_vectors()) if exact else candidate_vectors
    seeds = default() if seeds is None else seeds
    for seed in seeds:
        regions = region_coloring(coloring, seed_face, seed)
        regions = tuple(regions[f] for f in range(coloring.diagram.n_faces))
        if genericity_failures(coloring, regions, tol):
            continue
        for p in (default() if ps is None else ps):
            if not p_condition(coloring, regions, p, tol):
                continue
            w = [det2(p, s) for s in regions]
            variants = [[to_complex(x, r) for x in w] for r in ROOTS] if exact else [w]
            if any(solution_degeneracy(coloring.diagram, v) is not None for v in variants):
                continue
            return ShadowColoring(coloring, regions, p)
    raise ColoringError("shadow search exhausted its budget")


def shadow_from_seed(coloring: ArcColoring, seed_face: int, seed_color, p) -> ShadowColoring:
    regions = region_coloring(coloring, seed_face, seed_color)
    return ShadowColoring(coloring, regions, p)


class ConnectedSum(NamedTuple):
    coloring: ArcColoring
    splice: SpliceRecord
    conjugator: Mat2


def connected_sum_coloring(c1: ArcColoring, arc1: int, c2: ArcColoring, arc2: int,
                           conjugator="canonical", tol: float = EQ_TOL) -> ConnectedSum:
    """Colour the splice of two coloured diagrams.

    ``conjugator`` (a :class:`Mat2` in SL(2), or ``"canonical"``) is applied
    to every colour of ``c2``; it must carry ``c2[arc2]`` to ``+-c1[arc1]``.
    Different conjugators can give colourings that are not conjugate to
    each other, so the choice is part of the output.
    """
    if not verify_arc_coloring(c1).ok or not verify_arc_coloring(c2).ok:
        raise ColoringError("summand colourings must verify")
    if isinstance(conjugator, str):
        if conjugator != "canonical":
            raise ColoringError(f"unknown conjugator keyword {conjugator!r}")
        _, g = conjugators(c1[arc1], c2[arc2])
    else:
        g = Mat2(*conjugator)
    moved = c2 if tuple(g) == tuple(IDENTITY) else c2.map(g)
    if not same_up_to_sign(moved[arc2], c1[arc1], tol):
        raise ColoringError("conjugator does not match the colours of the chosen arcs")
    composite, splice = connected_sum(c1.diagram, arc1, c2.diagram, arc2)
    colors = list(c1.colors) + list(moved.colors)
    return ConnectedSum(ArcColoring(composite, colors), splice, g)


def factor_coloring(coloring: ArcColoring, splice: SpliceRecord,
                    tol: float = EQ_TOL) -> tuple:
    """Restrict a composite colouring to the two summand diagrams."""
    through_d2, through_d1 = splice.connecting_arcs
    if not same_up_to_sign(coloring[through_d2], coloring[through_d1], tol):
        raise ColoringError("connecting arcs carry different colours")
    n1 = splice.n1
    left = ArcColoring(splice.d1, coloring.colors[:n1])
    right = ArcColoring(splice.d2, coloring.colors[n1:])
    return left, right
