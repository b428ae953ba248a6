"""Built-in diagrams and colourings: trefoil, figure-eight and their sum.

Arc, face and crossing labels are arranged so that arc ``k`` and face
``k`` follow the usual worked-example numbering (trefoil arcs 1-3 and
regions 1-5; figure-eight arcs 3-6 and regions 4-9), and crossing ``k``
carries the relator of the ``k``-th over-arc in that order.

The figure-eight colours live in ``Q(x)``, ``x^2 + x + 1 = 0``.  Pass
``x=QOmega.x()`` for exact values or a complex cube root of unity.
"""

from __future__ import annotations

from .coloring import ArcColoring, ShadowColoring, connected_sum_coloring, region_coloring
from .diagram import (OrientedDiagram, connected_sum, parse_pd, relabel_arcs,
                      relabel_faces, reorder_crossings)
from .exact import QOmega
from .parabolic import IDENTITY, ParabolicVector as V

TREFOIL_PD = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)"
FIGURE_EIGHT_PD = "X(5,2,4,1) X(1,6,8,5) X(7,3,6,4) X(3,7,2,8)"

#: arc of each summand that is cut for the sum
SUM_ARCS = (2, 0)
P_DEFAULT = (1, 2)

NAMES = ("3_1", "4_1", "3_1#4_1")


def trefoil() -> OrientedDiagram:
    d = parse_pd(TREFOIL_PD)
    d = relabel_faces(d, {0: 0, 1: 2, 2: 3, 3: 1, 4: 4})
    return reorder_crossings(d, [2, 0, 1])


def figure_eight() -> OrientedDiagram:
    d = parse_pd(FIGURE_EIGHT_PD)
    d = relabel_arcs(d, {0: 1, 1: 3, 2: 0, 3: 2})
    d = relabel_faces(d, {0: 3, 1: 5, 2: 0, 3: 2, 4: 1, 5: 4})
    return reorder_crossings(d, [1, 0, 3, 2])


def composite() -> OrientedDiagram:
    return connected_sum(trefoil(), SUM_ARCS[0], figure_eight(), SUM_ARCS[1])[0]


def builtin(name: str) -> OrientedDiagram:
    """Diagram by name: ``"3_1"``, ``"4_1"`` or ``"3_1#4_1"``."""
    makers = {"3_1": trefoil, "4_1": figure_eight, "3_1#4_1": composite}
    if name not in makers:
        raise KeyError(f"unknown built-in diagram {name!r}; choose from {', '.join(NAMES)}")
    return makers[name]()


def _x(x):
    return QOmega.x() if x is None else x


def trefoil_colors() -> list:
    return [V(-1, 1), V(1, 0), V(0, 1)]


def figure_eight_colors(x=None) -> list:
    x = _x(x)
    return [V(0, 1), V(x + 1, x), V(x, x), V(x, 0)]


def trefoil_regions() -> list:
    return [V(2, 1), V(2, 3), V(1, 1), V(-1, 3), V(-1, 4)]


def figure_eight_regions(x=None) -> list:
    x = _x(x)
    return [V(-1, 3), V(-1, 4), V(4 * x + 3, 4 * x + 7), V(4 * x + 3, 4),
            V(4 * x - 2, -x - 1), V(3 * x - 2, -x - 1)]


def arc_coloring(name: str, x=None) -> ArcColoring:
    if name == "3_1":
        return ArcColoring(trefoil(), trefoil_colors())
    if name == "4_1":
        return ArcColoring(figure_eight(), figure_eight_colors(x))
    if name == "3_1#4_1":
        c1, c2 = arc_coloring("3_1"), arc_coloring("4_1", x)
        return connected_sum_coloring(c1, SUM_ARCS[0], c2, SUM_ARCS[1],
                                      conjugator=IDENTITY).coloring
    raise KeyError(f"unknown built-in colouring {name!r}")


def shadow_coloring(name: str, x=None, p=P_DEFAULT) -> ShadowColoring:
    """Arc colouring plus regions grown from the worked-example seed on face 0."""
    arc = arc_coloring(name, x)
    seed = figure_eight_regions(x)[0] if name == "4_1" else trefoil_regions()[0]
    regions = region_coloring(arc, 0, seed)
    return ShadowColoring(arc, regions, p)


def expected_regions(name: str, x=None) -> list:
    if name == "3_1":
        return trefoil_regions()
    if name == "4_1":
        return figure_eight_regions(x)
    return trefoil_regions() + figure_eight_regions(x)[2:]
