"""Oriented knot diagrams: PD-code parsing, faces, Wirtinger relators, splicing.

Conventions
-----------
A PD tuple ``X(a, b, c, d)`` lists the four edge labels at a crossing
counterclockwise, starting from the incoming under-edge ``a``; ``c`` is the
outgoing under-edge and ``b``/``d`` carry the over-strand.  Orientation is
recovered by walking the knot, so labels need not be consecutive.  A
crossing is positive when the over-strand enters at ``d`` (it then passes
left to right across the upward under-strand).

Faces are stored per crossing as ``quadrants = (f_a, f_b, f_c, f_d)``:
``a`` is the region between the two outgoing strand ends, then ``b``,
``c``, ``d`` counterclockwise.  The arc on the left of an over-strand gets
the colour ``right * over``; see :mod:`knotrep.coloring`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .fox import GroupWord


class DiagramError(ValueError):
    """Malformed or non-planar diagram input."""


QUADRANTS = "abcd"


@dataclass(frozen=True)
class Crossing:
    sign: int
    over: int
    under_in: int
    under_out: int
    quadrants: tuple

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DiagramError(f"crossing sign must be +-1, got {self.sign}")
        q = tuple(int(f) for f in self.quadrants)
        if len(q) != 4:
            raise DiagramError("a crossing needs exactly four quadrant faces")
        object.__setattr__(self, "quadrants", q)

    def face(self, letter: str) -> int:
        return self.quadrants[QUADRANTS.index(letter)]

    # Faces to the right/left of each strand, as (right, left) pairs.
    def over_sides(self):
        """``((right, left), (right, left))`` face pairs flanking the over-strand."""
        fa, fb, fc, fd = self.quadrants
        if self.sign > 0:
            return (fd, fa), (fc, fb)
        return (fa, fb), (fd, fc)

    def under_in_sides(self):
        fa, fb, fc, fd = self.quadrants
        return (fd, fc) if self.sign > 0 else (fc, fb)

    def under_out_sides(self):
        fa, fb, fc, fd = self.quadrants
        return (fa, fb) if self.sign > 0 else (fd, fa)

    def relator(self) -> GroupWord:
        """Wirtinger relator ``over * right * over^-1 * left^-1``."""
        if self.sign > 0:
            right, left = self.under_in, self.under_out
        else:
            right, left = self.under_out, self.under_in
        return GroupWord(((self.over, 1), (right, 1), (self.over, -1), (left, -1)))

    def to_json(self) -> dict:
        return {"sign": self.sign, "over": self.over, "under_in": self.under_in,
                "under_out": self.under_out, "quadrants": list(self.quadrants)}


@dataclass(frozen=True)
class OrientedDiagram:
    """A knot diagram reduced to per-crossing data.

    ``pd`` keeps the parsed edge-level code when there is one; it takes no
    part in equality so JSON round-trips compare equal.
    """

    crossings: tuple
    n_faces: int
    pd: tuple | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))
        _validate(self)

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def arcs(self) -> range:
        return range(len(self.crossings))

    @property
    def n_arcs(self) -> int:
        return len(self.crossings)

    @property
    def edge_count(self) -> int:
        return 2 * len(self.crossings)

    @property
    def faces(self) -> list:
        """Per face, its corners as ``(crossing, quadrant letter)`` pairs."""
        out = [[] for _ in range(self.n_faces)]
        for i, c in enumerate(self.crossings):
            for letter, f in zip(QUADRANTS, c.quadrants):
                out[f].append((i, letter))
        return out

    def arc_start(self, arc: int) -> int:
        """Crossing where ``arc`` emerges as the outgoing under-strand."""
        for i, c in enumerate(self.crossings):
            if c.under_out == arc:
                return i
        raise DiagramError(f"unknown arc {arc}")

    def arc_end(self, arc: int) -> int:
        for i, c in enumerate(self.crossings):
            if c.under_in == arc:
                return i
        raise DiagramError(f"unknown arc {arc}")

    def to_json(self) -> dict:
        return {"crossings": [c.to_json() for c in self.crossings], "faces": self.n_faces}

    @classmethod
    def from_json(cls, data: dict) -> OrientedDiagram:
        try:
            crossings = [Crossing(int(c["sign"]), int(c["over"]), int(c["under_in"]),
                                  int(c["under_out"]), tuple(c["quadrants"]))
                         for c in data["crossings"]]
            return cls(tuple(crossings), int(data["faces"]))
        except (KeyError, TypeError) as exc:
            raise DiagramError(f"malformed diagram JSON: {exc}") from exc


def _validate(d: OrientedDiagram):
    n = len(d.crossings)
    if n < 1:
        raise DiagramError("a diagram needs at least one crossing")
    if d.n_faces != n + 2:
        raise DiagramError(f"face count {d.n_faces} != crossings + 2 = {n + 2}")
    outs = sorted(c.under_out for c in d.crossings)
    ins = sorted(c.under_in for c in d.crossings)
    if outs != list(range(n)) or ins != list(range(n)):
        raise DiagramError("every arc must start and end exactly once at under-passes")
    for c in d.crossings:
        if not 0 <= c.over < n:
            raise DiagramError(f"over arc {c.over} out of range")
        if any(not 0 <= f < d.n_faces for f in c.quadrants):
            raise DiagramError("quadrant face id out of range")
    used = {f for c in d.crossings for f in c.quadrants}
    if len(used) != d.n_faces:
        raise DiagramError("some face touches no crossing")


_TUPLE = re.compile(r"X\s*[\[(]([^\])]*)[\])]")


def _tokenize(text: str) -> list:
    stripped = _TUPLE.sub(" ", text).replace(",", " ").strip()
    if stripped:
        raise DiagramError(f"unparseable PD text near {stripped[:20]!r}")
    tuples = []
    for m in _TUPLE.finditer(text):
        parts = [p.strip() for p in m.group(1).split(",") if p.strip()]
        if len(parts) != 4:
            raise DiagramError(f"malformed tuple X({m.group(1)}): need 4 labels")
        try:
            tuples.append(tuple(int(p) for p in parts))
        except ValueError as exc:
            raise DiagramError(f"malformed tuple X({m.group(1)})") from exc
    if not tuples:
        raise DiagramError("no crossings in PD text")
    return tuples


def parse_pd(text) -> OrientedDiagram:
    """Parse ``"X(1,4,2,5) X(3,6,4,1) ..."`` into an :class:`OrientedDiagram`.

    Also accepts a sequence of 4-tuples.
    """
    pd = _tokenize(text) if isinstance(text, str) else [tuple(map(int, t)) for t in text]
    for t in pd:
        if len(t) != 4:
            raise DiagramError(f"malformed tuple {t}: need 4 labels")
    n = len(pd)

    where = {}
    for i, t in enumerate(pd):
        for k, e in enumerate(t):
            where.setdefault(e, []).append((i, k))
    for e, occ in where.items():
        if len(occ) != 2:
            raise DiagramError(f"edge label {e} appears {len(occ)} times, expected 2")
    if len(where) != 2 * n:
        raise DiagramError("edge count must be twice the crossing count")

    def other(i, k):
        a, b = where[pd[i][k]]
        if a == (i, k):
            return b
        return a

    # orientation: walk from the incoming under-edge of crossing 0
    incoming = {}
    i, k = 0, 0
    while (i, k) not in incoming:
        incoming[(i, k)] = True
        out = (i, (k + 2) % 4)
        if out in incoming:
            raise DiagramError("inconsistent strand orientation")
        incoming[out] = False
        i, k = other(*out)
    if len(incoming) != 4 * n:
        raise DiagramError("PD code has more than one component (links unsupported)")
    signs = []
    for i in range(n):
        if not incoming[(i, 0)] or incoming[(i, 2)]:
            raise DiagramError(f"crossing {i}: first label must be the incoming under-edge")
        signs.append(1 if incoming[(i, 3)] else -1)

    # arcs: arc i begins at the under-out slot of crossing i
    over = [None] * n
    under_in = [None] * n
    for start in range(n):
        i, k = other(start, 2)
        steps = 0
        while k != 0:
            if k == 2:
                raise DiagramError("arc walk hit an outgoing under-edge")
            over[i] = start
            i, k = other(i, (k + 2) % 4)
            steps += 1
            if steps > 2 * n:
                raise DiagramError("arc walk did not terminate")
        under_in[i] = start
    if None in over or None in under_in:
        raise DiagramError("every crossing needs an over-arc and an incoming under-arc")

    # faces: orbits of corners; corner (i, k) lies between slots k and k+1
    face_of = {}
    n_faces = 0
    for i in range(n):
        for k in range(4):
            if (i, k) in face_of:
                continue
            ci, ck = i, k
            while (ci, ck) not in face_of:
                face_of[(ci, ck)] = n_faces
                j, m = other(ci, ck)
                ci, ck = j, (m - 1) % 4
            n_faces += 1
    if n_faces != n + 2:
        raise DiagramError(f"non-planar PD code: {n_faces} faces for {n} crossings")

    crossings = []
    for i in range(n):
        a = 1 if signs[i] > 0 else 2
        quads = tuple(face_of[(i, (a + s) % 4)] for s in range(4))
        crossings.append(Crossing(signs[i], over[i], under_in[i], i, quads))
    return OrientedDiagram(tuple(crossings), n_faces, pd=tuple(pd))


@dataclass(frozen=True)
class Presentation:
    generators: tuple
    relators: tuple

    def drop(self, index: int) -> Presentation:
        rel = list(self.relators)
        del rel[index]
        return Presentation(self.generators, tuple(rel))


def wirtinger(diagram: OrientedDiagram) -> Presentation:
    """One generator per arc and one relator per crossing."""
    gens = tuple(f"a{k + 1}" for k in diagram.arcs)
    return Presentation(gens, tuple(c.relator() for c in diagram.crossings))


@dataclass(frozen=True)
class SpliceRecord:
    """How a composite diagram was assembled from two summands.

    Composite crossings are ``d1``'s followed by ``d2``'s (offset
    ``n1``), arcs likewise, except that ``d1``'s spliced arc keeps its id
    for the connecting arc running through ``d1``'s over-passes and
    ``arc2 + n1`` names the one running through ``d2``'s.
    """

    d1: OrientedDiagram
    arc1: int
    d2: OrientedDiagram
    arc2: int
    face_map1: tuple
    face_map2: tuple

    @property
    def n1(self) -> int:
        return self.d1.n_crossings

    @property
    def connecting_arcs(self) -> tuple:
        """Composite ids of the two connecting arcs (through d2, through d1)."""
        return (self.arc2 + self.n1, self.arc1)

    def arc_map1(self) -> dict:
        return {k: k for k in self.d1.arcs}

    def arc_map2(self) -> dict:
        return {k: k + self.n1 for k in self.d2.arcs}

    def to_json(self) -> dict:
        return {"d1": self.d1.to_json(), "arc1": self.arc1,
                "d2": self.d2.to_json(), "arc2": self.arc2}

    @classmethod
    def from_json(cls, data: dict) -> SpliceRecord:
        d1 = OrientedDiagram.from_json(data["d1"])
        d2 = OrientedDiagram.from_json(data["d2"])
        return connected_sum(d1, int(data["arc1"]), d2, int(data["arc2"]))[1]


def connected_sum(d1: OrientedDiagram, arc1: int, d2: OrientedDiagram, arc2: int):
    """Splice ``d2`` into ``d1`` along the first segments of ``arc1``/``arc2``.

    Each arc is cut right after the crossing where it emerges, and the two
    loose ends are cross-connected.  Faces to the right of the two cut
    segments merge, as do the faces to their left.  Returns
    ``(composite, SpliceRecord)``.
    """
    for d, arc in ((d1, arc1), (d2, arc2)):
        if arc not in d.arcs:
            raise DiagramError(f"invalid arc id {arc}")
    n1, f1 = d1.n_crossings, d1.n_faces
    x1, x2 = d1.arc_start(arc1), d2.arc_start(arc2)
    r1, l1 = d1.crossings[x1].under_out_sides()
    r2, l2 = d2.crossings[x2].under_out_sides()
    if r1 == l1 or r2 == l2:
        raise DiagramError("cut segment has the same face on both sides")

    face_map1 = tuple(range(f1))
    merged = {r2: r1, l2: l1}
    face_map2, nxt = [], f1
    for f in range(d2.n_faces):
        if f in merged:
            face_map2.append(merged[f])
        else:
            face_map2.append(nxt)
            nxt += 1

    crossings = list(d1.crossings)
    for c in d2.crossings:
        crossings.append(Crossing(c.sign, c.over + n1, c.under_in + n1, c.under_out + n1,
                                  tuple(face_map2[f] for f in c.quadrants)))
    c = crossings[x1]
    crossings[x1] = Crossing(c.sign, c.over, c.under_in, arc2 + n1, c.quadrants)
    c = crossings[n1 + x2]
    crossings[n1 + x2] = Crossing(c.sign, c.over, c.under_in, arc1, c.quadrants)

    pd = None
    if d1.pd is not None and d2.pd is not None:
        pd = _splice_pd(d1.pd, x1, d2.pd, x2)
    composite = OrientedDiagram(tuple(crossings), nxt, pd=pd)
    return composite, SpliceRecord(d1, arc1, d2, arc2, face_map1, tuple(face_map2))


def _splice_pd(pd1, x1, pd2, x2):
    """Edge-level splice: swap the far ends of the two cut edges."""
    shift = max(max(t) for t in pd1)
    pd2 = [tuple(e + shift for e in t) for t in pd2]
    pd = [list(t) for t in pd1] + [list(t) for t in pd2]
    n1 = len(pd1)
    e1, e2 = pd[x1][2], pd[n1 + x2][2]

    def far_end(e, near):
        for i, t in enumerate(pd):
            for k, lab in enumerate(t):
                if lab == e and (i, k) != near:
                    return i, k
        raise DiagramError("dangling edge")

    i1, k1 = far_end(e1, (x1, 2))
    i2, k2 = far_end(e2, (n1 + x2, 2))
    pd[i1][k1], pd[i2][k2] = e2, e1
    return tuple(tuple(t) for t in pd)


def relabel_arcs(diagram: OrientedDiagram, perm: dict) -> OrientedDiagram:
    """Rename arcs by ``perm`` (old id -> new id)."""
    return OrientedDiagram(tuple(
        Crossing(c.sign, perm[c.over], perm[c.under_in], perm[c.under_out], c.quadrants)
        for c in diagram.crossings), diagram.n_faces, pd=diagram.pd)


def relabel_faces(diagram: OrientedDiagram, perm: dict) -> OrientedDiagram:
    return OrientedDiagram(tuple(
        Crossing(c.sign, c.over, c.under_in, c.under_out, tuple(perm[f] for f in c.quadrants))
        for c in diagram.crossings), diagram.n_faces, pd=diagram.pd)


def reorder_crossings(diagram: OrientedDiagram, order) -> OrientedDiagram:
    return OrientedDiagram(tuple(diagram.crossings[i] for i in order), diagram.n_faces,
                           pd=None if diagram.pd is None else tuple(diagram.pd[i] for i in order))
