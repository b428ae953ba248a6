import json

import pytest

from conftest import shadow
from knotrep import fixtures
from knotrep.coloring import connected_sum_coloring
from knotrep.exact import QOmega
from knotrep.laurent import LaurentPoly as L
from knotrep.parabolic import IDENTITY, ParabolicVector as V
from knotrep.serialize import (FormatError, decode_coloring, decode_poly, decode_scalar,
                               decode_vector, dumps, encode_coloring, encode_poly,
                               encode_scalar, encode_vector, fmt_float)


def test_scalar_roundtrip():
    for c in (3, QOmega(1, -2), QOmega("1/3", 2)):
        assert decode_scalar(encode_scalar(c)) == c
    assert decode_scalar(encode_scalar(1.5 - 2j)) == 1.5 - 2j
    assert encode_scalar(-0.0 + 0j) == [0.0, 0.0]


def test_float_format():
    assert fmt_float(0.1 + 0.2) == 0.3
    assert fmt_float(-0.0) == 0.0 and str(fmt_float(-0.0)) == "0.0"
    assert len(repr(fmt_float(1 / 3)).rstrip("0")) <= 17


def test_vector_forms():
    assert decode_vector([1, 0, 2, -1]) == V(1, 2 - 1j)
    assert decode_vector(encode_vector(V(QOmega.x(), 1))) == V(QOmega.x(), 1)
    with pytest.raises(FormatError):
        decode_vector([0, 0, 0, 0])
    with pytest.raises(FormatError):
        decode_vector("nope")


def test_coloring_roundtrip(name):
    sh = shadow(name)
    data = json.loads(dumps(encode_coloring(sh)))
    back, splice = decode_coloring(data)
    assert splice is None
    assert back.arc.colors == sh.arc.colors and back.regions == sh.regions and back.p == sh.p
    assert back.diagram == sh.diagram


def test_splice_roundtrip():
    c1, c2 = fixtures.arc_coloring("3_1"), fixtures.arc_coloring("4_1")
    res = connected_sum_coloring(c1, 2, c2, 0, conjugator=IDENTITY)
    data = json.loads(dumps(encode_coloring(res.coloring, res.splice, res.conjugator)))
    back, splice = decode_coloring(data)
    assert splice == res.splice
    assert back.colors == res.coloring.colors


def test_poly_roundtrip():
    p = L({0: 1, 2: QOmega(0, 1)})
    assert decode_poly(json.loads(json.dumps(encode_poly(p)))) == p


def test_missing_fields():
    with pytest.raises(FormatError):
        decode_coloring({"arc_colors": {}})
    d = fixtures.trefoil().to_json()
    with pytest.raises(FormatError):
        decode_coloring({"diagram": d, "arc_colors": {"0": [1, 0, 0, 0]}})
