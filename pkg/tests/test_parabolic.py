import numpy as np
import pytest

from knotrep.exact import QOmega
from knotrep.parabolic import (IDENTITY, Mat2, ParabolicVector as V, chordal, conjugators,
                               det2, hopf, quandle_div, quandle_mul, random_vector,
                               same_up_to_sign, sign_distance, to_matrix, to_matrix_inverse)

X = QOmega.x()


def rand(rng):
    return random_vector(rng)


def test_zero_vector_rejected():
    with pytest.raises(ValueError):
        V(0, 0)


def test_matrix_form():
    assert to_matrix(V(1, 0)) == Mat2(1, -1, 0, 1)
    assert to_matrix(V(0, 1)) == Mat2(1, 0, 1, 1)
    m = to_matrix(V(X + 1, X))
    assert m.det() == 1 and m.trace() == 2
    assert to_matrix(V(2, 3)) @ to_matrix_inverse(V(2, 3)) == IDENTITY


def test_quandle_axioms(rng):
    worst = 0.0
    for _ in range(1000):
        a, b, c = rand(rng), rand(rng), rand(rng)
        worst = max(worst,
                    sign_distance(quandle_mul(a, a), a),
                    sign_distance(quandle_div(quandle_mul(a, b), b), a),
                    sign_distance(quandle_mul(quandle_mul(a, b), c),
                                  quandle_mul(quandle_mul(a, c), quandle_mul(b, c))))
    assert worst < 1e-10


def test_operation_is_conjugation(rng):
    for _ in range(50):
        a, b = rand(rng), rand(rng)
        lhs = to_matrix(quandle_mul(a, b))
        rhs = to_matrix(b) @ to_matrix(a) @ to_matrix_inverse(b)
        assert lhs.allclose(rhs, 1e-9)


def test_exact_axioms():
    vs = [V(0, 1), V(X + 1, X), V(X, X), V(X, 0), V(2, -1)]
    for a in vs:
        assert quandle_mul(a, a) == a
        for b in vs:
            assert quandle_div(quandle_mul(a, b), b) == a
            for c in vs:
                assert quandle_mul(quandle_mul(a, b), c) == \
                    quandle_mul(quandle_mul(a, c), quandle_mul(b, c))


def test_hopf_and_det():
    assert hopf(V(3, 0)) == float("inf")
    assert hopf(V(1, 2)) == 0.5
    assert det2(V(1, 2), V(3, 4)) == -2
    assert chordal(V(1, 1), V(2, 2)) < 1e-15
    assert same_up_to_sign(V(1, 2), V(-1, -2))
    assert not same_up_to_sign(V(1, 2), V(1, -2))


def test_conjugators_family(rng):
    for _ in range(50):
        s, t = rand(rng), rand(rng)
        family, g = conjugators(t, s)
        assert abs(complex(g.det()) - 1) < 1e-9
        assert same_up_to_sign(g @ s, t, 1e-8)
        for z in (0.5, -2 + 1j):
            for sign in (1, -1):
                m = family.member(z, sign)
                assert same_up_to_sign(m @ s, t, 1e-8)
                cost = (m - IDENTITY).frobenius2()
                assert cost >= (g - IDENTITY).frobenius2() - 1e-9


def test_conjugators_exact():
    family, g = conjugators(V(0, 1), V(0, 1))
    assert g == IDENTITY
    _, g = conjugators(V(1, 0), V(X, X))
    assert g.det() == 1
    assert same_up_to_sign(g @ V(X, X), V(1, 0))
