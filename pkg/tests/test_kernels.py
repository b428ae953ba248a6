import cmath
import math
import os

import mpmath
import numpy as np
import pytest

from knotrep import kernels
from knotrep._kernels_py import li2 as li2_py


def series_li2(z, terms=4000):
    return sum(z ** n / n ** 2 for n in range(1, terms + 1))


def test_special_values():
    assert kernels.li2(0) == 0
    assert abs(kernels.li2(1) - math.pi ** 2 / 6) < 1e-12
    assert abs(kernels.li2(-1) + math.pi ** 2 / 12) < 1e-12
    assert abs(kernels.li2(-1) - series_li2(-1, 200000)) < 1e-10


@pytest.mark.parametrize("z", [0.3, -0.4 + 0.2j, 0.1j, 0.45 - 0.3j])
def test_against_direct_series(z):
    assert abs(kernels.li2(z) - series_li2(z)) < 1e-12


def test_against_mpmath(rng):
    for _ in range(300):
        r = 10 ** rng.uniform(-3, 3)
        z = r * cmath.exp(1j * rng.uniform(-math.pi, math.pi))
        ref = complex(mpmath.polylog(2, z))
        assert abs(kernels.li2(z) - ref) < 1e-12 * max(1.0, abs(ref))


@pytest.mark.parametrize("x", [1.5, 2.0, 7.0, 250.0])
def test_cut_convention(x):
    # on (1, inf): Im Li2 = -pi log x, matching mpmath's principal branch
    ref = complex(mpmath.polylog(2, x))
    val = kernels.li2(complex(x, 0.0))
    assert abs(val - ref) < 1e-12 * max(1.0, abs(ref))
    assert abs(val.imag + math.pi * math.log(x)) < 1e-12 * x
    assert kernels.li2(complex(x, -0.0)) == val


def test_reflection_identity(rng):
    for _ in range(100):
        r = math.sqrt(rng.uniform(0, 1))
        z = r * cmath.exp(1j * rng.uniform(0, 2 * math.pi))
        lhs = kernels.li2(z) + kernels.li2(1 - z)
        rhs = math.pi ** 2 / 6 - cmath.log(z) * cmath.log(1 - z)
        assert abs(lhs - rhs) < 1e-10


def test_backends_agree(rng):
    impls = kernels.backends()
    zs = (rng.normal(size=500) + 1j * rng.normal(size=500)) * 3
    base = np.array([li2_py(z) for z in zs])
    for impl in impls.values():
        got = np.asarray(impl.li2_many(zs))
        assert np.max(np.abs(got - base)) < 1e-13


def test_backends_agree_on_potential(name):
    from knotrep.volume import potential_tables, solution_from_shadow
    from conftest import shadow
    sh = shadow(name, "minus")
    w = np.array(solution_from_shadow(sh), dtype=complex)
    t = potential_tables(sh.diagram)
    vals = [impl.potential(w, t.coef, t.faces, t.exps, t.lp_coef, t.lp_idx, t.const)
            for impl in kernels.backends().values()]
    grads = [np.asarray(impl.log_gradient(w, t.coef, t.faces, t.exps, t.lp_coef, t.lp_idx,
                                          t.n_faces)) for impl in kernels.backends().values()]
    assert all(abs(v - vals[0]) < 1e-12 for v in vals)
    assert all(np.max(np.abs(g - grads[0])) < 1e-12 for g in grads)


@pytest.mark.skipif(bool(os.environ.get("KNOTREP_NO_EXT")), reason="extension build disabled")
def test_compiled_backend_is_built():
    assert "cython" in kernels.backends()
