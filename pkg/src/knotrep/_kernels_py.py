"""Pure-Python kernels; same signatures as the compiled ``_kernels`` module."""

import cmath
import math

PI2_6 = math.pi ** 2 / 6

# B_{2k} / (2k + 1)!  for k = 1..20
_BERNOULLI = [
    1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6,
    -3617.0 / 510, 43867.0 / 798, -174611.0 / 330, 854513.0 / 138,
    -236364091.0 / 2730, 8553103.0 / 6, -23749461029.0 / 870,
    8615841276005.0 / 14322, -7709321041217.0 / 510, 2577687858367.0 / 6,
    -26315271553053477373.0 / 1919190, 2929993913841559.0 / 6,
    -261082718496449122051.0 / 13530,
]
_COEFS = [b / math.factorial(2 * k + 1) for k, b in enumerate(_BERNOULLI, start=1)]


def _clean(z):
    # signed zeros would flip principal branches on the real axis
    if z.imag == 0.0:
        return complex(z.real, 0.0)
    return z


def clog(z):
    return cmath.log(_clean(complex(z)))


def _series(z):
    u = -cmath.log(_clean(1.0 - z))
    u2 = u * u
    total = u - 0.25 * u2
    p = u
    for c in _COEFS:
        p *= u2
        term = c * p
        total += term
        if abs(term) < 1e-17 * abs(total):
            break
    return total


def _inner(z):
    if z.real > 0.5:
        if z == 1:
            return complex(PI2_6)
        w = _clean(1.0 - z)
        return PI2_6 - cmath.log(z) * cmath.log(w) - _series(w)
    return _series(z)


def li2(z):
    """Principal-branch dilogarithm."""
    z = _clean(complex(z))
    if z == 0:
        return 0j
    if z == 1:
        return complex(PI2_6)
    if abs(z) > 1.0:
        lm = cmath.log(_clean(-z))
        return -PI2_6 - 0.5 * lm * lm - _inner(1.0 / z)
    return _inner(z)


def _argument(w, faces, exps):
    num = 1.0 + 0j
    den = 1.0 + 0j
    for f, e in zip(faces, exps):
        if e > 0:
            for _ in range(e):
                num *= w[f]
        elif e < 0:
            for _ in range(-e):
                den *= w[f]
    return num / den


def potential(w, coef, faces, exps, lp_coef, lp_idx, const):
    w = [complex(x) for x in w]
    faces, exps = faces.tolist(), exps.tolist()
    total = 0j
    for c, fs, es in zip(coef.tolist(), faces, exps):
        total += c * li2(_argument(w, fs, es))
    for c, (a, b, d) in zip(lp_coef.tolist(), lp_idx.tolist()):
        total += c * clog(w[b] / w[a]) * clog(w[d] / w[a])
    return total + const


def log_gradient(w, coef, faces, exps, lp_coef, lp_idx, n_faces):
    """``w_k dW/dw_k`` for every face ``k``."""
    w = [complex(x) for x in w]
    g = [0j] * n_faces
    for c, fs, es in zip(coef.tolist(), faces.tolist(), exps.tolist()):
        u = _argument(w, fs, es)
        if u == 1:
            # only reachable when the exponents cancel, i.e. u is identically 1
            continue
        dl = -c * clog(1.0 - u)
        for f, e in zip(fs, es):
            if e:
                g[f] += dl * e
    for c, (a, b, d) in zip(lp_coef.tolist(), lp_idx.tolist()):
        lb = clog(w[b] / w[a])
        ld = clog(w[d] / w[a])
        g[b] += c * ld
        g[d] += c * lb
        g[a] -= c * (ld + lb)
    return g


def li2_many(zs):
    return [li2(z) for z in zs]
