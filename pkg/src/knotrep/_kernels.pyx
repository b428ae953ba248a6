# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: dilogarithm and the potential-function sums.

Mirrors :mod:`knotrep._kernels_py` exactly, including the signed-zero
cleanup that pins principal branches on the real axis.
"""

import numpy as np

cdef extern from "complex.h" nogil:
    double complex clog(double complex)
    double cabs(double complex)
    double creal(double complex)
    double cimag(double complex)

cdef double PI2_6 = 1.6449340668482264

cdef double _COEFS[20]
_bern = [
    1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6,
    -3617.0 / 510, 43867.0 / 798, -174611.0 / 330, 854513.0 / 138,
    -236364091.0 / 2730, 8553103.0 / 6, -23749461029.0 / 870,
    8615841276005.0 / 14322, -7709321041217.0 / 510, 2577687858367.0 / 6,
    -26315271553053477373.0 / 1919190, 2929993913841559.0 / 6,
    -261082718496449122051.0 / 13530,
]
import math as _math
for _k in range(20):
    _COEFS[_k] = _bern[_k] / _math.factorial(2 * _k + 3)


cdef inline double complex _clean(double complex z) nogil:
    if cimag(z) == 0.0:
        return creal(z) + 0.0j
    return z


cdef double complex _series(double complex z) nogil:
    cdef double complex u = -clog(_clean(1.0 - z))
    cdef double complex u2 = u * u
    cdef double complex total = u - 0.25 * u2
    cdef double complex p = u
    cdef double complex term
    cdef int k
    for k in range(20):
        p = p * u2
        term = _COEFS[k] * p
        total = total + term
        if cabs(term) < 1e-17 * cabs(total):
            break
    return total


cdef double complex _inner(double complex z) nogil:
    cdef double complex w
    if creal(z) > 0.5:
        if creal(z) == 1.0 and cimag(z) == 0.0:
            return PI2_6
        w = _clean(1.0 - z)
        return PI2_6 - clog(z) * clog(w) - _series(w)
    return _series(z)


cdef double complex _li2(double complex z) nogil:
    cdef double complex lm
    z = _clean(z)
    if creal(z) == 0.0 and cimag(z) == 0.0:
        return 0.0
    if creal(z) == 1.0 and cimag(z) == 0.0:
        return PI2_6
    if cabs(z) > 1.0:
        lm = clog(_clean(-z))
        return -PI2_6 - 0.5 * lm * lm - _inner(1.0 / z)
    return _inner(z)


cpdef double complex li2(double complex z):
    """Principal-branch dilogarithm."""
    return _li2(z)


def li2_many(zs):
    cdef double complex[::1] arr = np.ascontiguousarray(zs, dtype=np.complex128)
    cdef Py_ssize_t i, n = arr.shape[0]
    out = np.empty(n, dtype=np.complex128)
    cdef double complex[::1] o = out
    with nogil:
        for i in range(n):
            o[i] = _li2(arr[i])
    return out


cdef inline double complex _argument(const double complex[::1] w,
                                     const long long[:, ::1] faces,
                                     const long long[:, ::1] exps,
                                     Py_ssize_t t) nogil:
    cdef double complex num = 1.0
    cdef double complex den = 1.0
    cdef int j, e, r
    for j in range(faces.shape[1]):
        e = <int>exps[t, j]
        if e > 0:
            for r in range(e):
                num = num * w[faces[t, j]]
        elif e < 0:
            for r in range(-e):
                den = den * w[faces[t, j]]
    return num / den


def potential(w, coef, faces, exps, lp_coef, lp_idx, double const):
    cdef double complex[::1] wv = np.ascontiguousarray(w, dtype=np.complex128)
    cdef const double[::1] cv = np.ascontiguousarray(coef, dtype=np.float64)
    cdef const long long[:, ::1] fv = np.ascontiguousarray(faces, dtype=np.int64)
    cdef const long long[:, ::1] ev = np.ascontiguousarray(exps, dtype=np.int64)
    cdef const double[::1] lc = np.ascontiguousarray(lp_coef, dtype=np.float64)
    cdef const long long[:, ::1] li = np.ascontiguousarray(lp_idx, dtype=np.int64)
    cdef double complex total = 0.0
    cdef Py_ssize_t t
    with nogil:
        for t in range(cv.shape[0]):
            total = total + cv[t] * _li2(_argument(wv, fv, ev, t))
        for t in range(lc.shape[0]):
            total = total + lc[t] * clog(_clean(wv[li[t, 1]] / wv[li[t, 0]])) \
                * clog(_clean(wv[li[t, 2]] / wv[li[t, 0]]))
    return complex(total + const)


def log_gradient(w, coef, faces, exps, lp_coef, lp_idx, Py_ssize_t n_faces):
    cdef double complex[::1] wv = np.ascontiguousarray(w, dtype=np.complex128)
    cdef const double[::1] cv = np.ascontiguousarray(coef, dtype=np.float64)
    cdef const long long[:, ::1] fv = np.ascontiguousarray(faces, dtype=np.int64)
    cdef const long long[:, ::1] ev = np.ascontiguousarray(exps, dtype=np.int64)
    cdef const double[::1] lc = np.ascontiguousarray(lp_coef, dtype=np.float64)
    cdef const long long[:, ::1] li = np.ascontiguousarray(lp_idx, dtype=np.int64)
    out = np.zeros(n_faces, dtype=np.complex128)
    cdef double complex[::1] g = out
    cdef double complex u, dl, lb, ld
    cdef Py_ssize_t t
    cdef int j
    with nogil:
        for t in range(cv.shape[0]):
            u = _argument(wv, fv, ev, t)
            if creal(u) == 1.0 and cimag(u) == 0.0:
                continue
            dl = -cv[t] * clog(_clean(1.0 - u))
            for j in range(fv.shape[1]):
                if ev[t, j] != 0:
                    g[fv[t, j]] = g[fv[t, j]] + dl * ev[t, j]
        for t in range(lc.shape[0]):
            lb = clog(_clean(wv[li[t, 1]] / wv[li[t, 0]]))
            ld = clog(_clean(wv[li[t, 2]] / wv[li[t, 0]]))
            g[li[t, 1]] = g[li[t, 1]] + lc[t] * ld
            g[li[t, 2]] = g[li[t, 2]] + lc[t] * lb
            g[li[t, 0]] = g[li[t, 0]] - lc[t] * (ld + lb)
    return [complex(x) for x in out]
