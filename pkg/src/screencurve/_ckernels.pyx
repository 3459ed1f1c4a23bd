# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled numerical kernels; same contract as ``_pykernels``."""

from libc.math cimport fabs, pow, sqrt

import numpy as np

cdef double INVPHI = (sqrt(5.0) - 1.0) / 2.0


cdef inline double _ppv(double a, double b, double phi) nogil:
    cdef double c = 1.0 - b
    cdef double den = a * phi + c * (1.0 - phi)
    if den == 0.0:
        return 1.0 if phi == 0.0 else 0.0
    return a * phi / den


cdef inline double _npv(double a, double b, double phi) nogil:
    cdef double num = b * (1.0 - phi)
    cdef double den = num + (1.0 - a) * phi
    if den == 0.0:
        return 1.0 if phi == 1.0 else 0.0
    return num / den


cdef inline double _dppv(double a, double b, double phi) nogil:
    cdef double c = 1.0 - b
    cdef double den = a * phi + c * (1.0 - phi)
    if den == 0.0:
        return 0.0
    return a * c / (den * den)


cdef inline double _d2ppv(double a, double b, double phi) nogil:
    cdef double c = 1.0 - b
    cdef double den = a * phi + c * (1.0 - phi)
    if den == 0.0:
        return 0.0
    return -2.0 * a * c * (a - 1.0 + b) / (den * den * den)


cdef inline double _curvature(double a, double b, double phi) nogil:
    cdef double s1 = _dppv(a, b, phi)
    cdef double s2 = _d2ppv(a, b, phi)
    return fabs(s2) / pow(1.0 + s1 * s1, 1.5)


def ppv(double a, double b, double phi):
    return _ppv(a, b, phi)


def npv(double a, double b, double phi):
    return _npv(a, b, phi)


def dppv(double a, double b, double phi):
    return _dppv(a, b, phi)


def d2ppv(double a, double b, double phi):
    return _d2ppv(a, b, phi)


def curvature(double a, double b, double phi):
    return _curvature(a, b, phi)


def golden_section_max(f, double lo, double hi, double tol):
    cdef double x1 = hi - INVPHI * (hi - lo)
    cdef double x2 = lo + INVPHI * (hi - lo)
    cdef double f1 = f(x1)
    cdef double f2 = f(x2)
    while hi - lo > tol:
        if f1 < f2:
            lo = x1
            x1 = x2
            f1 = f2
            x2 = lo + INVPHI * (hi - lo)
            f2 = f(x2)
        else:
            hi = x2
            x2 = x1
            f2 = f1
            x1 = hi - INVPHI * (hi - lo)
            f1 = f(x1)
    return 0.5 * (lo + hi)


cdef double _golden_curvature(double a, double b, double lo, double hi, double tol) nogil:
    cdef double x1 = hi - INVPHI * (hi - lo)
    cdef double x2 = lo + INVPHI * (hi - lo)
    cdef double f1 = _curvature(a, b, x1)
    cdef double f2 = _curvature(a, b, x2)
    while hi - lo > tol:
        if f1 < f2:
            lo = x1
            x1 = x2
            f1 = f2
            x2 = lo + INVPHI * (hi - lo)
            f2 = _curvature(a, b, x2)
        else:
            hi = x2
            x2 = x1
            f2 = f1
            x1 = hi - INVPHI * (hi - lo)
            f1 = _curvature(a, b, x1)
    return 0.5 * (lo + hi)


def curvature_argmax(double a, double b, int n_grid, double tol):
    cdef int i
    cdef int best_i = 0
    cdef double best_k = -1.0
    cdef double k
    cdef double step = 1.0 / (n_grid - 1)
    cdef double lo, hi
    for i in range(n_grid):
        k = _curvature(a, b, i * step)
        if k > best_k:
            best_k = k
            best_i = i
    lo = (best_i - 1 if best_i > 0 else 0) * step
    hi = (best_i + 1 if best_i < n_grid - 1 else n_grid - 1) * step
    return _golden_curvature(a, b, lo, hi, tol), best_k


cdef double _simpson(double a, double b, double lo, double hi, double flo,
                     double fmid, double fhi, double whole, double tol,
                     int depth) nogil:
    cdef double mid = 0.5 * (lo + hi)
    cdef double lm = 0.5 * (lo + mid)
    cdef double rm = 0.5 * (mid + hi)
    cdef double flm = _ppv(a, b, lm)
    cdef double frm = _ppv(a, b, rm)
    cdef double left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid)
    cdef double right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi)
    cdef double delta = left + right - whole
    if depth <= 0 or fabs(delta) <= 15.0 * tol:
        return left + right + delta / 15.0
    return (_simpson(a, b, lo, mid, flo, flm, fmid, left, 0.5 * tol, depth - 1)
            + _simpson(a, b, mid, hi, fmid, frm, fhi, right, 0.5 * tol, depth - 1))


def adaptive_simpson_ppv(double a, double b, double lo, double hi,
                         double tol, int max_depth):
    cdef double flo = _ppv(a, b, lo)
    cdef double fhi = _ppv(a, b, hi)
    cdef double mid = 0.5 * (lo + hi)
    cdef double fmid = _ppv(a, b, mid)
    cdef double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi)
    return _simpson(a, b, lo, hi, flo, fmid, fhi, whole, tol, max_depth)


def sample(double a, double b, int n):
    phi = np.linspace(0.0, 1.0, n)
    rho = np.empty(n)
    slope = np.empty(n)
    kappa = np.empty(n)
    cdef double[::1] p = phi
    cdef double[::1] r = rho
    cdef double[::1] s = slope
    cdef double[::1] k = kappa
    cdef Py_ssize_t i
    cdef double x
    for i in range(n):
        x = p[i]
        r[i] = _ppv(a, b, x)
        s[i] = _dppv(a, b, x)
        k[i] = _curvature(a, b, x)
    return phi, rho, slope, kappa
