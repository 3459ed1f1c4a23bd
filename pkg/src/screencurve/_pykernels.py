"""Pure-Python numerical kernels.

Reference implementation of the hot loops; ``_ckernels.pyx`` mirrors it
line for line.  Inputs are assumed validated: ``0 <= a, b <= 1`` and not
the fully degenerate ``a == 0 and b == 1`` pair.  Isolated 0/0 points
(``b == 1`` at ``phi == 0``, ``a == 0`` at ``phi == 1``) take the value of
the one-sided limit.
"""

from __future__ import annotations

import math

import numpy as np

INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def ppv(a: float, b: float, phi: float) -> float:
    c = 1.0 - b
    den = a * phi + c * (1.0 - phi)
    if den == 0.0:
        return 1.0 if phi == 0.0 else 0.0
    return a * phi / den


def npv(a: float, b: float, phi: float) -> float:
    num = b * (1.0 - phi)
    den = num + (1.0 - a) * phi
    if den == 0.0:
        return 1.0 if phi == 1.0 else 0.0
    return num / den


def dppv(a: float, b: float, phi: float) -> float:
    c = 1.0 - b
    den = a * phi + c * (1.0 - phi)
    if den == 0.0:
        return 0.0
    return a * c / (den * den)


def d2ppv(a: float, b: float, phi: float) -> float:
    c = 1.0 - b
    den = a * phi + c * (1.0 - phi)
    if den == 0.0:
        return 0.0
    return -2.0 * a * c * (a - 1.0 + b) / (den * den * den)


def curvature(a: float, b: float, phi: float) -> float:
    s1 = dppv(a, b, phi)
    s2 = d2ppv(a, b, phi)
    return abs(s2) / (1.0 + s1 * s1) ** 1.5


def golden_section_max(f, lo: float, hi: float, tol: float) -> float:
    """Maximize a unimodal ``f`` on ``[lo, hi]``; return the final midpoint."""
    x1 = hi - INVPHI * (hi - lo)
    x2 = lo + INVPHI * (hi - lo)
    f1 = f(x1)
    f2 = f(x2)
    while hi - lo > tol:
        if f1 < f2:
            lo = x1
            x1, f1 = x2, f2
            x2 = lo + INVPHI * (hi - lo)
            f2 = f(x2)
        else:
            hi = x2
            x2, f2 = x1, f1
            x1 = hi - INVPHI * (hi - lo)
            f1 = f(x1)
    return 0.5 * (lo + hi)


def curvature_argmax(a: float, b: float, n_grid: int, tol: float) -> tuple[float, float]:
    """Grid scan of curvature on [0, 1] followed by golden-section refinement.

    Returns ``(phi, kappa_grid_max)``; ``phi`` is the refined argmax.
    """
    best_i = 0
    best_k = -1.0
    step = 1.0 / (n_grid - 1)
    for i in range(n_grid):
        k = curvature(a, b, i * step)
        if k > best_k:
            best_k = k
            best_i = i
    lo = max(best_i - 1, 0) * step
    hi = min(best_i + 1, n_grid - 1) * step
    phi = golden_section_max(lambda x: curvature(a, b, x), lo, hi, tol)
    return phi, best_k


def _simpson(a, b, lo, hi, flo, fmid, fhi, whole, tol, depth):
    mid = 0.5 * (lo + hi)
    lm = 0.5 * (lo + mid)
    rm = 0.5 * (mid + hi)
    flm = ppv(a, b, lm)
    frm = ppv(a, b, rm)
    left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid)
    right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi)
    delta = left + right - whole
    if depth <= 0 or abs(delta) <= 15.0 * tol:
        return left + right + delta / 15.0
    return (_simpson(a, b, lo, mid, flo, flm, fmid, left, 0.5 * tol, depth - 1)
            + _simpson(a, b, mid, hi, fmid, frm, fhi, right, 0.5 * tol, depth - 1))


def adaptive_simpson_ppv(a: float, b: float, lo: float, hi: float,
                         tol: float, max_depth: int) -> float:
    """Integrate the PPV curve over ``[lo, hi]`` by adaptive Simpson."""
    flo = ppv(a, b, lo)
    fhi = ppv(a, b, hi)
    mid = 0.5 * (lo + hi)
    fmid = ppv(a, b, mid)
    whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi)
    return _simpson(a, b, lo, hi, flo, fmid, fhi, whole, tol, max_depth)


def sample(a: float, b: float, n: int):
    phi = np.linspace(0.0, 1.0, n)
    rho = np.empty(n)
    slope = np.empty(n)
    kappa = np.empty(n)
    for i in range(n):
        x = float(phi[i])
        rho[i] = ppv(a, b, x)
        slope[i] = dppv(a, b, x)
        kappa[i] = curvature(a, b, x)
    return phi, rho, slope, kappa
