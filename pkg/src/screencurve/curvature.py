"""Screening-curve derivatives, curvature, and the prevalence threshold.

The threshold is the prevalence at which the curvature of the PPV curve
peaks.  It is available in closed form (:func:`prevalence_threshold`) and
is re-derived without any closed form by :func:`numeric_threshold_oracle`,
which maximizes the curvature numerically.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from . import kernels
from .core import TestCharacteristics, _check_probability, require_ppv_defined
from .errors import ScreeningError

LINEAR_TOL = 1e-12  # |epsilon - 1| at or below this is the linear class
ORACLE_GRID = 1001
ORACLE_TOL = 1e-9
ORACLE_FLAT = 1e-12  # max grid curvature below this means no threshold
FD_STEP = 1e-6
PARAM_MARGIN = 1e-5


class Concavity(enum.Enum):
    CONCAVE = "concave"
    LINEAR = "linear"
    CONVEX = "convex"


@dataclass(frozen=True)
class ConcavityClass:
    kind: Concavity
    epsilon: float

    def __str__(self):
        return self.kind.value


@dataclass(frozen=True)
class ThresholdReport:
    """Closed-form threshold, PPV there, and the numerical cross-check.

    ``None`` stands for an undefined value (linear curves).
    """

    threshold: float | None
    ppv_at_threshold: float | None
    concavity: ConcavityClass
    oracle_threshold: float | None
    oracle_residual: float | None


@dataclass(frozen=True)
class ThresholdSensitivity:
    """Partial derivatives of the threshold w.r.t. sensitivity and specificity."""

    d_sensitivity: float
    d_specificity: float

    @property
    def specificity_dominance(self) -> float:
        """``|d/db| / |d/da|``; above 1 when specificity moves the threshold more."""
        return abs(self.d_specificity) / abs(self.d_sensitivity)


def _point(t: TestCharacteristics, phi: float) -> float:
    require_ppv_defined(t)
    return _check_probability("prevalence", phi)


def dppv_dphi(t: TestCharacteristics, phi: float) -> float:
    """Slope of the screening curve, ``a(1-b) / (a phi + (1-b)(1-phi))**2``."""
    return kernels.dppv(t.a, t.b, _point(t, phi))


def d2ppv_dphi2(t: TestCharacteristics, phi: float) -> float:
    return kernels.d2ppv(t.a, t.b, _point(t, phi))


def curvature(t: TestCharacteristics, phi: float) -> float:
    """Curvature ``|rho''| / (1 + rho'**2)**1.5`` of the screening curve."""
    return kernels.curvature(t.a, t.b, _point(t, phi))


def classify(t: TestCharacteristics) -> ConcavityClass:
    eps = t.epsilon
    if eps - 1.0 > LINEAR_TOL:
        kind = Concavity.CONCAVE
    elif eps - 1.0 < -LINEAR_TOL:
        kind = Concavity.CONVEX
    else:
        kind = Concavity.LINEAR
    return ConcavityClass(kind, eps)


def prevalence_threshold(t: TestCharacteristics) -> float | None:
    """Prevalence of maximal curvature, ``sqrt(1-b) / (sqrt(a) + sqrt(1-b))``.

    Returns ``None`` for linear curves (``a + b == 1``), where the
    formula would otherwise report a meaningless 0.5.
    """
    require_ppv_defined(t)
    if classify(t).kind is Concavity.LINEAR:
        return None
    rc = math.sqrt(1.0 - t.b)
    return rc / (math.sqrt(t.a) + rc)


def prevalence_threshold_youden(t: TestCharacteristics) -> float | None:
    """Same threshold via ``(sqrt(a(1-b)) + b - 1) / J``.

    Loses precision as ``J`` approaches 0; kept as a cross-check of
    :func:`prevalence_threshold`.
    """
    require_ppv_defined(t)
    if classify(t).kind is Concavity.LINEAR:
        return None
    return (math.sqrt(t.a * (1.0 - t.b)) + t.b - 1.0) / t.youden_j


def numeric_threshold_oracle(t: TestCharacteristics) -> float | None:
    """Argmax of curvature over [0, 1] by grid scan plus golden section.

    Uses no closed form for the threshold.  Returns ``None`` when the
    curve is numerically straight.
    """
    require_ppv_defined(t)
    phi, kmax = kernels.curvature_argmax(t.a, t.b, ORACLE_GRID, ORACLE_TOL)
    if kmax < ORACLE_FLAT:
        return None
    return phi


def ppv_at_threshold(t: TestCharacteristics) -> float | None:
    """PPV at the threshold, ``phi_e * sqrt(LR+)``.

    With perfect specificity the threshold is 0 and the PPV limit there
    is 1, which is returned instead of evaluating an infinite LR+.
    """
    phi_e = prevalence_threshold(t)
    if phi_e is None:
        return None
    if t.b == 1.0:
        return 1.0
    return phi_e * math.sqrt(t.a / (1.0 - t.b))


def threshold_sensitivities(t: TestCharacteristics, h: float = FD_STEP) -> ThresholdSensitivity:
    """Central finite differences of the closed-form threshold in ``a`` and ``b``."""
    lo, hi = PARAM_MARGIN, 1.0 - PARAM_MARGIN
    if not (lo <= t.a <= hi and lo <= t.b <= hi):
        raise ScreeningError(
            f"sensitivity and specificity must lie in [{lo}, {hi}] for finite differences")
    if classify(t).kind is Concavity.LINEAR:
        raise ScreeningError("threshold is undefined for a linear screening curve")

    def at(a, b):
        phi_e = prevalence_threshold(TestCharacteristics(a, b))
        if phi_e is None:
            raise ScreeningError("finite-difference stencil crosses the linear class")
        return phi_e

    d_a = (at(t.a + h, t.b) - at(t.a - h, t.b)) / (2 * h)
    d_b = (at(t.a, t.b + h) - at(t.a, t.b - h)) / (2 * h)
    return ThresholdSensitivity(d_a, d_b)


def threshold_report(t: TestCharacteristics) -> ThresholdReport:
    phi_e = prevalence_threshold(t)
    oracle = numeric_threshold_oracle(t)
    residual = None
    if phi_e is not None and oracle is not None:
        residual = abs(phi_e - oracle)
    return ThresholdReport(
        threshold=phi_e,
        ppv_at_threshold=ppv_at_threshold(t),
        concavity=classify(t),
        oracle_threshold=oracle,
        oracle_residual=residual,
    )
