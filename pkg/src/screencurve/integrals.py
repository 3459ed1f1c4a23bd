"""Area under the screening curve: closed form and quadrature."""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import kernels
from .core import TestCharacteristics, _check_probability, require_ppv_defined
from .curvature import Concavity, classify
from .errors import LinearCurveError, LogSingularityError

QUAD_TOL = 1e-10
QUAD_MAX_DEPTH = 60


@dataclass(frozen=True)
class AucReport:
    auc_closed: float
    auc_numeric: float
    residual: float
    epsilon: float


def antiderivative(t: TestCharacteristics, phi: float) -> float:
    """``a((b-1) ln|J phi - b + 1| + J phi) / J**2`` with ``J = a + b - 1``."""
    require_ppv_defined(t)
    phi = _check_probability("prevalence", phi)
    if classify(t).kind is Concavity.LINEAR:
        raise LinearCurveError("antiderivative divides by (a + b - 1)**2; curve is linear")
    a, b = t.a, t.b
    j = a + b - 1.0
    # (a + b - 1) phi - b + 1 rearranged; the literal form cancels to 0 for tiny a
    arg = abs(a * phi + (1.0 - b) * (1.0 - phi))
    if arg == 0.0:
        raise LogSingularityError(f"log argument vanishes at prevalence {phi!r}")
    return a * ((b - 1.0) * math.log(arg) + j * phi) / (j * j)


def auc_closed(t: TestCharacteristics) -> float:
    """Exact area under the PPV curve on [0, 1].

    Special cases: linear curves give 1/2, ``b == 1`` gives 1 (PPV is 1
    for every positive prevalence) and ``a == 0`` gives 0.
    """
    require_ppv_defined(t)
    if classify(t).kind is Concavity.LINEAR:
        return 0.5
    if t.b == 1.0:
        return 1.0
    if t.a == 0.0:
        return 0.0
    return antiderivative(t, 1.0) - antiderivative(t, 0.0)


def auc_numeric(t: TestCharacteristics, lo: float = 0.0, hi: float = 1.0) -> float:
    """Adaptive-Simpson quadrature of the PPV curve over ``[lo, hi]``."""
    require_ppv_defined(t)
    lo = _check_probability("lo", lo)
    hi = _check_probability("hi", hi)
    return kernels.adaptive_simpson_ppv(t.a, t.b, lo, hi, QUAD_TOL, QUAD_MAX_DEPTH)


def auc(t: TestCharacteristics) -> AucReport:
    closed = auc_closed(t)
    numeric = auc_numeric(t)
    return AucReport(closed, numeric, abs(closed - numeric), t.epsilon)
