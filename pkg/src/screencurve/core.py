"""Confusion-matrix data model and Bayes-derived pointwise metrics."""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import kernels
from .errors import DegenerateTestError, OutOfRangeError, UndefinedMetricError


def _check_probability(name: str, value: float) -> float:
    value = float(value)
    if not (0.0 <= value <= 1.0):  # also rejects NaN
        raise ValueError(f"{name} must lie in [0, 1], got {value!r}")
    return value


@dataclass(frozen=True)
class ConfusionMatrix:
    """Raw 2x2 counts: test result (rows) by condition status (columns)."""

    tp: int
    fp: int
    fn: int
    tn: int

    def __post_init__(self):
        for name in ("tp", "fp", "fn", "tn"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise ValueError(f"{name} must be a non-negative integer, got {v!r}")
        if self.tp + self.fn < 1:
            raise ValueError("no condition-present cases (tp + fn == 0); sensitivity undefined")
        if self.fp + self.tn < 1:
            raise ValueError("no condition-absent cases (fp + tn == 0); specificity undefined")

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.fn + self.tn

    def characteristics(self) -> TestCharacteristics:
        return TestCharacteristics(
            self.tp / (self.tp + self.fn), self.tn / (self.tn + self.fp))


@dataclass(frozen=True)
class TestCharacteristics:
    """Sensitivity ``a`` and specificity ``b`` of a binary screening test."""

    __test__ = False  # not a pytest class

    sensitivity: float
    specificity: float

    def __post_init__(self):
        object.__setattr__(self, "sensitivity", _check_probability("sensitivity", self.sensitivity))
        object.__setattr__(self, "specificity", _check_probability("specificity", self.specificity))

    @property
    def a(self) -> float:
        return self.sensitivity

    @property
    def b(self) -> float:
        return self.specificity

    @property
    def epsilon(self) -> float:
        """Screening coefficient, ``a + b``."""
        return self.sensitivity + self.specificity

    @property
    def youden_j(self) -> float:
        return self.epsilon - 1.0

    @property
    def fall_out(self) -> float:
        return 1.0 - self.specificity

    @property
    def lr_plus(self) -> float:
        if self.specificity == 1.0:
            raise UndefinedMetricError("lr_plus", "specificity is 1")
        return self.sensitivity / (1.0 - self.specificity)

    @property
    def detects_nothing(self) -> bool:
        """True for ``a == 0, b == 1``: every PPV is 0/0."""
        return self.sensitivity == 0.0 and self.specificity == 1.0


@dataclass(frozen=True)
class Metrics:
    """The five confusion-matrix ratios; ``None`` where a denominator is zero."""

    prevalence: float
    sensitivity: float
    specificity: float
    ppv: float | None
    npv: float | None


def metrics_from_counts(m: ConfusionMatrix, strict: bool = True) -> Metrics:
    """Prevalence, sensitivity, specificity, PPV and NPV from raw counts.

    With ``strict`` (the default) an undefined PPV or NPV raises
    :class:`UndefinedMetricError`; otherwise it is reported as ``None``.
    """
    ppv_ = npv_ = None
    if m.tp + m.fp:
        ppv_ = m.tp / (m.tp + m.fp)
    elif strict:
        raise UndefinedMetricError("ppv", "no positive test results (tp + fp == 0)")
    if m.fn + m.tn:
        npv_ = m.tn / (m.fn + m.tn)
    elif strict:
        raise UndefinedMetricError("npv", "no negative test results (fn + tn == 0)")
    return Metrics(
        prevalence=(m.tp + m.fn) / m.total,
        sensitivity=m.tp / (m.tp + m.fn),
        specificity=m.tn / (m.tn + m.fp),
        ppv=ppv_,
        npv=npv_,
    )


def require_ppv_defined(t: TestCharacteristics) -> None:
    if t.detects_nothing:
        raise DegenerateTestError(
            "sensitivity 0 with specificity 1 never tests positive; PPV is 0/0")


def ppv(t: TestCharacteristics, phi: float) -> float:
    """Positive predictive value at prevalence ``phi`` (Bayes' theorem).

    Isolated 0/0 endpoints take their one-sided limit: ``b == 1`` gives 1
    at ``phi == 0`` and ``a == 0`` gives 0 at ``phi == 1``.
    """
    require_ppv_defined(t)
    phi = _check_probability("prevalence", phi)
    return kernels.ppv(t.a, t.b, phi)


def npv(t: TestCharacteristics, phi: float) -> float:
    """Negative predictive value, ``b(1-phi) / (b(1-phi) + (1-a)phi)``."""
    if t.a == 1.0 and t.b == 0.0:
        raise DegenerateTestError(
            "sensitivity 1 with specificity 0 never tests negative; NPV is 0/0")
    phi = _check_probability("prevalence", phi)
    return kernels.npv(t.a, t.b, phi)


def prevalence_for_ppv(t: TestCharacteristics, rho: float) -> float:
    """Invert :func:`ppv`: the prevalence at which the test reaches ``rho``."""
    rho = float(rho)
    if not (0.0 < rho <= 1.0):
        raise ValueError(f"ppv must lie in (0, 1], got {rho!r}")
    if t.a == 0.0:
        raise ZeroDivisionError("sensitivity is 0; PPV is identically 0 and cannot be inverted")
    if t.b == 1.0:
        raise OutOfRangeError(
            "specificity 1 gives PPV 1 at every positive prevalence; no unique inverse")
    den = t.a / rho - t.a - t.b + 1.0
    if den == 0.0:
        raise ZeroDivisionError(
            f"ppv {rho!r} is not attained at any single prevalence for this test")
    phi = (1.0 - t.b) / den
    if 1.0 < phi <= 1.0 + 1e-12:  # rounding overshoot for rho within ulps of 1
        phi = 1.0
    if not (0.0 <= phi <= 1.0) or math.isnan(phi):
        raise OutOfRangeError(f"ppv {rho!r} is unattainable: implied prevalence {phi!r}")
    return phi
