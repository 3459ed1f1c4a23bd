"""Exception hierarchy shared by the math modules and the CLI."""

from __future__ import annotations


class ScreeningError(ValueError):
    """Base class for every error raised by :mod:`screencurve`."""


class UndefinedMetricError(ScreeningError):
    """A confusion-matrix ratio has a zero denominator."""

    def __init__(self, metric: str, detail: str = ""):
        self.metric = metric
        msg = f"{metric} is undefined"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class DegenerateTestError(ScreeningError):
    """The test characteristics make a predictive value 0/0 everywhere."""


class OutOfRangeError(ScreeningError):
    """An inverse computation produced a value outside [0, 1]."""


class LinearCurveError(ScreeningError):
    """The operation is singular for a linear (epsilon == 1) screening curve."""


class LogSingularityError(ScreeningError):
    """The antiderivative's logarithm argument is zero."""


class CatalogError(ScreeningError):
    """Malformed or invalid catalog / scenario input.

    ``location`` names the offending row or line and ``field`` the column
    or key, when known.
    """

    def __init__(self, message: str, location: str | None = None, field: str | None = None):
        self.location = location
        self.field = field
        parts = []
        if location:
            parts.append(location)
        if field:
            parts.append(f"field {field!r}")
        prefix = ", ".join(parts)
        super().__init__(f"{prefix}: {message}" if prefix else message)


class DuplicateNameError(CatalogError):
    """Two catalog entries share a name."""
