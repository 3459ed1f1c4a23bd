"""Prevalence-dependent screening curves: predictive values, curvature,
the prevalence threshold, and the area under the curve."""

from .core import (ConfusionMatrix, Metrics, TestCharacteristics, metrics_from_counts,
                   npv, ppv, prevalence_for_ppv)
from .curvature import (Concavity, ConcavityClass, ThresholdReport, ThresholdSensitivity,
                        classify, curvature, d2ppv_dphi2, dppv_dphi, numeric_threshold_oracle,
                        ppv_at_threshold, prevalence_threshold, prevalence_threshold_youden,
                        threshold_report, threshold_sensitivities)
from .errors import (CatalogError, DegenerateTestError, DuplicateNameError, LinearCurveError,
                     LogSingularityError, OutOfRangeError, ScreeningError, UndefinedMetricError)
from .integrals import AucReport, antiderivative, auc, auc_closed, auc_numeric
from .kernels import BACKEND
from .paradox import ParadoxScenario, ParadoxTrajectory, TrajectoryPoint, run, step

__version__ = "0.1.0"
