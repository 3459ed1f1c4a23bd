"""Backend selection for the numerical kernels.

The compiled ``_ckernels`` extension is used when it imports; otherwise,
or when ``SCREENCURVE_PURE_PYTHON`` is set to a non-empty value, the
pure-Python ``_pykernels`` module is used.  ``BACKEND`` names the choice.
"""

from __future__ import annotations

import importlib
import os
from types import ModuleType

_NAMES = {"cython": "screencurve._ckernels", "python": "screencurve._pykernels"}


def load_backend(name: str) -> ModuleType:
    """Import a backend by name (``"cython"`` or ``"python"``)."""
    try:
        return importlib.import_module(_NAMES[name])
    except KeyError:
        raise ValueError(f"unknown kernel backend {name!r}") from None


def available_backends() -> list[str]:
    found = []
    for name in _NAMES:
        try:
            load_backend(name)
        except ImportError:
            continue
        found.append(name)
    return found


def _select() -> tuple[str, ModuleType]:
    if not os.environ.get("SCREENCURVE_PURE_PYTHON"):
        try:
            return "cython", load_backend("cython")
        except ImportError:
            pass
    return "python", load_backend("python")


BACKEND, _impl = _select()

ppv = _impl.ppv
npv = _impl.npv
dppv = _impl.dppv
d2ppv = _impl.d2ppv
curvature = _impl.curvature
golden_section_max = _impl.golden_section_max
curvature_argmax = _impl.curvature_argmax
adaptive_simpson_ppv = _impl.adaptive_simpson_ppv
sample = _impl.sample
