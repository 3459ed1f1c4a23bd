import random

import pytest

from screencurve import TestCharacteristics, kernels

KERNEL_NAMES = ("ppv", "npv", "dppv", "d2ppv", "curvature", "golden_section_max",
                "curvature_argmax", "adaptive_simpson_ppv", "sample")


@pytest.fixture(params=kernels.available_backends())
def backend(request, monkeypatch):
    """Run the test once per importable kernel backend."""
    impl = kernels.load_backend(request.param)
    for name in KERNEL_NAMES:
        monkeypatch.setattr(kernels, name, getattr(impl, name))
    return request.param


def random_nonlinear(rng: random.Random, n: int, lo=0.01, hi=0.99, min_gap=0.05):
    """``n`` tests with a, b uniform on [lo, hi] and |a + b - 1| >= min_gap."""
    out = []
    while len(out) < n:
        a, b = rng.uniform(lo, hi), rng.uniform(lo, hi)
        if abs(a + b - 1.0) >= min_gap:
            out.append(TestCharacteristics(a, b))
    return out


@pytest.fixture
def rng():
    return random.Random(20200622)


ACCEPTANCE_LINES: dict[str, list[tuple[bool, str]]] = {}


def record_criterion(key: str, ok: bool, detail: str) -> None:
    ACCEPTANCE_LINES.setdefault(key, []).append((ok, detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES, key=lambda k: int(k.split()[0])):
        results = ACCEPTANCE_LINES[key]
        ok = all(r for r, _ in results)
        details = "; ".join(d for _, d in results)
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {details}")
