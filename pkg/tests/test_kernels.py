"""The compiled and pure-Python kernels must agree."""

import random

import numpy as np
import pytest

from screencurve import kernels

BACKENDS = kernels.available_backends()
pytestmark = pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled kernels not built")


@pytest.fixture(scope="module")
def pair():
    return kernels.load_backend("cython"), kernels.load_backend("python")


def random_points(n=500, seed=11):
    rng = random.Random(seed)
    pts = [(rng.random(), rng.random(), rng.random()) for _ in range(n)]
    pts += [(0.9, 1.0, 0.0), (0.0, 0.7, 1.0), (1.0, 1.0, 0.0), (0.5, 0.5, 0.5)]
    return pts


@pytest.mark.parametrize("name", ["ppv", "npv", "dppv", "d2ppv", "curvature"])
def test_pointwise(pair, name):
    c, p = (getattr(m, name) for m in pair)
    for a, b, x in random_points():
        if name == "npv" and a == 1.0 and b == 0.0:
            continue
        assert c(a, b, x) == pytest.approx(p(a, b, x), rel=1e-14, abs=1e-300)


def test_argmax_and_quadrature(pair):
    c, p = pair
    rng = random.Random(5)
    for _ in range(50):
        a, b = rng.uniform(0.01, 0.99), rng.uniform(0.01, 0.99)
        assert c.curvature_argmax(a, b, 1001, 1e-9)[0] == pytest.approx(
            p.curvature_argmax(a, b, 1001, 1e-9)[0], abs=1e-9)
        assert c.adaptive_simpson_ppv(a, b, 0.0, 1.0, 1e-10, 60) == pytest.approx(
            p.adaptive_simpson_ppv(a, b, 0.0, 1.0, 1e-10, 60), abs=1e-13)


def test_sample(pair):
    c, p = pair
    for got, want in zip(c.sample(0.95, 0.99, 101), p.sample(0.95, 0.99, 101)):
        np.testing.assert_allclose(got, want, rtol=1e-14)


def test_generic_golden_section(pair):
    for impl in pair:
        assert impl.golden_section_max(lambda x: -(x - 0.3) ** 2, 0.0, 1.0, 1e-9) == \
            pytest.approx(0.3, abs=1e-8)


def test_env_forces_fallback(monkeypatch):
    import importlib
    monkeypatch.setenv("SCREENCURVE_PURE_PYTHON", "1")
    mod = importlib.reload(kernels)
    try:
        assert mod.BACKEND == "python"
    finally:
        monkeypatch.delenv("SCREENCURVE_PURE_PYTHON")
        importlib.reload(kernels)
