"""Curve sampling and self-contained SVG rendering."""

from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

import numpy as np
from numpy.typing import NDArray

from . import kernels
from .core import TestCharacteristics, require_ppv_defined
from .curvature import ppv_at_threshold, prevalence_threshold

WIDTH, HEIGHT = 640, 480
LEFT, RIGHT, TOP, BOTTOM = 70, 30, 30, 60
PLOT_W = WIDTH - LEFT - RIGHT
PLOT_H = HEIGHT - TOP - BOTTOM


@dataclass(frozen=True)
class CurveSamples:
    """Uniformly spaced samples of the screening curve on [0, 1]."""

    phi: NDArray[np.floating]
    ppv: NDArray[np.floating]
    slope: NDArray[np.floating]
    curvature: NDArray[np.floating]
    name: str
    sensitivity: float
    specificity: float
    threshold: float | None
    ppv_at_threshold: float | None

    def __post_init__(self):
        n = len(self.phi)
        if n < 2:
            raise ValueError("curve needs at least 2 samples")
        if not all(len(col) == n for col in (self.ppv, self.slope, self.curvature)):
            raise ValueError("sample columns differ in length")
        if not (np.all(np.diff(self.phi) > 0) and self.phi[0] >= 0.0 and self.phi[-1] <= 1.0):
            raise ValueError("prevalence samples must increase strictly within [0, 1]")

    @property
    def epsilon(self) -> float:
        return self.sensitivity + self.specificity

    def rows(self):
        return list(zip(self.phi.tolist(), self.ppv.tolist(),
                        self.slope.tolist(), self.curvature.tolist()))


def sample_curve(t: TestCharacteristics, n: int = 101, name: str = "") -> CurveSamples:
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise ValueError(f"sample count must be an integer >= 2, got {n!r}")
    require_ppv_defined(t)
    phi, rho, slope, kappa = kernels.sample(t.a, t.b, n)
    return CurveSamples(phi, rho, slope, kappa, name, t.a, t.b,
                        prevalence_threshold(t), ppv_at_threshold(t))


def _x(phi: float) -> float:
    return LEFT + phi * PLOT_W


def _y(rho: float) -> float:
    return TOP + (1.0 - rho) * PLOT_H


def render_svg(samples: CurveSamples) -> str:
    """Render the curve, axes, optional dashed threshold line and legend."""
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]
    if samples.name:
        out.append(f'<title>{escape(samples.name)}</title>')
    x0, x1, y0, y1 = _x(0.0), _x(1.0), _y(0.0), _y(1.0)
    out.append(f'<line class="axis" x1="{x0:.3f}" y1="{y0:.3f}" x2="{x1:.3f}" y2="{y0:.3f}" stroke="black"/>')
    out.append(f'<line class="axis" x1="{x0:.3f}" y1="{y0:.3f}" x2="{x0:.3f}" y2="{y1:.3f}" stroke="black"/>')
    for tick in (0.0, 0.2, 0.4, 0.6, 0.8, 1.0):
        out.append(f'<text class="tick" x="{_x(tick):.3f}" y="{y0 + 16:.3f}" '
                   f'text-anchor="middle">{tick:.1f}</text>')
        out.append(f'<text class="tick" x="{x0 - 8:.3f}" y="{_y(tick) + 4:.3f}" '
                   f'text-anchor="end">{tick:.1f}</text>')
    out.append(f'<text class="label" x="{(x0 + x1) / 2:.3f}" y="{HEIGHT - 15}" '
               f'text-anchor="middle">φ</text>')
    out.append(f'<text class="label" x="18" y="{(y0 + y1) / 2:.3f}" text-anchor="middle" '
               f'transform="rotate(-90 18 {(y0 + y1) / 2:.3f})">ρ(φ)</text>')

    pts = [f"{_x(p):.3f},{_y(r):.3f}" for p, r in zip(samples.phi.tolist(), samples.ppv.tolist())]
    out.append(f'<path class="curve" d="M {" L ".join(pts)}" fill="none" stroke="blue" stroke-width="2"/>')

    legend = [f"ε = {samples.epsilon:.2f}"]
    if samples.threshold is not None:
        xt = _x(samples.threshold)
        out.append(f'<line class="threshold" x1="{xt:.3f}" y1="{y0:.3f}" x2="{xt:.3f}" '
                   f'y2="{y1:.3f}" stroke="red" stroke-dasharray="6,4"/>')
        legend.append(f"φe = {samples.threshold:.3f}")
    else:
        legend.append("φe = undefined")
    for i, line in enumerate(legend):
        out.append(f'<text class="legend" x="{x1 - 10:.3f}" y="{y0 - 30 + 16 * i:.3f}" '
                   f'text-anchor="end">{escape(line)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
