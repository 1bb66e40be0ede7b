"""Self-contained SVG line charts of an AHP curve against a fuzzy curve.

Output is a pure function of the ChartSpec: coordinates are printed with fixed
precision and nothing time- or environment-dependent is embedded, so the same
input always renders byte-identical text.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from xml.sax.saxutils import escape

from .trend import ComparisonSeries, SeriesTooShort

FUZZY_COLOR = "#1f77b4"
AHP_COLOR = "#d62728"


@dataclass(frozen=True)
class ChartSpec:
    name: str
    labels: tuple[str, ...]
    ahp: tuple[float, ...]
    fuzzy: tuple[float, ...]
    width: int = 720
    height: int = 420
    legend: tuple[str, str] = ("Fuzzy MCDM", "AHP")
    title: str | None = None

    @classmethod
    def from_series(cls, series: ComparisonSeries, **kw) -> "ChartSpec":
        return cls(series.name, series.labels, series.ahp_values, series.fuzzy_values, **kw)

    @property
    def y_max(self) -> float:
        top = max(max(self.ahp), max(self.fuzzy))
        return 1.1 * top if top > 0 else 1.0


def _f(v: float) -> str:
    return f"{v:.2f}"


def render_chart(spec: ChartSpec) -> str:
    n = len(spec.labels)
    if n < 2 or len(spec.ahp) != n or len(spec.fuzzy) != n:
        raise SeriesTooShort("a chart needs two series of equal length >= 2")

    left, right, top, bottom = 60.0, 150.0, 50.0, 70.0
    plot_w = spec.width - left - right
    plot_h = spec.height - top - bottom
    y_max = spec.y_max

    def x(i: int) -> float:
        return left + plot_w * i / (n - 1)

    def y(v: float) -> float:
        return top + plot_h * (1.0 - v / y_max)

    title = spec.title or f"Comparison of AHP and fuzzy MCDM for {spec.name}"
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.width}" height="{spec.height}" '
        f'viewBox="0 0 {spec.width} {spec.height}" font-family="sans-serif" font-size="12">',
        f'<rect x="0" y="0" width="{spec.width}" height="{spec.height}" fill="#ffffff"/>',
        f'<text x="{_f(spec.width / 2)}" y="24" text-anchor="middle" font-size="15">{escape(title)}</text>',
    ]

    out.append('<g class="grid" stroke="#dddddd" stroke-width="1">')
    for k in range(int(math.floor(y_max / 0.1 + 1e-9)) + 1):
        gy = y(0.1 * k)
        out.append(f'<line x1="{_f(left)}" y1="{_f(gy)}" x2="{_f(left + plot_w)}" y2="{_f(gy)}"/>')
    out.append("</g>")
    out.append('<g class="y-ticks" text-anchor="end" fill="#444444">')
    for k in range(int(math.floor(y_max / 0.1 + 1e-9)) + 1):
        out.append(f'<text x="{_f(left - 6)}" y="{_f(y(0.1 * k) + 4)}">{0.1 * k:.1f}</text>')
    out.append("</g>")

    out.append(
        f'<path class="axes" d="M{_f(left)},{_f(top)} V{_f(top + plot_h)} H{_f(left + plot_w)}" '
        'fill="none" stroke="#000000" stroke-width="1"/>'
    )

    out.append('<g class="x-ticks" text-anchor="middle">')
    for i, label in enumerate(spec.labels):
        out.append(
            f'<line x1="{_f(x(i))}" y1="{_f(top + plot_h)}" x2="{_f(x(i))}" y2="{_f(top + plot_h + 5)}" stroke="#000000"/>'
        )
        out.append(f'<text class="x-tick" x="{_f(x(i))}" y="{_f(top + plot_h + 20)}">{escape(label)}</text>')
    out.append("</g>")

    def polyline(values, color, cls, dash):
        pts = " ".join(f"{_f(x(i))},{_f(y(v))}" for i, v in enumerate(values))
        extra = ' stroke-dasharray="6,4"' if dash else ""
        return f'<polyline class="{cls}" points="{pts}" fill="none" stroke="{color}" stroke-width="2"{extra}/>'

    out.append(polyline(spec.fuzzy, FUZZY_COLOR, "fuzzy", False))
    out.append(polyline(spec.ahp, AHP_COLOR, "ahp", True))

    lx = left + plot_w + 20
    out.append('<g class="legend">')
    for k, (text, color, dash) in enumerate(((spec.legend[0], FUZZY_COLOR, False), (spec.legend[1], AHP_COLOR, True))):
        ly = top + 10 + 22 * k
        extra = ' stroke-dasharray="6,4"' if dash else ""
        out.append(f'<line x1="{_f(lx)}" y1="{_f(ly)}" x2="{_f(lx + 30)}" y2="{_f(ly)}" stroke="{color}" stroke-width="2"{extra}/>')
        out.append(f'<text x="{_f(lx + 36)}" y="{_f(ly + 4)}">{escape(text)}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
