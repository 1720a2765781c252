"""Figure emission: deterministic CSV grids, a minimal hand-written SVG
renderer, and matplotlib PNG output for the same curve sets.

All text output is byte-deterministic for fixed inputs: floats are printed
with 17 significant digits in CSV and fixed 3-decimal pixel coordinates in
SVG, and no timestamps or random identifiers are embedded anywhere.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Curve:
    label: str
    values: tuple[float, ...]
    regime: str  # "base" | "neg" | "pos"


def sample_polynomial(coeffs: list[Fraction], xs: list[float]) -> tuple[float, ...]:
    """Double-precision Horner over the exact coefficients."""
    floats = [float(c) for c in coeffs]
    out = []
    for x in xs:
        acc = 0.0
        for c in reversed(floats):
            acc = acc * x + c
        out.append(acc)
    return tuple(out)


def sample_grid(xmin: float, xmax: float, count: int) -> list[float]:
    if count < 2:
        raise ValueError("need at least two sample points")
    step = (xmax - xmin) / (count - 1)
    return [xmin + i * step for i in range(count)]


def format_float(x: float) -> str:
    return f"{x:.17g}"


def write_csv(stream: io.TextIOBase, xs: list[float], curves: list[Curve]) -> None:
    header = ["x"] + [c.label for c in curves]
    stream.write(",".join(header) + "\n")
    for i, x in enumerate(xs):
        row = [format_float(x)] + [format_float(c.values[i]) for c in curves]
        stream.write(",".join(row) + "\n")


# ---------------------------------------------------------------------------
# minimal SVG backend

_SVG_W, _SVG_H = 800, 500
_MARGIN = 50
_STROKES = {
    "base": "#1f4fd8",
    "neg": "#000000",
    "pos": "#d82020",
}
_LEGEND = {
    "base": "unperturbed",
    "neg": "negative-regime parameters",
    "pos": "positive-regime parameters",
}


def render_svg(xs: list[float], curves: list[Curve],
               zero_marks: list[float] | None = None) -> str:
    """Fixed 800x500 chart with one polyline per curve and axis zero markers."""
    zero_marks = zero_marks or []
    ymax = max(max(abs(v) for v in c.values) for c in curves) or 1.0
    ymax *= 1.05
    xmin, xmax = xs[0], xs[-1]
    plot_w = _SVG_W - 2 * _MARGIN
    plot_h = _SVG_H - 2 * _MARGIN

    def px(x: float) -> float:
        return _MARGIN + (x - xmin) / (xmax - xmin) * plot_w

    def py(y: float) -> float:
        return _MARGIN + (ymax - y) / (2 * ymax) * plot_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SVG_W}" '
        f'height="{_SVG_H}" viewBox="0 0 {_SVG_W} {_SVG_H}">',
        '<style>.base{stroke:%s}.neg{stroke:%s}.pos{stroke:%s}'
        'polyline{fill:none;stroke-width:1.2}</style>'
        % (_STROKES["base"], _STROKES["neg"], _STROKES["pos"]),
        f'<line x1="{_MARGIN}" y1="{py(0):.3f}" x2="{_SVG_W - _MARGIN}" '
        f'y2="{py(0):.3f}" stroke="#999" stroke-width="0.8"/>',
        f'<line x1="{px(0):.3f}" y1="{_MARGIN}" x2="{px(0):.3f}" '
        f'y2="{_SVG_H - _MARGIN}" stroke="#999" stroke-width="0.8"/>',
    ]
    for curve in curves:
        pts = " ".join(
            f"{px(x):.3f},{py(_clamp(v, ymax)):.3f}"
            for x, v in zip(xs, curve.values)
        )
        parts.append(f'<polyline class="{curve.regime}" points="{pts}"/>')
    for mark in zero_marks:
        parts.append(
            f'<circle cx="{px(mark):.3f}" cy="{py(0):.3f}" r="3" '
            'fill="none" stroke="#333" stroke-width="1"/>'
        )
    seen = []
    for curve in curves:
        if curve.regime not in seen:
            seen.append(curve.regime)
    for i, regime in enumerate(seen):
        y = _MARGIN + 14 + 16 * i
        parts.append(
            f'<line x1="{_SVG_W - 230}" y1="{y - 4}" x2="{_SVG_W - 205}" '
            f'y2="{y - 4}" stroke="{_STROKES[regime]}" stroke-width="2"/>'
        )
        parts.append(
            f'<text x="{_SVG_W - 200}" y="{y}" font-size="12" '
            f'font-family="sans-serif">{_LEGEND[regime]}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _clamp(v: float, limit: float) -> float:
    if math.isnan(v):
        return 0.0
    return max(-limit, min(limit, v))


def render_png(path: str, xs: list[float], curves: list[Curve],
               zero_marks: list[float] | None = None, title: str = "") -> None:
    """Matplotlib rendering of the same curves, written as a PNG file."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(8, 5), dpi=100)
    colors = {"base": "tab:blue", "neg": "black", "pos": "tab:red"}
    seen = set()
    for curve in curves:
        label = _LEGEND[curve.regime] if curve.regime not in seen else None
        seen.add(curve.regime)
        ax.plot(xs, curve.values, color=colors[curve.regime],
                linewidth=1.0, label=label)
    if zero_marks:
        ax.plot(zero_marks, [0.0] * len(zero_marks), "o",
                markerfacecolor="none", markeredgecolor="#333333",
                markersize=5, label="base zeros")
    ymax = max(max(abs(v) for v in c.values) for c in curves) or 1.0
    ax.set_ylim(-1.05 * ymax, 1.05 * ymax)
    ax.axhline(0.0, color="#999999", linewidth=0.8)
    ax.axvline(0.0, color="#999999", linewidth=0.8)
    ax.set_xlabel("x")
    if title:
        ax.set_title(title)
    ax.legend(loc="upper left", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, metadata={"Software": "pertcheb"})
    plt.close(fig)
