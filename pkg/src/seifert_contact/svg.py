"""Schematic SVG 1.1 rendering of tube curves.  Exact data lives in the JSON report."""
from __future__ import annotations

from typing import Sequence
from xml.sax.saxutils import escape

from .contact_curve import TubeForm

PANEL = 240
MARGIN = 20


def _panel(tube: TubeForm, ox: float) -> list[str]:
    pts = tube.curve.sample_points(24)
    s0 = tube.curve.start_sign
    span = max(max(abs(x), abs(y)) for x, y in pts) or 1.0
    scale = (PANEL / 2 - MARGIN) / span
    cx, cy = ox + PANEL / 2, PANEL / 2

    def xy(x, y):
        return f"{cx + x * scale:.3f},{cy - y * scale:.3f}"

    # the positive x-axis of the start-sign frame, where Lutz crossings live
    axis_end = (s0 * span, 0.0)
    out = [
        f'<g id="tube{tube.index + 1}">',
        f'<text x="{ox + 6}" y="14" font-size="11">{escape(f"tube {tube.index + 1} {tube.kind.value}")}</text>',
        f'<line x1="{cx:.3f}" y1="{cy:.3f}" x2="{xy(*axis_end).split(",")[0]}" y2="{cy:.3f}" '
        'stroke="#999" stroke-dasharray="4,3"/>',
        f'<circle class="origin" cx="{cx:.3f}" cy="{cy:.3f}" r="2.5" fill="black"/>',
        f'<polyline class="curve" fill="none" stroke="#1f5fa8" points="{" ".join(xy(x, y) for x, y in pts)}"/>',
    ]
    for r in tube.lutz_crossings:
        x, y = tube.curve.point(r)
        px, py = xy(float(x), float(y)).split(",")
        out.append(f'<circle class="lutz" cx="{px}" cy="{py}" r="4" fill="none" stroke="#c0392b"/>')
    out.append("</g>")
    return out


def emit_svg(tubes: Sequence[TubeForm], title: str = "") -> str:
    width = PANEL * max(1, len(tubes))
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{PANEL}" '
        f'viewBox="0 0 {width} {PANEL}">',
        f"<title>{escape(title)}</title>",
    ]
    for j, tube in enumerate(tubes):
        lines.extend(_panel(tube, j * PANEL))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
