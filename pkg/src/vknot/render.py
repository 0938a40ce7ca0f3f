"""Deterministic SVG drawings of Gauss diagrams.

Circles sit side by side.  Slots are spaced evenly clockwise from the
basepoint at the top of each circle, which is marked by a short radial tick.
Each arrow is a straight chord from tail to head with an arrowhead and its
sign written at the chord midpoint.
"""

from __future__ import annotations

import math

from .gauss import GaussDiagram

__all__ = ["render_svg"]

RADIUS = 100.0
MARGIN = 40.0
GAP = 60.0


def _fmt(x: float) -> str:
    s = f"{x:.2f}"
    return "0.00" if s == "-0.00" else s


def _slot_point(cx, cy, s, L):
    theta = math.pi / 2 - 2 * math.pi * (s + 0.5) / L
    return cx + RADIUS * math.cos(theta), cy - RADIUS * math.sin(theta)


def render_svg(d: GaussDiagram) -> str:
    """SVG text for ``d``; identical bytes for identical input."""
    k = len(d.circles)
    width = 2 * MARGIN + k * 2 * RADIUS + (k - 1) * GAP
    height = 2 * MARGIN + 2 * RADIUS
    cy = MARGIN + RADIUS
    centers = [MARGIN + RADIUS + i * (2 * RADIUS + GAP) for i in range(k)]
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        "<defs>",
        '<marker id="head" viewBox="0 0 10 10" refX="10" refY="5" markerWidth="8" markerHeight="8" '
        'orient="auto-start-reverse"><path d="M0,0 L10,5 L0,10 z" fill="black"/></marker>',
        "</defs>",
    ]
    for c, cx in enumerate(centers):
        out.append(
            f'<circle class="component" data-component="{c}" cx="{_fmt(cx)}" cy="{_fmt(cy)}" '
            f'r="{_fmt(RADIUS)}" fill="none" stroke="black" stroke-width="2"/>'
        )
        out.append(
            f'<line class="basepoint" data-component="{c}" x1="{_fmt(cx)}" y1="{_fmt(cy - RADIUS - 8)}" '
            f'x2="{_fmt(cx)}" y2="{_fmt(cy - RADIUS + 8)}" stroke="red" stroke-width="3"/>'
        )
    for lab, a in d.arrows.items():
        tc, ts = a.tail
        hc, hs = a.head
        x1, y1 = _slot_point(centers[tc], cy, ts, len(d.circles[tc]))
        x2, y2 = _slot_point(centers[hc], cy, hs, len(d.circles[hc]))
        sign = "+" if a.sign > 0 else "-"
        out.append(
            f'<line class="arrow" data-label="{lab}" data-sign="{sign}" x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
            f'x2="{_fmt(x2)}" y2="{_fmt(y2)}" stroke="black" stroke-width="1.5" marker-end="url(#head)"/>'
        )
        mx, my = (x1 + x2) / 2, (y1 + y2) / 2
        out.append(
            f'<text class="sign" data-label="{lab}" x="{_fmt(mx + 4)}" y="{_fmt(my - 4)}" '
            f'font-family="monospace" font-size="14">{sign}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
