"""Static SVG 1.1 figures of dissections."""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .centers import centers_report, diagonal_point, two_by_two_center
from .dissection import GridDissection
from .geometry import ConvexQuad, Point2, incircle

COLORS = {
    "cell": "#1f4e79",
    "incircle": "#2e8b57",
    "I": "#2e8b57",
    "S": "#c0392b",
    "W": "#8e44ad",
    "anchor": "#000000",
    "guide": "#999999",
}


def _num(x: float) -> str:
    s = format(x, ".9g")
    return "0" if s == "-0" else s


class SvgCanvas:
    """Collects elements in model coordinates; the v axis is flipped on output."""

    def __init__(self):
        self.elements: list[str] = []
        self.points: list[Point2] = []

    def include(self, pts: Iterable[Sequence[float]]) -> None:
        self.points.extend(Point2(p[0], p[1]) for p in pts)

    def _xy(self, p) -> str:
        return f"{_num(p[0])},{_num(-p[1])}"

    def polygon(self, pts, cls: str, fill: str = "none", stroke: str = COLORS["cell"]) -> None:
        pts = list(pts)
        self.include(pts)
        body = " ".join(self._xy(p) for p in pts)
        self.elements.append(
            f'<polygon class="{cls}" points="{body}" fill="{fill}" stroke="{stroke}" stroke-width="{{sw}}"/>')

    def circle(self, c, r: float, cls: str, stroke: str, fill: str = "none") -> None:
        self.elements.append(
            f'<circle class="{cls}" cx="{_num(c[0])}" cy="{_num(-c[1])}" r="{_num(r)}" '
            f'fill="{fill}" stroke="{stroke}" stroke-width="{{sw}}"/>')

    def marker(self, c, cls: str, color: str) -> None:
        self.elements.append(
            f'<circle class="{cls}" cx="{_num(c[0])}" cy="{_num(-c[1])}" r="{{mr}}" fill="{color}"/>')

    def line(self, a, b, cls: str, stroke: str = COLORS["guide"]) -> None:
        self.include((a, b))
        self.elements.append(
            f'<line class="{cls}" x1="{_num(a[0])}" y1="{_num(-a[1])}" x2="{_num(b[0])}" '
            f'y2="{_num(-b[1])}" stroke="{stroke}" stroke-width="{{sw}}" stroke-dasharray="{{dash}}"/>')

    def outline(self, q: ConvexQuad) -> None:
        self.include(q)
        d = "M " + " L ".join(self._xy(p) for p in q) + " Z"
        self.elements.append(f'<path class="outline" d="{d}" fill="none" stroke="#000000" '
                             f'stroke-width="{{sw2}}"/>')

    def render(self, title: str | None = None) -> str:
        us = [p.u for p in self.points]
        vs = [-p.v for p in self.points]
        x0, x1, y0, y1 = min(us), max(us), min(vs), max(vs)
        w, h = x1 - x0, y1 - y0
        margin = 0.05 * max(w, h)
        diam = math.hypot(w, h)
        sw = _num(0.003 * diam)
        fmt = {"sw": sw, "sw2": _num(0.006 * diam), "mr": _num(0.008 * diam), "dash": _num(0.01 * diam)}
        box = " ".join(_num(x) for x in (x0 - margin, y0 - margin, w + 2 * margin, h + 2 * margin))
        lines = [
            '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{box}" '
            f'width="600" height="{_num(600 * (h + 2 * margin) / (w + 2 * margin))}">',
        ]
        if title:
            lines.append(f"<title>{title}</title>")
        lines.extend(e.format(**fmt) for e in self.elements)
        lines.append("</svg>")
        return "\n".join(lines) + "\n"


def draw_dissection(d: GridDissection, *, incircles: bool = False, centers: bool = False,
                    triple_grid: bool = False, tol_rel: float = 1e-8,
                    canvas: SvgCanvas | None = None) -> SvgCanvas:
    cv = canvas or SvgCanvas()
    cells = [c for _, c in d.cells()]
    for c in cells:
        cv.polygon(c, "cell")
    if incircles:
        for c in cells:
            ic = incircle(c, tol_rel)
            cv.circle(ic.center, ic.radius, "incircle", COLORS["incircle"])
    if triple_grid:
        for c in cells:
            cv.marker(incircle(c, tol_rel).center, "tg-incenter", COLORS["I"])
            cv.marker(diagonal_point(c), "tg-diagonal", COLORS["S"])
            cv.marker(two_by_two_center(c, tol_rel), "tg-center2x2", COLORS["W"])
    L = d.lattice
    n = d.n
    outer = ConvexQuad((L[0][0], L[0][n], L[n][n], L[n][0]))
    cv.outline(outer)
    if centers:
        rep = centers_report(outer, tol_rel)
        for name, p in (("I", rep.I), ("S", rep.S), ("W", rep.W)):
            cv.marker(p, f"center-{name}", COLORS[name])
    return cv


def render_svg(d: GridDissection, **kwargs) -> str:
    title = kwargs.pop("title", None)
    return draw_dissection(d, **kwargs).render(title)
