"""Regenerates the illustration set: grid, trapezoid, general map, centers, triple grid."""

from __future__ import annotations

from pathlib import Path

from .centers import centers_report
from .dissection import dissect
from .geometry import ConvexQuad
from .rng import tangential_from_angles
from .svg import COLORS, SvgCanvas, draw_dissection
from .transforms import GeneralParams, TrapezoidParams, canonical_quad

# touching points of the incircle for the showcase quadrilateral
SHOWCASE_ANGLES = (0.35, 1.95, 3.3, 4.75)


def showcase_quad() -> ConvexQuad:
    return tangential_from_angles(SHOWCASE_ANGLES)


def figures() -> dict[str, str]:
    q = showcase_quad()
    out = {}

    d3 = dissect(q, 3)
    out["fig1_grid3x3.svg"] = draw_dissection(d3, incircles=True).render("3x3 tangential grid dissection")

    trap = canonical_quad(TrapezoidParams(1.0, 1.0, 1.0 + 2 ** 0.5))
    cv = SvgCanvas()
    cv.marker((0.0, 0.0), "anchor-O", COLORS["anchor"])
    cv.line((0.0, 0.0), trap[1], "guide")
    cv.line((0.0, 0.0), trap[2], "guide")
    draw_dissection(dissect(trap, 4), incircles=True, canvas=cv)
    out["fig7_trapezoid.svg"] = cv.render("trapezoid transform: verticals stay vertical, horizontals pass through O")

    gen = canonical_quad(GeneralParams(2.0, 2.0, 4.0))
    cv = SvgCanvas()
    for name, anchor in (("O", (0.0, 0.0)), ("P", (1.0, 0.0))):
        cv.marker(anchor, f"anchor-{name}", COLORS["anchor"])
    cv.line((0.0, 0.0), gen[0], "guide")
    cv.line((0.0, 0.0), gen[3], "guide")
    cv.line((1.0, 0.0), gen[0], "guide")
    cv.line((1.0, 0.0), gen[1], "guide")
    draw_dissection(dissect(gen, 4), incircles=True, canvas=cv)
    out["fig8_general.svg"] = cv.render("general transform: lines through O and P")

    cv = SvgCanvas()
    rep = centers_report(q)
    cv.line(rep.S, rep.I, "center-line", COLORS["S"])
    cv.line(rep.I, rep.W, "center-line", COLORS["S"])
    draw_dissection(dissect(q, 2), incircles=True, centers=True, canvas=cv)
    out["fig9_centers.svg"] = cv.render("incenter, diagonal point and 2x2 center are collinear")

    out["fig10_triple_grid.svg"] = draw_dissection(d3, triple_grid=True).render("triple-grid property")
    return out


def write_figures(out_dir: str | Path) -> list[Path]:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for name, text in figures().items():
        path = out_dir / name
        path.write_text(text, encoding="utf-8")
        written.append(path)
    return written
