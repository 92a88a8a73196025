"""Incenter, diagonal point and 2x2 center of a tangential quadrilateral.

The three centers I, S, W are collinear, and in the general case their line
is perpendicular to OP.  This module measures those facts together with two
reciprocal-radius identities and the triple-grid property of n x n
dissections.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .dissection import GridDissection, dissect, row_collinearity
from .geometry import (
    DEFAULT_TOL,
    ConvexQuad,
    Point2,
    QuadKind,
    cross,
    dist,
    dot,
    incircle,
    line_intersection,
    triangle_inradius,
)
from .solver import NormalizedModel, normalize


@dataclass(frozen=True)
class CentersReport:
    I: Point2
    S: Point2
    W: Point2
    collinearity_residual: float
    perpendicularity_residual: float
    kind: QuadKind
    # u-coordinates of I, S, W in the canonical frame (general case only)
    canonical_abscissas: tuple[float, float, float] | None = None


@dataclass(frozen=True)
class RadiiQuartet:
    """Inradii of the 2x2 cells, keyed by the outer vertex each cell contains."""

    r_a: float
    r_b: float
    r_c: float
    r_d: float

    def opposite_sums(self) -> tuple[float, float]:
        return 1 / self.r_a + 1 / self.r_c, 1 / self.r_b + 1 / self.r_d

    def adjacent_sums(self) -> tuple[float, float]:
        return 1 / self.r_a + 1 / self.r_b, 1 / self.r_c + 1 / self.r_d


def diagonal_point(q: ConvexQuad) -> Point2:
    return line_intersection(q[0], q[2], q[1], q[3], tol_parallel=0.0)


def two_by_two_center(q, tol_rel: float = DEFAULT_TOL) -> Point2:
    model = q if isinstance(q, NormalizedModel) else normalize(q, tol_rel)
    return model.point_at(0.5, 0.5)


def _collinearity(points, scale: float) -> float:
    pairs = [(i, j) for i in range(3) for j in range(i + 1, 3)]
    i, j = max(pairs, key=lambda ij: dist(points[ij[0]], points[ij[1]]))
    span = dist(points[i], points[j])
    if span <= 1e-15 * scale:
        return 0.0
    k = 3 - i - j
    height = abs(cross(points[j] - points[i], points[k] - points[i])) / span
    return height / scale


def _reference_direction(model: NormalizedModel) -> Point2 | None:
    if model.kind is QuadKind.GENERAL:
        return model.anchor_p - model.anchor_o
    if model.kind is QuadKind.TRAPEZOID:
        # the point P sits at infinity along the parallel sides
        return model.quad[2] - model.quad[1]
    return None


def centers_report(q: ConvexQuad, tol_rel: float = DEFAULT_TOL) -> CentersReport:
    model = normalize(q, tol_rel)
    I = incircle(q, tol_rel).center
    S = diagonal_point(q)
    W = model.point_at(0.5, 0.5)
    pts = (I, S, W)
    scale = q.diameter()
    col = _collinearity(pts, scale)
    ref = _reference_direction(model)
    perp = 0.0
    if ref is not None:
        ref = ref.scaled(1.0 / math.hypot(*ref))
        proj = [dot(p, ref) for p in pts]
        perp = (max(proj) - min(proj)) / scale
    abscissas = None
    if model.kind is QuadKind.GENERAL:
        back = model.placement.inverse()
        abscissas = tuple(back(p).u for p in pts)
    return CentersReport(I, S, W, col, perp, model.kind, abscissas)


def reciprocal_check(q: ConvexQuad, tol_rel: float = DEFAULT_TOL) -> tuple[RadiiQuartet, float]:
    """Inradii of the 2x2 cells and the normalized opposite-pair defect.

    The defect is |(1/r_A + 1/r_C) - (1/r_B + 1/r_D)| * min(r).
    """
    d = dissect(q, 2, tol_rel)
    cell_tol = max(tol_rel, 1e-8)
    radii = RadiiQuartet(
        incircle(d.cell(0, 0), cell_tol).radius,
        incircle(d.cell(1, 0), cell_tol).radius,
        incircle(d.cell(1, 1), cell_tol).radius,
        incircle(d.cell(0, 1), cell_tol).radius,
    )
    ac, bd = radii.opposite_sums()
    r_min = min(radii.r_a, radii.r_b, radii.r_c, radii.r_d)
    return radii, abs(ac - bd) * r_min


def wu_check(q: ConvexQuad) -> float:
    """Normalized defect of the reciprocal-inradius relation of the four
    triangles cut out by the diagonals; zero exactly for tangential quads.

    The raw defect |1/r(A'SB') + 1/r(C'SD') - 1/r(B'SC') - 1/r(D'SA')| is
    divided by the sum of all four reciprocals.
    """
    S = diagonal_point(q)
    inv = [1.0 / triangle_inradius(q[i], S, q[i + 1]) for i in range(4)]
    return abs(inv[0] + inv[2] - inv[1] - inv[3]) / math.fsum(inv)


def triple_grid_report(d: GridDissection, tol_rel: float = 1e-8) -> dict[str, float]:
    """Row/column collinearity of cell incenters, diagonal points and 2x2 centers.

    Each value is the worst residual over all rows and columns, normalized by
    the diameter of the dissected quadrilateral.
    """
    n = d.n
    families: dict[str, list[list[Point2]]] = {"incenters": [], "diagonals": [], "centers2x2": []}
    for j in range(n):
        rows = {name: [] for name in families}
        for k in range(n):
            cell = d.cell(k, j)
            rows["incenters"].append(incircle(cell, tol_rel).center)
            rows["diagonals"].append(diagonal_point(cell))
            rows["centers2x2"].append(two_by_two_center(cell, tol_rel))
        for name in families:
            families[name].append(rows[name])
    L = d.lattice
    corners = (L[0][0], L[0][n], L[n][n], L[n][0])
    scale = max(dist(a, b) for a in corners for b in corners)
    out = {}
    for name, grid in families.items():
        worst = 0.0
        if n >= 3:
            for j in range(n):
                worst = max(worst, row_collinearity(grid[j]))
            for k in range(n):
                worst = max(worst, row_collinearity([grid[j][k] for j in range(n)]))
        out[name] = worst / scale
    return out
