"""n x n grid dissections and square-tiling dissections of tangential quads."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import InvalidTiling, TangridError
from .geometry import (
    DEFAULT_TOL,
    ConvexQuad,
    Incircle,
    Point2,
    cross,
    incircle,
    line_distance,
    relative_pitot_defect,
    signed_area,
)
from .solver import NormalizedModel, normalize


@dataclass(frozen=True)
class GridDissection:
    """Lattice of (n+1) x (n+1) points; ``lattice[j][k]`` is the image of (k/n, j/n).

    Index k runs from A' towards B', index j from A' towards D'.
    """

    n: int
    lattice: tuple[tuple[Point2, ...], ...]
    source: NormalizedModel | None = None

    def vertex(self, k: int, j: int) -> Point2:
        return self.lattice[j][k]

    def cell(self, k: int, j: int) -> ConvexQuad:
        L = self.lattice
        return ConvexQuad((L[j][k], L[j][k + 1], L[j + 1][k + 1], L[j + 1][k]))

    def cells(self) -> Iterator[tuple[tuple[int, int], ConvexQuad]]:
        for j in range(self.n):
            for k in range(self.n):
                yield (k, j), self.cell(k, j)

    def flat(self) -> list[Point2]:
        """Row-major list of lattice points."""
        return [p for row in self.lattice for p in row]

    @classmethod
    def from_flat(cls, n: int, points: Sequence[Sequence[float]], source=None) -> "GridDissection":
        if len(points) != (n + 1) ** 2:
            raise ValueError(f"lattice of n={n} needs {(n + 1) ** 2} points, got {len(points)}")
        pts = [Point2(float(p[0]), float(p[1])) for p in points]
        rows = tuple(tuple(pts[j * (n + 1):(j + 1) * (n + 1)]) for j in range(n + 1))
        return cls(n, rows, source)


@dataclass(frozen=True)
class SquareTiling:
    """Axis-parallel squares (x0, y0, side) tiling the unit square."""

    squares: tuple[tuple[float, float, float], ...]

    def __init__(self, squares):
        object.__setattr__(self, "squares", tuple((float(x), float(y), float(s)) for x, y, s in squares))
        self._validate()

    def _validate(self, eps: float = 1e-9) -> None:
        if not self.squares:
            raise InvalidTiling("empty tiling")
        for x, y, s in self.squares:
            if not s > 0:
                raise InvalidTiling(f"square ({x}, {y}, {s}) has non-positive side")
            if x < -eps or y < -eps or x + s > 1 + eps or y + s > 1 + eps:
                raise InvalidTiling(f"square ({x}, {y}, {s}) leaves the unit square")
        total = math.fsum(s * s for _, _, s in self.squares)
        if abs(total - 1.0) > eps:
            raise InvalidTiling(f"areas sum to {total}, not 1")
        sq = self.squares
        for i in range(len(sq)):
            xi, yi, si = sq[i]
            for j in range(i + 1, len(sq)):
                xj, yj, sj = sq[j]
                ox = min(xi + si, xj + sj) - max(xi, xj)
                oy = min(yi + si, yj + sj) - max(yi, yj)
                if ox > eps and oy > eps:
                    raise InvalidTiling(f"squares {sq[i]} and {sq[j]} overlap")

    @classmethod
    def uniform(cls, n: int) -> "SquareTiling":
        return cls((k / n, j / n, 1 / n) for j in range(n) for k in range(n))

    def t_junctions(self, eps: float = 1e-12) -> list[tuple[tuple[float, float], int, int]]:
        """Corners lying strictly inside an edge of another square.

        Returns ``(corner, square_index, edge_index)`` with edges numbered
        bottom, right, top, left.
        """
        out = []
        for i, (x, y, s) in enumerate(self.squares):
            corners = ((x, y), (x + s, y), (x + s, y + s), (x, y + s))
            for j, (xj, yj, sj) in enumerate(self.squares):
                if i == j:
                    continue
                for cx, cy in corners:
                    edges = (
                        abs(cy - yj) <= eps and xj + eps < cx < xj + sj - eps,
                        abs(cx - (xj + sj)) <= eps and yj + eps < cy < yj + sj - eps,
                        abs(cy - (yj + sj)) <= eps and xj + eps < cx < xj + sj - eps,
                        abs(cx - xj) <= eps and yj + eps < cy < yj + sj - eps,
                    )
                    for e, hit in enumerate(edges):
                        if hit:
                            out.append(((cx, cy), j, e))
        return out


@dataclass
class CellReport:
    defects: list[float] = field(default_factory=list)
    incircles: list[Incircle | None] = field(default_factory=list)
    max_defect: float = 0.0
    tol_rel: float = DEFAULT_TOL

    @property
    def failing(self) -> list[int]:
        return [i for i, d in enumerate(self.defects) if not d <= self.tol_rel]

    @property
    def passed(self) -> bool:
        return not self.failing


def dissect(q: ConvexQuad, n: int, tol_rel: float = DEFAULT_TOL) -> GridDissection:
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    model = q if isinstance(q, NormalizedModel) else normalize(q, tol_rel)
    rows = tuple(
        tuple(model.point_at(k / n, j / n) for k in range(n + 1))
        for j in range(n + 1)
    )
    return GridDissection(n, rows, model)


def dissect_square_tiling(q: ConvexQuad, tiling: SquareTiling, tol_rel: float = DEFAULT_TOL
                          ) -> list[tuple[ConvexQuad, Incircle]]:
    model = q if isinstance(q, NormalizedModel) else normalize(q, tol_rel)
    out = []
    for x0, y0, s in tiling.squares:
        cell = model.cell(x0, y0, s)
        out.append((cell, incircle(cell, tol_rel)))
    return out


def t_junction_residual(q: ConvexQuad, tiling: SquareTiling, tol_rel: float = DEFAULT_TOL) -> float:
    """Largest distance from a mapped T-junction to the line of the edge it splits.

    Normalized by the diameter of the input quad.
    """
    model = q if isinstance(q, NormalizedModel) else normalize(q, tol_rel)
    worst = 0.0
    for (cx, cy), j, e in tiling.t_junctions():
        cell = model.cell(*tiling.squares[j])
        a, b = cell[e], cell[e + 1]
        worst = max(worst, line_distance(model.point_at(cx, cy), a, b))
    return worst / model.quad.diameter()


def validate(d, tol_rel: float = DEFAULT_TOL) -> CellReport:
    """Per-cell Pitot check; never raises, non-convex cells report ``inf``."""
    if isinstance(d, GridDissection):
        cells = []
        for j in range(d.n):
            for k in range(d.n):
                L = d.lattice
                cells.append((L[j][k], L[j][k + 1], L[j + 1][k + 1], L[j + 1][k]))
    else:
        cells = [c[0] if isinstance(c, tuple) and isinstance(c[0], ConvexQuad) else c for c in d]
    report = CellReport(tol_rel=tol_rel)
    for raw in cells:
        try:
            cell = raw if isinstance(raw, ConvexQuad) else ConvexQuad(raw)
            defect = relative_pitot_defect(cell)
        except (TangridError, ValueError, ZeroDivisionError):
            report.defects.append(math.inf)
            report.incircles.append(None)
            continue
        report.defects.append(defect)
        circle = None
        if defect <= tol_rel:
            try:
                circle = incircle(cell, tol_rel)
            except TangridError:
                pass
        report.incircles.append(circle)
    report.max_defect = max(report.defects) if report.defects else 0.0
    return report


def cells_area(d: GridDissection) -> float:
    return math.fsum(abs(signed_area(c)) for _, c in d.cells())


def row_collinearity(points: Sequence[Point2]) -> float:
    """Max distance of ``points`` from the line through the first and last one."""
    a, b = points[0], points[-1]
    span = math.hypot(b.u - a.u, b.v - a.v)
    if span == 0:
        return max(math.hypot(p.u - a.u, p.v - a.v) for p in points)
    return max(abs(cross(b - a, p - a)) / span for p in points)
