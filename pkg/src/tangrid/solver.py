"""Recover canonical square parameters from a target tangential quadrilateral.

``normalize`` is the entry point: it fixes orientation, picks the vertex
labeling the general transform can reach, solves the three quadratics for
(X, Y, L) and fits the similarity that places the canonical image onto the
input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InfeasibleAngles, NoFeasibleLabeling, NotTangential, SlopeOrder
from .geometry import (
    DEFAULT_TOL,
    ConvexQuad,
    HalfAngleTangents,
    Point2,
    QuadClass,
    QuadKind,
    Similarity,
    classify,
    dist,
    dot,
    half_angle_tangents,
    is_tangential,
    relative_pitot_defect,
    similarity_from_pairs,
)
from .transforms import (
    GeneralParams,
    Params,
    TrapezoidParams,
    canonical_quad,
    map_for,
    tangents_oracle,
)

FIT_TOL = 1e-8


@dataclass(frozen=True)
class SolverDiagnostics:
    a_coef: float
    b_coef: float
    c_coef: float
    discriminants: tuple[float, float, float]
    feasibility: tuple[bool, bool, bool]
    margins: tuple[float, float, float]
    tangent_residual: float = math.nan


def feasibility_margins(t1: float, t2: float, t4: float) -> tuple[float, float, float]:
    """1 - t1 t2,  1 - t1 t4,  t1 t2 + t1 t4 + t2 t4 - 1; all positive when solvable."""
    return 1.0 - t1 * t2, 1.0 - t1 * t4, t1 * t2 + t1 * t4 + t2 * t4 - 1.0


def t3_from_identity(t1: float, t2: float, t4: float) -> float:
    den = t1 * t2 + t1 * t4 + t2 * t4 - 1.0
    if not den > 0:
        raise InfeasibleAngles(f"t1t2 + t1t4 + t2t4 - 1 = {den} is not positive")
    t3 = (t1 + t2 + t4 - t1 * t2 * t4) / den
    if not t3 > 0:
        raise InfeasibleAngles(f"identity gives non-positive t3 = {t3}")
    return t3


def _larger_root_minus(a: float) -> float:
    """Larger root of z^2 - a z - 1 = 0 without cancellation for either sign of a."""
    r = math.sqrt(a * a + 4.0)
    if a >= 0:
        return 0.5 * (a + r)
    return 2.0 / (r - a)


def solve_general(t: HalfAngleTangents) -> tuple[GeneralParams, SolverDiagnostics]:
    t1, t2, t3, t4 = t
    margins = feasibility_margins(t1, t2, t4)
    flags = tuple(m > 0 for m in margins)
    if not all(flags):
        raise InfeasibleAngles(f"feasibility margins {margins} not all positive")
    m12, m14, m3 = margins
    s = t1 * t1 * (t2 + t4)
    a = (2 * t1 + t2 - t4 - s) / m12
    b = (2 * t1 - t2 + t4 - s) / m14
    # c - 2 in closed form keeps L - 1 accurate when c is close to 2
    c_excess = ((2 - t1 * t2 - t1 * t4) ** 2 + (t2 - t4) ** 2) / m3
    c = 2.0 + c_excess
    disc_c = c_excess * (c + 2.0)
    X = _larger_root_minus(a)
    Y = _larger_root_minus(b)
    L = 0.5 * (c + math.sqrt(disc_c))
    if not (X * Y > 1 and L > 1):
        raise InfeasibleAngles(f"roots X={X}, Y={Y}, L={L} miss XY > 1, L > 1")
    params = GeneralParams(X, Y, L)
    back = tangents_oracle(params)
    residual = max(abs(x - y) / abs(y) for x, y in zip(back, t))
    diag = SolverDiagnostics(
        a_coef=a,
        b_coef=b,
        c_coef=c,
        discriminants=(a * a + 4.0, b * b + 4.0, disc_c),
        feasibility=flags,  # type: ignore[arg-type]
        margins=margins,
        tangent_residual=residual,
    )
    return params, diag


def solve_trapezoid(m: float, p: float) -> TrapezoidParams:
    """Parameters (1, Y, L) whose image has leg slopes ``m`` (lower) and ``p`` (upper)."""
    if not p > m:
        raise SlopeOrder(f"need p > m, got m={m}, p={p}")
    # Y = m + sqrt(1 + m^2) = exp(asinh m); likewise for L
    am, ap = math.asinh(m), math.asinh(p)
    return TrapezoidParams(1.0, math.exp(am), math.exp(ap - am))


@dataclass(frozen=True)
class NormalizedModel:
    """Ties an input quadrilateral to the canonical square that produces it.

    ``quad`` is the counterclockwise working copy, already relabeled so that
    ``quad[0]`` plays A'.  ``placement`` carries canonical coordinates into the
    input frame.
    """

    kind: QuadKind
    params: Params | None
    relabel_offset: int
    reversed: bool
    placement: Similarity
    quad: ConvexQuad
    anchor_o: Point2 | None = None
    anchor_p: Point2 | None = None
    diagnostics: SolverDiagnostics | None = None

    @property
    def quad_class(self) -> QuadClass:
        return QuadClass(self.kind, 1 if self.kind is QuadKind.TRAPEZOID else None)

    def input_index(self, label: int) -> int:
        """Index in the caller's vertex list of canonical vertex ``label`` (0 = A')."""
        w = (self.relabel_offset + label) % 4
        return (-w) % 4 if self.reversed else w

    def point_at(self, s: float, t: float) -> Point2:
        """Image of the unit-square point (s, t); (0,0), (1,0), (1,1), (0,1) are A'..D'."""
        if self.params is None:
            a, b, _, d = self.quad
            return Point2(a.u + s * (b.u - a.u) + t * (d.u - a.u),
                          a.v + s * (b.v - a.v) + t * (d.v - a.v))
        p = self.params
        log_l = math.log(p.L)
        m = (p.X * math.exp(s * log_l), p.Y * math.exp(t * log_l))
        return self.placement(map_for(p)(m))

    def cell(self, x0: float, y0: float, side: float) -> ConvexQuad:
        return ConvexQuad((
            self.point_at(x0, y0),
            self.point_at(x0 + side, y0),
            self.point_at(x0 + side, y0 + side),
            self.point_at(x0, y0 + side),
        ))


def _fit(canon: ConvexQuad, target: ConvexQuad) -> Similarity:
    placement = similarity_from_pairs(canon[0], canon[2], target[0], target[2])
    err = max(dist(placement(c), t) for c, t in zip(canon, target))
    if err > FIT_TOL * target.diameter():
        raise NoFeasibleLabeling(f"canonical image misses the input by {err:.3e}")
    return placement


def _normalize_general(work: ConvexQuad, reversed_: bool) -> NormalizedModel:
    t = tuple(half_angle_tangents(work))
    best = None
    for offset in range(4):
        r = t[offset:] + t[:offset]
        margin = min(feasibility_margins(r[0], r[1], r[3]))
        if margin > 0 and (best is None or margin > best[0]):
            best = (margin, offset, r)
    if best is None:
        raise NoFeasibleLabeling("no cyclic labeling satisfies the feasibility conditions")
    _, offset, r = best
    params, diag = solve_general(HalfAngleTangents(*r))
    quad = work.shifted(offset)
    placement = _fit(canonical_quad(params), quad)
    return NormalizedModel(
        kind=QuadKind.GENERAL,
        params=params,
        relabel_offset=offset,
        reversed=reversed_,
        placement=placement,
        quad=quad,
        anchor_o=placement((0.0, 0.0)),
        anchor_p=placement((1.0, 0.0)),
        diagnostics=diag,
    )


def _normalize_trapezoid(work: ConvexQuad, pair: int, reversed_: bool) -> NormalizedModel:
    sides = work.sides()
    # parallel sides must land on B'C' and D'A', the shorter one on D'A'
    candidates = (0, 2) if pair == 1 else (1, 3)
    offset = min(candidates, key=lambda o: sides[(3 + o) % 4] - sides[(1 + o) % 4])
    quad = work.shifted(offset)
    a, b, c, d = quad
    up = c - b
    up = up.scaled(1.0 / math.hypot(*up))
    right = Point2(up.v, -up.u)
    m = dot(b - a, up) / dot(b - a, right)
    p = dot(d - c, up) / dot(d - c, right)
    params = solve_trapezoid(m, p)
    placement = _fit(canonical_quad(params), quad)
    return NormalizedModel(
        kind=QuadKind.TRAPEZOID,
        params=params,
        relabel_offset=offset,
        reversed=reversed_,
        placement=placement,
        quad=quad,
        anchor_o=placement((0.0, 0.0)),
    )


def normalize(q: ConvexQuad, tol_rel: float = DEFAULT_TOL) -> NormalizedModel:
    if not isinstance(q, ConvexQuad):
        q = ConvexQuad(q)
    if not is_tangential(q, tol_rel):
        raise NotTangential(f"relative Pitot defect {relative_pitot_defect(q):.3e} > {tol_rel:g}")
    reversed_ = not q.is_ccw()
    work = q.ccw()
    cls = classify(work, tol_rel)
    if cls.kind is QuadKind.RHOMBUS:
        return NormalizedModel(
            kind=QuadKind.RHOMBUS,
            params=None,
            relabel_offset=0,
            reversed=reversed_,
            placement=Similarity.identity(),
            quad=work,
        )
    if cls.kind is QuadKind.TRAPEZOID:
        return _normalize_trapezoid(work, cls.parallel_pair, reversed_)
    return _normalize_general(work, reversed_)
