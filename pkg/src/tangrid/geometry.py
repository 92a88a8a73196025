"""Planar primitives for convex quadrilaterals.

Points are ``Point2(u, v)`` named tuples.  A ``ConvexQuad`` keeps its vertices
in the order they were given (either orientation); routines that need the
counterclockwise convention call :meth:`ConvexQuad.ccw` first.

All tolerances are relative: Pitot defects are compared against the
perimeter, parallelism against the sine of the angle between directions.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    CoincidentPoints,
    DegenerateTriangle,
    DegenerateVertex,
    NonConvex,
    NotTangential,
    ParallelLines,
)

DEFAULT_TOL = 1e-9
# sine of the turning angle below which a vertex counts as flat
CONVEX_TOL = 1e-12


class Point2(NamedTuple):
    u: float
    v: float

    def __add__(self, other):  # type: ignore[override]
        return Point2(self.u + other[0], self.v + other[1])

    def __sub__(self, other):
        return Point2(self.u - other[0], self.v - other[1])

    def scaled(self, k: float) -> "Point2":
        return Point2(self.u * k, self.v * k)


def as_point(p: Sequence[float]) -> Point2:
    u, v = float(p[0]), float(p[1])
    if not (math.isfinite(u) and math.isfinite(v)):
        raise ValueError(f"non-finite coordinate in {p!r}")
    return Point2(u, v)


def cross(a: Sequence[float], b: Sequence[float]) -> float:
    return a[0] * b[1] - a[1] * b[0]


def dot(a: Sequence[float], b: Sequence[float]) -> float:
    return a[0] * b[0] + a[1] * b[1]


def dist(a: Sequence[float], b: Sequence[float]) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


def line_distance(p: Sequence[float], a: Sequence[float], b: Sequence[float]) -> float:
    """Unsigned distance from ``p`` to the infinite line through ``a`` and ``b``."""
    d = (b[0] - a[0], b[1] - a[1])
    return abs(cross(d, (p[0] - a[0], p[1] - a[1]))) / math.hypot(*d)


@dataclass(frozen=True)
class ConvexQuad:
    """Four vertices in cyclic order forming a strictly convex quadrilateral."""

    vertices: tuple[Point2, Point2, Point2, Point2]

    def __init__(self, vertices: Iterable[Sequence[float]]):
        pts = tuple(as_point(p) for p in vertices)
        if len(pts) != 4:
            raise ValueError(f"a quadrilateral needs 4 vertices, got {len(pts)}")
        object.__setattr__(self, "vertices", pts)
        self._check_convex()

    def _check_convex(self) -> None:
        pts = self.vertices
        for i in range(4):
            for j in range(i + 1, 4):
                if pts[i] == pts[j]:
                    raise NonConvex(f"repeated vertex {pts[i]}")
        signs = []
        for i in range(4):
            e1 = pts[(i + 1) % 4] - pts[i]
            e2 = pts[(i + 2) % 4] - pts[(i + 1) % 4]
            s = cross(e1, e2) / (math.hypot(*e1) * math.hypot(*e2))
            if abs(s) <= CONVEX_TOL:
                raise NonConvex(f"flat vertex at index {(i + 1) % 4}")
            signs.append(s > 0)
        if len(set(signs)) != 1:
            raise NonConvex("turning directions disagree (reflex or self-intersecting)")

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, i: int) -> Point2:
        return self.vertices[i % 4]

    def sides(self) -> tuple[float, float, float, float]:
        p = self.vertices
        return tuple(dist(p[i], p[(i + 1) % 4]) for i in range(4))  # type: ignore[return-value]

    def perimeter(self) -> float:
        return math.fsum(self.sides())

    def diameter(self) -> float:
        p = self.vertices
        return max(dist(p[i], p[j]) for i in range(4) for j in range(i + 1, 4))

    def is_ccw(self) -> bool:
        return signed_area(self) > 0

    def ccw(self) -> "ConvexQuad":
        """Counterclockwise copy; a clockwise quad is reversed keeping vertex 0 first."""
        if self.is_ccw():
            return self
        p = self.vertices
        return ConvexQuad((p[0], p[3], p[2], p[1]))

    def shifted(self, offset: int) -> "ConvexQuad":
        p = self.vertices
        return ConvexQuad(p[(offset + i) % 4] for i in range(4))


class QuadKind(enum.Enum):
    GENERAL = "general"
    TRAPEZOID = "trapezoid"
    RHOMBUS = "rhombus"


@dataclass(frozen=True)
class QuadClass:
    """Routing tag.  ``parallel_pair`` is 0 for sides {s0, s2}, 1 for {s1, s3}."""

    kind: QuadKind
    parallel_pair: int | None = None

    def __str__(self) -> str:
        if self.kind is QuadKind.TRAPEZOID:
            return f"trapezoid(pair={self.parallel_pair})"
        return self.kind.value


@dataclass(frozen=True)
class HalfAngleTangents:
    t1: float
    t2: float
    t3: float
    t4: float

    def __post_init__(self):
        for name in ("t1", "t2", "t3", "t4"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")

    def __iter__(self):
        return iter((self.t1, self.t2, self.t3, self.t4))

    def identity_residual(self) -> float:
        """Relative residual of  sum t_i = sum of the four triple products."""
        t1, t2, t3, t4 = self
        lhs = t1 + t2 + t3 + t4
        rhs = t1 * t2 * t3 + t1 * t2 * t4 + t1 * t3 * t4 + t2 * t3 * t4
        return abs(lhs - rhs) / max(abs(lhs), abs(rhs))


@dataclass(frozen=True)
class Incircle:
    center: Point2
    radius: float


def signed_area(q: ConvexQuad) -> float:
    p = q.vertices
    return 0.5 * math.fsum(cross(p[i], p[(i + 1) % 4]) for i in range(4))


def pitot_defect(q: ConvexQuad) -> float:
    s = q.sides()
    return (s[0] + s[2]) - (s[1] + s[3])


def relative_pitot_defect(q: ConvexQuad) -> float:
    return abs(pitot_defect(q)) / q.perimeter()


def is_tangential(q: ConvexQuad, tol_rel: float = DEFAULT_TOL) -> bool:
    if not isinstance(q, ConvexQuad):
        q = ConvexQuad(q)
    return abs(pitot_defect(q)) <= tol_rel * q.perimeter()


def parallel_sine(d1: Sequence[float], d2: Sequence[float]) -> float:
    return abs(cross(d1, d2)) / (math.hypot(*d1) * math.hypot(*d2))


def classify(q: ConvexQuad, tol_parallel: float = DEFAULT_TOL) -> QuadClass:
    p = q.vertices
    e = [p[(i + 1) % 4] - p[i] for i in range(4)]
    par0 = parallel_sine(e[0], e[2]) <= tol_parallel
    par1 = parallel_sine(e[1], e[3]) <= tol_parallel
    if par0 and par1:
        return QuadClass(QuadKind.RHOMBUS)
    if par0:
        return QuadClass(QuadKind.TRAPEZOID, 0)
    if par1:
        return QuadClass(QuadKind.TRAPEZOID, 1)
    return QuadClass(QuadKind.GENERAL)


def _half_angle_tan(prev: Point2, p: Point2, nxt: Point2) -> float:
    e1 = prev - p
    e2 = nxt - p
    norm = math.hypot(*e1) * math.hypot(*e2)
    c = dot(e1, e2)
    s = abs(cross(e1, e2))
    if s <= CONVEX_TOL * norm:
        raise DegenerateVertex(f"collinear edges at {p}")
    # tan(theta/2) = sin/(1+cos) = (1-cos)/sin; pick the branch free of cancellation
    if c >= 0:
        return s / (norm + c)
    return (norm - c) / s


def half_angle_tangents(q: ConvexQuad) -> HalfAngleTangents:
    p = q.vertices
    return HalfAngleTangents(*(_half_angle_tan(p[i - 1], p[i], p[(i + 1) % 4]) for i in range(4)))


def line_intersection(p1, p2, p3, p4, tol_parallel: float = DEFAULT_TOL) -> Point2:
    """Intersection of the infinite lines p1p2 and p3p4."""
    d1 = (p2[0] - p1[0], p2[1] - p1[1])
    d2 = (p4[0] - p3[0], p4[1] - p3[1])
    den = cross(d1, d2)
    if abs(den) <= tol_parallel * math.hypot(*d1) * math.hypot(*d2):
        raise ParallelLines(f"lines {p1}-{p2} and {p3}-{p4} are parallel")
    t = cross((p3[0] - p1[0], p3[1] - p1[1]), d2) / den
    return Point2(p1[0] + t * d1[0], p1[1] + t * d1[1])


def _bisector(q: ConvexQuad, i: int) -> tuple[Point2, Point2]:
    p = q[i]
    a = q[i - 1] - p
    b = q[i + 1] - p
    a = a.scaled(1.0 / math.hypot(*a))
    b = b.scaled(1.0 / math.hypot(*b))
    return p, p + (a + b)


def incircle(q: ConvexQuad, tol_rel: float = DEFAULT_TOL) -> Incircle:
    """Inscribed circle from two adjacent angle bisectors.

    The adjacent pair whose interior angles sum smallest is used, which keeps
    the bisectors far from parallel.  Tangency is checked twice: Pitot before,
    equidistance from the two unused sides after.
    """
    if not is_tangential(q, tol_rel):
        raise NotTangential(f"relative Pitot defect {relative_pitot_defect(q):.3e} > {tol_rel:g}")
    half = [math.atan(t) for t in half_angle_tangents(q)]
    i = min(range(4), key=lambda k: half[k] + half[(k + 1) % 4])
    a1, a2 = _bisector(q, i)
    b1, b2 = _bisector(q, i + 1)
    center = line_intersection(a1, a2, b1, b2, tol_parallel=0.0)
    p = q.vertices
    d = [line_distance(center, p[k], p[(k + 1) % 4]) for k in range(4)]
    radius = d[i]
    spread = max(d) - min(d)
    if spread > 100 * tol_rel * q.perimeter():
        raise NotTangential(f"bisectors do not concur: distance spread {spread:.3e}")
    return Incircle(center, radius)


def triangle_inradius(a, b, c) -> float:
    ab, bc, ca = dist(a, b), dist(b, c), dist(c, a)
    semi = 0.5 * (ab + bc + ca)
    area = 0.5 * abs(cross((b[0] - a[0], b[1] - a[1]), (c[0] - a[0], c[1] - a[1])))
    if area <= 1e-14 * semi * semi:
        raise DegenerateTriangle(f"triangle {a}, {b}, {c} has no interior")
    return area / semi


@dataclass(frozen=True)
class Similarity:
    """Orientation-preserving map z -> rot * z + shift on the complex plane."""

    rot: complex
    shift: complex = 0j

    def __post_init__(self):
        if not abs(self.rot) > 0:
            raise ValueError("similarity must have a positive scale")

    @classmethod
    def identity(cls) -> "Similarity":
        return cls(1 + 0j, 0j)

    @property
    def scale(self) -> float:
        return abs(self.rot)

    @property
    def angle(self) -> float:
        return math.atan2(self.rot.imag, self.rot.real)

    def __call__(self, p) -> Point2:
        return apply_similarity(self, p)

    def inverse(self) -> "Similarity":
        inv = 1.0 / self.rot
        return Similarity(inv, -self.shift * inv)

    def compose(self, inner: "Similarity") -> "Similarity":
        """``self`` after ``inner``."""
        return Similarity(self.rot * inner.rot, self.rot * inner.shift + self.shift)

    def apply_quad(self, q: ConvexQuad) -> ConvexQuad:
        return ConvexQuad(self(p) for p in q)


def similarity_from_pairs(src1, src2, dst1, dst2) -> Similarity:
    s1, s2 = complex(*src1), complex(*src2)
    d1, d2 = complex(*dst1), complex(*dst2)
    if s1 == s2 or d1 == d2:
        raise CoincidentPoints("similarity needs two distinct points on each side")
    rot = (d2 - d1) / (s2 - s1)
    return Similarity(rot, d1 - rot * s1)


def apply_similarity(s: Similarity, p) -> Point2:
    z = s.rot * complex(p[0], p[1]) + s.shift
    return Point2(z.real, z.imag)
