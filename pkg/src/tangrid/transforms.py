"""Square-to-tangential transforms in multiplicative coordinates.

A pre-image point (x, y) is stored as ``MulPoint(P, Q) = (a**x, a**y)`` and a
pre-image square of side l with lower-left corner (x, y) as ``(X, Y, L)``.
The base ``a`` never appears: refining a square means taking fractional
powers of ``L``.

Two transforms are provided:

* ``general_map`` sends horizontal lines to lines through O = (0, 0) and
  vertical lines to lines through (1, 0).  Only the branch PQ > 1 is used.
* ``trapezoid_map`` sends vertical lines to vertical lines and horizontal
  lines to lines through the origin.

Both send every axis-parallel square to a tangential quadrilateral.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Union

from .errors import DomainError, SingularLocus
from .geometry import ConvexQuad, HalfAngleTangents, Point2

SINGULAR_EPS = 1e-14


class MulPoint(NamedTuple):
    P: float
    Q: float


@dataclass(frozen=True)
class GeneralParams:
    X: float
    Y: float
    L: float

    def __post_init__(self):
        if not (self.X > 0 and self.Y > 0):
            raise DomainError(f"X and Y must be positive: {self}")
        if not self.X * self.Y > 1:
            raise DomainError(f"general square must satisfy XY > 1: {self}")
        if not self.L > 1:
            raise DomainError(f"L must exceed 1: {self}")


@dataclass(frozen=True)
class TrapezoidParams:
    X: float
    Y: float
    L: float

    def __post_init__(self):
        if not (self.X > 0 and self.Y > 0):
            raise DomainError(f"X and Y must be positive: {self}")
        if not self.L > 1:
            raise DomainError(f"L must exceed 1: {self}")


Params = Union[GeneralParams, TrapezoidParams]


def general_map(m) -> Point2:
    P, Q = m
    if not (P > 0 and Q > 0):
        raise DomainError(f"multiplicative coordinates must be positive: {m}")
    pq1 = P * Q - 1.0
    if abs(pq1) < SINGULAR_EPS:
        raise SingularLocus(f"PQ = 1 at {m}")
    if pq1 < 0:
        raise DomainError(f"general map is restricted to PQ > 1, got PQ = {P * Q}")
    d = (P + Q) * pq1
    return Point2(P * (Q * Q - 1.0) / d, 2.0 * P * Q / d)


def trapezoid_map(m) -> Point2:
    P, Q = m
    if not (P > 0 and Q > 0):
        raise DomainError(f"multiplicative coordinates must be positive: {m}")
    return Point2(P, 0.5 * P * (Q - 1.0 / Q))


def map_for(p: Params) -> Callable[..., Point2]:
    return general_map if isinstance(p, GeneralParams) else trapezoid_map


def canonical_quad(p: Params) -> ConvexQuad:
    """Image of the square (X, Y, L) as A', B', C', D' (counterclockwise)."""
    f = map_for(p)
    X, Y, L = p.X, p.Y, p.L
    return ConvexQuad((f((X, Y)), f((X * L, Y)), f((X * L, Y * L)), f((X, Y * L))))


def side_length_oracle(p: Params) -> tuple[float, float, float, float]:
    """Closed-form side lengths A'B', B'C', C'D', D'A'."""
    X, Y, L = p.X, p.Y, p.L
    if isinstance(p, TrapezoidParams):
        k = X * (L - 1.0) / (2.0 * Y)
        return (
            k * (1.0 + Y * Y),
            k * (1.0 + Y * Y * L),
            k * (1.0 + Y * Y * L * L) / L,
            k * (1.0 + Y * Y * L) / L,
        )
    XY = X * Y
    k = XY * (L - 1.0) / (X + Y)
    ab = k * (Y * Y + 1) * (X * X * L + 1) / ((XY - 1) * (X * L + Y) * (XY * L - 1))
    bc = k * (Y * Y * L + 1) * (X * X * L * L + 1) / ((X * L + Y) * (XY * L - 1) * (XY * L * L - 1))
    cd = k * (Y * Y * L * L + 1) * (X * X * L + 1) / ((X + Y * L) * (XY * L - 1) * (XY * L * L - 1))
    da = k * (1 + X * X) * (Y * Y * L + 1) / ((XY - 1) * (X + Y * L) * (XY * L - 1))
    return ab, bc, cd, da


def tangents_oracle(p: GeneralParams) -> HalfAngleTangents:
    """Half-angle tangents at A', B', C', D' of ``canonical_quad(p)`` in closed form."""
    X, Y, L = p.X, p.Y, p.L
    XYL1 = X * Y * L - 1
    return HalfAngleTangents(
        (X * Y - 1) / (X + Y),
        (X * L + Y) / XYL1,
        (X * Y * L * L - 1) / (L * (X + Y)),
        (X + Y * L) / XYL1,
    )


def inradius_oracle(p: Params) -> float:
    X, Y, L = p.X, p.Y, p.L
    if isinstance(p, TrapezoidParams):
        # half the gap between the vertical sides u = X and u = XL
        return 0.5 * X * (L - 1.0)
    return X * Y * (L - 1.0) / ((X + Y) * (X * Y * L - 1.0))


def abscissa_oracle(p: GeneralParams) -> float:
    """Common u-coordinate of the incenter, diagonal point and 2x2 center.

    The expression is written for the whole quadrilateral (X, Y, L); in terms
    of the 2x2 cell side l = sqrt(L) it reads X(l^2 Y^2 - 1) / ((X+Y)(XY l^2 - 1)).
    """
    X, Y, L = p.X, p.Y, p.L
    return X * (L * Y * Y - 1.0) / ((X + Y) * (X * Y * L - 1.0))


def local_condition_residual(kind: str, m, h: float = 1e-5) -> float:
    """Normalized central-difference residual of  f_x^2 + g_x^2 = f_y^2 + g_y^2.

    ``kind`` is ``"general"`` or ``"trapezoid"``.  Derivatives are taken in the
    additive coordinates x = ln P, y = ln Q.
    """
    P, Q = m
    if not (P > 0 and Q > 0):
        raise DomainError(f"multiplicative coordinates must be positive: {m}")
    if kind == "general":
        f = general_map
        # x + y = ln(PQ) must stay clear of 0 across the whole stencil
        if math.log(P * Q) < 10 * h:
            raise SingularLocus(f"point {m} within 10h of the singular line")
    elif kind == "trapezoid":
        f = trapezoid_map
    else:
        raise ValueError(f"unknown transform kind {kind!r}")
    x, y = math.log(P), math.log(Q)

    def at(xx: float, yy: float) -> Point2:
        return f((math.exp(xx), math.exp(yy)))

    px, mx = at(x + h, y), at(x - h, y)
    py, my = at(x, y + h), at(x, y - h)
    fx, gx = (px.u - mx.u) / (2 * h), (px.v - mx.v) / (2 * h)
    fy, gy = (py.u - my.u) / (2 * h), (py.v - my.v) / (2 * h)
    lhs = fx * fx + gx * gx
    rhs = fy * fy + gy * gy
    return abs(lhs - rhs) / (lhs + rhs)
