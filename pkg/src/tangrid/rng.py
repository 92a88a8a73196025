"""Seeded test-corpus generation.

The generator is xorshift64* (Vigna 2014, multiplier 0x2545F4914F6CDD1D)
seeded through one splitmix64 step, so corpora are identical across Python
versions and platforms.
"""

from __future__ import annotations

import math
from typing import Sequence

from .errors import GapInfeasible, TangridError
from .geometry import ConvexQuad, Point2

MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


class XorShift64Star:
    def __init__(self, seed: int):
        self.state = splitmix64(seed & MASK64) or 0x9E3779B97F4A7C15

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & MASK64

    def random(self) -> float:
        """Uniform double in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.random()


def tangential_from_angles(angles: Sequence[float]) -> ConvexQuad:
    """Quad circumscribed about the unit circle, touching it at the given angles.

    Consecutive tangent lines x cos(t) + y sin(t) = 1 meet at
    (cos m, sin m) / cos(g/2), with m the mean angle and g the gap.
    """
    th = sorted(angles)
    pts = []
    for i in range(4):
        a = th[i]
        b = th[(i + 1) % 4] + (2 * math.pi if i == 3 else 0.0)
        mid, half = 0.5 * (a + b), 0.5 * (b - a)
        r = 1.0 / math.cos(half)
        pts.append(Point2(r * math.cos(mid), r * math.sin(mid)))
    return ConvexQuad(pts)


def _gaps(th: Sequence[float]) -> list[float]:
    return [th[1] - th[0], th[2] - th[1], th[3] - th[2], 2 * math.pi - th[3] + th[0]]


def random_tangential(seed: int, count: int, min_gap: float = 0.15) -> list[ConvexQuad]:
    if count < 1:
        raise ValueError("count must be positive")
    if not min_gap > 0 or 4 * min_gap >= 2 * math.pi:
        raise GapInfeasible(f"min_gap {min_gap} leaves no room for four gaps")
    rng = XorShift64Star(seed)
    out = []
    while len(out) < count:
        th = sorted(rng.uniform(0.0, 2 * math.pi) for _ in range(4))
        if all(min_gap < g < math.pi - min_gap for g in _gaps(th)):
            out.append(tangential_from_angles(th))
    return out


def random_convex(seed: int, count: int, min_gap: float = 0.3) -> list[ConvexQuad]:
    """Convex quads with vertices on a jittered circle; generically not tangential."""
    rng = XorShift64Star(seed)
    out = []
    while len(out) < count:
        th = sorted(rng.uniform(0.0, 2 * math.pi) for _ in range(4))
        if not all(min_gap < g < math.pi - min_gap for g in _gaps(th)):
            continue
        pts = []
        for t in th:
            r = rng.uniform(0.6, 1.4)
            pts.append((r * math.cos(t), r * math.sin(t)))
        try:
            out.append(ConvexQuad(pts))
        except TangridError:
            continue
    return out


def random_similarity_params(rng: XorShift64Star, log_scale: float = 3.0) -> tuple[complex, complex]:
    """Rotation-scale factor with scale in [10^-log_scale, 10^log_scale] and a shift."""
    scale = 10.0 ** rng.uniform(-log_scale, log_scale)
    ang = rng.uniform(0.0, 2 * math.pi)
    rot = complex(scale * math.cos(ang), scale * math.sin(ang))
    shift = complex(rng.uniform(-10, 10), rng.uniform(-10, 10))
    return rot, shift
