import math

import pytest

from tangrid.geometry import ConvexQuad
from tangrid.rng import random_tangential
from tangrid.transforms import GeneralParams, canonical_quad

SQRT2 = math.sqrt(2.0)


def exact_vertices(X, Y, L):
    """Vertex formulas of the image square, written out term by term."""
    A = (X * (Y**2 - 1) / ((X + Y) * (X * Y - 1)), 2 * X * Y / ((X + Y) * (X * Y - 1)))
    B = (L * X * (Y**2 - 1) / ((L * X + Y) * (L * X * Y - 1)), 2 * L * X * Y / ((L * X + Y) * (L * X * Y - 1)))
    C = (L * X * (L**2 * Y**2 - 1) / ((L * X + L * Y) * (L**2 * X * Y - 1)),
         2 * L**2 * X * Y / ((L * X + L * Y) * (L**2 * X * Y - 1)))
    D = (X * (L**2 * Y**2 - 1) / ((X + L * Y) * (L * X * Y - 1)), 2 * L * X * Y / ((X + L * Y) * (L * X * Y - 1)))
    return [A, B, C, D]


def exact_sides(X, Y, L):
    ab = X * Y * (L - 1) * (Y**2 + 1) * (X**2 * L + 1) / ((X + Y) * (X * Y - 1) * (X * L + Y) * (X * Y * L - 1))
    bc = X * Y * (L - 1) * (Y**2 * L + 1) * (X**2 * L**2 + 1) / (
        (X + Y) * (X * L + Y) * (X * Y * L - 1) * (X * Y * L**2 - 1))
    cd = X * Y * (L - 1) * (Y**2 * L**2 + 1) * (X**2 * L + 1) / (
        (X + Y) * (X + Y * L) * (X * Y * L - 1) * (X * Y * L**2 - 1))
    da = X * Y * (1 + X**2) * (L - 1) * (Y**2 * L + 1) / ((X + Y) * (X * Y - 1) * (X + Y * L) * (X * Y * L - 1))
    return ab, bc, cd, da


def exact_inradius(X, Y, L):
    """Twice the shoelace area over the perimeter, in exact rationals."""
    v = exact_vertices(X, Y, L)
    area2 = sum(v[i][0] * v[(i + 1) % 4][1] - v[(i + 1) % 4][0] * v[i][1] for i in range(4))
    return abs(area2) / sum(exact_sides(X, Y, L))


@pytest.fixture
def unit_square():
    return ConvexQuad([(0, 0), (1, 0), (1, 1), (0, 1)])


@pytest.fixture
def rect21():
    return ConvexQuad([(0, 0), (2, 0), (2, 1), (0, 1)])


@pytest.fixture
def f1():
    """Image of the square X = Y = L = 2 under the general map."""
    return ConvexQuad([(1 / 2, 2 / 3), (2 / 7, 8 / 21), (1 / 2, 4 / 15), (5 / 7, 8 / 21)])


@pytest.fixture
def f2():
    return canonical_quad(GeneralParams(2.0, 2.0, 4.0))


@pytest.fixture
def f3():
    """Right tangential trapezoid with legs of slope 0 and 1 through the origin."""
    return ConvexQuad([(1, 0), (1 + SQRT2, 0), (1 + SQRT2, 1 + SQRT2), (1, 1)])


@pytest.fixture(scope="session")
def corpus():
    return random_tangential(2024, 500)
