import math
from fractions import Fraction as Fr

import pytest

from tangrid.errors import DomainError, SingularLocus
from tangrid.geometry import cross, dist, incircle, pitot_defect
from tangrid.rng import XorShift64Star
from tangrid.transforms import (
    GeneralParams,
    MulPoint,
    TrapezoidParams,
    abscissa_oracle,
    canonical_quad,
    general_map,
    inradius_oracle,
    local_condition_residual,
    side_length_oracle,
    trapezoid_map,
)

from conftest import SQRT2, exact_sides, exact_vertices


def random_general(rng, lo=1.05):
    while True:
        X = 10 ** rng.uniform(-0.7, 0.7)
        Y = 10 ** rng.uniform(-0.7, 0.7)
        if X * Y >= lo:
            return GeneralParams(X, Y, 1 + 10 ** rng.uniform(math.log10(lo - 1), 0.6))


class TestGeneralMap:
    @pytest.mark.parametrize("m, expected", [
        ((2, 2), (1 / 2, 2 / 3)),
        ((4, 2), (2 / 7, 8 / 21)),
        ((4, 4), (1 / 2, 4 / 15)),
    ])
    def test_examples(self, m, expected):
        assert general_map(MulPoint(*m)) == pytest.approx(expected, abs=1e-15)

    def test_singular(self):
        with pytest.raises(SingularLocus):
            general_map((2.0, 0.5))

    def test_lower_branch_rejected(self):
        with pytest.raises(DomainError):
            general_map((0.5, 0.5))

    def test_upper_branch_positive_ordinate(self):
        rng = XorShift64Star(3)
        for _ in range(500):
            P = 10 ** rng.uniform(-2, 2)
            Q = (1 + 10 ** rng.uniform(-6, 1)) / P
            assert general_map((P, Q)).v > 0


class TestTrapezoidMap:
    def test_examples(self):
        L = 1 + SQRT2
        assert trapezoid_map((1, 1)) == (1, 0)
        assert trapezoid_map((L, 1)) == pytest.approx((L, 0), abs=1e-15)
        assert trapezoid_map((L, L)) == pytest.approx((L, (L * L - 1) / 2), abs=1e-14)
        assert trapezoid_map((L, L)) == pytest.approx((2.414214, 2.414214), abs=1e-6)


class TestCanonicalQuad:
    def test_f1(self, f1):
        q = canonical_quad(GeneralParams(2, 2, 2))
        exact = exact_vertices(Fr(2), Fr(2), Fr(2))
        for p, e, f in zip(q, exact, f1):
            assert p == pytest.approx((float(e[0]), float(e[1])), abs=1e-15)
            assert p == pytest.approx(f, abs=1e-15)
        assert q.is_ccw()

    def test_f3(self, f3):
        q = canonical_quad(TrapezoidParams(1, 1, 1 + SQRT2))
        for p, e in zip(q, f3):
            assert p == pytest.approx(e, abs=1e-14)

    def test_f2_vertices_and_anchors(self, f2):
        exact = exact_vertices(Fr(2), Fr(2), Fr(4))
        assert exact == [(Fr(1, 2), Fr(2, 3)), (Fr(4, 25), Fr(16, 75)), (Fr(1, 2), Fr(8, 63)), (Fr(21, 25), Fr(16, 75))]
        for p, e in zip(f2, exact):
            assert p == pytest.approx((float(e[0]), float(e[1])), abs=1e-15)
        a, b, c, d = f2
        # A'B' and C'D' through O, B'C' and D'A' through (1, 0)
        assert abs(cross(a, b)) <= 1e-15 and abs(cross(c, d)) <= 1e-15
        assert abs(cross(b - (1, 0), c - (1, 0))) <= 1e-15
        assert abs(cross(d - (1, 0), a - (1, 0))) <= 1e-15

    def test_tangential_sweep(self):
        rng = XorShift64Star(11)
        for _ in range(2000):
            q = canonical_quad(random_general(rng))
            assert q.is_ccw()
            assert abs(pitot_defect(q)) <= 1e-11 * q.perimeter()
        for _ in range(500):
            p = TrapezoidParams(10 ** rng.uniform(-1, 1), 10 ** rng.uniform(-1, 1), 1 + 10 ** rng.uniform(-1.3, 0.6))
            q = canonical_quad(p)
            assert q.is_ccw()
            assert abs(pitot_defect(q)) <= 1e-11 * q.perimeter()


class TestSideLengths:
    def test_f1_exact(self):
        X = Y = L = Fr(2)
        assert exact_sides(X, Y, L) == (Fr(5, 14), Fr(17, 70), Fr(17, 70), Fr(5, 14))
        assert side_length_oracle(GeneralParams(2, 2, 2)) == pytest.approx((5 / 14, 17 / 70, 17 / 70, 5 / 14), abs=1e-15)

    def test_exact_squares_match_distances(self):
        # both routes exact in rationals: closed forms squared vs squared vertex distances
        for X, Y, L in [(2, 2, 2), (2, 2, 4), (3, Fr(1, 2), Fr(5, 2)), (Fr(7, 5), Fr(9, 4), Fr(11, 10))]:
            X, Y, L = Fr(X), Fr(Y), Fr(L)
            v = exact_vertices(X, Y, L)
            sides = exact_sides(X, Y, L)
            for i in range(4):
                a, b = v[i], v[(i + 1) % 4]
                assert (a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2 == sides[i] ** 2
            assert sides[0] + sides[2] == sides[1] + sides[3]

    def test_trapezoid(self):
        L = 1 + SQRT2
        got = side_length_oracle(TrapezoidParams(1, 1, L))
        assert got == pytest.approx((SQRT2, (L * L - 1) / 2, 2, 1), rel=1e-14)
        assert (L * L - 1) / 2 == pytest.approx(1 + SQRT2)

    def test_f2_pitot(self):
        s = side_length_oracle(GeneralParams(2, 2, 4))
        assert s[0] + s[2] == pytest.approx(s[1] + s[3], abs=1e-12)

    def test_sweep_against_euclid(self):
        rng = XorShift64Star(12)
        worst = worst_pitot = 0.0
        for _ in range(10_000):
            p = random_general(rng)
            q = canonical_quad(p)
            s = side_length_oracle(p)
            worst = max(worst, max(abs(a - b) / b for a, b in zip(q.sides(), s)))
            worst_pitot = max(worst_pitot, abs(s[0] + s[2] - s[1] - s[3]) / sum(s))
        assert worst <= 1e-12
        assert worst_pitot <= 1e-12


class TestInradiusOracle:
    def test_values(self):
        assert inradius_oracle(GeneralParams(2, 2, 2)) == pytest.approx(1 / 7, rel=1e-15)
        assert inradius_oracle(GeneralParams(2, 2, 4)) == pytest.approx(1 / 5, rel=1e-15)

    def test_limit(self):
        X, Y = 2.0, 3.0
        r = inradius_oracle(GeneralParams(X, Y, 1 + 1e-6))
        assert r == pytest.approx(X * Y * 1e-6 / ((X + Y) * (X * Y - 1)), rel=1e-5)
        radii = [inradius_oracle(GeneralParams(X, Y, 1 + 10.0 ** -k)) for k in range(1, 8)]
        assert all(a > b for a, b in zip(radii, radii[1:]))

    def test_against_bisectors(self):
        rng = XorShift64Star(13)
        for _ in range(500):
            p = random_general(rng)
            assert inradius_oracle(p) == pytest.approx(incircle(canonical_quad(p)).radius, rel=1e-10)
        tp = TrapezoidParams(1.3, 0.7, 2.2)
        assert inradius_oracle(tp) == pytest.approx(incircle(canonical_quad(tp)).radius, rel=1e-12)


class TestAbscissaOracle:
    def test_values(self):
        assert abscissa_oracle(GeneralParams(2, 2, 2)) == pytest.approx(0.5, abs=1e-15)
        assert abscissa_oracle(GeneralParams(2, 2, 4)) == pytest.approx(0.5, abs=1e-15)

    def test_symmetric(self):
        for X in (1.1, 2.0, 7.5):
            for L in (1.01, 2.0, 30.0):
                assert abscissa_oracle(GeneralParams(X, X, L)) == pytest.approx(0.5, abs=1e-14)

    def test_matches_incenter(self):
        rng = XorShift64Star(14)
        for _ in range(500):
            p = random_general(rng)
            assert abscissa_oracle(p) == pytest.approx(incircle(canonical_quad(p)).center.u, abs=1e-10)

    def test_written_with_cell_side(self):
        # the same number from the 2x2 cell side l = sqrt(L)
        X, Y, L = 1.7, 3.1, 2.5
        l = math.sqrt(L)
        cell_form = X * (l**2 * Y**2 - 1) / ((X + Y) * (X * Y * l**2 - 1))
        assert abscissa_oracle(GeneralParams(X, Y, L)) == pytest.approx(cell_form, rel=1e-14)


class TestLocalCondition:
    def test_general_point(self):
        assert local_condition_residual("general", (2, 2), 1e-5) <= 1e-8

    def test_trapezoid_point(self):
        assert local_condition_residual("trapezoid", (3, 0.5), 1e-5) <= 1e-8

    def test_general_sweep(self):
        rng = XorShift64Star(15)
        worst = 0.0
        for _ in range(100):
            P = 10 ** rng.uniform(-1, 1)
            Q = 10 ** rng.uniform(math.log10(1.1 / P), 1.5)
            worst = max(worst, local_condition_residual("general", (P, Q), 1e-5))
        assert worst <= 1e-7

    def test_singular_guard(self):
        with pytest.raises(SingularLocus):
            local_condition_residual("general", (2.0, 0.5 * (1 + 1e-6)), 1e-5)

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            local_condition_residual("affine", (2, 2))


class TestGridLines:
    def test_general_rows_through_origin_columns_through_p(self):
        rng = XorShift64Star(16)
        for _ in range(200):
            p = random_general(rng)
            Ps = [p.X * p.L ** (k / 4) for k in range(5)]
            Qs = [p.Y * p.L ** (k / 4) for k in range(5)]
            for Q in Qs:
                pts = [general_map((P, Q)) for P in Ps]
                d = pts[-1]
                for x in pts:
                    assert abs(cross(d, x)) / math.hypot(*d) <= 1e-10 * math.hypot(*x)
            for P in Ps:
                pts = [general_map((P, Q)) - (1, 0) for Q in Qs]
                d = pts[-1]
                for x in pts:
                    assert abs(cross(d, x)) / math.hypot(*d) <= 1e-10 * math.hypot(*(x + (1, 0)))

    def test_trapezoid_verticals_and_rays(self):
        for P in (0.5, 1.0, 3.0):
            us = {trapezoid_map((P, Q)).u for Q in (0.3, 1.0, 2.0, 5.0)}
            assert us == {P}
        for Q in (0.3, 1.0, 2.0):
            slopes = [trapezoid_map((P, Q)).v / P for P in (0.5, 1.0, 3.0)]
            assert max(slopes) - min(slopes) <= 1e-15
            # leg slope of the image square
            assert slopes[0] == pytest.approx((Q * Q - 1) / (2 * Q), rel=1e-14)
