"""Tests for lens space classification and the reducible-surgery case analysis."""

from math import gcd

import pytest

from src.lens import (
    LensSpace,
    ball_case_possible,
    cable_case_possible,
    cable_surgery_order,
    case_analysis,
    contains_klein_bottle,
    equivalent_torques,
    lens_equivalent,
    torus_case_possible,
    two_fibre_multiplicity,
)


def _random_lens(rng, p: int) -> LensSpace:
    while True:
        q = rng.randint(-3 * p, 3 * p)
        if gcd(p, q) == 1:
            return LensSpace.of(p, q)


class TestLensSpace:
    def test_sign_normalised(self):
        """Test (p,q) and (-p,-q) are stored alike."""
        assert LensSpace.of(-5, -2) == LensSpace.of(5, 2)

    def test_rejects_non_coprime(self):
        with pytest.raises(ValueError):
            LensSpace.of(4, 2)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            LensSpace.of(0, 1)

    def test_reduced(self):
        assert LensSpace.of(5, -2).reduced() == LensSpace.of(5, 3)
        assert str(LensSpace.of(15, 4)) == "L(15,4)"


class TestLensEquivalent:
    def test_inverse_torque(self):
        """Test q' = q^-1 mod p gives the same space."""
        assert lens_equivalent(LensSpace.of(5, 3), LensSpace.of(5, 2))
        assert lens_equivalent(LensSpace.of(7, 2), LensSpace.of(7, 4))

    def test_representative_torque(self):
        assert lens_equivalent(LensSpace.of(5, -2), LensSpace.of(5, 3))
        assert lens_equivalent(LensSpace.of(3, -1), LensSpace.of(3, 2))

    def test_reversal(self):
        """Test L(5,1) and L(5,4) differ only with orientation."""
        assert not lens_equivalent(LensSpace.of(5, 1), LensSpace.of(5, 4))
        assert lens_equivalent(LensSpace.of(5, 1), LensSpace.of(5, 4), allow_reversal=True)

    def test_different_multiplicity(self):
        assert not lens_equivalent(LensSpace.of(5, 1), LensSpace.of(7, 1))

    def test_torque_classes(self):
        assert equivalent_torques(LensSpace.of(5, 3)) == {2, 3}
        assert equivalent_torques(LensSpace.of(5, 3), allow_reversal=True) == {2, 3}
        assert equivalent_torques(LensSpace.of(7, 2), allow_reversal=True) == {2, 3, 4, 5}

    @pytest.mark.parametrize("allow_reversal", [False, True])
    def test_equivalence_relation(self, rng, allow_reversal):
        """Test lens_equivalent is an equivalence relation on random spaces of one multiplicity."""
        for _ in range(500):
            p = rng.randint(1, 40)
            a, b, c = (_random_lens(rng, p) for _ in range(3))
            assert lens_equivalent(a, a, allow_reversal)
            assert lens_equivalent(a, b, allow_reversal) == lens_equivalent(b, a, allow_reversal)
            if lens_equivalent(a, b, allow_reversal) and lens_equivalent(b, c, allow_reversal):
                assert lens_equivalent(a, c, allow_reversal)

    def test_torque_shift_by_multiplicity(self, rng):
        """Test L(p,q) is L(p,q+p) and L(p,q-p)."""
        for _ in range(500):
            lens = _random_lens(rng, rng.randint(1, 60))
            for shift in (lens.p, -lens.p, 3 * lens.p):
                assert lens_equivalent(lens, LensSpace.of(lens.p, lens.q + shift))

    def test_classes_agree_with_pairwise_test(self, rng):
        """Test equivalent_torques lists exactly the q that lens_equivalent accepts."""
        for _ in range(100):
            lens = _random_lens(rng, rng.randint(2, 40))
            accepted = {
                c for c in range(lens.p)
                if gcd(lens.p, c) == 1 and lens_equivalent(lens, LensSpace.of(lens.p, c))
            }
            assert accepted == equivalent_torques(lens)


class TestKleinBottle:
    def test_family(self):
        """Test L(4k, 2k-1) in either orientation."""
        assert contains_klein_bottle(LensSpace.of(4, 1))
        assert contains_klein_bottle(LensSpace.of(8, 3))
        assert contains_klein_bottle(LensSpace.of(8, 5))
        assert contains_klein_bottle(LensSpace.of(12, 5))

    def test_outside_family(self):
        assert not contains_klein_bottle(LensSpace.of(12, 1))
        assert not contains_klein_bottle(LensSpace.of(15, 4))
        assert not contains_klein_bottle(LensSpace.of(6, 1))


class TestTorusCase:
    def test_headline_excluded(self):
        """Test +-15 is not s1*c2 + c1*s2 mod 15 for L(5,3), L(3,2)."""
        assert not torus_case_possible(15, LensSpace.of(5, 3), LensSpace.of(3, 2))

    def test_possible(self):
        """Test S^2((2,1),(3,1)) has multiplicity 5."""
        assert two_fibre_multiplicity(2, 1, 3, 1) == 5
        assert torus_case_possible(5, LensSpace.of(2, 1), LensSpace.of(3, 1))

    def test_l19_not_excluded(self):
        assert torus_case_possible(19, LensSpace.of(5, 3), LensSpace.of(3, 2))

    def test_preconditions(self):
        with pytest.raises(ValueError):
            torus_case_possible(15, LensSpace.of(4, 1), LensSpace.of(6, 1))
        with pytest.raises(ValueError):
            torus_case_possible(15, LensSpace.of(1, 0), LensSpace.of(3, 1))


class TestCableCase:
    def test_headline_excluded(self):
        """Test 5 | 15 with 5 not dividing 3, and 3 | 15 with 3 not dividing 5."""
        assert not cable_case_possible(15, 5, 3)

    def test_possible(self):
        assert cable_case_possible(7, 5, 3)
        assert cable_case_possible(15, 3, 9)

    def test_equal_multiplicities(self):
        with pytest.raises(ValueError):
            cable_case_possible(15, 3, 3)

    def test_surgery_order(self):
        """Test the determinant of [[q, p*r], [x*r, n]]."""
        assert cable_surgery_order(15, 2, 7, 1, 3) == 15 * 7 - 2 * 9
        assert cable_surgery_order(15, 5, 1, 3, 1) % 5 == 0


class TestBallCase:
    def test_ambient_must_be_summand(self):
        assert ball_case_possible(LensSpace.of(5, 3), [LensSpace.of(5, 2), LensSpace.of(3, 1)])
        assert not ball_case_possible(
            LensSpace.of(15, 4), [LensSpace.of(5, 3), LensSpace.of(3, 2)]
        )


class TestCaseAnalysis:
    def test_headline_all_excluded(self):
        """Test the knot in L(15,4) is hyperbolic: every case is ruled out."""
        report = case_analysis(LensSpace.of(15, 4), [LensSpace.of(5, 3), LensSpace.of(3, 2)])
        assert not (report.ball or report.klein or report.torus or report.cable)
        assert report.all_excluded

    def test_precondition_failure_reports_possible(self):
        report = case_analysis(LensSpace.of(9, 2), [LensSpace.of(3, 1), LensSpace.of(3, 2)])
        assert report.torus
        assert report.cable

    def test_l19(self):
        report = case_analysis(LensSpace.of(19, 4), [LensSpace.of(5, 3), LensSpace.of(3, 2)])
        assert report.torus
        assert not report.all_excluded
