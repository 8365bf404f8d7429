"""
Tests for relative positivity, the line-class pairing and the twist criteria.

The twist criteria are property-tested against the direct intersection check
over a small grid of integral divisors.
"""
from fractions import Fraction
from itertools import combinations, product

import pytest

from toric_mori.fan import interior_walls, is_smooth
from toric_mori.mori import extremal_rays, intersection_number
from toric_mori.positivity import (
    NotQCartierError, PositivityError, TorusDivisor, cartier_data, principal_divisor,
    pullback_divisor,
)
from toric_mori.positivity.criteria import (
    NotAmpleError, NotSmoothError, Positivity, TwistVerdict, find_relatively_ample_divisor,
    line_class_pairing, mustata_one_divisor, mustata_two_divisor, relative_positivity,
    twist_free_bound,
)
from tests.helpers import p121_to_point, small_target_fan, ATIYAH_U4


def _divisor(*coeffs) -> TorusDivisor:
    return TorusDivisor(tuple(Fraction(c) for c in coeffs))


def _ample_grid(m, bound=2):
    """Integral divisors with coefficients in [-bound, bound] that are f-ample."""
    num_rays = len(m.source.rays)
    for coeffs in product(range(-bound, bound + 1), repeat=num_rays):
        divisor = _divisor(*coeffs)
        if relative_positivity(m, divisor).verdict == Positivity.AMPLE:
            yield divisor


class TestCartierData:
    """Test local Cartier data, principal divisors and pullbacks."""

    def test_p121_anticanonical_is_cartier(self, p121):
        """Verify -K on P(1,2,1) has integral local data."""
        data = cartier_data(p121, TorusDivisor.anticanonical(3))
        assert data.cartier
        assert data.on((1, 2)) == (Fraction(3), Fraction(-1))

    def test_p121_prime_divisor_is_only_q_cartier(self, p121):
        """Verify D_0 on P(1,2,1) needs a denominator."""
        assert not cartier_data(p121, TorusDivisor.prime(3, 0)).cartier

    def test_general_cone_not_q_cartier(self):
        """Verify D_0 on the quadric cone is not Q-Cartier."""
        with pytest.raises(NotQCartierError):
            cartier_data(small_target_fan(ATIYAH_U4), TorusDivisor.prime(4, 0))

    def test_principal_divisors_are_numerically_trivial(self, f1):
        """Verify div(chi^u) meets every wall curve in zero."""
        for u in ((1, 0), (0, 1), (2, -3)):
            divisor = principal_divisor(f1, u)
            assert divisor.coeffs == tuple(Fraction(u[0] * r[0] + u[1] * r[1]) for r in f1.rays)
            for wall in interior_walls(f1):
                assert intersection_number(f1, divisor, wall) == 0

    def test_pullback_from_p1(self, p1xp1_to_p1):
        """Verify the pullback of a point of P^1 is a fiber of P1 x P1."""
        assert pullback_divisor(p1xp1_to_p1, TorusDivisor.prime(2, 0)) == _divisor(1, 0, 0, 0)
        assert pullback_divisor(p1xp1_to_p1, TorusDivisor.prime(2, 1)) == _divisor(0, 1, 0, 0)

    def test_divisor_length_checked(self, p2):
        """Verify a divisor with the wrong number of coefficients is refused."""
        with pytest.raises(ValueError):
            cartier_data(p2, TorusDivisor.zero(4))


class TestRelativePositivity:
    """Test the nef / ample verdicts."""

    def test_f1_anticanonical(self, f1_to_point):
        """Verify -K on F1 is ample with values 2, 2, 3, 1."""
        result = relative_positivity(f1_to_point, TorusDivisor.anticanonical(4))
        assert result.verdict == Positivity.AMPLE
        assert [v for _, v in result.values] == [2, 2, 3, 1]
        assert result.free is True

    def test_nef_not_ample(self, f1_to_point):
        """Verify the pullback of a line is nef but not ample on F1."""
        result = relative_positivity(f1_to_point, _divisor(0, 0, 1, 0))
        assert result.verdict == Positivity.NEF_NOT_AMPLE
        assert result.witness.face == (3,)
        assert result.free is True

    def test_not_nef(self, f1_to_point):
        """Verify the exceptional divisor is not nef."""
        result = relative_positivity(f1_to_point, TorusDivisor.prime(4, 3))
        assert result.verdict == Positivity.NOT_NEF
        assert result.witness.face == (3,)
        assert result.free is False

    def test_fractional_divisor(self, f1_to_point):
        """Verify freeness is left undecided for non-integral divisors."""
        result = relative_positivity(f1_to_point, _divisor(0, 0, "1/2", "1/2"))
        assert result.verdict == Positivity.NOT_NEF
        assert result.free is None

    def test_p121_anticanonical(self):
        """Verify -K on P(1,2,1) is ample and free."""
        result = relative_positivity(p121_to_point(), TorusDivisor.anticanonical(3))
        assert result.verdict == Positivity.AMPLE
        assert result.free is True

    def test_pullback_does_not_change_verdict(self, p1xp1_to_p1):
        """Verify adding f^*D leaves relative positivity unchanged."""
        m = p1xp1_to_p1
        for d in (TorusDivisor.prime(2, 0), _divisor(-3, 2)):
            pulled = pullback_divisor(m, d)
            for coeffs in product(range(-1, 2), repeat=4):
                divisor = _divisor(*coeffs)
                before = relative_positivity(m, divisor)
                after = relative_positivity(m, divisor + pulled)
                assert before.verdict == after.verdict
                assert [v for _, v in before.values] == [v for _, v in after.values]

    def test_relative_ampleness_is_weaker(self, p1xp1_to_p1):
        """Verify a section of P1 x P1 over P^1 is relatively ample."""
        result = relative_positivity(p1xp1_to_p1, _divisor(0, 0, 1, 0))
        assert result.verdict == Positivity.AMPLE


class TestLineClassPairing:
    """Test (D . C_R) on smooth sources."""

    def test_maximum_is_one(self, fixture_morphisms):
        """Verify max over v of D_v . C_R is 1 on smooth fixtures."""
        for name, m in fixture_morphisms.items():
            if not is_smooth(m.source):
                continue
            num_rays = len(m.source.rays)
            for ray in extremal_rays(m):
                values = [line_class_pairing(m, ray, TorusDivisor.prime(num_rays, v)) for v in range(num_rays)]
                assert max(values) == 1, name

    def test_anticanonical_degree(self, f1_to_point):
        """Verify -K . C_R is the degree of the relation."""
        minus_k = TorusDivisor.anticanonical(4)
        assert [line_class_pairing(f1_to_point, r, minus_k) for r in (0, 1)] == [2, 1]

    def test_singular_refused(self):
        """Verify P(1,2,1) is refused."""
        with pytest.raises(NotSmoothError, match="C_R pairing requires smooth X"):
            line_class_pairing(p121_to_point(), 0, TorusDivisor.anticanonical(3))


class TestTwistFreeBound:
    """Test the twist bound for f-free divisors."""

    def test_f1_anticanonical(self, f1_to_point):
        """Verify the minimum is 0 and every twist L(-D_v) is f-free."""
        report = twist_free_bound(f1_to_point, TorusDivisor.anticanonical(4), 1)
        assert report.hypothesis_holds
        assert report.pairings == [2, 1]
        assert report.min_twist_value == 0
        assert report.certified
        assert report.free_twists == [0, 1, 2, 3]

    def test_hypothesis_fails(self, f1_to_point):
        """Verify t = 2 fails on the exceptional ray of F1."""
        report = twist_free_bound(f1_to_point, TorusDivisor.anticanonical(4), 2)
        assert not report.hypothesis_holds
        assert report.violating_ray == 1

    def test_p2_o2(self, p2_to_point):
        """Verify O(2) on P^2 satisfies t = 2 with minimum 1."""
        report = twist_free_bound(p2_to_point, TorusDivisor.prime(3, 0).scaled(2), 2)
        assert report.hypothesis_holds
        assert report.min_twist_value == 1
        assert report.certified
        assert report.free_twists is None

    def test_bound_holds_on_grid(self, f1_to_point):
        """Verify the conclusion for every t-positive divisor in the grid."""
        for coeffs in product(range(-1, 3), repeat=4):
            divisor = _divisor(*coeffs)
            for t in (1, 2):
                report = twist_free_bound(f1_to_point, divisor, t)
                if report.hypothesis_holds:
                    assert report.certified

    def test_bad_t(self, f1_to_point):
        """Verify t must be positive."""
        with pytest.raises(ValueError):
            twist_free_bound(f1_to_point, TorusDivisor.anticanonical(4), 0)

    def test_fractional_refused(self, f1_to_point):
        """Verify non-integral divisors are refused."""
        with pytest.raises(PositivityError, match="integral"):
            twist_free_bound(f1_to_point, _divisor(0, 0, "1/2", "1/2"), 1)


class TestTwistCriteria:
    """Test the two-divisor freeness and one-divisor ampleness criteria."""

    def test_f1_two_divisor_not_free(self, f1_to_point):
        """Verify L(-D_0-D_1) is not f-free on F1 with witness ray 1."""
        result = mustata_two_divisor(f1_to_point, TorusDivisor.anticanonical(4), 0, 1)
        assert result.verdict == TwistVerdict.NOT_FREE
        assert result.witness_ray == 1
        assert not result.direct.nef

    def test_f1_two_divisor_free(self, f1_to_point):
        """Verify L(-D_2-D_3) is f-free: the ruling has L . C_R = 2."""
        result = mustata_two_divisor(f1_to_point, TorusDivisor.anticanonical(4), 2, 3)
        assert result.verdict == TwistVerdict.FREE
        assert result.witness_ray is None

    def test_p2_one_divisor(self, p2_to_point):
        """Verify O(2)(-D_0) stays ample on P^2."""
        result = mustata_one_divisor(p2_to_point, TorusDivisor.prime(3, 0).scaled(2), 0)
        assert result.verdict == TwistVerdict.AMPLE
        assert result.witness_ray is None

    def test_p2_one_divisor_not_ample(self, p2_to_point):
        """Verify O(1)(-D_0) is not ample on P^2."""
        result = mustata_one_divisor(p2_to_point, TorusDivisor.prime(3, 0), 0)
        assert result.verdict == TwistVerdict.NOT_AMPLE
        assert result.witness_ray == 0

    def test_requires_ample(self, f1_to_point):
        """Verify a divisor that is not f-ample is refused."""
        with pytest.raises(NotAmpleError, match="criterion requires f-ample L"):
            mustata_two_divisor(f1_to_point, TorusDivisor.prime(4, 0), 0, 1)

    def test_requires_distinct_rays(self, f1_to_point):
        """Verify a repeated ray is refused."""
        with pytest.raises(PositivityError):
            mustata_two_divisor(f1_to_point, TorusDivisor.anticanonical(4), 2, 2)

    def test_requires_smooth(self):
        """Verify singular sources are refused."""
        with pytest.raises(NotSmoothError):
            mustata_one_divisor(p121_to_point(), TorusDivisor.anticanonical(3), 0)

    @pytest.mark.parametrize("name", [
        "p2_to_point", "f1_to_point", "p1xp1_to_p1", "blowup_to_a2", "atiyah_flop", "weighted_flip",
    ])
    def test_criteria_agree_with_direct_check(self, fixture_morphisms, name):
        """Verify both criteria agree with intersection numbers for every f-ample grid divisor."""
        m = fixture_morphisms[name]
        num_rays = len(m.source.rays)
        checked = 0
        for divisor in _ample_grid(m):
            for v1, v2 in combinations(range(num_rays), 2):
                result = mustata_two_divisor(m, divisor, v1, v2)
                twisted = divisor - TorusDivisor.prime(num_rays, v1) - TorusDivisor.prime(num_rays, v2)
                assert (result.verdict == TwistVerdict.FREE) == relative_positivity(m, twisted).nef
            for v in range(num_rays):
                result = mustata_one_divisor(m, divisor, v)
                twisted = divisor - TorusDivisor.prime(num_rays, v)
                expected = relative_positivity(m, twisted).verdict == Positivity.AMPLE
                assert (result.verdict == TwistVerdict.AMPLE) == expected
            checked += 1
        assert checked > 0


class TestFindAmpleDivisor:
    """Test the search for a relatively ample divisor."""

    def test_anticanonical_first(self, f1_to_point, blowup_to_a2):
        """Verify -K is returned when it is f-ample."""
        assert find_relatively_ample_divisor(f1_to_point, 2, 8) == TorusDivisor.anticanonical(4)
        assert find_relatively_ample_divisor(blowup_to_a2, 2, 8) == TorusDivisor.anticanonical(3)

    def test_grid_search_for_flop(self, atiyah):
        """Verify a flop, where -K is trivial on the ray, still has an ample divisor."""
        divisor = find_relatively_ample_divisor(atiyah, 2, 8)
        assert divisor is not None
        assert divisor != TorusDivisor.anticanonical(4)
        assert relative_positivity(atiyah, divisor).verdict == Positivity.AMPLE

    def test_ray_limit(self, atiyah):
        """Verify the grid is skipped beyond the ray limit."""
        assert find_relatively_ample_divisor(atiyah, 2, 3) is None
