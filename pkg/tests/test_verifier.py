"""Tests for the single-tuple slack operations and sharpness."""

from fractions import Fraction

import pytest

from digitsum_crunchtools.errors import ConstraintError, InvalidBaseError, NegativeValueError
from digitsum_crunchtools.verifier import (
    approx_convexity_h_slack,
    extremal_identities,
    extremal_k,
    general_bound_average_slack,
    general_bound_slack,
    lev_slack,
    sharpness_closed_form,
    sharpness_ratio,
    superadditivity_slack,
    ternary_slack,
    times_b_slack,
)


class TestSuperadditivity:
    """Tests for superadditivity_slack()."""

    def test_examples(self) -> None:
        """Equality at (0, 0), (1, 2) and (3, 2) in base 2."""
        assert superadditivity_slack(0, 0, 5).slack == 0
        assert superadditivity_slack(1, 2, 2).slack == 0
        assert superadditivity_slack(3, 2, 2).slack == 0

    def test_power_of_base_equality(self) -> None:
        """n = b^p and m < n is an equality."""
        for b in (2, 3, 5):
            for p in range(4):
                n = b**p
                assert all(superadditivity_slack(m, n, b).is_equality for m in range(n))

    def test_inputs_recorded(self) -> None:
        """The residual carries the checked tuple."""
        assert superadditivity_slack(4, 7, 3).inputs == (4, 7)

    def test_rejects_negative(self) -> None:
        """Arguments must be natural numbers."""
        with pytest.raises(NegativeValueError):
            superadditivity_slack(-1, 2, 2)

    def test_rejects_base(self) -> None:
        """Base must be at least 2."""
        with pytest.raises(InvalidBaseError):
            superadditivity_slack(1, 2, 1)


class TestTernary:
    """Tests for ternary_slack()."""

    def test_zero_shifts(self) -> None:
        """k = l = 0 leaves nothing to bound."""
        assert all(ternary_slack(0, 0, m).slack == 0 for m in range(30))

    def test_equality_at_k_equals_m(self) -> None:
        """k = l = m is an equality."""
        assert all(ternary_slack(m, m, m).slack == 0 for m in range(1, 40))
        assert ternary_slack(2, 2, 2).slack == 0

    def test_rejects_order(self) -> None:
        """l <= k <= m is required."""
        with pytest.raises(ConstraintError):
            ternary_slack(1, 2, 3)
        with pytest.raises(ConstraintError):
            ternary_slack(4, 1, 3)


class TestGeneralBound:
    """Tests for general_bound_slack() and its average form."""

    def test_examples(self) -> None:
        """k = 0 and the dyadic extremal case are equalities."""
        assert general_bound_slack(9, 0, 4).slack == 0
        assert general_bound_slack(2, 2, 2).slack == 0

    def test_extremal_family_base_3(self) -> None:
        """At m = k = k_n in base 3 the slack is (b-1)n/2 = n."""
        for n in range(1, 8):
            kn = extremal_k(3, n)
            assert general_bound_slack(kn, kn, 3).slack == n

    def test_rejects_k_above_m(self) -> None:
        """k > m is outside the domain."""
        with pytest.raises(ConstraintError):
            general_bound_slack(2, 3, 2)

    def test_average_form(self) -> None:
        """The average slack at (n, k) is the integer slack at (n+k, k) over 2k."""
        for b in (2, 3, 6):
            for n in range(20):
                for k in range(1, 15):
                    average = general_bound_average_slack(n, k, b).slack
                    assert average == Fraction(general_bound_slack(n + k, k, b).slack, 2 * k)

    def test_average_needs_k(self) -> None:
        """k = 0 has no average."""
        with pytest.raises(ConstraintError):
            general_bound_average_slack(3, 0, 2)


class TestTimesB:
    """Tests for times_b_slack()."""

    def test_equality_at_zero(self) -> None:
        """n = 0 is an equality for every k."""
        for b in range(2, 7):
            assert all(times_b_slack(0, k, b).slack == 0 for k in range(50))

    def test_empty_blocks(self) -> None:
        """k = 0 gives zero slack and no average."""
        r = times_b_slack(7, 0, 3)
        assert r.slack == 0
        assert r.average_slack is None

    def test_example(self) -> None:
        """Sigma_2(1, 3) = 2 against 2 * 1 + 1."""
        r = times_b_slack(1, 1, 2)
        assert r.slack == 1
        assert r.average_slack == Fraction(1, 2)

    def test_average_scales(self) -> None:
        """average_slack = slack / (bk)."""
        for b in (2, 3, 5):
            for n in range(15):
                for k in range(1, 10):
                    r = times_b_slack(n, k, b)
                    assert r.average_slack == Fraction(r.slack, b * k)


class TestApproxConvexity:
    """Tests for the grid forms of the approximate-convexity inequalities."""

    def test_zero_width(self) -> None:
        """k = 0 compares a point with itself."""
        assert approx_convexity_h_slack(3, 0, 2, 2).slack == 0

    def test_sharp_dyadic_case(self) -> None:
        """(m, k, n) = (2, 2, 2) in base 2 is an equality."""
        assert approx_convexity_h_slack(2, 2, 2, 2).slack == 0

    @pytest.mark.parametrize(("b", "level"), [(2, 3), (3, 3), (4, 2), (5, 2)])
    def test_reduction_identity(self, b: int, level: int) -> None:
        """slack * b^n equals the integer general-bound slack on the full grid."""
        top = b**level
        for m in range(top + 1):
            for k in range(min(m, top - m) + 1):
                r = approx_convexity_h_slack(m, k, level, b)
                assert r.slack * top == general_bound_slack(m, k, b).slack
                assert r.holds

    def test_rejects_grid(self) -> None:
        """m + k may not exceed b^n."""
        with pytest.raises(ConstraintError):
            approx_convexity_h_slack(3, 2, 2, 2)

    def test_lev_examples(self) -> None:
        """k = l = 0 and (1, 1, 1, 1) are equalities."""
        assert lev_slack(5, 0, 0, 2).slack == 0
        assert lev_slack(1, 1, 1, 1).slack == 0

    def test_lev_reduction_identity(self) -> None:
        """slack * 3^n equals the integer ternary slack for n <= 3."""
        for level in range(4):
            top = 3**level
            for m in range(top + 1):
                for k in range(min(m, top - m) + 1):
                    for l in range(min(k, top - m - k) + 1):  # noqa: E741
                        r = lev_slack(m, k, l, level)
                        assert r.slack * top == ternary_slack(k, l, m).slack

    def test_lev_rejects_grid(self) -> None:
        """m + k + l may not exceed 3^n."""
        with pytest.raises(ConstraintError):
            lev_slack(2, 1, 1, 1)


class TestSharpness:
    """Tests for the extremal family of the general bound."""

    def test_base_3_level_1(self) -> None:
        """S_3(2) - 2 S_3(1) = 1 with k_1 = 1."""
        assert sharpness_ratio(3, 1) == 1

    def test_even_bases_attain_constant(self) -> None:
        """Even b reach floor((b+1)/2) at every n."""
        for b in (2, 4, 6, 8, 10):
            for n in range(1, 9):
                assert sharpness_ratio(b, n) == (b + 1) // 2

    def test_odd_bases_match_closed_form(self) -> None:
        """Odd b follow (b+1)/2 - (b-1)n/(2k_n) exactly."""
        for b in (3, 5, 7, 9):
            for n in range(1, 11):
                assert sharpness_ratio(b, n) == sharpness_closed_form(b, n)

    def test_odd_bases_increase_below_limit(self) -> None:
        """The odd ratios increase in n and stay below (b+1)/2."""
        for b in (3, 5, 7, 9):
            ratios = [sharpness_ratio(b, n) for n in range(1, 11)]
            assert ratios == sorted(set(ratios))
            assert all(r < Fraction(b + 1, 2) for r in ratios)

    def test_base_3_close_at_level_8(self) -> None:
        """k_8 = 3280 and the deficit 8/3280 is below 1/100."""
        assert extremal_k(3, 8) == 3280
        assert 2 - sharpness_ratio(3, 8) == Fraction(8, 3280)
        assert sharpness_ratio(3, 8) > 2 - Fraction(1, 100)

    def test_rejects_level_zero(self) -> None:
        """n must be at least 1."""
        with pytest.raises(ConstraintError):
            sharpness_ratio(3, 0)

    def test_extremal_k_odd_only(self) -> None:
        """k_n is defined for odd bases."""
        with pytest.raises(ConstraintError):
            extremal_k(4, 2)

    def test_identities(self) -> None:
        """The intermediate closed forms hold for odd b and n <= 10."""
        for b in (3, 5, 7, 9):
            for n in range(1, 11):
                checks = extremal_identities(b, n)
                assert set(checks) == {
                    "power_closed_form",
                    "digit_sum_k",
                    "cumulative_k",
                    "cumulative_2k",
                    "difference",
                }
                assert all(checks.values()), (b, n, checks)
