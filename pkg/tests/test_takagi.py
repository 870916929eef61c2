"""Tests for g_b, h_b, phi_b, omega_b and Delange's formula."""

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from digitsum_crunchtools.digits import cumulative_digit_sum
from digitsum_crunchtools.errors import ConstraintError, InvalidDepthError
from digitsum_crunchtools.models import BAdicRational
from digitsum_crunchtools.takagi import (
    delange_F,
    delange_residual,
    expansion_digits,
    g_exact,
    g_peak,
    h_at_badic,
    h_partial,
    h_sup,
    h_truncated,
    omega_at_badic,
    omega_partial,
    omega_truncated,
    partial_slope,
    phi,
)


def _grid(b: int, level: int) -> list[BAdicRational]:
    return [BAdicRational(k=k, n=level, b=b) for k in range(b**level + 1)]


class TestG:
    """Tests for the piecewise-linear g_b."""

    def test_breakpoints(self) -> None:
        """g_b(i/b) = i(b-i)/(2b)."""
        for b in range(2, 8):
            for i in range(b + 1):
                assert g_exact(Fraction(i, b), b) == Fraction(i * (b - i), 2 * b)

    def test_periodic(self) -> None:
        """g_b has period 1."""
        x = Fraction(2, 7)
        assert g_exact(x + 3, 5) == g_exact(x, 5)
        assert g_exact(x - 1, 5) == g_exact(x, 5)

    def test_peak(self) -> None:
        """G_2 = 1/4 at 1/2; G_3 = 1/3 at 1/3 and 2/3."""
        assert g_peak(2) == Fraction(1, 4)
        assert g_peak(3) == Fraction(1, 3)
        assert h_sup(2) == Fraction(1, 2)


class TestH:
    """Tests for h_b by its two routes."""

    def test_dyadic_half(self) -> None:
        """h_2(1/2) = 1/4."""
        assert h_at_badic(BAdicRational(k=1, n=1, b=2)) == Fraction(1, 4)

    def test_endpoints(self) -> None:
        """h_b vanishes at 0 and 1."""
        for b in range(2, 7):
            assert h_at_badic(BAdicRational(k=0, n=3, b=b)) == 0
            assert h_at_badic(BAdicRational(k=b**3, n=3, b=b)) == 0

    @pytest.mark.parametrize(("b", "max_level"), [(2, 8), (3, 8), (4, 6), (5, 5), (6, 5)])
    def test_routes_agree_on_grid(self, b: int, max_level: int) -> None:
        """Closed form and finite series agree on every grid point."""
        level = max_level
        for x in _grid(b, level):
            assert h_at_badic(x) == h_partial(x.value, b, level)

    @given(
        b=st.integers(min_value=2, max_value=6),
        level=st.integers(min_value=0, max_value=8),
        data=st.data(),
    )
    def test_routes_agree_sampled(self, b: int, level: int, data: st.DataObject) -> None:
        """Extra series terms vanish beyond the level of a b-adic point."""
        k = data.draw(st.integers(min_value=0, max_value=b**level))
        x = BAdicRational(k=k, n=level, b=b)
        assert h_at_badic(x) == h_partial(x.value, b, level + 3)

    def test_bounded_by_sup(self) -> None:
        """0 <= h_b <= h_sup on the grid."""
        for b in (2, 3, 5):
            bound = h_sup(b)
            assert all(0 <= h_at_badic(x) <= bound for x in _grid(b, 4))

    def test_ternary_symmetry(self) -> None:
        """h_3(k/3^n) = h_3((3^n - k)/3^n) through level 6."""
        for n in range(7):
            top = 3**n
            for k in range(top + 1):
                left = h_at_badic(BAdicRational(k=k, n=n, b=3))
                assert left == h_at_badic(BAdicRational(k=top - k, n=n, b=3)), (k, n)

    def test_truncation_bound(self) -> None:
        """A short truncation contains a much longer one."""
        x = Fraction(1, 3)
        for b in (2, 3, 10):
            short = h_truncated(x, b, 12)
            assert short.contains(h_partial(x, b, 60))
            assert short.error_bound > 0

    def test_truncation_default_depth(self) -> None:
        """Depth defaults to DIGITSUM_TRUNCATION_DEPTH."""
        assert h_truncated(Fraction(1, 5), 2).depth == 40

    def test_invalid_depth(self) -> None:
        """Depth must be positive for truncated values."""
        with pytest.raises(InvalidDepthError):
            h_truncated(Fraction(1, 5), 2, 0)

    def test_partial_slope(self) -> None:
        """h_b^(n) is linear on each b^-n cell with the stated slope."""
        b, n = 3, 3
        cell = Fraction(1, b**n)
        for k in range(b**n):
            x = k * cell
            rise = h_partial(x + cell, b, n) - h_partial(x, b, n)
            assert rise / cell == partial_slope(x, b, n)

    def test_expansion_digits(self) -> None:
        """5/8 = 0.101 in base 2."""
        assert expansion_digits(Fraction(5, 8), 2, 4) == (1, 0, 1, 0)
        assert expansion_digits(Fraction(1, 3), 3, 2) == (1, 0)


class TestOmega:
    """Tests for phi_b and omega_b."""

    def test_phi(self) -> None:
        """phi_b is the distance to Z capped at 1/b."""
        assert phi(Fraction(1, 3), 3) == Fraction(1, 3)
        assert phi(Fraction(1, 2), 3) == Fraction(1, 3)
        assert phi(Fraction(1, 2), 2) == Fraction(1, 2)
        assert phi(Fraction(9, 10), 2) == Fraction(1, 10)

    def test_omega_values(self) -> None:
        """omega_3 at 1/3 and 2/3."""
        assert omega_at_badic(BAdicRational(k=1, n=1, b=3)) == Fraction(1, 3)
        assert omega_at_badic(BAdicRational(k=2, n=1, b=3)) == Fraction(1, 3)

    def test_omega_2_is_twice_h_2(self) -> None:
        """omega_2 = 2 h_2 on dyadic grids up to level 8."""
        for x in _grid(2, 8):
            assert omega_at_badic(x) == 2 * h_at_badic(x)

    def test_omega_3_is_h_3(self) -> None:
        """omega_3 = h_3 on triadic grids up to level 8."""
        for x in _grid(3, 8):
            assert omega_at_badic(x) == h_at_badic(x)

    def test_omega_4_is_h_2(self) -> None:
        """omega_4 = h_2 through k/4^n = k/2^(2n)."""
        for level in range(7):
            for x in _grid(4, level):
                dyadic = BAdicRational(k=x.k, n=2 * x.n, b=2)
                assert omega_at_badic(x) == h_at_badic(dyadic)

    def test_series_route(self) -> None:
        """omega_partial beyond the level equals omega_at_badic."""
        for x in _grid(5, 3):
            assert omega_partial(x.value, 5, 6) == omega_at_badic(x)

    def test_truncated(self) -> None:
        """The tail bound covers a longer truncation."""
        x = Fraction(2, 7)
        assert omega_truncated(x, 3, 10).contains(omega_partial(x, 3, 50))


class TestDelange:
    """Tests for Delange's F and the decomposition residual."""

    def test_F_at_integers(self) -> None:
        """F(0) = (b-1)/2 - b h_b(1/b) = 0."""
        for b in (2, 3, 10):
            assert delange_F(0, b, 30).value == 0

    def test_F_matches_formula(self) -> None:
        """S_2(3) = (1/2) 3 log_2 3 + 3 F(log_2 3) to double precision."""
        x = Fraction(math.log2(3))
        F = delange_F(x, 2, 40)
        predicted = 0.5 * 3 * math.log2(3) + 3 * float(F.value)
        assert abs(predicted - cumulative_digit_sum(3, 2)) < 1e-9
        assert F.error_bound < Fraction(1, 10**9)

    def test_residual_vanishes_at_powers(self) -> None:
        """n = b^m gives an exact zero."""
        for b in (2, 3, 10):
            for m in range(5):
                r = delange_residual(b**m, b, 40)
                assert r.value == 0

    @pytest.mark.parametrize("b", [2, 3, 10])
    def test_residual_bounded(self, b: int) -> None:
        """|residual| <= its bound <= 1e-6 across n."""
        for n in [*range(1, 400), 999, 1000, 4097, 9999, 10**4]:
            r = delange_residual(n, b, 40)
            assert abs(r.value) <= r.error_bound
            assert r.error_bound <= Fraction(1, 10**6)

    def test_residual_needs_positive_n(self) -> None:
        """n = 0 has no logarithm."""
        with pytest.raises(ConstraintError):
            delange_residual(0, 2)
