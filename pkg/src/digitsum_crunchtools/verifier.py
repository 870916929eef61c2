"""Slack of each inequality at a single input tuple.

Every function returns a Residual whose slack is RHS - LHS, exact. The
integer inequalities are:

    superadditivity  S(m+n) >= S(m) + S(n) + min(m, n)
    ternary          S_3(m+k+l) + S_3(m-k) + S_3(m-l) - 3S_3(m) <= 2k + l
    general_bound    S(m+k) + S(m-k) - 2S(m) <= floor((b+1)/2) k
    times_b          Sigma(n, n+bk) <= b Sigma(n, n+k) + b(b-1)k/2

The two approximate-convexity inequalities for h_b are checked on b-adic
grids with denominators cleared by the number of points averaged, so that
their slack times b^n is exactly the slack of the matching integer
inequality.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from fractions import Fraction

from .digits import cumulative_digit_sum, digit_sum
from .errors import ConstraintError
from .models import BAdicRational, Residual, validate_base, validate_natural
from .takagi import h_at_badic, h_from_cumulative

logger = logging.getLogger(__name__)

Cumulative = Callable[[int], int]


def _cumulative(b: int) -> Cumulative:
    return lambda n: cumulative_digit_sum(n, b)


def bound_constant(b: int) -> int:
    """floor((b+1)/2), the sharp constant of the general bound."""
    return (b + 1) // 2


# Kernels take S as a lookup so sweeps can pass a precomputed table.


def superadditivity_kernel(S: Cumulative, m: int, n: int) -> int:
    return S(m + n) - S(m) - S(n) - min(m, n)


def ternary_kernel(S: Cumulative, k: int, l: int, m: int) -> int:  # noqa: E741
    return 2 * k + l - (S(m + k + l) + S(m - k) + S(m - l) - 3 * S(m))


def general_bound_kernel(S: Cumulative, b: int, m: int, k: int) -> int:
    return bound_constant(b) * k - (S(m + k) + S(m - k) - 2 * S(m))


def general_bound_average_kernel(S: Cumulative, b: int, n: int, k: int) -> Fraction:
    short = Fraction(S(n + k) - S(n), k)
    double = Fraction(S(n + 2 * k) - S(n), 2 * k)
    return short + Fraction(bound_constant(b), 2) - double


def times_b_kernel(S: Cumulative, b: int, n: int, k: int) -> int:
    short = S(n + k) - S(n)
    long = S(n + b * k) - S(n)
    return b * short + b * (b - 1) * k // 2 - long


def times_b_average_kernel(S: Cumulative, b: int, n: int, k: int) -> Fraction:
    short = Fraction(S(n + k) - S(n), k)
    long = Fraction(S(n + b * k) - S(n), b * k)
    return short + Fraction(b - 1, 2) - long


def approx_convexity_h_kernel(S: Cumulative, b: int, m: int, k: int, n: int) -> Fraction:
    def h(j: int) -> Fraction:
        return h_from_cumulative(j, n, b, S(j))

    return h(m - k) + h(m + k) - 2 * h(m) + Fraction(bound_constant(b) * k, b**n)


def lev_kernel(S: Cumulative, m: int, k: int, l: int, n: int) -> Fraction:  # noqa: E741
    def h(j: int) -> Fraction:
        return h_from_cumulative(j, n, 3, S(j))

    return h(m - k) + h(m - l) + h(m + k + l) - 3 * h(m) + Fraction(2 * k + l, 3**n)


def _require_ordered(*values: int, names: str) -> None:
    if any(a > b for a, b in zip(values, values[1:])):
        raise ConstraintError(f"Expected {names}, got {values}")


def superadditivity_slack(m: int, n: int, b: int) -> Residual:
    """S_b(m+n) - S_b(m) - S_b(n) - min(m, n)."""
    b = validate_base(b)
    m = validate_natural(m, "m")
    n = validate_natural(n, "n")
    return Residual(slack=superadditivity_kernel(_cumulative(b), m, n), inputs=(m, n))


def ternary_slack(k: int, l: int, m: int) -> Residual:  # noqa: E741
    """2k + l - [S_3(m+k+l) + S_3(m-k) + S_3(m-l) - 3S_3(m)] for 0 <= l <= k <= m."""
    for name, value in (("k", k), ("l", l), ("m", m)):
        validate_natural(value, name)
    _require_ordered(l, k, m, names="0 <= l <= k <= m")
    return Residual(slack=ternary_kernel(_cumulative(3), k, l, m), inputs=(k, l, m))


def general_bound_slack(m: int, k: int, b: int) -> Residual:
    """floor((b+1)/2) k - [S_b(m+k) + S_b(m-k) - 2S_b(m)] for 0 <= k <= m."""
    b = validate_base(b)
    m = validate_natural(m, "m")
    k = validate_natural(k, "k")
    _require_ordered(k, m, names="0 <= k <= m")
    return Residual(slack=general_bound_kernel(_cumulative(b), b, m, k), inputs=(m, k))


def general_bound_average_slack(n: int, k: int, b: int) -> Residual:
    """avg(n, n+k) + floor((b+1)/2)/2 - avg(n, n+2k) for k >= 1."""
    b = validate_base(b)
    n = validate_natural(n, "n")
    k = validate_natural(k, "k")
    if k == 0:
        raise ConstraintError("The average form needs k >= 1")
    return Residual(slack=general_bound_average_kernel(_cumulative(b), b, n, k), inputs=(n, k))


def times_b_slack(n: int, k: int, b: int) -> Residual:
    """b Sigma(n, n+k) + b(b-1)k/2 - Sigma(n, n+bk), plus the average form for k >= 1."""
    b = validate_base(b)
    n = validate_natural(n, "n")
    k = validate_natural(k, "k")
    S = _cumulative(b)
    average = times_b_average_kernel(S, b, n, k) if k else None
    return Residual(slack=times_b_kernel(S, b, n, k), inputs=(n, k), average_slack=average)


def approx_convexity_h_slack(m: int, k: int, n: int, b: int) -> Residual:
    """h(x) + h(y) - 2h((x+y)/2) + floor((b+1)/2)(y-x)/2 at x=(m-k)/b^n, y=(m+k)/b^n.

    Equals general_bound_slack(m, k, b) / b^n.
    """
    b = validate_base(b)
    for name, value in (("m", m), ("k", k), ("n", n)):
        validate_natural(value, name)
    _require_ordered(k, m, names="0 <= k <= m")
    if m + k > b**n:
        raise ConstraintError(f"Grid point outside [0, 1]: m + k = {m + k} > {b}^{n}")

    def h(j: int) -> Fraction:
        return h_at_badic(BAdicRational(k=j, n=n, b=b))

    slack = h(m - k) + h(m + k) - 2 * h(m) + Fraction(bound_constant(b) * k, b**n)
    return Residual(slack=slack, inputs=(m, k, n))


def lev_slack(m: int, k: int, l: int, n: int) -> Residual:  # noqa: E741
    """h_3(x) + h_3(y) + h_3(z) - 3h_3(a) + (z - x) on the triadic grid.

    a = m/3^n, x = (m-k)/3^n, y = (m-l)/3^n, z = (m+k+l)/3^n. Equals
    ternary_slack(k, l, m) / 3^n.
    """
    for name, value in (("m", m), ("k", k), ("l", l), ("n", n)):
        validate_natural(value, name)
    _require_ordered(l, k, m, names="0 <= l <= k <= m")
    if m + k + l > 3**n:
        raise ConstraintError(f"Grid point outside [0, 1]: m + k + l = {m + k + l} > 3^{n}")

    def h(j: int) -> Fraction:
        return h_at_badic(BAdicRational(k=j, n=n, b=3))

    slack = h(m - k) + h(m - l) + h(m + k + l) - 3 * h(m) + Fraction(2 * k + l, 3**n)
    return Residual(slack=slack, inputs=(m, k, l, n))


def extremal_k(b: int, n: int) -> int:
    """k_n = (b^n - 1)/2 for odd b."""
    b = validate_base(b)
    n = validate_natural(n, "n")
    if b % 2 == 0:
        raise ConstraintError(f"k_n is defined for odd bases, got b={b}")
    return (b**n - 1) // 2


def sharpness_ratio(b: int, n: int) -> Fraction:
    """Normalized left side of the general bound along its extremal family.

    Even b uses m = k = b^n/2, odd b uses m = k = k_n.
    """
    b = validate_base(b)
    n = validate_natural(n, "n")
    if n < 1:
        raise ConstraintError("sharpness_ratio needs n >= 1")
    half = b**n // 2 if b % 2 == 0 else extremal_k(b, n)
    return Fraction(
        cumulative_digit_sum(2 * half, b) - 2 * cumulative_digit_sum(half, b), half
    )


def sharpness_closed_form(b: int, n: int) -> Fraction:
    """floor((b+1)/2) for even b, (b+1)/2 - (b-1)n/(2k_n) for odd b."""
    b = validate_base(b)
    n = validate_natural(n, "n")
    if n < 1:
        raise ConstraintError("sharpness_closed_form needs n >= 1")
    if b % 2 == 0:
        return Fraction(bound_constant(b))
    return Fraction(b + 1, 2) - Fraction((b - 1) * n, 2 * extremal_k(b, n))


def extremal_identities(b: int, n: int) -> dict[str, bool]:
    """The closed forms used to establish sharpness for odd b, each checked exactly."""
    kn = extremal_k(b, n)
    power = b**n
    S = _cumulative(b)
    return {
        "power_closed_form": S(power) == Fraction(n * power * (b - 1), 2),
        "digit_sum_k": digit_sum(kn, b) == Fraction(n * (b - 1), 2),
        "cumulative_k": S(kn) == Fraction(power - 1, 4) * (n * (b - 1) - Fraction(b + 1, 2)),
        "cumulative_2k": S(2 * kn) == S(power) - digit_sum(power - 1, b),
        "difference": S(2 * kn) - 2 * S(kn)
        == Fraction(b + 1, 2) * kn - Fraction((b - 1) * n, 2),
    }
