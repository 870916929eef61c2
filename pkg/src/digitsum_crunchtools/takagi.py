"""Delange's functions h_b, Lev's functions omega_b, and Delange's formula for S_b.

g_b is the 1-periodic integral of (b-1)/2 - floor(bt), h_b(x) is the series
sum of b^-n g_b(b^n x), phi_b(x) = min(dist(x, Z), 1/b) and omega_b is the
analogous series built on phi_b. At b-adic points k/b^n both series are
finite sums and are returned exactly; elsewhere the truncated series carries
a certified geometric tail bound.

h_b here is nonnegative; Delange's own function is its negative.
"""

import logging
import math
from fractions import Fraction

import mpmath

from .config import get_config
from .digits import cumulative_digit_sum
from .errors import ConstraintError
from .models import (
    BAdicRational,
    TruncatedValue,
    validate_base,
    validate_depth,
    validate_natural,
)

logger = logging.getLogger(__name__)

# Extra decimal digits carried by mpmath beyond the requested enclosure width.
_GUARD_DIGITS = 20


def _fractional_part(x: Fraction) -> Fraction:
    return x - math.floor(x)


def _default_depth(depth: int | None) -> int:
    if depth is None:
        return get_config().truncation_depth
    return validate_depth(depth, 1)


def g_exact(x: Fraction | int, b: int) -> Fraction:
    """g_b(x), linear on each [i/b, (i+1)/b) with g_b(i/b) = i(b-i)/(2b)."""
    b = validate_base(b)
    y = _fractional_part(Fraction(x))
    i = math.floor(b * y)
    return Fraction(i * (b - i), 2 * b) + (Fraction(b - 1, 2) - i) * (y - Fraction(i, b))


def g_peak(b: int) -> Fraction:
    """max g_b, attained at one of the breakpoints i/b."""
    b = validate_base(b)
    return max(g_exact(Fraction(i, b), b) for i in range(b + 1))


def h_sup(b: int) -> Fraction:
    """Upper bound G_b * b/(b-1) for h_b."""
    b = validate_base(b)
    return g_peak(b) * b / (b - 1)


def h_partial(x: Fraction | int, b: int, depth: int) -> Fraction:
    """h_b^(depth)(x) = sum over k < depth of b^-k g_b(b^k x)."""
    b = validate_base(b)
    depth = validate_depth(depth)
    x = Fraction(x)
    total = Fraction(0)
    power = 1
    for _ in range(depth):
        total += g_exact(x * power, b) / power
        power *= b
    return total


def h_from_cumulative(k: int, n: int, b: int, cumulative: int) -> Fraction:
    """h_b(k/b^n) given cumulative = S_b(k); valid for any 0 <= k <= b^n."""
    return Fraction((b - 1) * k * n - 2 * cumulative, 2 * b**n)


def h_at_badic(x: BAdicRational) -> Fraction:
    """h_b(k/b^n) = b^-n ((b-1)kn/2 - S_b(k))."""
    return h_from_cumulative(x.k, x.n, x.b, cumulative_digit_sum(x.k, x.b))


def h_truncated(x: Fraction | int, b: int, depth: int | None = None) -> TruncatedValue:
    """h_b(x) to ``depth`` terms with the tail bound G_b b^(1-depth)/(b-1)."""
    b = validate_base(b)
    depth = _default_depth(depth)
    bound = g_peak(b) * Fraction(b) ** (1 - depth) / (b - 1)
    return TruncatedValue(value=h_partial(x, b, depth), depth=depth, error_bound=bound)


def expansion_digits(x: Fraction | int, b: int, count: int) -> tuple[int, ...]:
    """First ``count`` b-ary digits of the fractional part of x.

    b-adic points use the terminating expansion.
    """
    b = validate_base(b)
    count = validate_natural(count, "count")
    y = _fractional_part(Fraction(x))
    out = []
    for _ in range(count):
        y *= b
        d = math.floor(y)
        out.append(d)
        y -= d
    return tuple(out)


def partial_slope(x: Fraction | int, b: int, n: int) -> Fraction:
    """Slope of h_b^(n) on the b^-n cell containing x: (b-1)n/2 - sum of eps_k(x)."""
    b = validate_base(b)
    n = validate_natural(n, "n")
    return Fraction((b - 1) * n, 2) - sum(expansion_digits(x, b, n))


def phi(x: Fraction | int, b: int) -> Fraction:
    """phi_b(x) = min(dist(x, Z), 1/b)."""
    b = validate_base(b)
    y = _fractional_part(Fraction(x))
    return min(y, 1 - y, Fraction(1, b))


def omega_partial(x: Fraction | int, b: int, depth: int) -> Fraction:
    """sum over m < depth of b^-m phi_b(b^m x)."""
    b = validate_base(b)
    depth = validate_depth(depth)
    x = Fraction(x)
    total = Fraction(0)
    power = 1
    for _ in range(depth):
        total += phi(x * power, b) / power
        power *= b
    return total


def omega_at_badic(x: BAdicRational) -> Fraction:
    """omega_b(k/b^n); terms from index n on vanish since b^n x is an integer."""
    return omega_partial(x.value, x.b, x.n)


def omega_truncated(x: Fraction | int, b: int, depth: int | None = None) -> TruncatedValue:
    """omega_b(x) to ``depth`` terms; phi_b <= 1/b gives the tail b^-depth/(b-1)."""
    b = validate_base(b)
    depth = _default_depth(depth)
    bound = Fraction(1, b**depth * (b - 1))
    return TruncatedValue(value=omega_partial(x, b, depth), depth=depth, error_bound=bound)


def _to_fraction(value: object) -> Fraction:
    """Exact rational from an mpmath number via its decimal rendering."""
    return Fraction(mpmath.nstr(value, mpmath.mp.dps))


def _power_enclosure(b: int, exponent: Fraction, depth: int) -> tuple[Fraction, Fraction]:
    """Rational r and width w with |b^exponent - r| <= w = 10^-depth."""
    with mpmath.workdps(depth + _GUARD_DIGITS):
        value = mpmath.power(b, mpmath.mpf(exponent.numerator) / exponent.denominator)
        return _to_fraction(value), Fraction(1, 10**depth)


def _assemble_F(
    b: int, frac: Fraction, u: Fraction, c: Fraction, width: Fraction, depth: int
) -> TruncatedValue:
    """F = (b-1)/2 (1 - frac) - c h_b(u), with u and c known to within ``width``.

    The h error adds the truncation tail and, for an inexact u, the drift of
    the first ``depth`` terms (each term of h_b is (b-1)/2-Lipschitz) plus the
    tail at the true argument.
    """
    h = h_truncated(u, b, depth)
    h_error = h.error_bound
    if width:
        h_error += depth * Fraction(b - 1, 2) * width + 2 * h.error_bound
    value = Fraction(b - 1, 2) * (1 - frac) - c * h.value
    bound = abs(c) * h_error + width * h_sup(b)
    return TruncatedValue(value=value, depth=depth, error_bound=bound)


def delange_F(x: Fraction | int, b: int, depth: int | None = None) -> TruncatedValue:
    """Delange's periodic F({x}) = (b-1)/2 (1-{x}) - b^(1-{x}) h_b(b^({x}-1))."""
    b = validate_base(b)
    depth = _default_depth(depth)
    frac = _fractional_part(Fraction(x))
    if frac == 0:
        return _assemble_F(b, frac, Fraction(1, b), Fraction(b), Fraction(0), depth)
    u, width = _power_enclosure(b, frac - 1, depth)
    c, _ = _power_enclosure(b, 1 - frac, depth)
    return _assemble_F(b, frac, u, c, width, depth)


def delange_residual(n: int, b: int, depth: int | None = None) -> TruncatedValue:
    """S_b(n) - [(b-1)/2 n log_b n + n F(log_b n)], whose true value is 0.

    With K = floor(log_b n) the argument b^({log_b n}-1) is exactly
    n/b^(K+1), so only {log_b n} itself needs an enclosure.
    """
    b = validate_base(b)
    n = validate_natural(n, "n")
    if n == 0:
        raise ConstraintError("delange_residual requires n >= 1")
    depth = _default_depth(depth)

    exponent = 0
    power = 1
    while power * b <= n:
        power *= b
        exponent += 1
    top = power * b

    if power == n:
        frac, frac_width = Fraction(0), Fraction(0)
    else:
        with mpmath.workdps(depth + _GUARD_DIGITS):
            log_value = mpmath.log(n) / mpmath.log(b) - exponent
            frac = _to_fraction(log_value)
        frac_width = Fraction(1, 10**depth)

    F = _assemble_F(b, frac, Fraction(n, top), Fraction(top, n), Fraction(0), depth)
    log_term = Fraction(b - 1, 2) * n * (exponent + frac)
    value = cumulative_digit_sum(n, b) - log_term - n * F.value
    bound = n * F.error_bound + (b - 1) * n * frac_width
    logger.debug("delange residual n=%d b=%d: %s (bound %s)", n, b, value, float(bound))
    return TruncatedValue(value=value, depth=depth, error_bound=bound)
