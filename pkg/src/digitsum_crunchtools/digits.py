"""Base-b digit expansions and digital sums.

Notation: s_b(n) is the sum of the base-b digits of n, S_b(N) the sum of
s_b(n) over 0 <= n < N, and Sigma_b(s, t) = S_b(t) - S_b(s) the digit total
of the block s, s+1, ..., t-1. All values are exact Python integers or
Fractions.
"""

import logging
from collections.abc import Iterable, Sequence
from fractions import Fraction

from .errors import InvalidIntervalError
from .models import validate_base, validate_natural

logger = logging.getLogger(__name__)


def digits(n: int, b: int) -> tuple[int, ...]:
    """Base-b digits of n, least significant first; zero has no digits."""
    b = validate_base(b)
    n = validate_natural(n, "n")
    out: list[int] = []
    while n:
        n, r = divmod(n, b)
        out.append(r)
    return tuple(out)


def from_digits(ds: Sequence[int], b: int) -> int:
    """Inverse of digits()."""
    b = validate_base(b)
    value = 0
    for d in reversed(ds):
        value = value * b + d
    return value


def digit_sum(n: int, b: int) -> int:
    """s_b(n)."""
    b = validate_base(b)
    n = validate_natural(n, "n")
    total = 0
    while n:
        n, r = divmod(n, b)
        total += r
    return total


def cumulative_digit_sum_naive(N: int, b: int) -> int:
    """S_b(N) by direct summation. Linear in N; meant as an oracle."""
    b = validate_base(b)
    N = validate_natural(N, "N")
    return sum(digit_sum(n, b) for n in range(N))


def cumulative_table(N: int, b: int) -> list[int]:
    """[S_b(0), S_b(1), ..., S_b(N)] built by running summation."""
    b = validate_base(b)
    N = validate_natural(N, "N")
    table = [0] * (N + 1)
    for n in range(N):
        table[n + 1] = table[n] + digit_sum(n, b)
    return table


def cumulative_digit_sum(N: int, b: int) -> int:
    """S_b(N) in O(log_b N) big-integer operations.

    Folds the digits of N from the most significant end using
    S_b(bq + r) = b*S_b(q) + b(b-1)q/2 + r*s_b(q) + r(r-1)/2 for 0 <= r < b.
    """
    b = validate_base(b)
    N = validate_natural(N, "N")
    q = 0
    total = 0
    prefix_digit_sum = 0
    half_step = b * (b - 1) // 2
    for r in reversed(digits(N, b)):
        total = b * total + half_step * q + r * prefix_digit_sum + r * (r - 1) // 2
        prefix_digit_sum += r
        q = b * q + r
    return total


def block_sum(s: int, t: int, b: int) -> int:
    """Sigma_b(s, t) = S_b(t) - S_b(s), the digit total of s..t-1."""
    b = validate_base(b)
    s = validate_natural(s, "s")
    t = validate_natural(t, "t")
    if s > t:
        raise InvalidIntervalError(s, t)
    return cumulative_digit_sum(t, b) - cumulative_digit_sum(s, b)


def average_digit_sum(s: int, t: int, b: int) -> Fraction:
    """Mean of s_b over the block s..t-1, in lowest terms."""
    s = validate_natural(s, "s")
    t = validate_natural(t, "t")
    if s >= t:
        raise InvalidIntervalError(s, t, allow_empty=False)
    return Fraction(block_sum(s, t, b), t - s)


def digit_dominates(n: int, m: int, b: int) -> bool:
    """Non-strict digitwise order: every base-b digit of n is <= that of m.

    This is the relation written n <_b m in the construction of the b x k
    tableau; it is used there reflexively, so no strict variant is offered.
    """
    b = validate_base(b)
    n = validate_natural(n, "n")
    m = validate_natural(m, "m")
    while n:
        n, dn = divmod(n, b)
        m, dm = divmod(m, b)
        if dn > dm:
            return False
    return True


def add_power_bound_check(n: int, powers: Iterable[int], b: int) -> bool:
    """Check s_b(n + sum of b^p) <= s_b(n) + (number of powers added)."""
    b = validate_base(b)
    n = validate_natural(n, "n")
    exponents = [validate_natural(p, "power") for p in powers]
    target = n + sum(b**p for p in exponents)
    return digit_sum(target, b) <= digit_sum(n, b) + len(exponents)


def shift_by_power_bound_check(n: int, k: int, b: int) -> bool:
    """Check s_b(n + b^k) <= s_b(n) + 1."""
    return add_power_bound_check(n, [k], b)


def complementation_constant(j: int, p: int, b: int) -> int:
    """(b-1)p + j - 1, the value of s_b(j*b^p - r - 1) + s_b(r) for r < j*b^p."""
    b = validate_base(b)
    return (b - 1) * validate_natural(p, "p") + validate_natural(j, "j") - 1


def complementation_block_identity(j: int, p: int, k: int, n: int, b: int) -> bool:
    """Block form of the complementation identity.

    For 0 <= k <= n <= j*b^p and 1 <= j <= b, checks
    Sigma(jb^p - k, jb^p) - Sigma(n - k, n) == Sigma(jb^p - n, jb^p - n + k) - Sigma(0, k).
    """
    b = validate_base(b)
    top = validate_natural(j, "j") * b ** validate_natural(p, "p")
    if not (0 <= k <= n <= top):
        raise InvalidIntervalError(k, n)
    lhs = block_sum(top - k, top, b) - block_sum(n - k, n, b)
    rhs = block_sum(top - n, top - n + k, b) - block_sum(0, k, b)
    return lhs == rhs


def power_of_b_witness(k: int, b: int) -> tuple[int, int]:
    """Find (p, j) with k <= j*b^p < 2k and j <= floor((b+1)/2).

    Such a pair exists for every k >= 1; the smallest p that works is returned.
    """
    b = validate_base(b)
    k = validate_natural(k, "k")
    if k == 0:
        raise InvalidIntervalError(0, 0, allow_empty=False)
    j_max = (b + 1) // 2
    p = 0
    power = 1
    while power < 2 * k:
        j = -(-k // power)
        if j <= j_max and j * power < 2 * k:
            return p, j
        p += 1
        power *= b
    raise AssertionError(f"no power-of-{b} witness for k={k}")
