"""Exact plot samples of g_b, h_b and omega_b on the b-adic grid."""

from __future__ import annotations

from collections.abc import Callable
from fractions import Fraction
from typing import Any

from ..errors import InvalidRangeError, UnknownFunctionError
from ..models import BAdicRational, validate_base, validate_natural
from ..takagi import g_exact, h_at_badic, omega_at_badic

MAX_LEVEL = 12
MAX_SAMPLES = 10**6 + 1
CSV_HEADER = ("x_num", "x_den", "y_num", "y_den")

_SAMPLERS: dict[str, Callable[[int, int, int], Fraction]] = {
    "h": lambda k, n, b: h_at_badic(BAdicRational(k=k, n=n, b=b)),
    "omega": lambda k, n, b: omega_at_badic(BAdicRational(k=k, n=n, b=b)),
    "g": lambda k, n, b: g_exact(Fraction(k, b**n), b),
}


def plot_samples(function: str, base: int, level: int) -> dict[str, Any]:
    """Sample ``function`` at every k/b^level in [0, 1].

    Returns:
        Dict with the CSV header and one [x_num, x_den, y_num, y_den] row
        per grid point, x increasing
    """
    sampler = _SAMPLERS.get(function)
    if sampler is None:
        raise UnknownFunctionError(function)
    b = validate_base(base)
    level = validate_natural(level, "level")
    if level > MAX_LEVEL:
        raise InvalidRangeError(f"level must be <= {MAX_LEVEL}, got: {level}")
    top = b**level
    if top + 1 > MAX_SAMPLES:
        raise InvalidRangeError(f"{b}^{level} + 1 samples exceeds {MAX_SAMPLES}")

    rows = []
    for k in range(top + 1):
        x = Fraction(k, top)
        y = sampler(k, level, b)
        rows.append([x.numerator, x.denominator, y.numerator, y.denominator])
    return {
        "function": function,
        "base": b,
        "level": level,
        "header": list(CSV_HEADER),
        "rows": rows,
    }
