"""Sharpness of the general bound along its extremal family."""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from ..errors import ValidationError
from ..models import format_rational, validate_base
from ..verifier import (
    bound_constant,
    extremal_identities,
    sharpness_closed_form,
    sharpness_ratio,
)


def sharpness(base: int, max_n: int) -> dict[str, Any]:
    """Ratio, closed form and deficit from the limit for n = 1..max_n.

    The limit is floor((b+1)/2) for even b, reached at every n, and (b+1)/2
    for odd b, approached from below. For odd b each row also reports
    whether the intermediate closed forms hold at that n.
    """
    b = validate_base(base)
    if not isinstance(max_n, int) or max_n < 1:
        raise ValidationError(f"max_n must be a positive integer, got: {str(max_n)[:20]}")
    limit = Fraction(bound_constant(b)) if b % 2 == 0 else Fraction(b + 1, 2)
    rows = []
    for n in range(1, max_n + 1):
        ratio = sharpness_ratio(b, n)
        row: dict[str, Any] = {
            "n": n,
            "ratio": format_rational(ratio),
            "closed_form": format_rational(sharpness_closed_form(b, n)),
            "deficit": format_rational(limit - ratio),
            "matches": ratio == sharpness_closed_form(b, n),
        }
        if b % 2:
            row["identities_hold"] = all(extremal_identities(b, n).values())
        rows.append(row)
    return {"base": b, "limit": format_rational(limit), "rows": rows}
