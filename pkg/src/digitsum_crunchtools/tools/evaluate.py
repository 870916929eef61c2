"""Single-function evaluation shared by ``digitsum eval`` and the MCP server."""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Any

from ..config import get_config
from ..digits import (
    average_digit_sum,
    block_sum,
    cumulative_digit_sum,
    cumulative_digit_sum_naive,
    digit_dominates,
    digit_sum,
    digits,
)
from ..errors import UnknownFunctionError, ValidationError
from ..models import (
    BAdicRational,
    Residual,
    TruncatedValue,
    format_rational,
    parse_rational,
    validate_base,
)
from ..takagi import (
    delange_F,
    delange_residual,
    g_exact,
    h_at_badic,
    h_partial,
    h_truncated,
    omega_at_badic,
    omega_truncated,
    phi,
)
from ..verifier import (
    approx_convexity_h_slack,
    general_bound_average_slack,
    general_bound_slack,
    lev_slack,
    superadditivity_slack,
    ternary_slack,
    times_b_slack,
)

logger = logging.getLogger(__name__)

FUNCTIONS = (
    "s",
    "S",
    "S-naive",
    "digits",
    "sigma",
    "avg",
    "dominates",
    "g",
    "phi",
    "h",
    "h-partial",
    "omega",
    "F",
    "residual",
    "superadditivity",
    "ternary",
    "general-bound",
    "general-bound-average",
    "times-b",
    "convexity",
    "lev",
)


def _require(function: str, name: str, value: Any) -> Any:
    if value is None:
        raise ValidationError(f"{function} needs --{name}")
    return value


def parse_x(text: str | None, function: str) -> Fraction:
    """Parse the --x argument into an exact rational."""
    try:
        return parse_rational(_require(function, "x", text))
    except ValueError as e:
        raise ValidationError(str(e)) from e


def _badic(x: Fraction, b: int) -> BAdicRational | None:
    try:
        return BAdicRational.from_fraction(x, b)
    except ValueError:
        return None


def _exact(value: Fraction | int) -> dict[str, Any]:
    return {"value": format_rational(Fraction(value)), "exact": True}


def _truncated(t: TruncatedValue) -> dict[str, Any]:
    return {
        "value": format_rational(t.value),
        "exact": False,
        "error_bound": format_rational(t.error_bound),
        "depth": t.depth,
    }


def _slack(r: Residual) -> dict[str, Any]:
    result: dict[str, Any] = {
        "value": format_rational(r.slack),
        "exact": True,
        "holds": r.holds,
        "equality": r.is_equality,
    }
    if r.average_slack is not None:
        result["average_slack"] = format_rational(r.average_slack)
    return result


def evaluate(  # noqa: C901, PLR0912, PLR0915
    function: str,
    base: int = 2,
    n: int | None = None,
    m: int | None = None,
    x: str | None = None,
    depth: int | None = None,
    k: int | None = None,
    l: int | None = None,  # noqa: E741
    level: int | None = None,
) -> dict[str, Any]:
    """Evaluate one named function.

    Integer functions read --n (and --m as the first argument of the
    two-argument ones: sigma and avg over [m, n), dominates as m before n).
    The real functions read --x; h and omega are exact at b-adic points and
    truncated with a certified bound elsewhere. The slack functions read
    --m, --n, --k, --l and --level and return RHS minus LHS of one inequality
    at a single tuple; convexity and lev work on the grid of that level.

    Returns:
        Dict with the function name, base, inputs and value; truncated
        results also carry error_bound and depth, slacks carry holds and
        equality.

    Raises:
        UnknownFunctionError: function is not in FUNCTIONS
        ValidationError: A required argument is missing or malformed
    """
    if function not in FUNCTIONS:
        raise UnknownFunctionError(function)
    b = validate_base(base)
    if function in ("ternary", "lev"):
        b = 3
    inputs: dict[str, Any] = {}
    for name, value in (
        ("n", n),
        ("m", m),
        ("k", k),
        ("l", l),
        ("x", x),
        ("depth", depth),
        ("level", level),
    ):
        if value is not None:
            inputs[name] = value

    result: dict[str, Any]
    match function:
        case "s":
            result = _exact(digit_sum(_require(function, "n", n), b))
        case "S":
            result = _exact(cumulative_digit_sum(_require(function, "n", n), b))
        case "S-naive":
            result = _exact(cumulative_digit_sum_naive(_require(function, "n", n), b))
        case "digits":
            result = {"value": list(digits(_require(function, "n", n), b)), "exact": True}
        case "sigma":
            result = _exact(block_sum(_require(function, "m", m), _require(function, "n", n), b))
        case "avg":
            result = _exact(
                average_digit_sum(_require(function, "m", m), _require(function, "n", n), b)
            )
        case "dominates":
            dominated = digit_dominates(_require(function, "m", m), _require(function, "n", n), b)
            result = {"value": dominated, "exact": True}
        case "g":
            result = _exact(g_exact(parse_x(x, function), b))
        case "phi":
            result = _exact(phi(parse_x(x, function), b))
        case "h":
            point = parse_x(x, function)
            grid = _badic(point, b)
            if grid is not None:
                result = _exact(h_at_badic(grid))
            else:
                result = _truncated(h_truncated(point, b, depth))
        case "h-partial":
            d = depth if depth is not None else get_config().truncation_depth
            result = _exact(h_partial(parse_x(x, function), b, d))
        case "omega":
            point = parse_x(x, function)
            grid = _badic(point, b)
            if grid is not None:
                result = _exact(omega_at_badic(grid))
            else:
                result = _truncated(omega_truncated(point, b, depth))
        case "F":
            result = _truncated(delange_F(parse_x(x, function), b, depth))
        case "residual":
            result = _truncated(delange_residual(_require(function, "n", n), b, depth))
        case "superadditivity":
            result = _slack(
                superadditivity_slack(_require(function, "m", m), _require(function, "n", n), b)
            )
        case "ternary":
            result = _slack(
                ternary_slack(
                    _require(function, "k", k),
                    _require(function, "l", l),
                    _require(function, "m", m),
                )
            )
        case "general-bound":
            result = _slack(
                general_bound_slack(_require(function, "m", m), _require(function, "k", k), b)
            )
        case "general-bound-average":
            result = _slack(
                general_bound_average_slack(
                    _require(function, "n", n), _require(function, "k", k), b
                )
            )
        case "times-b":
            result = _slack(
                times_b_slack(_require(function, "n", n), _require(function, "k", k), b)
            )
        case "convexity":
            result = _slack(
                approx_convexity_h_slack(
                    _require(function, "m", m),
                    _require(function, "k", k),
                    _require(function, "level", level),
                    b,
                )
            )
        case "lev":
            result = _slack(
                lev_slack(
                    _require(function, "m", m),
                    _require(function, "k", k),
                    _require(function, "l", l),
                    _require(function, "level", level),
                )
            )
        case _:
            raise UnknownFunctionError(function)

    logger.debug("eval %s b=%d %s -> %s", function, b, inputs, result["value"])
    return {"function": function, "base": b, "inputs": inputs, **result}
