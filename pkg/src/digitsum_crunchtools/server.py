"""FastMCP server setup for digitsum."""

import asyncio
import logging
from typing import Any

from fastmcp import FastMCP

from .tools import evaluate, plot_samples, sharpness, tableau, theorems, verify

logger = logging.getLogger(__name__)

mcp = FastMCP(
    name="digitsum",
    version="0.1.0",
    instructions=(
        "Exact digit-sum arithmetic and verification. "
        "Use digitsum_eval_tool to evaluate s_b, S_b, block sums, Delange's h_b, "
        "Lev's omega_b and Delange's F at a point. "
        "Use digitsum_theorems_tool to list sweepable inequalities and the range "
        "bounds each needs, then digitsum_verify_tool to check one exhaustively. "
        "All rational values are returned as exact 'p/q' strings."
    ),
)


@mcp.tool()
async def digitsum_eval_tool(
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
    """Evaluate one digit-sum or Takagi-type function, or one inequality slack.

    Args:
        function: One of s, S, S-naive, digits, sigma, avg, dominates, g, phi,
                  h, h-partial, omega, F, residual, superadditivity, ternary,
                  general-bound, general-bound-average, times-b, convexity, lev
        base: Base b >= 2
        n: Integer argument (upper end for sigma and avg)
        m: Lower end for sigma and avg, first argument of dominates
        x: Rational argument such as "3/8" for g, phi, h, h-partial, omega, F
        depth: Series truncation depth
        k: Shift k for the slack functions
        l: Second shift l for ternary and lev
        level: Grid level for convexity and lev

    Returns:
        Exact value, or value with certified error bound
    """
    return await asyncio.to_thread(
        evaluate, function, base, n, m, x, depth, k, l, level
    )


@mcp.tool()
async def digitsum_theorems_tool() -> dict[str, Any]:
    """List the theorem ids accepted by digitsum_verify_tool.

    Returns:
        Theorem ids with their tuple parameters and required range bounds
    """
    return theorems()


@mcp.tool()
async def digitsum_verify_tool(
    theorem: str,
    base: int = 2,
    max_m: int | None = None,
    max_n: int | None = None,
    max_k: int | None = None,
    min_k: int = 0,
    max_level: int | None = None,
    witness_cap: int | None = None,
) -> dict[str, Any]:
    """Check an inequality on every tuple of a bounded range.

    Args:
        theorem: Theorem id (see digitsum_theorems_tool)
        base: Base b (ternary and lev always use 3)
        max_m: Inclusive bound on m
        max_n: Inclusive bound on n
        max_k: Inclusive bound on k
        min_k: Inclusive lower bound on k
        max_level: Inclusive bound on the grid level
        witness_cap: Maximum equality witnesses listed

    Returns:
        Verification report with min slack, equality witnesses and counterexamples
    """
    return await asyncio.to_thread(
        verify,
        theorem,
        base,
        max_m,
        max_n,
        max_k,
        min_k,
        max_level,
        witness_cap,
    )


@mcp.tool()
async def digitsum_tableau_tool(base: int, k: int) -> dict[str, Any]:
    """Build and verify the b x k tableau of 0..bk-1.

    Args:
        base: Base b (number of rows)
        k: Number of columns

    Returns:
        Matrix rows, column digit-sum totals and verification report
    """
    return await asyncio.to_thread(tableau, base, k)


@mcp.tool()
async def digitsum_sharpness_tool(base: int, max_n: int = 8) -> dict[str, Any]:
    """Compare the general bound's extremal ratio with its closed form.

    Args:
        base: Base b
        max_n: Largest n

    Returns:
        One row per n with ratio, closed form and deficit from the limit
    """
    return await asyncio.to_thread(sharpness, base, max_n)


@mcp.tool()
async def digitsum_plot_tool(function: str, base: int, level: int) -> dict[str, Any]:
    """Exact samples of h, omega or g at every k/b^level in [0, 1].

    Args:
        function: h, omega or g
        base: Base b
        level: Grid level (at most 12)

    Returns:
        Header and rows of x_num, x_den, y_num, y_den
    """
    return await asyncio.to_thread(plot_samples, function, base, level)
