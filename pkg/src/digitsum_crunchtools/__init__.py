"""Exact digit-sum arithmetic, the b x k tableau, Takagi-type functions and
exhaustive verification of the digit-sum inequalities."""

import sys

from .cli import run
from .digits import block_sum, cumulative_digit_sum, digit_sum
from .sweep import sweep
from .tableau import build_tableau, verify_tableau

__version__ = "0.1.0"
__all__ = [
    "main",
    "run",
    "digit_sum",
    "cumulative_digit_sum",
    "block_sum",
    "build_tableau",
    "verify_tableau",
    "sweep",
]


def main() -> None:
    """Main entry point for the digitsum command."""
    sys.exit(run())
