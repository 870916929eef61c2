"""Digit-sum tools.

Plain functions returning JSON-ready dicts. The CLI renders them and the MCP
server hands them to clients unchanged.
"""

from .evaluate import FUNCTIONS, evaluate
from .plot import CSV_HEADER, plot_samples
from .sharpness import sharpness
from .tableau import tableau
from .verify import build_range, report_dict, theorems, verify

__all__ = [
    "FUNCTIONS",
    "CSV_HEADER",
    "evaluate",
    "verify",
    "build_range",
    "report_dict",
    "theorems",
    "tableau",
    "sharpness",
    "plot_samples",
]
