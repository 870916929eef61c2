"""Tableau construction tool."""

from __future__ import annotations

from typing import Any

from ..tableau import build_tableau, column_ladder, verify_tableau
from .verify import report_dict


def tableau(base: int, k: int) -> dict[str, Any]:
    """Build the b x k tableau and verify it.

    Returns:
        Dict with base, k, rows (top to bottom), per-column digit-sum totals,
        the verification report and its passed flag
    """
    t = build_tableau(base, k)
    report = verify_tableau(t)
    return {
        "base": t.base,
        "k": t.width,
        "rows": t.to_rows(),
        "ladder": column_ladder(t),
        "text": t.to_text(),
        "report": report_dict(report),
        "passed": report.passed,
    }
