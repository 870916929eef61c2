"""Theorem sweeps as JSON-ready dicts."""

from __future__ import annotations

from typing import Any

import pydantic

from ..errors import InvalidRangeError
from ..models import SweepRange, VerificationReport
from ..sweep import THEOREMS, sweep


def report_dict(report: VerificationReport) -> dict[str, Any]:
    """JSON form of a report, with the derived ``passed`` flag."""
    return {**report.model_dump(mode="json"), "passed": report.passed}


def build_range(
    base: int = 2,
    max_m: int | None = None,
    max_n: int | None = None,
    max_k: int | None = None,
    min_k: int = 0,
    max_level: int | None = None,
) -> SweepRange:
    """Validate range flags before any computation."""
    try:
        return SweepRange(
            base=base,
            max_m=max_m,
            max_n=max_n,
            max_k=max_k,
            min_k=min_k,
            max_level=max_level,
        )
    except pydantic.ValidationError as e:
        problems = "; ".join(
            f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}" for err in e.errors()
        )
        raise InvalidRangeError(f"Invalid sweep range: {problems}") from e


def verify(
    theorem: str,
    base: int = 2,
    max_m: int | None = None,
    max_n: int | None = None,
    max_k: int | None = None,
    min_k: int = 0,
    max_level: int | None = None,
    witness_cap: int | None = None,
    jobs: int | None = None,
) -> dict[str, Any]:
    """Sweep one theorem and return its report.

    Args:
        theorem: One of the registered theorem ids (see ``theorems()``)
        base: Base b; ternary and lev always use 3
        max_m, max_n, max_k, max_level: Inclusive upper bounds
        min_k: Inclusive lower bound for k
        witness_cap: Maximum equality witnesses listed
        jobs: Worker processes

    Returns:
        Report dict: theorem_id, range, checked, min_slack,
        equality_witnesses, witness_total, counterexamples, passed
    """
    sweep_range = build_range(base, max_m, max_n, max_k, min_k, max_level)
    report = sweep(theorem, sweep_range, witness_cap=witness_cap, jobs=jobs)
    return report_dict(report)


def theorems() -> dict[str, Any]:
    """Registered theorem ids with their tuple layout and required bounds."""
    return {
        "theorems": [
            {
                "theorem_id": t.theorem_id,
                "parameters": list(t.parameters),
                "required": list(t.required),
                "fixed_base": t.fixed_base,
            }
            for t in THEOREMS.values()
        ]
    }
