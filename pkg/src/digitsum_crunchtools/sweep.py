"""Exhaustive sweeps of the slack operations over bounded parameter ranges.

Each registered theorem knows which range bounds it needs, how to enumerate
its tuples in lexicographic order, and how to evaluate its slack against a
precomputed table of S_b. Work is split on the outermost parameter; partial
results merge associatively and commutatively, so the final report does not
depend on how the range was partitioned.
"""

from __future__ import annotations

import functools
import logging
from collections.abc import Callable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import repeat

from .config import get_config
from .digits import cumulative_table
from .errors import InvalidRangeError, UnknownTheoremError, ValidationError
from .models import Residual, SweepRange, VerificationReport, validate_natural
from .verifier import (
    Cumulative,
    approx_convexity_h_kernel,
    approx_convexity_h_slack,
    general_bound_average_kernel,
    general_bound_average_slack,
    general_bound_kernel,
    general_bound_slack,
    lev_kernel,
    lev_slack,
    superadditivity_kernel,
    superadditivity_slack,
    ternary_kernel,
    ternary_slack,
    times_b_kernel,
    times_b_slack,
)

logger = logging.getLogger(__name__)

Inputs = tuple[int, ...]
Slack = int | Fraction

# Largest S_b table a single sweep may allocate.
MAX_TABLE_SIZE = 10**7


@dataclass(frozen=True)
class Theorem:
    """A sweepable inequality."""

    theorem_id: str
    parameters: tuple[str, ...]
    required: tuple[str, ...]
    outer: Callable[[SweepRange], range]
    tuples: Callable[[SweepRange, int], Iterator[Inputs]]
    table_size: Callable[[SweepRange], int]
    kernel: Callable[[Cumulative, int, Inputs], Slack]
    residual: Callable[[Inputs, int], Residual]
    fixed_base: int | None = None

    def prepare(self, sweep_range: SweepRange) -> SweepRange:
        """Check required bounds and pin the base where the theorem fixes it."""
        missing = [name for name in self.required if getattr(sweep_range, name) is None]
        if missing:
            flags = ", ".join("--" + name.replace("_", "-") for name in missing)
            raise InvalidRangeError(f"{self.theorem_id} needs {flags}")
        if self.fixed_base is not None and sweep_range.base != self.fixed_base:
            sweep_range = sweep_range.model_copy(update={"base": self.fixed_base})
        size = self.table_size(sweep_range)
        if size > MAX_TABLE_SIZE:
            raise InvalidRangeError(
                f"{self.theorem_id} range {sweep_range.describe()} needs S_b up to {size}, "
                f"limit is {MAX_TABLE_SIZE}"
            )
        return sweep_range


def _bound(sweep_range: SweepRange, name: str) -> int:
    value = getattr(sweep_range, name)
    if value is None:
        raise InvalidRangeError(f"missing bound {name}")
    return int(value)


def _levels(total: int, b: int, max_level: int) -> range:
    """Levels n <= max_level whose grid b^n reaches total."""
    n = 0
    while b**n < total:
        n += 1
    return range(n, max_level + 1)


def _superadditivity_tuples(r: SweepRange, m: int) -> Iterator[Inputs]:
    max_n = r.max_n if r.max_n is not None else _bound(r, "max_m")
    for n in range(max_n + 1):
        yield (m, n)


def _ternary_tuples(r: SweepRange, k: int) -> Iterator[Inputs]:
    max_m = _bound(r, "max_m")
    for l in range(k + 1):  # noqa: E741
        for m in range(k, max_m + 1):
            yield (k, l, m)


def _general_bound_tuples(r: SweepRange, m: int) -> Iterator[Inputs]:
    for k in range(r.min_k, m + 1):
        yield (m, k)


def _average_tuples(r: SweepRange, n: int) -> Iterator[Inputs]:
    for k in range(max(1, r.min_k), _bound(r, "max_k") + 1):
        yield (n, k)


def _times_b_tuples(r: SweepRange, n: int) -> Iterator[Inputs]:
    for k in range(r.min_k, _bound(r, "max_k") + 1):
        yield (n, k)


def _approx_convexity_tuples(r: SweepRange, m: int) -> Iterator[Inputs]:
    max_level = _bound(r, "max_level")
    top = r.base**max_level
    for k in range(r.min_k, min(m, top - m) + 1):
        for n in _levels(m + k, r.base, max_level):
            yield (m, k, n)


def _lev_tuples(r: SweepRange, m: int) -> Iterator[Inputs]:
    max_level = _bound(r, "max_level")
    top = 3**max_level
    for k in range(r.min_k, min(m, top - m) + 1):
        for l in range(min(k, top - m - k) + 1):  # noqa: E741
            for n in _levels(m + k + l, 3, max_level):
                yield (m, k, l, n)


THEOREMS: dict[str, Theorem] = {
    t.theorem_id: t
    for t in (
        Theorem(
            theorem_id="superadditivity",
            parameters=("m", "n"),
            required=("max_m",),
            outer=lambda r: range(_bound(r, "max_m") + 1),
            tuples=_superadditivity_tuples,
            table_size=lambda r: _bound(r, "max_m")
            + (r.max_n if r.max_n is not None else _bound(r, "max_m")),
            kernel=lambda S, b, t: superadditivity_kernel(S, *t),
            residual=lambda t, b: superadditivity_slack(*t, b),
        ),
        Theorem(
            theorem_id="ternary",
            parameters=("k", "l", "m"),
            required=("max_m",),
            outer=lambda r: range(_bound(r, "max_m") + 1),
            tuples=_ternary_tuples,
            table_size=lambda r: 3 * _bound(r, "max_m"),
            kernel=lambda S, b, t: ternary_kernel(S, *t),
            residual=lambda t, b: ternary_slack(*t),
            fixed_base=3,
        ),
        Theorem(
            theorem_id="general_bound",
            parameters=("m", "k"),
            required=("max_m",),
            outer=lambda r: range(_bound(r, "max_m") + 1),
            tuples=_general_bound_tuples,
            table_size=lambda r: 2 * _bound(r, "max_m"),
            kernel=lambda S, b, t: general_bound_kernel(S, b, *t),
            residual=lambda t, b: general_bound_slack(*t, b),
        ),
        Theorem(
            theorem_id="general_bound_average",
            parameters=("n", "k"),
            required=("max_n", "max_k"),
            outer=lambda r: range(_bound(r, "max_n") + 1),
            tuples=_average_tuples,
            table_size=lambda r: _bound(r, "max_n") + 2 * _bound(r, "max_k"),
            kernel=lambda S, b, t: general_bound_average_kernel(S, b, *t),
            residual=lambda t, b: general_bound_average_slack(*t, b),
        ),
        Theorem(
            theorem_id="times_b",
            parameters=("n", "k"),
            required=("max_n", "max_k"),
            outer=lambda r: range(_bound(r, "max_n") + 1),
            tuples=_times_b_tuples,
            table_size=lambda r: _bound(r, "max_n") + r.base * _bound(r, "max_k"),
            kernel=lambda S, b, t: times_b_kernel(S, b, *t),
            residual=lambda t, b: times_b_slack(*t, b),
        ),
        Theorem(
            theorem_id="approx_convexity_h",
            parameters=("m", "k", "n"),
            required=("max_level",),
            outer=lambda r: range(r.base ** _bound(r, "max_level") + 1),
            tuples=_approx_convexity_tuples,
            table_size=lambda r: r.base ** _bound(r, "max_level"),
            kernel=lambda S, b, t: approx_convexity_h_kernel(S, b, *t),
            residual=lambda t, b: approx_convexity_h_slack(*t, b),
        ),
        Theorem(
            theorem_id="lev",
            parameters=("m", "k", "l", "n"),
            required=("max_level",),
            outer=lambda r: range(3 ** _bound(r, "max_level") + 1),
            tuples=_lev_tuples,
            table_size=lambda r: 3 ** _bound(r, "max_level"),
            kernel=lambda S, b, t: lev_kernel(S, *t),
            residual=lambda t, b: lev_slack(*t),
            fixed_base=3,
        ),
    )
}


def get_theorem(theorem_id: str) -> Theorem:
    try:
        return THEOREMS[theorem_id]
    except KeyError:
        raise UnknownTheoremError(theorem_id) from None


@dataclass
class PartialReport:
    """Sweep aggregate over part of a range; combine with merge()."""

    checked: int = 0
    minimum: tuple[Slack, Inputs] | None = None
    witnesses: list[Inputs] = field(default_factory=list)
    witness_total: int = 0
    counterexamples: list[tuple[Inputs, Slack]] = field(default_factory=list)


def _cap(witnesses: list[Inputs], cap: int) -> list[Inputs]:
    return sorted(witnesses)[:cap]


def merge(a: PartialReport, b: PartialReport, cap: int) -> PartialReport:
    """Combine two partial reports; associative and commutative."""
    minima = [m for m in (a.minimum, b.minimum) if m is not None]
    return PartialReport(
        checked=a.checked + b.checked,
        minimum=min(minima) if minima else None,
        witnesses=_cap(a.witnesses + b.witnesses, cap),
        witness_total=a.witness_total + b.witness_total,
        counterexamples=sorted(a.counterexamples + b.counterexamples),
    )


def scan(theorem_id: str, sweep_range: SweepRange, outer: list[int], cap: int) -> PartialReport:
    """Evaluate every tuple under the given outer values. Runs in worker processes."""
    theorem = get_theorem(theorem_id)
    b = sweep_range.base
    table = cumulative_table(theorem.table_size(sweep_range), b)
    S = table.__getitem__
    part = PartialReport()
    minimum: tuple[Slack, Inputs] | None = None
    for value in outer:
        for inputs in theorem.tuples(sweep_range, value):
            slack = theorem.kernel(S, b, inputs)
            part.checked += 1
            if minimum is None or (slack, inputs) < minimum:
                minimum = (slack, inputs)
            if slack == 0:
                part.witness_total += 1
                part.witnesses.append(inputs)
                if len(part.witnesses) > 2 * cap + 64:
                    part.witnesses = _cap(part.witnesses, cap)
            elif slack < 0:
                part.counterexamples.append((inputs, slack))
    part.minimum = minimum
    part.witnesses = _cap(part.witnesses, cap)
    part.counterexamples.sort()
    return part


def _split(values: list[int], jobs: int) -> list[list[int]]:
    return [chunk for chunk in (values[i::jobs] for i in range(jobs)) if chunk]


def sweep(
    theorem_id: str,
    sweep_range: SweepRange,
    *,
    witness_cap: int | None = None,
    jobs: int | None = None,
) -> VerificationReport:
    """Check one theorem on every tuple of the range.

    Args:
        theorem_id: Key of THEOREMS
        sweep_range: Inclusive bounds; which ones are required depends on the theorem
        witness_cap: Maximum equality witnesses kept (smallest tuples first)
        jobs: Worker processes; 1 evaluates in the calling process

    Raises:
        UnknownTheoremError: theorem_id is not registered
        InvalidRangeError: A required bound is missing or the range is too large
    """
    theorem = get_theorem(theorem_id)
    sweep_range = theorem.prepare(sweep_range)
    config = get_config()
    if witness_cap is None:
        witness_cap = config.witness_cap
    cap = validate_natural(witness_cap, "witness_cap")
    jobs = config.jobs if jobs is None else jobs
    if not isinstance(jobs, int) or jobs < 1:
        raise ValidationError(f"jobs must be a positive integer, got: {str(jobs)[:20]}")

    outer = list(theorem.outer(sweep_range))
    chunks = _split(outer, jobs)
    logger.debug("sweep %s %s: %d chunks", theorem_id, sweep_range.describe(), len(chunks))
    if len(chunks) <= 1:
        partials = [scan(theorem_id, sweep_range, outer, cap)]
    else:
        with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
            partials = list(
                pool.map(scan, repeat(theorem_id), repeat(sweep_range), chunks, repeat(cap))
            )
    total = functools.reduce(lambda x, y: merge(x, y, cap), partials, PartialReport())

    b = sweep_range.base
    report = VerificationReport(
        theorem_id=theorem_id,
        range=sweep_range.describe(),
        checked=total.checked,
        min_slack=theorem.residual(total.minimum[1], b) if total.minimum else None,
        equality_witnesses=total.witnesses,
        witness_total=total.witness_total,
        counterexamples=[Residual(slack=s, inputs=t) for t, s in total.counterexamples],
    )
    if report.counterexamples:
        logger.warning(
            "%s: %d counterexamples on %s",
            theorem_id,
            len(report.counterexamples),
            report.range,
        )
    logger.info(
        "%s on %s: %d tuples, %d equality witnesses",
        theorem_id,
        report.range,
        report.checked,
        report.witness_total,
    )
    return report
