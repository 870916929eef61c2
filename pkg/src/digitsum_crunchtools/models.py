"""Pydantic models and validation helpers for the domain types."""

from __future__ import annotations

from fractions import Fraction
from typing import Annotated, Any

from pydantic import (
    BaseModel,
    BeforeValidator,
    ConfigDict,
    Field,
    PlainSerializer,
    field_validator,
    model_validator,
)

from .errors import InvalidBaseError, InvalidDepthError, NegativeValueError


def validate_base(b: object) -> int:
    """Validate a base is an integer >= 2."""
    if not isinstance(b, int) or isinstance(b, bool) or b < 2:
        raise InvalidBaseError(b)
    return b


def validate_natural(value: object, name: str = "value") -> int:
    """Validate a nonnegative integer argument."""
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise NegativeValueError(name, value)
    return value


def validate_depth(depth: object, minimum: int = 0) -> int:
    """Validate a series truncation depth."""
    if not isinstance(depth, int) or isinstance(depth, bool) or depth < minimum:
        raise InvalidDepthError(depth, minimum)
    return depth


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q``, an integer, or a terminating decimal into a Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as err:
        raise ValueError(f"Expected a rational like 3/8, got: {text[:20]!r}") from err


def _to_fraction(v: Any) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int) and not isinstance(v, bool):
        return Fraction(v)
    if isinstance(v, str):
        return parse_rational(v)
    raise ValueError(f"Expected an exact rational, got {type(v).__name__}")


def format_rational(v: Fraction) -> str:
    """Canonical text form: ``p`` for integers, ``p/q`` otherwise."""
    return str(v)


ExactRational = Annotated[
    Fraction,
    BeforeValidator(_to_fraction),
    PlainSerializer(format_rational, return_type=str, when_used="json"),
]


class BAdicRational(BaseModel):
    """The rational k/b^n, stored canonically.

    Canonical form has b not dividing k unless n = 0; numerators outside
    [0, b^n] are reduced modulo b^n, which is harmless because every function
    evaluated on this grid is 1-periodic.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    k: int = Field(..., ge=0, description="Numerator")
    n: int = Field(..., ge=0, description="Level (exponent of the base)")
    b: int = Field(..., ge=2, description="Base")

    @model_validator(mode="before")
    @classmethod
    def canonicalize(cls, data: Any) -> Any:
        """Reduce into the fundamental period and strip common factors of b."""
        if not isinstance(data, dict):
            return data
        b = validate_base(data.get("b"))
        n = validate_natural(data.get("n", 0), "n")
        k = data.get("k")
        if not isinstance(k, int) or isinstance(k, bool):
            raise ValueError(f"k must be an integer, got {type(k).__name__}")
        period = b**n
        if k < 0 or k > period:
            k %= period
        while n > 0 and k % b == 0:
            k //= b
            n -= 1
        return {**data, "k": k, "n": n, "b": b}

    @classmethod
    def from_fraction(cls, x: Fraction, b: int) -> BAdicRational:
        """Build from a rational whose reduced denominator is a power of b."""
        b = validate_base(b)
        den = x.denominator
        n = 0
        power = 1
        while power % den:
            n += 1
            power *= b
            if n > den.bit_length():
                raise ValueError(f"{x} is not a {b}-adic rational")
        return cls(k=x.numerator * (power // den), n=n, b=b)

    @property
    def value(self) -> Fraction:
        return Fraction(self.k, self.b**self.n)


class TruncatedValue(BaseModel):
    """A series value with a certified absolute error bound."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    value: ExactRational
    depth: int = Field(..., ge=0)
    error_bound: ExactRational

    @field_validator("error_bound")
    @classmethod
    def bound_must_be_non_negative(cls, v: Fraction) -> Fraction:
        if v < 0:
            raise ValueError(f"error_bound must be non-negative, got: {v}")
        return v

    def contains(self, exact: Fraction) -> bool:
        """Whether ``exact`` lies within the certified bound of ``value``."""
        return abs(exact - self.value) <= self.error_bound


class Residual(BaseModel):
    """RHS minus LHS of an inequality at one input tuple.

    slack >= 0 iff the inequality holds there; slack == 0 marks an equality
    witness.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    slack: ExactRational
    inputs: tuple[int, ...]
    average_slack: ExactRational | None = None

    @property
    def holds(self) -> bool:
        return self.slack >= 0

    @property
    def is_equality(self) -> bool:
        return self.slack == 0


class CellViolation(BaseModel):
    """One tableau cell failing one of the matrix properties."""

    model_config = ConfigDict(frozen=True)

    row: int
    column: int
    rule: str
    detail: str


class VerificationReport(BaseModel):
    """Outcome of a sweep or of a tableau verification."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    theorem_id: str
    range: str
    checked: int = Field(..., ge=0)
    min_slack: Residual | None = None
    equality_witnesses: list[tuple[int, ...]] = Field(default_factory=list)
    witness_total: int = Field(default=0, ge=0)
    counterexamples: list[Residual] = Field(default_factory=list)
    violations: list[CellViolation] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples and not self.violations


class SweepRange(BaseModel):
    """Inclusive parameter bounds for a sweep.

    Which bounds are required depends on the theorem; the sweep registry
    checks that before any computation starts.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    base: int = Field(default=2, ge=2, description="Base b")
    max_m: int | None = Field(default=None, ge=0)
    max_n: int | None = Field(default=None, ge=0)
    max_k: int | None = Field(default=None, ge=0)
    min_k: int = Field(default=0, ge=0)
    max_level: int | None = Field(default=None, ge=0)

    def describe(self) -> str:
        """Stable one-line description used in reports."""
        parts = [f"b={self.base}"]
        for name in ("max_m", "max_n", "max_k", "max_level"):
            value = getattr(self, name)
            if value is not None:
                parts.append(f"{name}={value}")
        if self.min_k:
            parts.append(f"min_k={self.min_k}")
        return ", ".join(parts)


class Tableau(BaseModel):
    """A b x k matrix of the integers 0..bk-1, row i holding entries a_{i,j}."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    base: int = Field(..., ge=2)
    width: int = Field(..., ge=1)
    entries: tuple[tuple[int, ...], ...]

    @model_validator(mode="after")
    def shape_must_match(self) -> Tableau:
        """Require b rows of exactly width entries each."""
        if len(self.entries) != self.base:
            raise ValueError(f"expected {self.base} rows, got {len(self.entries)}")
        for i, row in enumerate(self.entries, start=1):
            if len(row) != self.width:
                raise ValueError(f"row {i} has {len(row)} entries, expected {self.width}")
        return self

    def entry(self, row: int, column: int) -> int:
        """Entry a_{row,column}, 1-based like the matrix notation."""
        return self.entries[row - 1][column - 1]

    def to_text(self) -> str:
        """Right-aligned grid, one matrix row per line."""
        cell = max(len(str(v)) for row in self.entries for v in row)
        return "\n".join(" ".join(str(v).rjust(cell) for v in row) for row in self.entries)

    def to_rows(self) -> list[list[int]]:
        return [list(row) for row in self.entries]
