"""Safe error types that can be shown to users.

Every error raised for bad input derives from UserError. Messages are a
single line so the CLI can print them as a one-line diagnostic and the MCP
server can hand them back to clients unchanged.
"""

SAFE_ID_MAX_LENGTH = 20


def _truncate(identifier: str) -> str:
    """Clip user-supplied text echoed back in error messages."""
    if len(identifier) > SAFE_ID_MAX_LENGTH:
        return identifier[:SAFE_ID_MAX_LENGTH] + "..."
    return identifier


class UserError(Exception):
    """Base class for safe errors that can be shown to users."""

    pass


class ConfigurationError(UserError):
    """Error in environment configuration."""

    pass


class InvalidBaseError(UserError):
    """Base outside the supported range."""

    def __init__(self, base: object) -> None:
        super().__init__(f"Invalid base {_truncate(str(base))}. Expected integer >= 2.")


class NegativeValueError(UserError):
    """A natural-number argument was negative or not an integer."""

    def __init__(self, name: str, value: object) -> None:
        super().__init__(
            f"Invalid {name}: {_truncate(str(value))}. Expected nonnegative integer."
        )


class InvalidIntervalError(UserError):
    """Block bounds out of order."""

    def __init__(self, start: int, stop: int, *, allow_empty: bool = True) -> None:
        relation = "s <= t" if allow_empty else "s < t"
        super().__init__(
            f"Invalid interval [{_truncate(str(start))}, {_truncate(str(stop))}). "
            f"Expected {relation}."
        )


class InvalidDepthError(UserError):
    """Series truncation depth out of range."""

    def __init__(self, depth: object, minimum: int = 0) -> None:
        super().__init__(
            f"Invalid depth {_truncate(str(depth))}. Expected integer >= {minimum}."
        )


class ConstraintError(UserError):
    """Arguments violate an ordering or grid constraint such as l <= k <= m."""

    pass


class InvalidPositionError(UserError):
    """Peg position outside the board."""

    def __init__(self, row: int, column: int) -> None:
        super().__init__(f"Position ({row}, {column}) is outside the board.")


class TableauConstructionError(UserError):
    """The peg procedure produced a row profile other than the expected one."""

    pass


class UnknownTheoremError(UserError):
    """Sweep requested for an unregistered theorem id."""

    def __init__(self, theorem_id: str) -> None:
        super().__init__(f"Unknown theorem id: {_truncate(theorem_id)}")


class UnknownFunctionError(UserError):
    """Evaluation requested for an unknown function name."""

    def __init__(self, name: str) -> None:
        super().__init__(f"Unknown function: {_truncate(name)}")


class InvalidRangeError(UserError):
    """Malformed sweep range."""

    pass


class OutputError(UserError):
    """Output path cannot be written."""

    def __init__(self, path: str) -> None:
        super().__init__(f"Cannot write output file: {_truncate(path)}")


class ValidationError(UserError):
    """Input validation error."""

    pass
