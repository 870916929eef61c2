"""The b x k tableau of 0..bk-1 built by permissible power shifts.

Positions are 1-based (row i from the top, column j from the left). A
b^k-shift moves a peg from (i, j) to (i+1, j-b^k); it is permissible when the
target hole is empty and j-b^k and j fall in the same aligned block of b^(k+1)
columns. Starting from one row of labeled pegs, the shifts are applied level
by level (largest power first) until every column holds b pegs.
"""

from __future__ import annotations

import logging

from .digits import digit_dominates, digit_sum
from .errors import InvalidPositionError, TableauConstructionError, ValidationError
from .models import CellViolation, Tableau, VerificationReport, validate_base, validate_natural

logger = logging.getLogger(__name__)

Position = tuple[int, int]


class PegBoard:
    """b rows of holes, each hole empty or holding one labeled peg."""

    def __init__(self, base: int, width: int) -> None:
        self.base = validate_base(base)
        if width < 1:
            raise ValidationError(f"Board width must be positive, got: {width}")
        self.width = width
        self._holes: list[list[int | None]] = [[None] * width for _ in range(self.base)]

    @property
    def rows(self) -> int:
        return self.base

    def _check(self, row: int, column: int) -> None:
        if not (1 <= row <= self.base and 1 <= column <= self.width):
            raise InvalidPositionError(row, column)

    def label_at(self, row: int, column: int) -> int | None:
        self._check(row, column)
        return self._holes[row - 1][column - 1]

    def place(self, row: int, column: int, label: int) -> None:
        self._check(row, column)
        if self._holes[row - 1][column - 1] is not None:
            raise ValidationError(f"Hole ({row}, {column}) is already occupied")
        self._holes[row - 1][column - 1] = label

    def move(self, source: Position, target: Position) -> None:
        label = self.label_at(*source)
        if label is None:
            raise ValidationError(f"No peg at {source}")
        self.place(*target, label)
        self._holes[source[0] - 1][source[1] - 1] = None

    def occupied_columns(self, row: int) -> list[int]:
        """Occupied column indices of one row, left to right."""
        self._check(row, 1)
        return [j + 1 for j, label in enumerate(self._holes[row - 1]) if label is not None]

    def count(self, row: int, first: int, last: int) -> int:
        """Number of pegs in row between columns first..last inclusive."""
        cells = self._holes[row - 1][first - 1 : last]
        return sum(1 for label in cells if label is not None)

    def peg_count(self) -> int:
        return sum(self.count(i, 1, self.width) for i in range(1, self.base + 1))


def _block_aligned(column: int, step: int, block: int) -> bool:
    return (column - step - 1) // block == (column - 1) // block


def is_permissible_shift(board: PegBoard, source: Position, k: int, b: int) -> bool:
    """Whether the b^k-shift of the peg at ``source`` is permissible."""
    b = validate_base(b)
    k = validate_natural(k, "k")
    row, column = source
    if board.label_at(row, column) is None:
        return False
    step = b**k
    if column <= step or row + 1 > board.rows:
        return False
    if board.label_at(row + 1, column - step) is not None:
        return False
    return _block_aligned(column, step, step * b)


def place_row(n: int, b: int) -> PegBoard:
    """One row of n pegs labeled 0..n-1, on a board b^K columns wide.

    K is the least exponent with n <= b^K, so the row is a K-tableau.
    """
    b = validate_base(b)
    n = validate_natural(n, "n")
    width = 1
    while width < n:
        width *= b
    board = PegBoard(b, width)
    for label in range(n):
        board.place(1, label + 1, label)
    return board


def _row_profile(board: PegBoard, offset: int, size: int) -> list[int]:
    """Left-aligned row lengths inside columns offset+1..offset+size."""
    lengths = []
    for row in range(1, board.rows + 1):
        length = board.count(row, offset + 1, offset + size)
        if length and board.count(row, offset + 1, offset + length) != length:
            raise TableauConstructionError(
                f"row {row} is not left-aligned in columns {offset + 1}..{offset + size}"
            )
        lengths.append(length)
    return lengths


def _shift_to_fixpoint(board: PegBoard, offset: int, size: int, exponent: int) -> int:
    """Apply permissible b^exponent-shifts inside one window until none remain.

    Rows are scanned top to bottom and each row right to left; the scan
    repeats until a full pass moves nothing. Returns the number of moves.
    """
    b = board.base
    step = b**exponent
    moves = 0
    changed = True
    while changed:
        changed = False
        for row in range(1, board.rows):
            for column in range(offset + size, offset + step, -1):
                if is_permissible_shift(board, (row, column), exponent, b):
                    board.move((row, column), (row + 1, column - step))
                    moves += 1
                    changed = True
    return moves


def _expected_profile(b: int, full: int, partial: int, step: int) -> list[int]:
    """Row lengths promised after all b^k-shifts of a (k+1)-tableau."""
    mixed = partial // step + 1
    return (
        [(full + 1) * step] * (mixed - 1)
        + [full * step + partial - (mixed - 1) * step]
        + [full * step] * (b - mixed)
    )


def arrange_pegs(board: PegBoard) -> PegBoard:
    """Rearrange a single row of pegs into full columns, in place.

    Each level works on a window of b^level columns holding a level-tableau:
    ``full`` rows of b^level pegs, one partial row, then empty rows. After the
    b^(level-1)-shifts the window's first full*b^(level-1) columns are
    complete and the next b^(level-1) columns form the tableau for the
    next level down.
    """
    b = board.base
    level = 0
    while b**level < board.width:
        level += 1
    if b**level != board.width:
        raise ValidationError(f"Board width {board.width} is not a power of {b}")

    offset = 0
    while level > 0:
        size = b**level
        step = size // b
        profile = _row_profile(board, offset, size)
        full = sum(1 for length in profile if length == size)
        if profile[:full] != [size] * full or any(profile[full + 1 :]):
            raise TableauConstructionError(
                f"columns {offset + 1}..{offset + size} do not hold a tableau: {profile}"
            )
        if full == b:
            break
        partial = profile[full]
        moves = _shift_to_fixpoint(board, offset, size, level - 1)
        after = _row_profile(board, offset, size)
        expected = _expected_profile(b, full, partial, step)
        if after != expected:
            raise TableauConstructionError(
                f"shift fixpoint at level {level} gave rows {after}, expected {expected}"
            )
        logger.debug(
            "level %d window %d..%d: %d shifts, profile %s",
            level,
            offset + 1,
            offset + size,
            moves,
            after,
        )
        offset += full * step
        level -= 1
    return board


def build_tableau(b: int, k: int) -> Tableau:
    """Arrange 0..bk-1 into a b x k matrix with the three tableau properties."""
    b = validate_base(b)
    k = validate_natural(k, "k")
    if k == 0:
        raise ValidationError("Tableau width k must be positive")

    board = arrange_pegs(place_row(b * k, b))
    entries: list[tuple[int, ...]] = []
    for row in range(1, b + 1):
        if board.count(row, 1, board.width) != k or board.count(row, 1, k) != k:
            raise TableauConstructionError(f"row {row} does not fill exactly columns 1..{k}")
        labels = [board.label_at(row, column) for column in range(1, k + 1)]
        entries.append(tuple(label for label in labels if label is not None))
    return Tableau(base=b, width=k, entries=tuple(entries))


def column_ladder(t: Tableau) -> list[int]:
    """Per-column total of s_b over the b rows."""
    return [
        sum(digit_sum(t.entry(i, j), t.base) for i in range(1, t.base + 1))
        for j in range(1, t.width + 1)
    ]


def _permutation_violations(t: Tableau) -> list[CellViolation]:
    expected = t.base * t.width
    seen: dict[int, tuple[int, int]] = {}
    violations = []
    for i in range(1, t.base + 1):
        for j in range(1, t.width + 1):
            value = t.entry(i, j)
            if not 0 <= value < expected:
                violations.append(
                    CellViolation(
                        row=i, column=j, rule="permutation", detail=f"{value} out of range"
                    )
                )
            elif value in seen:
                violations.append(
                    CellViolation(
                        row=i,
                        column=j,
                        rule="permutation",
                        detail=f"{value} repeats cell {seen[value]}",
                    )
                )
            else:
                seen[value] = (i, j)
    return violations


def verify_tableau(t: Tableau) -> VerificationReport:
    """Check the permutation property and properties (i)-(iii) cell by cell."""
    b = t.base
    violations = _permutation_violations(t)
    for j in range(1, t.width + 1):
        top = t.entry(1, j)
        if top != j - 1:
            violations.append(
                CellViolation(row=1, column=j, rule="first-row", detail=f"{top} != {j - 1}")
            )
        if top < 0:
            continue
        for i in range(1, b + 1):
            value = t.entry(i, j)
            if value < 0:
                continue
            if not digit_dominates(top, value, b):
                violations.append(
                    CellViolation(
                        row=i, column=j, rule="dominance", detail=f"{top} does not precede {value}"
                    )
                )
            if digit_sum(value, b) != digit_sum(top, b) + i - 1:
                violations.append(
                    CellViolation(
                        row=i,
                        column=j,
                        rule="digit-sum",
                        detail=f"s({value}) != s({top}) + {i - 1}",
                    )
                )
    violations.sort(key=lambda v: (v.column, v.row, v.rule))
    if violations:
        logger.info("tableau b=%d k=%d: %d violations", b, t.width, len(violations))
    return VerificationReport(
        theorem_id="tableau",
        range=f"b={b}, k={t.width}",
        checked=b * t.width,
        violations=violations,
    )
