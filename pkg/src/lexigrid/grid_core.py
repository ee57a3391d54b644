"""Crossword grids: parsing, zone classification, black-cell census and word scan.

Coordinates are 1-based ``(row, column)`` throughout. A grid file is plain
text where ``.`` is an empty white cell, ``A``-``Z`` a lettered white cell and
``#`` a black cell. Lines starting with ``;`` are comments.

The word scan in :func:`extract_words` is deliberately naive: it is the
reference against which the closed-form counts in :mod:`lexigrid.grid_laws`
are checked.
"""

from __future__ import annotations

import enum
import string
from dataclasses import dataclass, field
from typing import Iterator

__all__ = [
    "BLACK",
    "EMPTY",
    "BlackCensus",
    "EmptyGrid",
    "Grid",
    "GridError",
    "InvalidChar",
    "RaggedRows",
    "Word",
    "WordCensus",
    "Zone",
    "black_census",
    "extract_words",
    "parse_grid",
    "read_grid",
    "serialize_grid",
    "validate_spacing",
    "zone_of",
]

BLACK = "#"
EMPTY = "."
COMMENT = ";"
_LETTERS = frozenset(string.ascii_uppercase)
_VALID = _LETTERS | {BLACK, EMPTY}


class GridError(ValueError):
    """Raised when a grid cannot be built from its textual form."""


class RaggedRows(GridError):
    pass


class InvalidChar(GridError):
    pass


class EmptyGrid(GridError):
    pass


class Zone(str, enum.Enum):
    """Positional zone of a cell: corners, horizontal border, vertical border, interior."""

    A = "A"
    BO = "BO"
    BV = "BV"
    C = "C"


@dataclass(frozen=True)
class Grid:
    """Immutable rectangular grid.

    ``cells`` holds one string per row; each character is ``#``, ``.`` or an
    uppercase letter.
    """

    cells: tuple[str, ...]

    def __post_init__(self):
        if not self.cells or not self.cells[0]:
            raise EmptyGrid("grid has no cells")
        width = len(self.cells[0])
        for i, row in enumerate(self.cells, start=1):
            if len(row) != width:
                raise RaggedRows(f"row {i} has {len(row)} cells, expected {width}")
            bad = set(row) - _VALID
            if bad:
                raise InvalidChar(f"row {i}: invalid cell character(s) {sorted(bad)!r}")

    @classmethod
    def blank(cls, n: int, m: int) -> "Grid":
        return cls(tuple(EMPTY * m for _ in range(n)))

    @classmethod
    def from_blacks(cls, n: int, m: int, blacks) -> "Grid":
        """Build an ``n x m`` grid with black cells at the given 1-based coordinates."""
        rows = [[EMPTY] * m for _ in range(n)]
        for r, c in blacks:
            if not (1 <= r <= n and 1 <= c <= m):
                raise GridError(f"black cell {(r, c)} outside {n}x{m} grid")
            rows[r - 1][c - 1] = BLACK
        return cls(tuple("".join(row) for row in rows))

    @property
    def n(self) -> int:
        return len(self.cells)

    @property
    def m(self) -> int:
        return len(self.cells[0])

    @property
    def p(self) -> int:
        return sum(row.count(BLACK) for row in self.cells)

    def __getitem__(self, rc: tuple[int, int]) -> str:
        r, c = rc
        if not (1 <= r <= self.n and 1 <= c <= self.m):
            raise IndexError(f"cell {rc} outside {self.n}x{self.m} grid")
        return self.cells[r - 1][c - 1]

    def is_black(self, r: int, c: int) -> bool:
        return self[r, c] == BLACK

    def blacks(self) -> Iterator[tuple[int, int]]:
        for r, row in enumerate(self.cells, start=1):
            for c, ch in enumerate(row, start=1):
                if ch == BLACK:
                    yield r, c

    def letters(self) -> str:
        """All letters written in white cells, row by row."""
        return "".join(ch for row in self.cells for ch in row if ch in _LETTERS)

    def __str__(self) -> str:
        return serialize_grid(self)


def parse_grid(text: str) -> Grid:
    """Parse the grid file format into a :class:`Grid`.

    >>> parse_grid("#.\\n.#").p
    2
    """
    rows = []
    for line in text.splitlines():
        line = line.rstrip("\r")
        if line.startswith(COMMENT):
            continue
        if not line.strip():
            # blank lines are only tolerated at the end of the file
            rows.append(None)
            continue
        rows.append(line)
    while rows and rows[-1] is None:
        rows.pop()
    if not rows:
        raise EmptyGrid("no grid rows found")
    if None in rows:
        raise RaggedRows("blank line inside grid")
    return Grid(tuple(rows))


def read_grid(path) -> Grid:
    with open(path, encoding="utf-8") as fh:
        return parse_grid(fh.read())


def serialize_grid(grid: Grid) -> str:
    return "\n".join(grid.cells) + "\n"


def zone_of(n: int, m: int, r: int, c: int) -> Zone:
    """Zone of cell ``(r, c)`` in an ``n x m`` grid, decided by position only."""
    on_hborder = r == 1 or r == n
    on_vborder = c == 1 or c == m
    if on_hborder and on_vborder:
        return Zone.A
    if on_hborder:
        return Zone.BO
    if on_vborder:
        return Zone.BV
    return Zone.C


@dataclass(frozen=True)
class BlackCensus:
    p_a: int = 0
    p_bo: int = 0
    p_bv: int = 0
    p_c: int = 0

    @property
    def p(self) -> int:
        return self.p_a + self.p_bo + self.p_bv + self.p_c

    @property
    def p_b(self) -> int:
        return self.p_bo + self.p_bv

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "pNA": self.p_a,
            "pNB": self.p_b,
            "pNBO": self.p_bo,
            "pNBV": self.p_bv,
            "pNC": self.p_c,
        }


def black_census(grid: Grid) -> BlackCensus:
    counts = {z: 0 for z in Zone}
    for r, c in grid.blacks():
        counts[zone_of(grid.n, grid.m, r, c)] += 1
    return BlackCensus(counts[Zone.A], counts[Zone.BO], counts[Zone.BV], counts[Zone.C])


@dataclass(frozen=True)
class Word:
    """A maximal run of white cells.

    For across words ``line`` is the row and ``start`` the first column; for
    down words ``line`` is the column and ``start`` the first row.
    """

    direction: str
    line: int
    start: int
    length: int
    letters: str | None = None

    def cells(self) -> list[tuple[int, int]]:
        if self.direction == "across":
            return [(self.line, self.start + k) for k in range(self.length)]
        return [(self.start + k, self.line) for k in range(self.length)]


@dataclass(frozen=True)
class WordCensus:
    across: tuple[Word, ...] = field(default_factory=tuple)
    down: tuple[Word, ...] = field(default_factory=tuple)

    @property
    def total(self) -> int:
        return len(self.across) + len(self.down)

    @property
    def difference(self) -> int:
        return len(self.across) - len(self.down)

    def words(self) -> tuple[Word, ...]:
        return self.across + self.down


def _runs(line: str) -> Iterator[tuple[int, str]]:
    """Yield (1-based start, content) for each maximal non-black run."""
    start = None
    for k, ch in enumerate(line):
        if ch != BLACK and start is None:
            start = k
        elif ch == BLACK and start is not None:
            yield start + 1, line[start:k]
            start = None
    if start is not None:
        yield start + 1, line[start:]


def _word(direction: str, line: int, start: int, content: str) -> Word:
    letters = content if EMPTY not in content else None
    return Word(direction, line, start, len(content), letters)


def extract_words(grid: Grid) -> WordCensus:
    """Scan every row and column for maximal white runs, one-letter runs included."""
    across = tuple(
        _word("across", r, start, content)
        for r, row in enumerate(grid.cells, start=1)
        for start, content in _runs(row)
    )
    columns = ["".join(row[c] for row in grid.cells) for c in range(grid.m)]
    down = tuple(
        _word("down", c, start, content)
        for c, col in enumerate(columns, start=1)
        for start, content in _runs(col)
    )
    return WordCensus(across, down)


def validate_spacing(grid: Grid) -> bool:
    """True iff no two black cells share an edge."""
    for r, c in grid.blacks():
        if c < grid.m and grid.is_black(r, c + 1):
            return False
        if r < grid.n and grid.is_black(r + 1, c):
            return False
    return True
