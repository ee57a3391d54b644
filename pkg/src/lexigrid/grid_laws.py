"""Closed-form word counts, length bounds and black-cell budgets for grids.

With ``n`` rows, ``m`` columns and isolated black cells (no two sharing an
edge), a black cell in a corner adds no word, one on the border adds one word
and one in the interior adds two. Hence

* across words = ``n + pNBO + pNC``
* down words   = ``m + pNBV + pNC``
* total        = ``n + m + pNB + 2 pNC``, between ``n + m`` and ``n + m + 2p``.

Every white cell sits in one across and one down word, so the mean word
length is ``2(nm - p) / words``, at least ``2(nm - p) / (n + m + 2p)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_DOWN, Decimal
from fractions import Fraction
from typing import NamedTuple

from . import reference_data
from .grid_core import BlackCensus, Grid, WordCensus, black_census, validate_spacing
from .reference_data import RecordGridEntry

__all__ = [
    "BudgetFeasibility",
    "GridPrediction",
    "LengthReport",
    "NoWords",
    "PreconditionViolated",
    "RecordGridEntry",
    "black_budget",
    "budget_feasibility",
    "length_report",
    "nearest_natural",
    "predict_counts",
    "predict_grid",
    "record_percentage",
    "record_table",
    "truncate3",
    "verify_record",
    "word_bounds",
]

MIN_SIDE = 3


class PreconditionViolated(ValueError):
    """The closed forms do not apply; count words with ``extract_words`` instead."""


class NoWords(ValueError):
    pass


@dataclass(frozen=True)
class GridPrediction:
    across_words: int
    down_words: int

    @property
    def total_words(self) -> int:
        return self.across_words + self.down_words

    @property
    def difference(self) -> int:
        return self.across_words - self.down_words


def predict_counts(n: int, m: int, census: BlackCensus) -> GridPrediction:
    """Word counts from the black census alone.

    Only the size precondition can be checked here; the caller is responsible
    for black-cell spacing (see :func:`predict_grid`).
    """
    if n < MIN_SIDE or m < MIN_SIDE:
        raise PreconditionViolated(f"{n}x{m} grid: formulas need n, m >= {MIN_SIDE}")
    return GridPrediction(
        across_words=n + census.p_bo + census.p_c,
        down_words=m + census.p_bv + census.p_c,
    )


def predict_grid(grid: Grid) -> GridPrediction:
    """:func:`predict_counts` for a concrete grid, checking both preconditions."""
    if not validate_spacing(grid):
        raise PreconditionViolated("adjacent black cells: formulas do not apply")
    return predict_counts(grid.n, grid.m, black_census(grid))


def word_bounds(n: int, m: int, p: int) -> tuple[int, int]:
    if n < 1 or m < 1:
        raise ValueError("n and m must be >= 1")
    if not 0 <= p < n * m:
        raise ValueError(f"p must be in [0, {n * m})")
    return n + m, n + m + 2 * p


@dataclass(frozen=True)
class LengthReport:
    letter_slots: int
    word_count: int
    mean_length: Fraction
    lower_bound: Fraction


def length_report(grid: Grid, census: WordCensus) -> LengthReport:
    if census.total == 0:
        raise NoWords("grid has no white cells")
    slots = grid.n * grid.m - grid.p
    return LengthReport(
        letter_slots=slots,
        word_count=census.total,
        mean_length=Fraction(2 * slots, census.total),
        lower_bound=Fraction(2 * slots, grid.n + grid.m + 2 * grid.p),
    )


def nearest_natural(x) -> int:
    """Largest natural number within 0.5 of ``x``, so halves round up."""
    x = Fraction(x)
    if x < Fraction(-1, 2):
        raise ValueError(f"no natural number within 0.5 of {x}")
    return max(0, math.floor(x + Fraction(1, 2)))


def _exact(value) -> Fraction:
    if isinstance(value, float):
        return Fraction(Decimal(repr(value)))
    if isinstance(value, (str, Decimal)):
        return Fraction(Decimal(value))
    return Fraction(value)


def black_budget(n: int, m: int, percent=15) -> int:
    """Maximum black cells for an ``n x m`` grid under a percentage rule.

    >>> black_budget(13, 13), black_budget(12, 12)
    (25, 22)
    """
    pct = _exact(percent)
    if not 0 <= pct <= 100:
        raise ValueError("percent must be within [0, 100]")
    return nearest_natural(pct / 100 * n * m)


class BudgetFeasibility(NamedTuple):
    bound: Fraction
    short_words: bool


def budget_feasibility(n: int, m: int, fraction) -> BudgetFeasibility:
    """Mean-length bound when a ``fraction`` of the cells is black.

    ``short_words`` is true when that bound drops to 3 letters or below. At a
    fraction of 1/5 this happens exactly when ``1/n + 1/m >= 2/15``.
    """
    if n < 1 or m < 1:
        raise ValueError("n and m must be >= 1")
    f = _exact(fraction)
    if not 0 <= f < 1:
        raise ValueError("fraction must be within [0, 1)")
    nm = n * m
    bound = 2 * nm * (1 - f) / (n + m + 2 * f * nm)
    return BudgetFeasibility(bound, bound <= 3)


def truncate3(value) -> Decimal:
    """Cut to 3 decimals the way the record table prints percentages (11x11: 3.3057 -> 3.305)."""
    d = Decimal(value.numerator) / Decimal(value.denominator) if isinstance(value, Fraction) else Decimal(value)
    return d.quantize(Decimal("0.001"), rounding=ROUND_DOWN)


def record_percentage(side: int, min_black: int) -> Fraction:
    return Fraction(100 * min_black, side * side)


def record_table() -> list[RecordGridEntry]:
    return reference_data.record_rows("RECORD_GRIDS")


def verify_record(entry: RecordGridEntry) -> bool:
    return truncate3(record_percentage(entry.side, entry.min_black)) == entry.percentage.quantize(Decimal("0.001"))
