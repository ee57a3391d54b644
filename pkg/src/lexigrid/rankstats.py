"""Frequency ranks and the écart (rank deviation) of a text.

The écart of a symbol is its rank in the reference language minus its rank
in the text. The écart of the text is the mean absolute écart over the ``n``
ranked symbols; it is bounded by ``(n - 1)/2 + floor(n/2)/n``, the value of
the order-reversing permutation. :func:`max_ecart_oracle` checks that bound by
exhaustive search.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .corpus_core import FrequencyTable

__all__ = [
    "EcartReport",
    "RankTable",
    "SymbolSetMismatch",
    "TooLarge",
    "build_rank_table",
    "ecart_of_table",
    "ecart_bound",
    "expand_groups",
    "max_ecart_oracle",
    "parse_rank_list",
    "permutation_ecart",
    "text_ecart",
]

ORACLE_MAX_N = 8


class SymbolSetMismatch(ValueError):
    pass


class TooLarge(ValueError):
    pass


@dataclass(frozen=True)
class RankTable:
    """Symbols in rank order; ``symbols[0]`` has rank 1."""

    symbols: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if len(set(self.symbols)) != len(self.symbols):
            dupes = sorted({s for s in self.symbols if self.symbols.count(s) > 1})
            raise ValueError(f"duplicate symbols in rank table: {dupes!r}")

    @property
    def n(self) -> int:
        return len(self.symbols)

    @property
    def rank_of(self) -> dict[str, int]:
        return {s: i for i, s in enumerate(self.symbols, start=1)}

    def __contains__(self, symbol) -> bool:
        return symbol in self.symbols

    def __iter__(self):
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def with_absent(self, symbols: Iterable[str]) -> "RankTable":
        """Append missing ``symbols`` after the last rank, in the order given."""
        extra = [s for s in symbols if s not in self]
        return RankTable(self.symbols + tuple(dict.fromkeys(extra)))

    def restricted(self, symbols: Iterable[str]) -> "RankTable":
        keep = set(symbols)
        return RankTable(tuple(s for s in self.symbols if s in keep))


def build_rank_table(table: FrequencyTable, reference: RankTable | None = None) -> RankTable:
    """Rank the symbols of ``table`` by descending count.

    Ties, including the block of zero-count symbols that always comes last,
    follow ``reference`` order when given (symbols unknown to the reference
    after those it knows), then alphabet order.
    """
    alpha = table.alphabet
    ref_rank = reference.rank_of if reference is not None else {}
    far = len(ref_rank) + 1

    def key(sym):
        return (-table.counts[sym], ref_rank.get(sym, far), alpha.index(sym))

    return RankTable(tuple(sorted(alpha.symbols, key=key)))


def ecart_bound(n: int) -> Fraction:
    """Largest possible mean absolute rank displacement over ``n`` symbols."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Fraction(n - 1, 2) + Fraction(n // 2, n)


def permutation_ecart(perm: Sequence[int]) -> Fraction:
    """Mean of ``|i - perm[i-1]|`` for a permutation of ``1..n``."""
    n = len(perm)
    return Fraction(sum(abs(i - j) for i, j in enumerate(perm, start=1)), n)


def max_ecart_oracle(n: int) -> Fraction:
    """Exhaustive maximum of :func:`permutation_ecart` over all permutations of 1..n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > ORACLE_MAX_N:
        raise TooLarge(f"n={n} needs {math.factorial(n)} permutations; limit is n={ORACLE_MAX_N}")
    best = max(
        sum(abs(i - j) for i, j in enumerate(perm, start=1))
        for perm in itertools.permutations(range(1, n + 1))
    )
    return Fraction(best, n)


@dataclass(frozen=True)
class EcartReport:
    per_symbol: Mapping[str, int]
    mean_abs: Fraction
    n: int
    upper_bound: Fraction

    @property
    def total_abs(self) -> int:
        return sum(abs(v) for v in self.per_symbol.values())


def text_ecart(reference: RankTable, observed: RankTable) -> EcartReport:
    """Écart of ``observed`` against ``reference``.

    Symbols ranked on one side only are appended to the other side after its
    last rank, in the order of the side that has them.
    """
    if reference.n and observed.n and not set(reference.symbols) & set(observed.symbols):
        raise SymbolSetMismatch("reference and observed rank tables share no symbols")
    ref = reference.with_absent(observed.symbols)
    obs = observed.with_absent(reference.symbols)
    ref_rank = ref.rank_of
    obs_rank = obs.rank_of
    per_symbol = {s: ref_rank[s] - obs_rank[s] for s in ref.symbols}
    n = len(per_symbol)
    if n == 0:
        raise SymbolSetMismatch("nothing to rank")
    mean_abs = Fraction(sum(abs(v) for v in per_symbol.values()), n)
    return EcartReport(per_symbol, mean_abs, n, ecart_bound(n))


def expand_groups(groups: Sequence[Sequence[str]], keep: Iterable[str] | None = None) -> RankTable:
    """Flatten tied rank groups into strict ranks by listed order.

    ``keep`` restricts the result to a symbol set (e.g. drop W, Q, Y for a
    23-letter alphabet).
    """
    flat = [s for g in groups for s in g]
    if keep is not None:
        allowed = set(keep)
        flat = [s for s in flat if s in allowed]
    return RankTable(tuple(flat))


def parse_rank_list(text: str) -> list[list[str]]:
    """Parse a rank file into groups.

    Lines look like ``3: O,C,U`` (grouped ranks, in descending frequency) or
    hold a single symbol. Blank lines and ``#`` comments are skipped.
    """
    groups = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if ":" in line:
            label, _, body = line.partition(":")
            if not label.strip():
                raise ValueError(f"line {lineno}: missing rank group label")
            syms = [s.strip() for s in body.split(",") if s.strip()]
        else:
            syms = [line]
        if not syms:
            raise ValueError(f"line {lineno}: empty rank group")
        groups.append([s.upper() for s in syms])
    if not groups:
        raise ValueError("rank list is empty")
    return groups


def ecart_of_table(reference: RankTable, table: FrequencyTable) -> EcartReport:
    """Écart of a frequency table against a reference ranking.

    Symbols that are absent from the text and unknown to the reference are
    left out of the ranking rather than injected.
    """
    observed = build_rank_table(table, reference)
    observed = RankTable(tuple(s for s in observed if table.counts[s] or s in reference))
    return text_ecart(reference, observed)
