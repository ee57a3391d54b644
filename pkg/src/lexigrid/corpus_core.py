"""Text ingestion and frequency statistics for Romanian corpora.

Three alphabet profiles are built in:

``GRID23``
    23 letters, diacritics folded (Ă, Â -> A; Î -> I; Ș -> S; Ț -> T) as in
    crossword grids. K is kept (it occurs at zero frequency), Q, W, Y are not.
``CLUE27``
    the 27 letters of the clue letter table, diacritics kept distinct.
``POETRY31``
    the 31 letters of the poetry letter table, including K, Q, Y, W.

Frequencies and distributions use :class:`fractions.Fraction` so that tables
loaded from rounded percentages are renormalized exactly.
"""

from __future__ import annotations

import unicodedata
import warnings
from collections import Counter
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, NamedTuple, Sequence

__all__ = [
    "Alphabet",
    "AnnotatedToken",
    "CLUE27",
    "Distribution",
    "EmptyInput",
    "FrequencyTable",
    "GRID23",
    "MissingKey",
    "NoVowelsWarning",
    "Normalized",
    "POETRY31",
    "PROFILES",
    "attribute_distribution",
    "distribution_mean",
    "get_alphabet",
    "keyword_top_k",
    "length_distribution",
    "letter_frequencies",
    "load_syllable_lexicon",
    "normalize_stream",
    "parse_annotated",
    "syllable_count",
    "text_ratios",
    "vowel_ratio",
    "word_frequencies",
    "word_tokens",
]


class EmptyInput(ValueError):
    """A statistic was requested over zero observations."""


class MissingKey(KeyError):
    """No annotated token carries the requested attribute."""


class NoVowelsWarning(UserWarning):
    """A token without vowels was counted as a single syllable."""


# Cedilla forms (legacy encodings) are treated as the comma-below letters.
_CEDILLA = {"Ş": "Ș", "Ţ": "Ț"}


@dataclass(frozen=True)
class Alphabet:
    name: str
    symbols: tuple[str, ...]
    vowels: frozenset[str]
    fold_map: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError(f"{self.name}: duplicate symbols")
        if not self.vowels <= set(self.symbols):
            raise ValueError(f"{self.name}: vowels must be symbols")
        if not set(self.fold_map.values()) <= set(self.symbols):
            raise ValueError(f"{self.name}: fold targets must be symbols")

    def __contains__(self, symbol) -> bool:
        return symbol in self._index

    def __iter__(self):
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    @property
    def _index(self) -> dict[str, int]:
        # cached on first use; the dataclass is frozen so bypass __setattr__
        try:
            return self.__dict__["_index_cache"]
        except KeyError:
            idx = {s: i for i, s in enumerate(self.symbols)}
            object.__setattr__(self, "_index_cache", idx)
            return idx

    def index(self, symbol: str) -> int:
        return self._index[symbol]

    def fold(self, ch: str) -> str | None:
        """Map one character to an alphabet symbol, or None if it is not a letter here."""
        up = ch.upper()
        up = _CEDILLA.get(up, up)
        up = self.fold_map.get(up, up)
        return up if up in self._index else None


GRID23 = Alphabet(
    "grid23",
    tuple("ABCDEFGHIJKLMNOPRSTUVXZ"),
    frozenset("AEIOU"),
    {"Ă": "A", "Â": "A", "Î": "I", "Ș": "S", "Ț": "T"},
)
CLUE27 = Alphabet(
    "clue27",
    tuple("E I A R U N T C L O P Ă S Î D Â V F Ș Ț G B H J Z X K".split()),
    frozenset("AĂÂEIÎOU"),
)
POETRY31 = Alphabet(
    "poetry31",
    tuple("E I A R N U T L C S O P Ă M D Î V G B Ș F Z Ț H J X Â K Q Y W".split()),
    frozenset("AĂÂEIÎOU"),
)
PROFILES = {a.name: a for a in (GRID23, CLUE27, POETRY31)}


def get_alphabet(name: str | Alphabet) -> Alphabet:
    if isinstance(name, Alphabet):
        return name
    try:
        return PROFILES[name.lower()]
    except KeyError:
        raise KeyError(f"unknown alphabet profile {name!r}; choose from {sorted(PROFILES)}") from None


class Normalized(NamedTuple):
    symbols: tuple[str, ...]
    discarded: int

    def __str__(self) -> str:
        return "".join(self.symbols)


def normalize_stream(text: str, alphabet: Alphabet) -> Normalized:
    """Uppercase, fold and filter ``text`` down to symbols of ``alphabet``.

    Non-whitespace characters that do not map to the alphabet are dropped and
    counted in ``discarded``.
    """
    out = []
    dropped = 0
    for ch in unicodedata.normalize("NFC", text):
        sym = alphabet.fold(ch)
        if sym is not None:
            out.append(sym)
        elif not ch.isspace():
            dropped += 1
    return Normalized(tuple(out), dropped)


def word_tokens(text: str, alphabet: Alphabet) -> list[str]:
    """Split text on everything that is not an alphabet letter (hyphens included)."""
    tokens = []
    current = []
    for ch in unicodedata.normalize("NFC", text):
        sym = alphabet.fold(ch)
        if sym is not None:
            current.append(sym)
        elif current:
            tokens.append("".join(current))
            current = []
    if current:
        tokens.append("".join(current))
    return tokens


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(Decimal(repr(value)))
    return Fraction(Decimal(str(value)))


@dataclass(frozen=True)
class FrequencyTable:
    """Counts over a declared symbol set.

    Every symbol of the alphabet is present; unseen symbols have count 0.
    Counts may be integers or exact fractions (percent tables).
    """

    alphabet: Alphabet
    counts: Mapping[str, Fraction | int]

    def __post_init__(self):
        full = {s: 0 for s in self.alphabet.symbols}
        for sym, c in self.counts.items():
            if sym not in self.alphabet:
                raise ValueError(f"symbol {sym!r} not in alphabet {self.alphabet.name}")
            if c < 0:
                raise ValueError(f"negative count for {sym!r}")
            full[sym] = c
        object.__setattr__(self, "counts", full)

    @classmethod
    def from_percentages(cls, alphabet: Alphabet, percentages: Mapping[str, object]) -> "FrequencyTable":
        return cls(alphabet, {s: _as_fraction(v) for s, v in percentages.items()})

    @property
    def total(self):
        return sum(self.counts.values())

    @property
    def probabilities(self) -> dict[str, Fraction]:
        total = self.total
        if not total:
            raise EmptyInput("frequency table is empty")
        total = Fraction(total)
        return {s: Fraction(c) / total for s, c in self.counts.items()}

    def probability(self, symbol: str) -> Fraction:
        return self.probabilities[symbol]

    def merge(self, other: "FrequencyTable") -> "FrequencyTable":
        if other.alphabet != self.alphabet:
            raise ValueError("cannot merge tables over different alphabets")
        return FrequencyTable(self.alphabet, {s: self.counts[s] + other.counts[s] for s in self.alphabet})

    def nonzero(self) -> dict[str, Fraction | int]:
        return {s: c for s, c in self.counts.items() if c}

    def merged(self, mapping: Mapping[str, str]) -> "FrequencyTable":
        """Fold the counts of each source symbol into its target and drop the source."""
        if not mapping:
            return self
        alpha = self.alphabet
        symbols = tuple(s for s in alpha.symbols if s not in mapping)
        merged_alpha = Alphabet(
            alpha.name + "+merged",
            symbols,
            frozenset(alpha.vowels - set(mapping)),
            {**{k: mapping.get(v, v) for k, v in alpha.fold_map.items()}, **mapping},
        )
        counts = {s: self.counts[s] for s in symbols}
        for src, dst in mapping.items():
            counts[dst] += self.counts[src]
        return FrequencyTable(merged_alpha, counts)


def letter_frequencies(stream: Iterable[str], alphabet: Alphabet) -> FrequencyTable:
    """Count symbols of an already normalized stream."""
    counts = Counter(stream)
    bad = [s for s in counts if s not in alphabet]
    if bad:
        raise ValueError(f"symbols outside {alphabet.name}: {sorted(bad)!r}")
    return FrequencyTable(alphabet, counts)


def word_frequencies(tokens: Iterable[str]) -> FrequencyTable:
    """Token counts as a table over the vocabulary (ordered by first occurrence)."""
    counts = Counter(tokens)
    vocab = Alphabet("words", tuple(counts), frozenset())
    return FrequencyTable(vocab, counts)


def vowel_ratio(table: FrequencyTable) -> Fraction:
    """Percentage of vowel occurrences in the table."""
    probs = table.probabilities
    return 100 * sum((probs[v] for v in table.alphabet.vowels), Fraction(0))


def load_syllable_lexicon(lines: Iterable[str] | str, alphabet: Alphabet | None = None) -> dict[str, int]:
    """Parse ``WORD<TAB>count`` lines into an override lexicon.

    Words are normalized with ``alphabet`` when given, else just uppercased.
    """
    if isinstance(lines, str):
        lines = lines.splitlines()
    lexicon = {}
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            word, count = line.split("\t")
            n = int(count)
        except ValueError:
            raise ValueError(f"lexicon line {lineno}: expected WORD<TAB>count, got {line!r}") from None
        if n < 1:
            raise ValueError(f"lexicon line {lineno}: syllable count must be >= 1")
        word = str(normalize_stream(word, alphabet)) if alphabet else word.upper()
        lexicon[word] = n
    return lexicon


def syllable_count(
    word: str,
    alphabet: Alphabet = POETRY31,
    lexicon: Mapping[str, int] | None = None,
) -> int:
    """Number of syllables in ``word``.

    Looks the word up in ``lexicon`` first. Otherwise counts maximal runs of
    vowels, one nucleus per run. This ignores hiatus (``RE-A``) and treats
    diphthongs and triphthongs correctly only by accident of adjacency, so it
    is an approximation. Words without vowels count as one syllable and emit
    a :class:`NoVowelsWarning`.
    """
    if not word:
        raise ValueError("empty token")
    if lexicon and word in lexicon:
        return lexicon[word]
    runs = 0
    prev_vowel = False
    for ch in word:
        is_vowel = ch in alphabet.vowels
        if is_vowel and not prev_vowel:
            runs += 1
        prev_vowel = is_vowel
    if runs == 0:
        warnings.warn(f"{word!r} has no vowels; counted as one syllable", NoVowelsWarning, stacklevel=2)
        return 1
    return runs


@dataclass(frozen=True)
class Distribution:
    """Proportions over a discrete support, normalized to sum to 1."""

    support: Mapping[object, Fraction]

    def __post_init__(self):
        if not self.support:
            raise EmptyInput("empty distribution")
        weights = {k: _as_fraction(v) for k, v in self.support.items()}
        if any(w < 0 for w in weights.values()):
            raise ValueError("negative proportion")
        total = sum(weights.values())
        if not total:
            raise EmptyInput("distribution has zero mass")
        object.__setattr__(self, "support", {k: w / total for k, w in weights.items()})

    @classmethod
    def from_counts(cls, counts: Mapping[object, int]) -> "Distribution":
        return cls(dict(counts))

    @classmethod
    def from_percentages(cls, percentages: Mapping[object, object]) -> "Distribution":
        return cls({k: _as_fraction(v) for k, v in percentages.items()})

    @property
    def mean(self) -> Fraction:
        return distribution_mean(self)

    def percentages(self) -> dict[object, Fraction]:
        return {k: 100 * v for k, v in self.support.items()}


def distribution_mean(dist: Distribution) -> Fraction:
    """Expected value of a numeric distribution."""
    return sum((_as_fraction(k) * w for k, w in dist.support.items()), Fraction(0))


def length_distribution(
    tokens: Sequence[str],
    measure: str = "letters",
    alphabet: Alphabet = POETRY31,
    lexicon: Mapping[str, int] | None = None,
) -> Distribution:
    if not tokens:
        raise EmptyInput("no tokens")
    if measure == "letters":
        lengths = Counter(len(t) for t in tokens)
    elif measure == "syllables":
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", NoVowelsWarning)
            lengths = Counter(syllable_count(t, alphabet, lexicon) for t in tokens)
    else:
        raise ValueError(f"measure must be 'letters' or 'syllables', not {measure!r}")
    return Distribution.from_counts(dict(sorted(lengths.items())))


def keyword_top_k(tokens: Sequence[str], k: int, stoplist: Iterable[str] = ()) -> list[str]:
    """The ``k`` most frequent tokens outside ``stoplist``; ties go to the earlier token."""
    if k < 1:
        raise ValueError("k must be >= 1")
    stop = set(stoplist)
    counts = Counter()
    first = {}
    for i, t in enumerate(tokens):
        if t in stop:
            continue
        counts[t] += 1
        first.setdefault(t, i)
    ranked = sorted(counts, key=lambda t: (-counts[t], first[t]))
    return ranked[:k]


@dataclass(frozen=True)
class AnnotatedToken:
    surface: str
    attributes: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if not self.surface:
            raise ValueError("empty surface form")


def parse_annotated(text: str) -> list[AnnotatedToken]:
    """Parse ``surface<TAB>key=value[,key=value...]`` lines; ``#`` starts a comment line."""
    tokens = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        surface, _, attrs = line.rstrip("\n").partition("\t")
        attributes = {}
        for pair in filter(None, (a.strip() for a in attrs.split(","))):
            key, sep, value = pair.partition("=")
            if not sep or not key:
                raise ValueError(f"line {lineno}: malformed attribute {pair!r}")
            attributes[key.strip()] = value.strip()
        tokens.append(AnnotatedToken(surface.strip(), attributes))
    return tokens


def attribute_distribution(tokens: Iterable[AnnotatedToken], key: str) -> Distribution:
    values = Counter(t.attributes[key] for t in tokens if key in t.attributes)
    if not values:
        raise MissingKey(key)
    return Distribution.from_counts(values)


def text_ratios(
    lines: Sequence[str],
    alphabet: Alphabet = POETRY31,
    lexicon: Mapping[str, int] | None = None,
) -> dict[str, Fraction]:
    """Average letters/syllables/words relationships over non-blank lines.

    Sentence-level ratios need sentence segmentation and are not computed.
    """
    lines = [ln for ln in lines if ln.strip()]
    tokens = [t for ln in lines for t in word_tokens(ln, alphabet)]
    if not tokens:
        raise EmptyInput("no words")
    letters = sum(len(t) for t in tokens)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NoVowelsWarning)
        syllables = sum(syllable_count(t, alphabet, lexicon) for t in tokens)
    words = len(tokens)
    n_lines = len(lines)
    return {
        "letters/syllable": Fraction(letters, syllables),
        "syllables/word": Fraction(syllables, words),
        "letters/word": Fraction(letters, words),
        "words/line": Fraction(words, n_lines),
        "syllables/line": Fraction(syllables, n_lines),
        "letters/line": Fraction(letters, n_lines),
    }
