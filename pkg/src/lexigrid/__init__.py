"""Crossword-grid combinatorics and letter statistics for Romanian texts."""

from .corpus_core import (
    CLUE27,
    GRID23,
    POETRY31,
    Alphabet,
    AnnotatedToken,
    Distribution,
    FrequencyTable,
    distribution_mean,
    keyword_top_k,
    length_distribution,
    letter_frequencies,
    normalize_stream,
    syllable_count,
    vowel_ratio,
    word_frequencies,
    word_tokens,
)
from .grid_core import Grid, black_census, extract_words, parse_grid, validate_spacing
from .grid_laws import (
    black_budget,
    budget_feasibility,
    length_report,
    predict_counts,
    predict_grid,
    word_bounds,
)
from .infometrics import entropy_bits, informational_energy
from .rankstats import RankTable, build_rank_table, ecart_bound, max_ecart_oracle, text_ecart
from .reference_data import get_table, list_tables

__version__ = "0.1.0"
