"""Exit criteria: published-value regressions plus property suites.

Every test carries a ``criterion`` marker; the terminal summary lists one
PASS/FAIL line per criterion.
"""

import math
import os
import random
import subprocess
import sys
from decimal import Decimal
from fractions import Fraction

import pytest

from lexigrid import reference_data as rd
from lexigrid.corpus_core import Alphabet, FrequencyTable, vowel_ratio
from lexigrid.grid_core import Grid, extract_words, validate_spacing
from lexigrid.grid_laws import (
    black_budget,
    budget_feasibility,
    length_report,
    predict_grid,
    record_percentage,
    record_table,
    truncate3,
    verify_record,
    word_bounds,
)
from lexigrid.infometrics import entropy_bits, informational_energy
from lexigrid.rankstats import (
    RankTable,
    build_rank_table,
    ecart_bound,
    max_ecart_oracle,
    permutation_ecart,
    text_ecart,
)

criterion = pytest.mark.criterion


@criterion("AC1 grid ecart = 32/23 ~ 1.391 (+/-0.001)")
def test_ac1_grid_ecart():
    ref = rd.rank_table("ROMANIAN_RANKS_23")
    observed = build_rank_table(rd.letter_table("GRID_LETTER_FREQ"), ref)
    rep = text_ecart(ref, observed)
    assert rep.mean_abs == Fraction(32, 23)
    assert abs(float(rep.mean_abs) - 1.391) <= 0.001


@criterion("AC2 entropy (+/-0.01) and energy (+/-0.002) of grid, clue, poetry tables")
@pytest.mark.parametrize(
    "name, h1, energy",
    [
        ("GRID_LETTER_FREQ", 3.865, 0.084),
        ("CLUE_LETTER_FREQ", 4.226, 0.062),
        ("POETRY_LETTER_FREQ", 4.222, 0.064),
    ],
)
def test_ac2_entropy_energy(name, h1, energy):
    table = rd.letter_table(name)
    assert abs(entropy_bits(table) - h1) <= 0.01
    assert abs(informational_energy(table) - energy) <= 0.002


@criterion("AC3 distribution means (grid syl 2.246, poetry syl 1.933 +/-0.001; poetry letters 4.643 +/-0.02)")
@pytest.mark.parametrize(
    "name, mean, tol",
    [
        ("GRID_SYLLABLE_DIST", 2.246, 0.001),
        ("POETRY_SYLLABLE_DIST", 1.933, 0.001),
        ("POETRY_LETTERLEN_DIST", 4.643, 0.02),
    ],
)
def test_ac3_distribution_means(name, mean, tol):
    assert abs(float(rd.distribution(name).mean) - mean) <= tol


@criterion("AC4 record-grid percentages match all 9 rows at 3 decimals")
def test_ac4_record_table():
    rows = record_table()
    assert len(rows) == 9
    assert all(verify_record(r) for r in rows)
    assert truncate3(record_percentage(11, 4)) == Decimal("3.305")
    assert truncate3(record_percentage(16, 20)) == Decimal("7.812")


@criterion("AC5 black budget 13x13 -> 25, 12x12 -> 22")
def test_ac5_budget_rounding():
    assert black_budget(13, 13, 15) == 25
    assert black_budget(12, 12, 15) == 22


@criterion("AC6 20% feasibility <=> 1/n + 1/m >= 2/15 on [3,30]^2; (15,15) bound = 3")
def test_ac6_feasibility_rule():
    fifth = Fraction(1, 5)
    for n in range(3, 31):
        for m in range(3, 31):
            rule = Fraction(1, n) + Fraction(1, m) >= Fraction(2, 15)
            assert budget_feasibility(n, m, fifth).short_words == rule, (n, m)
    assert budget_feasibility(15, 15, fifth).bound == 3


def _random_isolated_grid(rng, n, m):
    cells = [(r, c) for r in range(1, n + 1) for c in range(1, m + 1)]
    rng.shuffle(cells)
    target = rng.randint(0, black_budget(n, m))
    blacks = set()
    for r, c in cells:
        if len(blacks) == target:
            break
        if not blacks & {(r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)}:
            blacks.add((r, c))
    return Grid.from_blacks(n, m, blacks)


@criterion("AC7 closed-form counts = enumeration over 1000 random grids; bounds hold")
def test_ac7_formula_equals_enumeration():
    rng = random.Random(20261018)
    checked = 0
    for _ in range(1000):
        n, m = rng.randint(3, 12), rng.randint(3, 12)
        grid = _random_isolated_grid(rng, n, m)
        assert validate_spacing(grid)
        assert grid.p <= black_budget(n, m)
        pred = predict_grid(grid)
        words = extract_words(grid)
        assert pred.total_words == words.total
        assert pred.across_words == len(words.across)
        assert pred.down_words == len(words.down)
        assert pred.difference == words.difference
        lo, hi = word_bounds(n, m, grid.p)
        assert lo <= words.total <= hi
        report = length_report(grid, words)
        assert report.mean_length >= report.lower_bound
        checked += 1
    assert checked == 1000


@criterion("AC8 exhaustive max ecart = bound for n<=8 (reversal attains it); 1000 random n=23 pairs within bound")
def test_ac8_ecart_bound():
    for n in range(1, 9):
        assert max_ecart_oracle(n) == ecart_bound(n)
        assert permutation_ecart(tuple(range(n, 0, -1))) == ecart_bound(n)
    rng = random.Random(23)
    letters = [chr(ord("A") + i) for i in range(23)]
    bound = ecart_bound(23)
    for _ in range(1000):
        a, b = letters[:], letters[:]
        rng.shuffle(a)
        rng.shuffle(b)
        rep = text_ecart(RankTable(tuple(a)), RankTable(tuple(b)))
        assert rep.n == 23
        assert 0 <= rep.mean_abs <= bound


def _table(counts):
    syms = tuple(f"S{i}" for i in range(len(counts)))
    return FrequencyTable(Alphabet("t", syms, frozenset()), dict(zip(syms, counts)))


@criterion("AC9 uniform entropy = log2 n (1e-9), energy in [1/n, 1] with equality cases, zero-padding invariance")
def test_ac9_metric_invariants():
    for n in (2, 4, 23):
        uniform = _table([7] * n)
        assert abs(entropy_bits(uniform) - math.log2(n)) <= 1e-9
        assert abs(informational_energy(uniform) - 1 / n) <= 1e-12
        degenerate = _table([5] + [0] * (n - 1))
        assert informational_energy(degenerate) == 1.0
        assert entropy_bits(degenerate) == 0.0
        skewed = _table(list(range(1, n + 1)))
        assert 1 / n <= informational_energy(skewed) <= 1
        for t in (uniform, skewed):
            padded = _table(list(t.counts.values()) + [0, 0, 0])
            assert abs(entropy_bits(padded) - entropy_bits(t)) <= 1e-12
            assert abs(informational_energy(padded) - informational_energy(t)) <= 1e-12


@criterion("AC10 vowel ratio grid 47.462% (+/-0.001), poetry 46.865% (+/-0.01)")
def test_ac10_vowel_ratios():
    assert abs(float(vowel_ratio(rd.letter_table("GRID_LETTER_FREQ"))) - 47.462) <= 0.001
    assert abs(float(vowel_ratio(rd.letter_table("POETRY_LETTER_FREQ"))) - 46.865) <= 0.01


def _cli(args, seed):
    env = dict(os.environ, PYTHONHASHSEED=str(seed))
    return subprocess.run([sys.executable, "-m", "lexigrid", *args], capture_output=True, env=env, check=False)


@criterion("AC11 selfcheck exits 0; every subcommand is byte-stable across runs")
def test_ac11_cli_determinism(fixtures):
    selfcheck = _cli(["selfcheck"], 0)
    assert selfcheck.returncode == 0, selfcheck.stdout.decode()
    f = fixtures
    commands = [
        ["analyze-grid", f / "grid13_26.txt"],
        ["analyze-grid", f / "adjacent.txt", "--json"],
        ["corpus-stats", f / "text_ro.txt", f / "annotated.tsv", "--alphabet", "poetry31"],
        ["corpus-stats", f / "annotated.tsv", "--annotated", "--alphabet", "poetry31", "--json"],
        ["corpus-stats", f / "text_ro.txt", "--alphabet", "grid23", "--per-file", "--syllable-lexicon", f / "lexicon.tsv", "--json"],
        ["ecart", f / "text_ro.txt", "--reference", "ROMANIAN_RANKS_23"],
        ["ecart", f / "text_ro.txt", "--reference", f / "ranks.txt", "--json"],
        ["ecart", f / "text_ro.txt", "--reference", f / "word_ranks.txt", "--words"],
        ["infometrics", f / "text_ro.txt", "--alphabet", "clue27", "--json"],
        ["tables", "list"],
        ["tables", "show", "POETRY_LETTER_FREQ", "--json"],
        ["tables", "show", "RECORD_GRIDS", "--csv"],
        ["selfcheck"],
        ["selfcheck", "--json"],
    ]
    for cmd in commands:
        args = [str(a) for a in cmd]
        first, second = _cli(args, 1), _cli(args, 2)
        assert first.stdout, args
        assert first.returncode == second.returncode, args
        assert first.stdout == second.stdout, args
