"""
Word counts of a crossword grid without enumerating it
======================================================

Build a 13x13 grid with isolated black squares, then compare the
closed-form word counts with a direct scan.
"""

import random

from lexigrid import (
    Grid,
    black_budget,
    black_census,
    budget_feasibility,
    extract_words,
    length_report,
    predict_grid,
    word_bounds,
)
from lexigrid.grid_core import serialize_grid

# the house rule: at most 15% black squares, rounded to nearest
n = m = 13
budget = black_budget(n, m, 15)
print("budget for 13x13:", budget)

# scatter black squares, never two side by side
rng = random.Random(7)
cells = [(r, c) for r in range(1, n + 1) for c in range(1, m + 1)]
rng.shuffle(cells)
blacks = set()
for r, c in cells:
    if len(blacks) == budget:
        break
    if not blacks & {(r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)}:
        blacks.add((r, c))
grid = Grid.from_blacks(n, m, blacks)
print(serialize_grid(grid))

census = black_census(grid)
print(census.as_dict())

pred = predict_grid(grid)
words = extract_words(grid)
print("predicted across/down:", pred.across_words, pred.down_words)
print("scanned   across/down:", len(words.across), len(words.down))
print("bounds on total:", word_bounds(n, m, grid.p))

rep = length_report(grid, words)
print(f"mean word length {float(rep.mean_length):.3f} >= {float(rep.lower_bound):.3f}")

# at 20% black, when is the mean word length forced down to 3 or less?
for side in (7, 14, 15, 16, 21):
    f = budget_feasibility(side, side, "0.2")
    print(side, float(f.bound), f.short_words)
