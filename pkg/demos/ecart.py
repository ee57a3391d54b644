"""
Rank deviation (ecart) between a text and the language
======================================================
"""

from lexigrid import reference_data as rd
from lexigrid.rankstats import (
    build_rank_table,
    ecart_bound,
    max_ecart_oracle,
    permutation_ecart,
    text_ecart,
)

ref = rd.rank_table("ROMANIAN_RANKS_23")
grid = build_rank_table(rd.letter_table("GRID_LETTER_FREQ"), ref)
report = text_ecart(ref, grid)
print("grid letters ranked:", " ".join(grid))
print("ecart:", report.mean_abs, "=", round(float(report.mean_abs), 3))
for sym, e in report.per_symbol.items():
    if e:
        print(f"  {sym}: {e:+d}")

# the worst case is the reversed ranking; check by brute force for small n
for n in range(1, 9):
    print(n, ecart_bound(n), max_ecart_oracle(n), permutation_ecart(range(n, 0, -1)))
print("bound for 23 letters:", ecart_bound(23))
