"""
Letter frequencies, entropy and informational energy
====================================================
"""

from lexigrid import entropy_bits, informational_energy, vowel_ratio
from lexigrid import reference_data as rd
from lexigrid.corpus_core import get_alphabet, letter_frequencies, normalize_stream

# the bundled tables, one per corpus
for name in ("GRID_LETTER_FREQ", "CLUE_LETTER_FREQ", "POETRY_LETTER_FREQ"):
    t = rd.letter_table(name)
    print(f"{name:20s} H={entropy_bits(t):.4f} E={informational_energy(t):.5f} vowels={float(vowel_ratio(t)):.3f}%")

# same numbers for any text; diacritics fold away in the 23-letter alphabet
text = "Și vântul cântă la fereastră, în noapte arde un felinar."
grid23 = get_alphabet("grid23")
norm = normalize_stream(text, grid23)
table = letter_frequencies(norm.symbols, grid23)
print("".join(norm.symbols))
print("discarded:", norm.discarded)
print("entropy:", round(entropy_bits(table), 4), "energy:", round(informational_energy(table), 4))

# the richer 31-letter alphabet keeps Ă, Â, Î, Ș, Ț
poetry = get_alphabet("poetry31")
t31 = letter_frequencies(normalize_stream(text, poetry).symbols, poetry)
print({s: c for s, c in t31.counts.items() if c})
