"""
Profile of a small poem
=======================

Syllables, word lengths and per-line ratios, next to the bundled poetry
distributions.
"""

from lexigrid import reference_data as rd
from lexigrid.corpus_core import (
    get_alphabet,
    keyword_top_k,
    length_distribution,
    syllable_count,
    text_ratios,
    word_tokens,
)

poem = """Pe malul apei, sub salcâmi,
se-ntinde țărmul liniștit;
copiii râd și fug prin iarbă,
iar seara cade peste sat."""

alpha = get_alphabet("poetry31")
tokens = word_tokens(poem, alpha)
print([(w, syllable_count(w, alpha)) for w in tokens])

# "copiii" has a vowel run the heuristic counts once; a lexicon fixes it
lexicon = {"COPIII": 3}
syl = length_distribution(tokens, "syllables", alpha, lexicon)
print("syllables per word:", {k: round(float(v), 3) for k, v in syl.percentages().items()})
print("mean:", float(syl.mean), "vs corpus", float(rd.distribution("POETRY_SYLLABLE_DIST").mean))

for k, v in text_ratios(poem.splitlines(), alpha, lexicon).items():
    print(f"{k:20s} {float(v):.3f}")

print(keyword_top_k(tokens, 3, stoplist={"PE", "SUB", "ȘI", "PRIN"}))
