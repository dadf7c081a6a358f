#!/usr/bin/env python3
"""Tableaux of one word: fillings, weights, flips, and an SVG drawing.

Enumerates every admissible filling of the maximal tiling of a word,
lists all tilings reachable by hexagon flips, and shows that the weight
sum does not depend on the tiling.
"""

from kpasep.render_svg import tiling_svg
from kpasep.rhombic import enumerate_fillings, prop28_check, word_weight
from kpasep.tilings import all_tilings, maximal_tiling
from kpasep.words import parse_word, word_str

WORD = parse_word("daae")

print(f"word: {word_str(WORD, 2)}")
tiling = maximal_tiling(WORD)
print(f"tiles (crossing pairs): {sorted(tiling.tiles())}")
print(f"strip orders: {dict(tiling.lists)}\n")

print("fillings of the maximal tiling:")
for f in enumerate_fillings(WORD):
    symbols = {pair: s for pair, s in f.symbols}
    print(f"  {str(symbols):40s} weight {f.weight().render()}")
print(f"\nweight({word_str(WORD, 2)}) = {word_weight(WORD).render()}")

tilings = all_tilings(WORD)
print(f"\nthe diagram has {len(tilings)} tilings, connected by flips;")
report = prop28_check(WORD)
print(f"all weight sums equal: {report['equal']}")

out = "daae_maximal.svg"
with open(out, "w", encoding="utf-8") as fh:
    fh.write(tiling_svg(tiling, enumerate_fillings(WORD)[-1]))
print(f"wrote {out} (maximal tiling with one filling drawn)")
