#!/usr/bin/env python3
"""Three species: all machinery at k=3, plus the arbitrary-tiling probe.

The sector (r_1, r_2) = (1, 1) on four sites has 48 states; the exact
chain solve agrees with the tableau weights.  For k >= 3 not every
tiling is known to be flip-reachable, so alternative tilings are probed
and reported, never asserted.
"""

from fractions import Fraction

from kpasep.pasep import RateParams, stationary_exact
from kpasep.rhombic import conjecture_probe, sector_weight_sum, word_weight
from kpasep.tilings import maximal_tiling
from kpasep.words import parse_word, word_str

ASSIGN = {"alpha": Fraction(1, 2), "beta": Fraction(1, 3),
          "q": Fraction(1, 5)}
params = RateParams.single_q(ASSIGN["alpha"], ASSIGN["beta"],
                             ASSIGN["q"], 3)

dist = stationary_exact(4, 3, (1, 1), params)
z = sector_weight_sum(4, 3, (1, 1)).evaluate(ASSIGN)
agree = all(word_weight(w).evaluate(ASSIGN) / z == p
            for w, p in dist.items())
print(f"k=3, n=4, sector (1,1): {len(dist)} states; "
      f"chain solve == weights/Z: {agree}")
top = sorted(dist.items(), key=lambda kv: -kv[1])[:5]
print("most likely states:")
for w, p in top:
    print(f"  {word_str(w, 3):10s} {p}")

word = parse_word("a2da1ea2a1eed")
w = word_weight(word)
print(f"\nweight({word_str(word, 3)}) has {len(w.terms)} monomials;")
coeff = w.terms.get((("alpha", 4), ("beta", 4), ("q", 8)), 0)
print(f"the monomial alpha^4*beta^4*q^8 appears with coefficient {coeff}")

t = maximal_tiling(word)
print(f"\nmaximal tiling has {t.area} tiles and "
      f"{len(t.hexagon_triples())} flippable hexagons")
print("probing flip neighbors (report-only):")
for triple in t.hexagon_triples():
    rep = conjecture_probe(word, t.flip(triple), 3)
    print(f"  flip at {triple}: weight sum agrees with maximal: "
          f"{rep['agrees']}")
