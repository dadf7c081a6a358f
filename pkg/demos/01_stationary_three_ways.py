#!/usr/bin/env python3
"""One sector of the two-species process, computed three independent ways.

The stationary distribution of the n=3 lattice with one light particle is
computed by (1) solving the finite Markov chain exactly, (2) contracting
the transfer-matrix product <w| X(W) |v> for each state, and (3) summing
tableau weights.  All three agree as exact rationals.
"""

from fractions import Fraction

from kpasep.ansatz import bracket, partition_brackets
from kpasep.pasep import RateParams, stationary_exact
from kpasep.rhombic import sector_weight_sum, word_weight
from kpasep.words import word_str

N, K, SECTOR = 3, 2, (1,)
ASSIGN = {"alpha": Fraction(1, 2), "beta": Fraction(1, 3),
          "q": Fraction(1, 5)}

params = RateParams.single_q(ASSIGN["alpha"], ASSIGN["beta"], ASSIGN["q"], K)

print(f"Two-species process, n={N}, sector r={SECTOR[0]}, "
      f"alpha={ASSIGN['alpha']}, beta={ASSIGN['beta']}, q={ASSIGN['q']}\n")

chain_dist = stationary_exact(N, K, SECTOR, params)

z_bracket = partition_brackets(N, K, SECTOR).evaluate(ASSIGN)
z_weight = sector_weight_sum(N, K, SECTOR).evaluate(ASSIGN)

print(f"{'state':>6} {'markov solve':>14} {'matrix ansatz':>14} "
      f"{'tableau weights':>16}")
for w, pi in chain_dist.items():
    via_bracket = bracket(w, K).evaluate(ASSIGN) / z_bracket
    via_weight = word_weight(w).evaluate(ASSIGN) / z_weight
    mark = "ok" if pi == via_bracket == via_weight else "MISMATCH"
    print(f"{word_str(w, K):>6} {str(pi):>14} {str(via_bracket):>14} "
          f"{str(via_weight):>16}  {mark}")

print(f"\nsum of probabilities: {sum(chain_dist.values())}")
print("\nThe weight generating function of each state (symbolic):")
for w in chain_dist:
    print(f"  weight({word_str(w, K)}) = {word_weight(w).render()}")
print(f"\nZ = {sector_weight_sum(N, K, SECTOR).render()}")
