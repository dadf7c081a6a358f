#!/usr/bin/env python3
"""The Markov chain on tableau classes and its projection to the lattice.

Every lattice move lifts to a tableau move: corners fire at rate 1,
inner corners at rate q, empty strips admit the boundary moves.  The
chain's stationary distribution is proportional to the tableau weights,
and collapsing states by type reproduces the lattice chain exactly.
"""

from fractions import Fraction

from kpasep.pasep import RateParams, stationary_exact
from kpasep.ratchain import (canonical_states, chain_transitions,
                             detailed_balance_check, loci, projection_check,
                             rat_chain, transition)
from kpasep.words import word_str

N, R = 3, 1
params = RateParams.single_q(Fraction(1, 2), Fraction(1, 3),
                             Fraction(1, 5), 2)

states, trans = chain_transitions(N, R)
print(f"tableau chain on (n,r)=({N},{R}): {len(states)} states, "
      f"{len(trans)} transitions\n")

f = states[0]
print(f"transitions out of state {word_str(f.word, 2)} "
      f"{dict(f.symbols) or '(empty filling)'}:")
for locus in loci(f):
    t, rate = transition(f, locus)
    print(f"  {locus.kind:8s} -> {word_str(t.word, 2):5s} "
          f"{str(dict(t.symbols)):30s} rate {rate.render()}")

print("\nprojection to the lattice chain:", projection_check(N, R))
print("detailed balance:", detailed_balance_check(N, R))

chain = rat_chain(N, R, params)
pi = dict(zip(chain.states, chain.stationary()))
push = {}
for key, p in pi.items():
    push[key[0]] = push.get(key[0], Fraction(0)) + p
lattice = stationary_exact(N, 2, (R,), params)
print("\npushforward of the tableau stationary distribution vs lattice:")
for w, p in lattice.items():
    print(f"  {word_str(w, 2):5s} {str(push[w]):>10s} == {str(p):>10s}:",
          push[w] == p)
