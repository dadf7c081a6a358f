"""Exact computation for the k-species PASEP.

Three independent routes to the stationary distribution of the k-species
partially asymmetric exclusion process, all in exact rational arithmetic:

* an explicit finite Markov chain per sector, solved by Gaussian
  elimination over the rationals (`pasep`),
* Matrix Ansatz transfer-matrix products with a relation checker
  (`ansatz`),
* weight enumeration of (k-)rhombic alternative tableaux (`rhombic`),

plus a Markov chain on two-species tableau classes that projects to the
lattice chain (`ratchain`), and an SVG renderer for tilings.
"""

from .pasep import RateParams, out_transitions, stationary_exact
from .polyring import Poly, qint
from .rhombic import (count_classes, enumerate_fillings, prop28_check,
                      sector_weight_sum, word_weight)
from .tilings import Tiling, all_tilings, maximal_tiling
from .words import parse_word, sector_states, word_str

__all__ = [
    "Poly", "qint", "RateParams", "out_transitions", "stationary_exact",
    "Tiling", "maximal_tiling", "all_tilings", "parse_word",
    "sector_states", "word_str", "word_weight", "sector_weight_sum",
    "enumerate_fillings", "count_classes", "prop28_check",
]
