"""Rhombic alternative tableaux: fillings, weights, and flip moves.

A filling assigns symbols to the tiles of a tiling: de tiles may hold
alpha or beta, d-a tiles beta, a-e tiles alpha, a-a tiles nothing.  No
tile may sit above an alpha in its e-strip or left of a beta in its
d-strip.  Every unforced empty tile contributes a factor q, and the
weight of a filling is that q-power times the symbol product times
alpha^(#d) beta^(#e).

The strip lists of a tiling give the constraint order directly, so the
same enumeration works on maximal and non-maximal tilings alike.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from . import ansatz
from .polyring import Poly
from .tilings import Tiling, all_tilings, maximal_tiling, tile_class
from .words import (D, E, infer_k, sector_of, sector_states, validate_word,
                    word_str)


def diagram_tiles(word) -> dict:
    """The tile set of the rhombic diagram, keyed by crossing pair."""
    from .tilings import crossing_pairs
    word = tuple(word)
    validate_word(word)
    return {pair: tile_class(word, pair) for pair in crossing_pairs(word)}


# -- fillings ----------------------------------------------------------------


@dataclass(frozen=True)
class Filling:
    """A symbol assignment on a tiling; symbols maps pair -> "alpha"/"beta"."""

    tiling: Tiling
    symbols: tuple

    @property
    def word(self):
        return self.tiling.word

    @property
    def k(self):
        return self.tiling.k

    def symbol_map(self) -> dict:
        return dict(self.symbols)

    def statuses(self) -> dict:
        """Per tile: "alpha", "beta", "q" (free empty) or "empty" (forced)."""
        word = self.word
        sym = self.symbol_map()
        forced = set()
        for p, partners in self.tiling.lists.items():
            if word[p] not in (D, E):
                continue
            seen = False
            for u in partners:
                pair = (min(p, u), max(p, u))
                if seen:
                    forced.add(pair)
                s = sym.get(pair)
                if (word[p] == D and s == "beta") or \
                        (word[p] == E and s == "alpha"):
                    seen = True
        out = {}
        for pair in self.tiling.tiles():
            if pair in sym:
                out[pair] = sym[pair]
            elif pair in forced:
                out[pair] = "empty"
            else:
                out[pair] = "q"
        return out

    def validate(self) -> None:
        word = self.word
        for pair, s in self.symbols:
            cls = tile_class(word, pair)
            if s == "alpha" and cls[1] != E:
                raise ValueError(f"alpha not allowed on {cls} tile")
            if s == "beta" and cls[0] != D:
                raise ValueError(f"beta not allowed on {cls} tile")
        for pair, s in self.statuses().items():
            if s == "empty" and pair in dict(self.symbols):
                raise ValueError(f"symbol on forced-empty tile {pair}")

    def symbol_counts(self) -> tuple[int, int, int]:
        st = self.statuses().values()
        return (sum(1 for s in st if s == "alpha"),
                sum(1 for s in st if s == "beta"),
                sum(1 for s in st if s == "q"))

    def weight(self) -> Poly:
        na, nb, nq = self.symbol_counts()
        nd = sum(1 for x in self.word if x == D)
        ne = sum(1 for x in self.word if x == E)
        return Poly.monomial(1, alpha=nd + na, beta=ne + nb, q=nq)

    def free_d_strips(self) -> int:
        """Number of d letters whose strip carries no beta."""
        nd = sum(1 for x in self.word if x == D)
        nb = sum(1 for _, s in self.symbols if s == "beta")
        return nd - nb

    def key(self):
        return (self.word, tuple(self.tiling.lists[p]
                                 for p in range(len(self.word))), self.symbols)


def _filling_runs(tiling: Tiling, with_symbols: bool):
    """Backtracking over tiles in sweep order.

    Yields (symbols tuple or None, n_alpha, n_beta, n_q).  Strip-order
    processing lets one blocked flag per occurrence encode both
    admissibility and forced emptiness.
    """
    word = tiling.word
    order = tiling.tile_order()
    n = len(order)
    d_block = {}
    e_block = {}
    chosen: list[tuple] = []

    def rec(idx, na, nb, nq):
        if idx == n:
            yield (tuple(sorted(chosen)) if with_symbols else None, na, nb, nq)
            return
        p, q = order[idx]
        blocked = d_block.get(p, False) or e_block.get(q, False)
        if blocked:
            yield from rec(idx + 1, na, nb, nq)
            return
        yield from rec(idx + 1, na, nb, nq + 1)
        if word[q] == E:
            e_block[q] = True
            if with_symbols:
                chosen.append(((p, q), "alpha"))
            yield from rec(idx + 1, na + 1, nb, nq)
            if with_symbols:
                chosen.pop()
            e_block[q] = False
        if word[p] == D:
            d_block[p] = True
            if with_symbols:
                chosen.append(((p, q), "beta"))
            yield from rec(idx + 1, na, nb + 1, nq)
            if with_symbols:
                chosen.pop()
            d_block[p] = False

    yield from rec(0, 0, 0, 0)


def enumerate_fillings(word, tiling: Tiling | None = None,
                       k: int | None = None) -> list[Filling]:
    """Every admissible filling of the tiling (maximal by default)."""
    if tiling is None:
        tiling = maximal_tiling(tuple(word), k)
    out = [Filling(tiling, syms)
           for syms, _, _, _ in _filling_runs(tiling, with_symbols=True)]
    out.sort(key=lambda f: f.symbols)
    return out


def weight_counts(word, tiling: Tiling | None = None,
                  k: int | None = None) -> dict:
    """Multiset of filling weights as exponent triples.

    Keys are (e_alpha, e_beta, e_q) of the full weight monomial including
    the alpha^(#d) beta^(#e) prefactor; values are multiplicities.
    """
    word = tuple(word)
    if tiling is None:
        tiling = maximal_tiling(word, k)
    nd = sum(1 for x in word if x == D)
    ne = sum(1 for x in word if x == E)
    out: dict[tuple, int] = {}
    for _, na, nb, nq in _filling_runs(tiling, with_symbols=False):
        key = (nd + na, ne + nb, nq)
        out[key] = out.get(key, 0) + 1
    return out


def _counts_to_poly(counts: dict) -> Poly:
    return Poly({(("alpha", ea), ("beta", eb), ("q", eq)): Fraction(m)
                 for (ea, eb, eq), m in counts.items()})


@lru_cache(maxsize=None)
def _word_weight_cached(word) -> Poly:
    return _counts_to_poly(weight_counts(word))


def word_weight(word, tiling: Tiling | None = None) -> Poly:
    """The weight generating function of a word's tableaux."""
    word = tuple(word)
    if tiling is None:
        return _word_weight_cached(word)
    return _counts_to_poly(weight_counts(word, tiling))


def sector_weight_sum(n: int, k: int, sector) -> Poly:
    """The partition function Z: total tableau weight over a sector."""
    counts: dict[tuple, int] = {}
    for w in sector_states(n, k, sector):
        for key, m in weight_counts(w).items():
            counts[key] = counts.get(key, 0) + m
    return _counts_to_poly(counts)


def closed_form_z_at_q1(n: int, r: int) -> Poly:
    """binom(n, r) prod_{i=r}^{n-1} (alpha + beta + i alpha beta)."""
    out = Poly.const(comb(n, r))
    for i in range(r, n):
        out = out * (Poly.var("alpha") + Poly.var("beta")
                     + Poly.monomial(i, alpha=1, beta=1))
    return out


def count_classes(n: int, r: int) -> int:
    """Number of two-species tableau classes, by direct enumeration."""
    total = 0
    for w in sector_states(n, 2, (r,)):
        total += sum(weight_counts(w).values())
    return total


def class_count_formula(n: int, r: int) -> int:
    return comb(n, r) * factorial(n + 1) // factorial(r + 1)


# -- weight-preserving flips (two species) ------------------------------------

# Hexagon contents as (d-a tile, d-e tile, a-e tile); "-" is empty.
_FLIP_AB = {
    ("-", "-", "-"): ("-", "-", "-"),
    ("-", "-", "alpha"): ("-", "alpha", "-"),
    ("-", "alpha", "-"): ("-", "-", "alpha"),
    ("-", "beta", "-"): ("beta", "-", "-"),
    ("beta", "-", "-"): ("-", "beta", "-"),
    ("-", "beta", "alpha"): ("beta", "alpha", "-"),
    ("beta", "-", "alpha"): ("beta", "-", "alpha"),
}
_FLIP_BA = {v: k for k, v in _FLIP_AB.items()}


def filling_flip(filling: Filling, triple) -> Filling:
    """Flip a hexagon and remap its three symbols, preserving the weight.

    Two species only.  When an alpha sits below the hexagon in its
    e-strip (or a beta to its right in its d-strip) the hexagon's
    constrained tiles are pinned empty and only the remaining tile keeps
    its content; otherwise the local seven-case table applies.
    """
    tiling = filling.tiling
    word = tiling.word
    x, y, z = triple
    if not (word[x] == D and word[y].startswith("a") and word[z] == E):
        raise ValueError("filling flips need a d-a-e hexagon (two species)")
    orient = tiling.orientation(triple)
    sym = filling.symbol_map()
    t_da, t_de, t_ae = (x, y), (x, z), (y, z)

    lz = tiling.lists[z]
    below = min(lz.index(x), lz.index(y))
    env_alpha = any(sym.get((min(u, z), max(u, z))) == "alpha"
                    for u in lz[:below])
    lx = tiling.lists[x]
    right = min(lx.index(y), lx.index(z))
    env_beta = any(sym.get((x, v)) == "beta" for v in lx[:right])

    cur = (sym.get(t_da, "-"), sym.get(t_de, "-"), sym.get(t_ae, "-"))
    if env_alpha and env_beta:
        if cur != ("-", "-", "-"):
            raise ValueError("pinned hexagon carries a symbol")
        new = cur
    elif env_alpha:
        if cur[1] != "-" or cur[2] != "-":
            raise ValueError("alpha-pinned hexagon carries a symbol")
        new = cur
    elif env_beta:
        if cur[0] != "-" or cur[1] != "-":
            raise ValueError("beta-pinned hexagon carries a symbol")
        new = cur
    else:
        table = _FLIP_AB if orient == "A" else _FLIP_BA
        new = table[cur]

    for t in (t_da, t_de, t_ae):
        sym.pop(t, None)
    for t, s in zip((t_da, t_de, t_ae), new):
        if s != "-":
            sym[t] = s
    return Filling(tiling.flip(triple), tuple(sorted(sym.items())))


def prop28_check(word, k: int | None = None) -> dict:
    """Compare the weight sum across all flip-reachable tilings."""
    word = tuple(word)
    tilings = all_tilings(word, k)
    sums = [word_weight(word, t) for t in tilings]
    ok = all(s == sums[0] for s in sums)
    return {"word": word_str(word, k), "tilings": len(tilings), "equal": ok,
            "weight": sums[0].render()}


def conjecture_probe(word, tiling: Tiling, k: int | None = None) -> dict:
    """Report-only comparison of a tiling's weight sum to the maximal one."""
    word = tuple(word)
    base = word_weight(word)
    other = word_weight(word, tiling)
    return {"word": word_str(word, k), "agrees": base == other,
            "maximal_weight": base.render(), "tiling_weight": other.render()}


# -- bridge to the transfer matrices -----------------------------------------


def transfer_vector(word, k: int | None = None) -> dict:
    """Filling generating function by (free d-strips, species counts),
    normalized by (alpha beta)^(#d + #e) to match the transfer matrices."""
    word = tuple(word)
    if k is None:
        k = infer_k(word)
    js = sector_of(word, k)
    nd = sum(1 for x in word if x == D)
    ne = sum(1 for x in word if x == E)
    tiling = maximal_tiling(word, k)
    vec: dict[tuple, Poly] = {}
    for _, na, nb, nq in _filling_runs(tiling, with_symbols=False):
        idx = (nd - nb, js)
        mono = Poly.monomial(1, alpha=na - ne, beta=nb - nd, q=nq)
        vec[idx] = vec.get(idx, Poly.zero()) + mono
    return vec


def transfer_step_ok(word, letter: str, k: int) -> bool:
    """Does appending one letter act on the filling vector exactly as the
    corresponding transfer matrix?"""
    word = tuple(word)
    lhs = transfer_vector(word + (letter,), k)
    rhs = ansatz.apply_letter(transfer_vector(word, k), letter)
    return lhs == rhs


def weight_bridge_ok(word, k: int | None = None) -> bool:
    """word_weight == (alpha beta)^(#d + #e) * bracket, exactly."""
    word = tuple(word)
    if k is None:
        k = infer_k(word)
    nd = sum(1 for x in word if x == D)
    ne = sum(1 for x in word if x == E)
    scale = Poly.monomial(1, alpha=nd + ne, beta=nd + ne)
    return word_weight(word) == scale * ansatz.bracket(word, k)
