"""A Markov chain on two-species tableau classes that projects to the PASEP.

States are the canonical fillings (maximal tiling) of all words in a
sector; each class of flip-equivalent fillings has exactly one such
representative.  Every lattice move of the two-species PASEP lifts to a
tableau move: corners fire at rate 1, inner corners at rate q, an empty
e-strip admits the entry move at rate alpha, an empty d-strip the exit
move at rate beta.  Targets are built by the strip surgery (compress a
strip, re-insert the moved letter with a boundary-hugging strip, place
the mandated symbol) followed by flips back to the maximal tiling, so
every contract can be checked exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .pasep import ChainSystem, RateParams, build_chain
from .polyring import Poly
from .rhombic import Filling, enumerate_fillings, filling_flip, word_weight
from .tilings import (Tiling, add_boundary_tile, insert_letter, maximal_tiling,
                      remove_boundary_tile, remove_letter)
from .words import D, E, crosses, sector_states, state_sort_key

ALPHA = Poly.var("alpha")
BETA = Poly.var("beta")
Q = Poly.var("q")
ONE = Poly.const(1)


@dataclass(frozen=True)
class Locus:
    """A transition site: a corner, an inner corner, or an empty strip."""

    kind: str                 # "corner" | "inner" | "empty_e" | "empty_d"
    pos: int = -1             # left position of the pair, for (inner) corners
    pair: tuple = ()          # the two letters, for (inner) corners


def loci(filling: Filling) -> list[Locus]:
    """All transition sites of a canonical filling."""
    word = filling.word
    out = []
    for t in range(len(word) - 1):
        x, y = word[t], word[t + 1]
        if crosses(x, y):
            out.append(Locus("corner", t, (x, y)))
        elif crosses(y, x):
            out.append(Locus("inner", t, (x, y)))
    if word[0] == E:
        out.append(Locus("empty_e"))
    if word[-1] == D:
        out.append(Locus("empty_d"))
    return out


def classify_corner(filling: Filling, p: int) -> str:
    """Corner label "alpha", "beta", or "q" via the strip shortcut.

    d-e and d-a corners read their corner tile directly.  For an a-e
    corner the corner tile may sit above a stack of de tiles; the label
    is what the tile would hold after flipping it down: an alpha in the
    strip survives the descent past a de level exactly when that level's
    d-strip carries a beta (in its d-a tile or anywhere to its right),
    which pins the hexagon flip.
    """
    word = filling.word
    if not crosses(word[p], word[p + 1]):
        raise ValueError(f"positions ({p}, {p + 1}) are not a corner")
    sym = filling.symbol_map()
    if word[p] == D:
        s = sym.get((p, p + 1))
        return s if s in ("alpha", "beta") else "q"
    strip = filling.tiling.lists[p + 1]
    idx = strip.index(p)
    carried = sym.get((p, p + 1)) == "alpha"
    for j in range(idx - 1, -1, -1):
        u = strip[j]
        if not carried:
            carried = sym.get((u, p + 1)) == "alpha"
        else:
            blocked_right = any(sym.get((u, v)) == "beta"
                                for v in filling.tiling.lists[u] if v <= p)
            if not blocked_right:
                carried = False
    return "alpha" if carried else "q"


def classify_corner_by_flips(filling: Filling, p: int) -> str:
    """Corner label by searching the flip orbit for a corner-tile
    representative; the independent route for cross-checking."""
    word = filling.word
    if not crosses(word[p], word[p + 1]):
        raise ValueError(f"positions ({p}, {p + 1}) are not a corner")
    seen = {filling.key()}
    queue = [filling]
    while queue:
        f = queue.pop(0)
        lists = f.tiling.lists
        if lists[p][0] == p + 1 and lists[p + 1][0] == p:
            s = f.symbol_map().get((p, p + 1))
            return s if s in ("alpha", "beta") else "q"
        for triple in f.tiling.hexagon_triples():
            f2 = filling_flip(f, triple)
            if f2.key() not in seen:
                seen.add(f2.key())
                queue.append(f2)
    raise AssertionError("no corner-tile representative found")


# -- canonicalization ----------------------------------------------------------


@lru_cache(maxsize=None)
def _flip_tree(word) -> dict:
    """BFS tree of the tiling flip graph rooted at the maximal tiling."""
    root = maximal_tiling(word)
    tree = {root: None}
    queue = [root]
    while queue:
        t = queue.pop(0)
        for triple in t.hexagon_triples():
            t2 = t.flip(triple)
            if t2 not in tree:
                tree[t2] = (t, triple)
                queue.append(t2)
    return tree


def canonicalize(filling: Filling) -> Filling:
    """Flip a filling back onto the maximal tiling of its word."""
    tree = _flip_tree(filling.word)
    cur = filling
    while tree[cur.tiling] is not None:
        _, triple = tree[cur.tiling]
        cur = filling_flip(cur, triple)
    return cur


# -- transition surgery --------------------------------------------------------


def _swap_positions(pairs_iter, p):
    """Rename positions p <-> p+1 in an iterable of (pair, value)."""
    def ren(a):
        if a == p:
            return p + 1
        if a == p + 1:
            return p
        return a

    out = []
    for (a, b), v in pairs_iter:
        a2, b2 = ren(a), ren(b)
        out.append(((min(a2, b2), max(a2, b2)), v))
    return out


def _swap_tiling(tiling: Tiling, p: int) -> Tiling:
    word = tiling.word[:p] + (tiling.word[p + 1], tiling.word[p]) + tiling.word[p + 2:]

    def ren(a):
        if a == p:
            return p + 1
        if a == p + 1:
            return p
        return a

    lists = {ren(a): tuple(ren(u) for u in v) for a, v in tiling.lists.items()}
    return Tiling(word, lists, tiling.k)


def _shift_symbols(symbols, removed: int | None = None,
                   inserted: int | None = None):
    out = []
    for (a, b), v in symbols:
        if removed is not None:
            if a == removed or b == removed:
                continue
            a = a if a < removed else a - 1
            b = b if b < removed else b - 1
        if inserted is not None:
            a = a if a < inserted else a + 1
            b = b if b < inserted else b + 1
        out.append(((a, b), v))
    return out


def _strip_symbols(filling: Filling, pos: int) -> list:
    sym = filling.symbol_map()
    out = []
    for u in filling.tiling.lists[pos]:
        pair = (min(pos, u), max(pos, u))
        if pair in sym:
            out.append(sym[pair])
    return out


def _reinsert(filling: Filling, removed: int, letter: str, slot: int,
              symbol: str | None) -> Filling:
    """Compress the strip of ``removed``, insert ``letter`` at ``slot``
    with a boundary-hugging strip, and place ``symbol`` on its first tile."""
    t1 = remove_letter(filling.tiling, removed)
    syms = _shift_symbols(filling.symbols, removed=removed)
    t2 = insert_letter(t1, letter, slot)
    syms = _shift_symbols(syms, inserted=slot)
    own = t2.lists[slot]
    if own and symbol is not None:
        u = own[0]
        syms.append(((min(slot, u), max(slot, u)), symbol))
    return Filling(t2, tuple(sorted(syms)))


def transition(filling: Filling, locus: Locus) -> tuple[Filling, Poly]:
    """The unique target state and unnormalized rate at a locus."""
    word = filling.word
    n = len(word)
    if locus.kind == "inner":
        p = locus.pos
        tiling = _swap_tiling(filling.tiling, p)
        tiling = add_boundary_tile(tiling, p, p + 1)
        syms = tuple(sorted(_swap_positions(filling.symbols, p)))
        return canonicalize(Filling(tiling, syms)), Q

    if locus.kind == "corner":
        p = locus.pos
        label = classify_corner(filling, p)
        if label == "q":
            cur = filling
            while True:
                strip = cur.tiling.lists[p + 1]
                i = strip.index(p)
                if i == 0:
                    break
                cur = filling_flip(cur, (strip[i - 1], p, p + 1))
            if (p, p + 1) in cur.symbol_map():
                raise AssertionError("q-corner tile holds a symbol")
            tiling = remove_boundary_tile(cur.tiling, p, p + 1)
            tiling = _swap_tiling(tiling, p)
            syms = tuple(sorted(_swap_positions(cur.symbols, p)))
            return canonicalize(Filling(tiling, syms)), ONE
        if label == "beta":
            if _strip_symbols(filling, p) != ["beta"]:
                raise AssertionError("beta-corner strip must hold one beta")
            run = 0
            while p + 2 + run < n and word[p + 2 + run] == D:
                run += 1
            slot = p + 1 + run
            out = _reinsert(filling, removed=p, letter=D, slot=slot,
                            symbol="beta")
            return canonicalize(out), ONE
        # alpha-corner: the e-strip holds exactly one alpha
        strip_syms = _strip_symbols(filling, p + 1)
        if strip_syms != ["alpha"]:
            raise AssertionError("alpha-corner strip must hold one alpha")
        run = 0
        while p - 1 - run >= 0 and word[p - 1 - run] == E:
            run += 1
        slot = p - run
        out = _reinsert(filling, removed=p + 1, letter=E, slot=slot,
                        symbol="alpha")
        return canonicalize(out), ONE

    if locus.kind == "empty_e":
        if filling.tiling.lists[0]:
            raise AssertionError("leading e-strip is not empty")
        body = word[1:]
        run = 0
        while run < len(body) and body[run] == D:
            run += 1
        out = _reinsert(filling, removed=0, letter=D, slot=run, symbol="beta")
        return canonicalize(out), ALPHA

    if locus.kind == "empty_d":
        if filling.tiling.lists[n - 1]:
            raise AssertionError("trailing d-strip is not empty")
        body = word[:-1]
        run = 0
        while run < len(body) and body[len(body) - 1 - run] == E:
            run += 1
        slot = len(body) - run
        out = _reinsert(filling, removed=n - 1, letter=E, slot=slot,
                        symbol="alpha")
        return canonicalize(out), BETA

    raise ValueError(f"unknown locus kind {locus.kind!r}")


# -- the chain, symbolically and numerically -----------------------------------


def canonical_states(n: int, r: int) -> list[Filling]:
    """All canonical fillings over the sector, deterministically ordered."""
    out = []
    for w in sector_states(n, 2, (r,)):
        out.extend(enumerate_fillings(w))
    out.sort(key=lambda f: (state_sort_key(f.word), f.symbols))
    return out


@lru_cache(maxsize=None)
def chain_transitions(n: int, r: int):
    """Every transition (from-index, to-index) -> symbolic rate."""
    states = canonical_states(n, r)
    index = {f.key(): i for i, f in enumerate(states)}
    trans = {}
    for i, f in enumerate(states):
        for locus in loci(f):
            target, rate = transition(f, locus)
            j = index[target.key()]
            if (i, j) in trans:
                raise AssertionError("two loci give the same target state")
            trans[(i, j)] = rate
    return states, trans


def rat_chain(n: int, r: int, params: RateParams) -> ChainSystem:
    """The tableau chain with rates evaluated at rational parameters."""
    states, trans = chain_transitions(n, r)
    assign = {"alpha": params.alpha, "beta": params.beta, "q": params.q0inf}
    num = {(i, j): rate.evaluate(assign) for (i, j), rate in trans.items()}
    num = {ij: u for ij, u in num.items() if u}
    return ChainSystem(states=[f.key() for f in states], trans=num,
                       denom=n + 1)


def _pasep_rate(word, target) -> Poly:
    """Symbolic single-q rate of a two-species lattice move, 0 if none."""
    n = len(word)
    for t in range(n - 1):
        if target == word[:t] + (word[t + 1], word[t]) + word[t + 2:] \
                and word[t] != word[t + 1]:
            return ONE if crosses(word[t], word[t + 1]) else Q
    if word[0] == E and target == (D,) + word[1:]:
        return ALPHA
    if word[-1] == D and target == word[:-1] + (E,):
        return BETA
    return Poly.zero()


def projection_check(n: int, r: int) -> dict:
    """Verify both projection properties of the type map, symbolically.

    (i) every positive tableau-chain rate equals the lattice rate of the
    projected move, and total outflow rates agree so self-loops match;
    (ii) each lattice move lifts to exactly one positive-rate move from
    each preimage, with the same rate.
    """
    states, trans = chain_transitions(n, r)
    words = sector_states(n, 2, (r,))
    by_word: dict[tuple, list[int]] = {w: [] for w in words}
    for i, f in enumerate(states):
        by_word[f.word].append(i)

    ok_forward = True
    for (i, j), rate in trans.items():
        if rate != _pasep_rate(states[i].word, states[j].word):
            ok_forward = False
    for i, f in enumerate(states):
        out_rat = sum((rate for (a, _), rate in trans.items() if a == i),
                      Poly.zero())
        out_pasep = sum((_pasep_rate(f.word, w) for w in words), Poly.zero())
        if out_rat != out_pasep:
            ok_forward = False

    ok_lift = True
    for y1 in words:
        for y2 in words:
            rate = _pasep_rate(y1, y2)
            if rate.is_zero or y1 == y2:
                continue
            for i in by_word[y1]:
                hits = [(j, rho) for (a, j), rho in trans.items()
                        if a == i and states[j].word == y2]
                if len(hits) != 1 or hits[0][1] != rate:
                    ok_lift = False
    return {"n": n, "r": r, "states": len(states),
            "projection_ok": ok_forward and ok_lift,
            "forward_ok": ok_forward, "lift_ok": ok_lift}


def detailed_balance_check(n: int, r: int) -> dict:
    """wt(F) * outflow == inflow, exactly and symbolically, per state.

    Outflow is computed twice: from the explicit transitions, and from
    the feature counts (corners + q-corners + q * inner corners + alpha
    for an empty e-strip + beta for an empty d-strip).
    """
    states, trans = chain_transitions(n, r)
    weights = [f.weight() for f in states]
    inflow = [Poly.zero() for _ in states]
    outflow = [Poly.zero() for _ in states]
    for (i, j), rate in trans.items():
        inflow[j] += weights[i] * rate
        outflow[i] += rate
    balanced = all(weights[i] * outflow[i] == inflow[i]
                   for i in range(len(states)))

    features = True
    for i, f in enumerate(states):
        total = Poly.zero()
        for locus in loci(f):
            total += {"corner": ONE, "inner": Q,
                      "empty_e": ALPHA, "empty_d": BETA}[locus.kind]
        if total != outflow[i]:
            features = False
    return {"n": n, "r": r, "states": len(states),
            "balance_ok": balanced, "feature_outflow_ok": features}


def profile(filling: Filling) -> dict:
    """Feature counts of a state: corner labels, inner corners, empty
    strips, extremal corner contents, and the d-strip length partition."""
    word = filling.word
    corners = [(l.pos, classify_corner(filling, l.pos))
               for l in loci(filling) if l.kind == "corner"]
    labelled = [(p, c) for p, c in corners if c != "q"]
    out = {
        "C": len(labelled),
        "C0": sum(1 for _, c in corners if c == "q"),
        "I": sum(1 for l in loci(filling) if l.kind == "inner"),
        "delta_R": int(word[0] == E),
        "delta_L": int(word[-1] == D),
        "delta_R_beta": int(bool(labelled) and labelled[0][1] == "beta"),
        "delta_L_alpha": int(bool(labelled) and labelled[-1][1] == "alpha"),
        "d_strip_lengths": tuple(len(filling.tiling.lists[p])
                                 for p in range(len(word)) if word[p] == D),
    }
    return out


def weight_contract_ok(filling: Filling, locus: Locus,
                       target: Filling, rate: Poly) -> bool:
    """The per-transition weight relations of the transition summary."""
    word = filling.word
    wf, wt = filling.weight(), target.weight()
    if locus.kind == "inner":
        return rate == Q and wt == Q * wf
    if locus.kind == "corner":
        if rate != ONE:
            return False
        p = locus.pos
        label = classify_corner(filling, p)
        if label == "q":
            return Q * wt == wf
        if label == "alpha":
            if len(filling.tiling.lists[p + 1]) == 1:
                return ALPHA * wt == wf
            return wt == wf
        if len(filling.tiling.lists[p]) == 1:
            return BETA * wt == wf
        return wt == wf
    if locus.kind == "empty_e":
        if all(x == D for x in word[1:]):
            return rate == ALPHA and BETA * wt == wf
        return rate == ALPHA and wt == ALPHA * wf
    if locus.kind == "empty_d":
        if all(x == E for x in word[:-1]):
            return rate == BETA and ALPHA * wt == wf
        return rate == BETA and wt == BETA * wf
    return False


def stationary_matches_weights(n: int, r: int, params: RateParams) -> bool:
    """The evaluated chain is irreducible and the weight vector is its
    stationary distribution (hence the unique one)."""
    chain = rat_chain(n, r, params)
    states, _ = chain_transitions(n, r)
    assign = {"alpha": params.alpha, "beta": params.beta, "q": params.q0inf}
    w = [f.weight().evaluate(assign) for f in states]
    return chain.is_irreducible() and chain.verify_stationary(w)


def pushforward_matches_pasep(n: int, r: int, params: RateParams) -> bool:
    """Summing the tableau stationary weights per type reproduces the
    exact lattice stationary distribution."""
    states, _ = chain_transitions(n, r)
    assign = {"alpha": params.alpha, "beta": params.beta, "q": params.q0inf}
    w = [f.weight().evaluate(assign) for f in states]
    total = sum(w)
    push: dict[tuple, Fraction] = {}
    for f, wi in zip(states, w):
        push[f.word] = push.get(f.word, Fraction(0)) + Fraction(wi, 1)
    chain = build_chain(n, 2, (r,), params)
    pi = dict(zip(chain.states, chain.stationary()))
    return all(push[wd] / total == pi[wd] for wd in pi)
