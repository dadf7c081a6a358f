"""Transfer matrices for the Matrix Ansatz and their relation checks.

The matrices D, E, A_s are infinite but column-bounded: rows and columns
are indexed by tuples (i, j_1..j_{k-1}) where i counts free d-strips and
j_s counts a_s letters.  D sends i to i+1, E and A_s send i to any
u <= i, and A_s increments j_s by one, so every product entry is a finite
sum and all computations below are exact.

The bra is the indicator of index (0, 0..0), the ket is all-ones; words
contract left to right through sparse row vectors of Laurent polynomials.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import comb

from .polyring import Poly, qint
from .words import D, E, sector_states, species, validate_word

INV_ALPHA = Poly.var("alpha", -1)
INV_BETA = Poly.var("beta", -1)


def _idx(i: int, js) -> tuple:
    return (i, tuple(js))


def entry_d(row: tuple, col: tuple) -> Poly:
    """1/beta on (i, j) -> (i+1, j), else zero."""
    (i, js), (u, vs) = row, col
    if u == i + 1 and tuple(vs) == tuple(js):
        return INV_BETA
    return Poly.zero()


def entry_a(s: int, row: tuple, col: tuple) -> Poly:
    """binom(i, u) q^u beta^(i-u) prod_{r>s} q^{j_r} on j_s -> j_s + 1."""
    (i, js), (u, vs) = row, col
    js, vs = tuple(js), tuple(vs)
    k = len(js) + 1
    if s < 1 or s > k - 1:
        raise ValueError(f"species {s} out of range for k={k}")
    bumped = tuple(j + (1 if r == s else 0) for r, j in enumerate(js, start=1))
    if vs != bumped or not 0 <= u <= i:
        return Poly.zero()
    tail = sum(js[r - 1] for r in range(s + 1, k))
    return Poly.monomial(comb(i, u), q=u + tail, beta=i - u)


def entry_e(row: tuple, col: tuple) -> Poly:
    """The e-edge transfer entry; j = sum of the species counts."""
    (i, js), (u, vs) = row, col
    js, vs = tuple(js), tuple(vs)
    if vs != js or not 0 <= u <= i:
        return Poly.zero()
    j = sum(js)
    bracket = (Poly.monomial(comb(i, u), q=u)
               * (Poly.var("q", j) + Poly.var("alpha") * qint(j)))
    inner = Poly.zero()
    for w in range(u):
        inner += Poly.monomial(comb(i - u + w, i - u), q=w)
    bracket += Poly.var("alpha") * inner
    return Poly.monomial(1, beta=i - u) * INV_ALPHA * bracket


def entry(letter: str, row: tuple, col: tuple) -> Poly:
    if letter == D:
        return entry_d(row, col)
    if letter == E:
        return entry_e(row, col)
    return entry_a(species(letter), row, col)


def reachable_cols(letter: str, row: tuple):
    """All column indices with a possibly nonzero entry from this row."""
    (i, js) = row
    js = tuple(js)
    if letter == D:
        return [(i + 1, js)]
    if letter == E:
        return [(u, js) for u in range(i + 1)]
    s = species(letter)
    bumped = tuple(j + (1 if r == s else 0)
                   for r, j in enumerate(js, start=1))
    return [(u, bumped) for u in range(i + 1)]


def apply_letter(vec: dict, letter: str, marker: str | None = None) -> dict:
    """Push a sparse row vector through one transfer matrix."""
    out: dict[tuple, Poly] = {}
    for row, val in vec.items():
        if val.is_zero:
            continue
        for col in reachable_cols(letter, row):
            e = entry(letter, row, col)
            if e.is_zero:
                continue
            if marker is not None:
                e = e * Poly.var(marker)
            acc = out.get(col, Poly.zero()) + val * e
            out[col] = acc
    return {c: v for c, v in out.items() if not v.is_zero}


def bra(k: int) -> dict:
    return {_idx(0, (0,) * (k - 1)): Poly.const(1)}


def row_vector(word, k: int) -> dict:
    """The bra pushed through the word's matrix product."""
    word = tuple(word)
    validate_word(word, k)
    vec = bra(k)
    for x in word:
        vec = apply_letter(vec, x)
    return vec


def bracket(word, k: int | None = None) -> Poly:
    """<w| X(word) |v>: the generating function of the word's tableaux."""
    from .words import infer_k
    word = tuple(word)
    if k is None:
        k = infer_k(word)
    total = Poly.zero()
    for _, val in row_vector(word, k).items():
        total += val
    return total


def partition_brackets(n: int, k: int, sector) -> Poly:
    """Z as the direct sum of brackets over the sector."""
    total = Poly.zero()
    for w in sector_states(n, k, sector):
        total += bracket(w, k)
    return total


def partition_marker(n: int, k: int, sector) -> Poly:
    """Z via species markers: the y-coefficient of <w|(D + sum y_s A_s + E)^n|v>."""
    sector = tuple(sector)
    vec = bra(k)
    for _ in range(n):
        out: dict[tuple, Poly] = {}
        for letter, marker in ([(D, None), (E, None)]
                               + [(f"a{s}", f"y{s}") for s in range(1, k)]):
            piece = apply_letter(vec, letter, marker)
            for c, v in piece.items():
                out[c] = out.get(c, Poly.zero()) + v
        vec = {c: v for c, v in out.items() if not v.is_zero}
    total = Poly.zero()
    for _, val in vec.items():
        total += val
    for s, r in enumerate(sector, start=1):
        total = total.coeff_extract(f"y{s}", r)
    return total


# -- relation and boundary checks -------------------------------------------


def _window_indices(k: int, imax: int, jmax: int):
    out = []
    for i in range(imax + 1):
        for js in product(range(jmax + 1), repeat=k - 1):
            if sum(js) <= jmax:
                out.append((i, tuple(js)))
    return out


def _product_entry(l1: str, l2: str, row: tuple, col: tuple) -> Poly:
    total = Poly.zero()
    for mid in reachable_cols(l1, row):
        e1 = entry(l1, row, mid)
        if e1.is_zero:
            continue
        e2 = entry(l2, mid, col)
        if not e2.is_zero:
            total += e1 * e2
    return total


def relation_residuals(relation: str, k: int, imax: int, jmax: int,
                       lam: Poly | None = None,
                       s: int = 1, t: int = 2) -> dict:
    """Entrywise residual of one quadratic relation on a finite window.

    relation is one of "DE" (DE - qED - lam(D+E)), "DA" (DA_s - qA_sD -
    lam A_s), "AE" (A_sE - qEA_s - lam A_s), "AA" (A_tA_s - qA_sA_t,
    t > s).  Only nonzero residual entries are returned.
    """
    if lam is None:
        lam = Poly.const(1)
    q = Poly.var("q")
    a_s, a_t = f"a{s}", f"a{t}"
    pairs = {
        "DE": ((D, E), (E, D), lambda r, c: lam * (entry_d(r, c) + entry_e(r, c))),
        "DA": ((D, a_s), (a_s, D), lambda r, c: lam * entry(a_s, r, c)),
        "AE": ((a_s, E), (E, a_s), lambda r, c: lam * entry(a_s, r, c)),
        "AA": ((a_t, a_s), (a_s, a_t), lambda r, c: Poly.zero()),
    }
    if relation not in pairs:
        raise ValueError(f"unknown relation {relation!r}")
    (fwd, bwd, rhs) = pairs[relation]
    residuals = {}
    rows = _window_indices(k, imax, jmax)
    for row in rows:
        cols = set()
        for mid in reachable_cols(fwd[0], row):
            cols.update(reachable_cols(fwd[1], mid))
        for mid in reachable_cols(bwd[0], row):
            cols.update(reachable_cols(bwd[1], mid))
        for col in cols:
            if col[0] > imax or sum(col[1]) > jmax + 2:
                continue
            res = (_product_entry(fwd[0], fwd[1], row, col)
                   - q * _product_entry(bwd[0], bwd[1], row, col)
                   - rhs(row, col))
            if not res.is_zero:
                residuals[(row, col)] = res
    return residuals


def boundary_residuals(k: int, imax: int, jmax: int) -> dict:
    """Check <w|E = (1/alpha)<w| and D|v> = (1/beta)|v> on a window.

    The bra condition only constrains row (0, 0..0) of E because the bra
    is the indicator of that index; the ket condition says every row of D
    sums to 1/beta.
    """
    residuals = {}
    zero_row = _idx(0, (0,) * (k - 1))
    for col in _window_indices(k, imax, jmax):
        want = INV_ALPHA if col == zero_row else Poly.zero()
        res = entry_e(zero_row, col) - want
        if not res.is_zero:
            residuals[("bra_E", col)] = res
    for row in _window_indices(k, imax, jmax):
        total = Poly.zero()
        for col in reachable_cols(D, row):
            total += entry_d(row, col)
        res = total - INV_BETA
        if not res.is_zero:
            residuals[("ket_D", row)] = res
    return residuals


def relation_report(k: int, imax: int, jmax: int, lam: Poly | None = None) -> dict:
    """Residual counts for every relation plus the boundary conditions."""
    if lam is None:
        lam = Poly.const(1)
    report = {"k": k, "window": {"i": imax, "j": jmax},
              "lambda": lam.render(), "relations": {}}
    report["relations"]["DE"] = len(relation_residuals("DE", k, imax, jmax, lam))
    for s in range(1, k):
        report["relations"][f"DA{s}"] = len(
            relation_residuals("DA", k, imax, jmax, lam, s=s))
        report["relations"][f"A{s}E"] = len(
            relation_residuals("AE", k, imax, jmax, lam, s=s))
    for t in range(2, k):
        for s in range(1, t):
            report["relations"][f"A{t}A{s}"] = len(
                relation_residuals("AA", k, imax, jmax, lam, s=s, t=t))
    report["relations"]["boundary"] = len(boundary_residuals(k, imax, jmax))
    report["residual_count"] = sum(report["relations"].values())
    report["ok"] = report["residual_count"] == 0
    return report
