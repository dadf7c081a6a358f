"""The k-species PASEP as an explicit finite Markov chain per sector.

States are words of a fixed length with fixed middle-species counts.
Every single-site move has an unnormalized rate u and fires with
probability u/(n+1); the diagonal absorbs the remainder.  Solving is done
by exact Gaussian elimination over Fraction, so stationarity checks are
equalities, not tolerances.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .words import (D, E, a_letter, alphabet, sector_of, sector_states,
                    species, state_sort_key, swap_rank, validate_word)


@dataclass(frozen=True)
class RateParams:
    """Boundary rates alpha, beta and the swap-back rates q_AB.

    q0inf is the d-e back rate, q0i[s] the d-a_s back rate, qiinf[s] the
    a_s-e back rate, and qij[(i, j)] with i > j the a_i-a_j back rate
    (a_i a_j -> a_j a_i runs forward at rate 1 for i > j).
    """

    alpha: Fraction
    beta: Fraction
    q0inf: Fraction
    q0i: dict = field(default_factory=dict)
    qiinf: dict = field(default_factory=dict)
    qij: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))
        object.__setattr__(self, "q0inf", Fraction(self.q0inf))
        object.__setattr__(self, "q0i",
                           {int(s): Fraction(v) for s, v in self.q0i.items()})
        object.__setattr__(self, "qiinf",
                           {int(s): Fraction(v) for s, v in self.qiinf.items()})
        object.__setattr__(self, "qij",
                           {(int(i), int(j)): Fraction(v)
                            for (i, j), v in self.qij.items()})
        if not (0 < self.alpha <= 1 and 0 < self.beta <= 1):
            raise ValueError("alpha and beta must lie in (0, 1]")
        for v in [self.q0inf, *self.q0i.values(), *self.qiinf.values(),
                  *self.qij.values()]:
            if not 0 <= v <= 1:
                raise ValueError("swap rates must lie in [0, 1]")

    @classmethod
    def single_q(cls, alpha, beta, q, k: int) -> "RateParams":
        q = Fraction(q)
        return cls(alpha=alpha, beta=beta, q0inf=q,
                   q0i={s: q for s in range(1, k)},
                   qiinf={s: q for s in range(1, k)},
                   qij={(i, j): q
                        for i in range(2, k) for j in range(1, i)})

    def back_rate(self, x: str, y: str) -> Fraction:
        """Rate of the reverse swap (x, y) -> (y, x), swap_rank(x) < swap_rank(y)."""
        sx, sy = species(x), species(y)
        if x == E and y == D:
            return self.q0inf
        if sx is not None and y == D:
            return self.q0i[sx]
        if x == E and sy is not None:
            return self.qiinf[sy]
        if sx is not None and sy is not None:
            # x = a_j lighter-ranked than y = a_i means j < i here
            return self.qij[(sx, sy)] if sx > sy else self.qij[(sy, sx)]
        raise ValueError(f"pair ({x}, {y}) is not a reverse swap")


def out_transitions(word, params: RateParams):
    """All moves out of a state, as (target word, unnormalized rate).

    Bulk swaps come first by site, then entry at site 1, then exit at
    site n.  Adjacent pairs descending in swap rank move at rate 1, the
    ascending pairs at their q parameter; e -> d at the left boundary has
    rate alpha, d -> e at the right boundary rate beta.
    """
    word = tuple(word)
    validate_word(word)
    n = len(word)
    out = []
    for t in range(n - 1):
        x, y = word[t], word[t + 1]
        if x == y:
            continue
        target = word[:t] + (y, x) + word[t + 2:]
        if swap_rank(x) > swap_rank(y):
            out.append((target, Fraction(1)))
        else:
            rate = params.back_rate(x, y)
            if rate:
                out.append((target, rate))
    if word[0] == E and params.alpha:
        out.append(((D,) + word[1:], params.alpha))
    if word[-1] == D and params.beta:
        out.append((word[:-1] + (E,), params.beta))
    return out


@dataclass
class ChainSystem:
    """A finite Markov chain with exact rational transition rates.

    ``trans[(i, j)]`` is the unnormalized rate from state i to state j;
    the actual probability is rate/denom, and each row keeps the
    remainder on the diagonal.
    """

    states: list
    trans: dict
    denom: int

    def __post_init__(self):
        self.index = {s: i for i, s in enumerate(self.states)}
        for (i, j), u in self.trans.items():
            if u < 0:
                raise ValueError("negative rate")
        for i in range(len(self.states)):
            total = sum(u for (a, _), u in self.trans.items() if a == i)
            if total > self.denom:
                raise ValueError(
                    f"row {i} rate sum {total} exceeds denominator {self.denom}")

    @classmethod
    def from_moves(cls, states, moves_fn, denom: int) -> "ChainSystem":
        index = {s: i for i, s in enumerate(states)}
        trans = {}
        for i, s in enumerate(states):
            for target, rate in moves_fn(s):
                if not rate:
                    continue
                j = index[target]
                trans[(i, j)] = trans.get((i, j), Fraction(0)) + rate
        return cls(states=list(states), trans=trans, denom=denom)

    def prob(self, i: int, j: int) -> Fraction:
        u = self.trans.get((i, j), Fraction(0))
        p = u / self.denom
        if i == j:
            out = sum(v for (a, _), v in self.trans.items() if a == i)
            p += 1 - Fraction(out, self.denom)
        return p

    def row_probs(self, i: int):
        row = {}
        total = Fraction(0)
        for (a, j), u in self.trans.items():
            if a == i:
                row[j] = row.get(j, Fraction(0)) + u / self.denom
                total += u / self.denom
        row[i] = row.get(i, Fraction(0)) + 1 - total
        return row

    def is_irreducible(self) -> bool:
        """Strong connectivity of the positive-rate digraph."""
        n = len(self.states)
        if n <= 1:
            return True
        fwd = [[] for _ in range(n)]
        bwd = [[] for _ in range(n)]
        for (i, j), u in self.trans.items():
            if u and i != j:
                fwd[i].append(j)
                bwd[j].append(i)

        def reach(adj):
            seen = {0}
            stack = [0]
            while stack:
                for j in adj[stack.pop()]:
                    if j not in seen:
                        seen.add(j)
                        stack.append(j)
            return len(seen) == n

        return reach(fwd) and reach(bwd)

    def stationary(self) -> list[Fraction]:
        """The unique probability vector with pi P = pi, by exact elimination."""
        if not self.is_irreducible():
            raise ValueError("chain is not irreducible within this sector")
        n = len(self.states)
        # rows of A: columns of (P - I), i.e. balance equations; last row
        # replaced by the normalization sum(pi) = 1.
        A = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            row = self.row_probs(i)
            for j, p in row.items():
                A[j][i] += p
            A[i][i] -= 1
        b = [Fraction(0)] * n
        A[n - 1] = [Fraction(1)] * n
        b[n - 1] = Fraction(1)
        return _solve_exact(A, b)

    def verify_stationary(self, weights) -> bool:
        """Check that an unnormalized weight vector satisfies w P = w."""
        n = len(self.states)
        if len(weights) != n:
            return False
        inflow = [Fraction(0)] * n
        outflow = [Fraction(0)] * n
        for (i, j), u in self.trans.items():
            if i == j:
                continue
            inflow[j] += weights[i] * u
            outflow[i] += weights[i] * u
        return all(inflow[i] == outflow[i] for i in range(n))


def _solve_exact(A, b):
    """Gaussian elimination over Fraction; A is consumed."""
    n = len(A)
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col]), None)
        if piv is None:
            raise ValueError("singular system")
        A[col], A[piv] = A[piv], A[col]
        b[col], b[piv] = b[piv], b[col]
        inv = 1 / A[col][col]
        A[col] = [x * inv for x in A[col]]
        b[col] *= inv
        for r in range(n):
            if r != col and A[r][col]:
                f = A[r][col]
                Arow, Crow = A[r], A[col]
                A[r] = [x - f * y for x, y in zip(Arow, Crow)]
                b[r] -= f * b[col]
    return b


def build_chain(n: int, k: int, sector, params: RateParams) -> ChainSystem:
    states = sector_states(n, k, sector)
    chain = ChainSystem.from_moves(
        states, lambda w: out_transitions(w, params), denom=n + 1)
    for (i, j), _ in chain.trans.items():
        if sector_of(chain.states[i], k) != sector_of(chain.states[j], k):
            raise AssertionError("transition leaves the sector")
    return chain


def stationary_exact(n: int, k: int, sector, params: RateParams) -> dict:
    """Exact stationary distribution, keyed by word."""
    chain = build_chain(n, k, sector, params)
    pi = chain.stationary()
    return dict(zip(chain.states, pi))


def irreducibility_check(chain: ChainSystem) -> bool:
    return chain.is_irreducible()
