"""Exact multivariate Laurent polynomials over the rationals.

Polynomials live in Q[alpha^{+-1}, beta^{+-1}, q, y1..y9]: the boundary
variables alpha and beta may carry negative exponents, while q and the
species markers y_s may not.  A polynomial is a map from monomials to
nonzero Fraction coefficients; a monomial is a tuple of (variable,
exponent) pairs sorted in the fixed variable order, with zero exponents
dropped.  Values are immutable by convention and hashable, so they can be
shared freely between threads and used as dict keys.

The canonical string format (see ``render``/``parse``) joins terms with
" + ", orders them by descending lexicographic exponent vector, and writes
coefficients as "p/q" rationals; it is stable enough for golden-file tests.
"""

from __future__ import annotations

import re
from fractions import Fraction

VAR_ORDER = ("alpha", "beta", "q") + tuple(f"y{i}" for i in range(1, 10))
_VAR_RANK = {v: i for i, v in enumerate(VAR_ORDER)}
_LAURENT_VARS = {"alpha", "beta"}


def _mono(pairs) -> tuple:
    """Canonicalize (var, exp) pairs into a monomial tuple."""
    acc: dict[str, int] = {}
    for v, e in pairs:
        if v not in _VAR_RANK:
            raise ValueError(f"unknown variable {v!r}")
        acc[v] = acc.get(v, 0) + int(e)
    out = []
    for v in sorted(acc, key=_VAR_RANK.__getitem__):
        e = acc[v]
        if e == 0:
            continue
        if e < 0 and v not in _LAURENT_VARS:
            raise ValueError(f"negative exponent on {v!r} is not allowed")
        out.append((v, e))
    return tuple(out)


def _mono_sort_key(m: tuple):
    exps = dict(m)
    return tuple(-exps.get(v, 0) for v in VAR_ORDER)


_NUM_RE = re.compile(r"-?\d+(?:/\d+)?$")
_FACTOR_RE = re.compile(r"([a-z]+[0-9]*)(?:\^(-?\d+))?$")


class Poly:
    """An exact Laurent polynomial."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict[tuple, Fraction] = {}
        for m, c in (terms or {}).items():
            c = Fraction(c)
            if not c:
                continue
            mm = _mono(m)
            acc = clean.get(mm, Fraction(0)) + c
            if acc:
                clean[mm] = acc
            else:
                clean.pop(mm, None)
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def const(cls, c) -> "Poly":
        return cls({(): Fraction(c)})

    @classmethod
    def var(cls, name: str, exp: int = 1, coeff=1) -> "Poly":
        return cls({((name, exp),): Fraction(coeff)})

    @classmethod
    def monomial(cls, coeff, **exps) -> "Poly":
        return cls({tuple(exps.items()): Fraction(coeff)})

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            acc = out.get(m, Fraction(0)) + c
            if acc:
                out[m] = acc
            else:
                out.pop(m, None)
        p = Poly.__new__(Poly)
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = Poly.__new__(Poly)
        p.terms = {m: -c for m, c in self.terms.items()}
        return p

    def __sub__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[tuple, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono(m1 + m2)
                acc = out.get(m, Fraction(0)) + c1 * c2
                if acc:
                    out[m] = acc
                else:
                    out.pop(m, None)
        p = Poly.__new__(Poly)
        p.terms = out
        return p

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers of polynomials are not defined")
        out = Poly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"Poly({self.render()!r})"

    # -- queries and maps --------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def evaluate(self, assign: dict) -> Fraction:
        """Evaluate at a full rational assignment; exact."""
        vals = {v: Fraction(x) for v, x in assign.items()}
        total = Fraction(0)
        for m, c in self.terms.items():
            acc = c
            for v, e in m:
                if v not in vals:
                    raise ValueError(f"no value assigned to variable {v!r}")
                x = vals[v]
                if e >= 0:
                    acc *= x ** e
                else:
                    if x == 0:
                        raise ZeroDivisionError(
                            f"{v}=0 with negative exponent {e}")
                    acc /= x ** (-e)
            total += acc
        return total

    def substitute(self, assign: dict) -> "Poly":
        """Replace some variables by rational values; exact partial eval."""
        vals = {v: Fraction(x) for v, x in assign.items()}
        out: dict[tuple, Fraction] = {}
        for m, c in self.terms.items():
            acc = c
            rest = []
            for v, e in m:
                if v in vals:
                    x = vals[v]
                    if e >= 0:
                        acc *= x ** e
                    else:
                        if x == 0:
                            raise ZeroDivisionError(
                                f"{v}=0 with negative exponent {e}")
                        acc /= x ** (-e)
                else:
                    rest.append((v, e))
            if not acc:
                continue
            mm = tuple(rest)
            acc2 = out.get(mm, Fraction(0)) + acc
            if acc2:
                out[mm] = acc2
            else:
                out.pop(mm, None)
        p = Poly.__new__(Poly)
        p.terms = out
        return p

    def coeff_extract(self, var: str, power: int) -> "Poly":
        """The coefficient of var^power; a polynomial free of var."""
        out = {}
        for m, c in self.terms.items():
            exps = dict(m)
            if exps.pop(var, 0) == power:
                out[tuple(sorted(exps.items(),
                                 key=lambda p: _VAR_RANK[p[0]]))] = c
        p = Poly.__new__(Poly)
        p.terms = out
        return p

    # -- canonical text form -------------------------------------------------

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=_mono_sort_key):
            c = self.terms[m]
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)

    @classmethod
    def parse(cls, text: str) -> "Poly":
        text = text.strip()
        if text == "0" or not text:
            return cls.zero()
        acc: dict[tuple, Fraction] = {}
        for term in text.split(" + "):
            term = term.strip()
            sign = Fraction(1)
            if term.startswith("-") and not _NUM_RE.match(term):
                sign = Fraction(-1)
                term = term[1:]
            coeff = sign
            pairs = []
            for factor in term.split("*"):
                factor = factor.strip()
                if _NUM_RE.match(factor):
                    coeff *= Fraction(factor)
                    continue
                m = _FACTOR_RE.match(factor)
                if not m:
                    raise ValueError(f"cannot parse factor {factor!r}")
                pairs.append((m.group(1), int(m.group(2) or 1)))
            mono = _mono(pairs)
            acc[mono] = acc.get(mono, Fraction(0)) + coeff
        return cls(acc)


def qint(j: int) -> Poly:
    """The q-integer 1 + q + ... + q^(j-1); zero when j == 0."""
    if j < 0:
        raise ValueError("q-integer needs j >= 0")
    return Poly({(("q", i),): Fraction(1) for i in range(j)})


ALPHA = Poly.var("alpha")
BETA = Poly.var("beta")
Q = Poly.var("q")
ONE = Poly.const(1)
