"""Words over the k-species alphabet {d, a_1..a_{k-1}, e}.

A word doubles as a lattice state and as a tableau type.  Letters are
plain strings: "d", "e", and "a1".."a9" for the middle species.  Two
orders matter throughout:

* the swap order (``swap_rank``): e < a_1 < ... < a_{k-1} < d.  An
  adjacent pair descending in this order swaps forward at rate 1 and is a
  crossing of the rhombic diagram; the ascending pair is the rate-q
  reverse move.
* the state order (``state_sort_key``): d < a_1 < ... < a_{k-1} < e, used
  for deterministic enumeration of states.
"""

from __future__ import annotations

import re
from itertools import product

D = "d"
E = "e"

_BIG = 10 ** 6
_WORD_RE = re.compile(r"d|e|a[0-9]*")


def a_letter(s: int) -> str:
    if s < 1 or s > 9:
        raise ValueError("species index must be in 1..9")
    return f"a{s}"


def species(letter: str) -> int | None:
    """Species index for a-letters, None for d and e."""
    if letter.startswith("a"):
        return int(letter[1:])
    return None


def alphabet(k: int) -> tuple[str, ...]:
    """All letters for a k-species system, heaviest first."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return (D,) + tuple(a_letter(s) for s in range(1, k)) + (E,)


def swap_rank(letter: str) -> int:
    if letter == E:
        return 0
    if letter == D:
        return _BIG
    return species(letter)


def crosses(x: str, y: str) -> bool:
    """True iff the adjacent pair (x, y) swaps forward at rate 1."""
    return swap_rank(x) > swap_rank(y)


def state_rank(letter: str) -> int:
    if letter == D:
        return 0
    if letter == E:
        return _BIG
    return species(letter)


def state_sort_key(word) -> tuple:
    return tuple(state_rank(x) for x in word)


def parse_word(text: str, k: int | None = None) -> tuple[str, ...]:
    """Parse e.g. "dae" or "da1a2e"; bare "a" means species 1."""
    letters = []
    pos = 0
    while pos < len(text):
        m = _WORD_RE.match(text, pos)
        if not m:
            raise ValueError(f"bad letter at {text[pos:]!r}")
        tok = m.group(0)
        if tok == "a":
            tok = "a1"
        letters.append(tok)
        pos = m.end()
    word = tuple(letters)
    validate_word(word, k)
    return word


def validate_word(word, k: int | None = None) -> None:
    for x in word:
        s = species(x)
        if s is not None and (s < 1 or (k is not None and s > k - 1)):
            raise ValueError(f"letter {x!r} invalid for k={k}")
        if s is None and x not in (D, E):
            raise ValueError(f"unknown letter {x!r}")


def infer_k(word) -> int:
    """Smallest species count consistent with the word."""
    best = 1
    for x in word:
        s = species(x)
        if s is not None:
            best = max(best, s + 1)
    return best


def word_str(word, k: int | None = None) -> str:
    """Render a word; species 1 prints as bare "a" in a two-species setting."""
    if k is None:
        k = infer_k(word)
    if k <= 2:
        return "".join("a" if x == "a1" else x for x in word)
    return "".join(word)


def sector_of(word, k: int) -> tuple[int, ...]:
    """Counts (r_1, ..., r_{k-1}) of each middle species."""
    return tuple(sum(1 for x in word if x == a_letter(s))
                 for s in range(1, k))


def sector_states(n: int, k: int, sector) -> list[tuple[str, ...]]:
    """All words of length n with the given species counts, sorted."""
    sector = tuple(sector)
    if n < 1:
        raise ValueError("n must be >= 1")
    if len(sector) != k - 1:
        raise ValueError(f"sector needs {k - 1} counts, got {len(sector)}")
    if any(r < 0 for r in sector) or sum(sector) > n:
        raise ValueError(f"sector {sector} infeasible for n={n}")
    out = [w for w in product(alphabet(k), repeat=n)
           if sector_of(w, k) == sector]
    out.sort(key=state_sort_key)
    return out
