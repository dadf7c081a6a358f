"""Rhombic diagrams and their tilings.

The diagram of a word has one rhombus tile per crossing pair (p, p'),
p < p', where the letter at p outranks the letter at p' in the swap
order.  A tiling is stored combinatorially: for every letter occurrence,
the ordered list of partners it crosses, read from the boundary path of
the word inward.  That list is simultaneously the strip of the occurrence
(e-strips bottom to top, d-strips right to left), and a tiling is valid
iff the lists can be replayed as a sorting sweep of the word.

Geometry is derived, never stored: replaying the sweep with the integer
direction vectors dir(e) = (-k, 0), dir(a_i) = (-i, -(k-i)),
dir(d) = (0, -k) yields an exact anchor point per tile.
"""

from __future__ import annotations

from itertools import combinations

from .words import D, E, crosses, infer_k, species, swap_rank, validate_word


def dir_vec(letter: str, k: int) -> tuple[int, int]:
    if letter == E:
        return (-k, 0)
    if letter == D:
        return (0, -k)
    s = species(letter)
    return (-s, -(k - s))


def crossing_pairs(word) -> list[tuple[int, int]]:
    """All tiles of the diagram, as position pairs (p, p') with p < p'."""
    n = len(word)
    return [(p, q) for p in range(n) for q in range(p + 1, n)
            if crosses(word[p], word[q])]


def tile_class(word, pair) -> tuple[str, str]:
    return (word[pair[0]], word[pair[1]])


class Tiling:
    """A tiling of the rhombic diagram of ``word``.

    ``lists[p]`` holds the partners of occurrence p in strip order, from
    the word-path boundary inward.  Instances are immutable.
    """

    __slots__ = ("word", "k", "lists", "_order", "_anchors", "_hash")

    def __init__(self, word, lists, k: int | None = None):
        self.word = tuple(word)
        validate_word(self.word, k)
        self.k = k if k is not None else infer_k(self.word)
        self.lists = {p: tuple(v) for p, v in lists.items()}
        self._order = None
        self._anchors = None
        self._hash = None

    # -- identity ------------------------------------------------------------

    def _key(self):
        return (self.word, tuple(self.lists[p] for p in range(len(self.word))))

    def __eq__(self, other):
        return isinstance(other, Tiling) and self._key() == other._key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self):
        return f"Tiling({''.join(self.word)!r}, {dict(self.lists)!r})"

    # -- basic queries ---------------------------------------------------------

    def tiles(self) -> list[tuple[int, int]]:
        return crossing_pairs(self.word)

    @property
    def area(self) -> int:
        return sum(len(v) for v in self.lists.values()) // 2

    def strip(self, pos: int) -> list[tuple[int, int]]:
        """Tiles of the strip of occurrence pos, ordered from the boundary."""
        return [(min(pos, u), max(pos, u)) for u in self.lists[pos]]

    # -- sweep replay ----------------------------------------------------------

    def _replay(self):
        """Reconstruct the sorting sweep; yields tile order and anchors."""
        word, lists = self.word, self.lists
        n = len(word)
        cur = list(range(n))
        consumed = {p: 0 for p in range(n)}
        remaining = sum(len(v) for v in lists.values()) // 2
        order, anchors = [], {}
        dirs = [dir_vec(x, self.k) for x in word]
        while remaining:
            placed = False
            px, py = 0, 0
            for t in range(n - 1):
                x, y = cur[t], cur[t + 1]
                if (crosses(word[x], word[y])
                        and consumed[x] < len(lists[x])
                        and lists[x][consumed[x]] == y
                        and lists[y][consumed[y]] == x):
                    if x > y:
                        raise ValueError("crossing pair out of word order")
                    order.append((x, y))
                    anchors[(x, y)] = (px, py)
                    consumed[x] += 1
                    consumed[y] += 1
                    cur[t], cur[t + 1] = y, x
                    remaining -= 1
                    placed = True
                    break
                px += dirs[x][0]
                py += dirs[x][1]
            if not placed:
                raise ValueError("tiling lists cannot be swept; invalid tiling")
        self._order, self._anchors = order, anchors

    def tile_order(self) -> list[tuple[int, int]]:
        """Tiles in a sweep order compatible with every strip order."""
        if self._order is None:
            self._replay()
        return self._order

    def anchors(self) -> dict:
        if self._anchors is None:
            self._replay()
        return self._anchors

    def validate(self) -> None:
        self._replay()

    def tile_corners(self, pair) -> list[tuple[int, int]]:
        """The four corners of a tile, exact integer coordinates."""
        ax, ay = self.anchors()[pair]
        dx, dy = dir_vec(self.word[pair[0]], self.k)
        ex, ey = dir_vec(self.word[pair[1]], self.k)
        return [(ax, ay), (ax + dx, ay + dy),
                (ax + dx + ex, ay + dy + ey), (ax + ex, ay + ey)]

    # -- flips -----------------------------------------------------------------

    def hexagon_triples(self) -> list[tuple[int, int, int]]:
        """All flippable triples (x, y, z), positions ascending."""
        word = self.word
        n = len(word)
        out = []
        for x, y, z in combinations(range(n), 3):
            if (crosses(word[x], word[y]) and crosses(word[x], word[z])
                    and crosses(word[y], word[z])
                    and self._hexagon_orientation(x, y, z) is not None):
                out.append((x, y, z))
        return out

    def _hexagon_orientation(self, x, y, z):
        """"A" if the heavier pair swaps first, "B" if last, None if not
        a hexagon of this tiling."""
        if not all(p in self.lists for p in (x, y, z)):
            return None
        lx, ly, lz = self.lists[x], self.lists[y], self.lists[z]
        try:
            ixy, ixz = lx.index(y), lx.index(z)
            iyx, iyz = ly.index(x), ly.index(z)
            izx, izy = lz.index(x), lz.index(y)
        except ValueError:
            return None
        if abs(ixy - ixz) != 1 or abs(iyx - iyz) != 1 or abs(izx - izy) != 1:
            return None
        pattern = (ixy < ixz, iyx < iyz, izx < izy)
        if pattern == (True, True, True):
            return "A"
        if pattern == (False, False, False):
            return "B"
        raise AssertionError(f"inconsistent hexagon {x, y, z}")

    def orientation(self, triple) -> str:
        o = self._hexagon_orientation(*triple)
        if o is None:
            raise ValueError(f"{triple} is not a hexagon of this tiling")
        return o

    def flip(self, triple) -> "Tiling":
        """Rotate the three tiles of a hexagon; an involution."""
        x, y, z = triple
        self.orientation(triple)
        lists = {p: list(v) for p, v in self.lists.items()}

        def swap(lst, a, b):
            i, j = lst.index(a), lst.index(b)
            lst[i], lst[j] = lst[j], lst[i]

        swap(lists[x], y, z)
        swap(lists[y], x, z)
        swap(lists[z], x, y)
        return Tiling(self.word, lists, self.k)


def maximal_tiling(word, k: int | None = None) -> Tiling:
    """The canonical tiling that gives priority to the heaviest tiles.

    Greedy sweep: repeatedly swap the adjacent crossing pair whose tile
    class is largest in the order (first letter rank, second letter
    rank), breaking ties at the leftmost position.
    """
    word = tuple(word)
    validate_word(word, k)
    n = len(word)
    cur = list(range(n))
    lists: dict[int, list[int]] = {p: [] for p in range(n)}
    remaining = len(crossing_pairs(word))
    while remaining:
        best = None
        for t in range(n - 1):
            x, y = cur[t], cur[t + 1]
            if crosses(word[x], word[y]):
                key = (swap_rank(word[x]), swap_rank(word[y]), -t)
                if best is None or key > best[0]:
                    best = (key, t)
        if best is None:
            raise AssertionError("sweep stuck before all tiles placed")
        t = best[1]
        x, y = cur[t], cur[t + 1]
        lists[x].append(y)
        lists[y].append(x)
        cur[t], cur[t + 1] = y, x
        remaining -= 1
    return Tiling(word, lists, k)


def all_tilings(word, k: int | None = None) -> list[Tiling]:
    """All tilings reachable from the maximal one by flips.

    For two species this is every tiling of the diagram; for three or
    more, flip-connectivity is not guaranteed, so the result is the
    flip-reachable family only.
    """
    start = maximal_tiling(word, k)
    seen = {start}
    queue = [start]
    while queue:
        t = queue.pop()
        for triple in t.hexagon_triples():
            t2 = t.flip(triple)
            if t2 not in seen:
                seen.add(t2)
                queue.append(t2)
    return sorted(seen, key=lambda t: t._key())


# -- surgery used by the tableau Markov chain --------------------------------


def remove_letter(tiling: Tiling, pos: int) -> Tiling:
    """Delete occurrence pos and its whole strip; positions shift down."""
    word = tiling.word[:pos] + tiling.word[pos + 1:]

    def shift(p):
        return p if p < pos else p - 1

    lists = {}
    for p, partners in tiling.lists.items():
        if p == pos:
            continue
        lists[shift(p)] = tuple(shift(u) for u in partners if u != pos)
    return Tiling(word, lists, tiling.k)


def insert_letter(tiling: Tiling, letter: str, slot: int) -> Tiling:
    """Insert a d or e whose new strip hugs the word path.

    The insertion is built as a guided sorting sweep of the longer word:
    the new letter swaps past its crossing partners nearest-first
    whenever it can, and otherwise the existing tiling's sweep proceeds;
    the moment the new letter passes a partner fixes where its tile sits
    in that partner's strip.  The result is a valid tiling by
    construction, with the new strip's first tile attached to the
    boundary corner at the insertion point.
    """
    if letter not in (D, E):
        raise ValueError("only d and e insertions are supported")
    word1 = tiling.word
    word2 = word1[:slot] + (letter,) + word1[slot:]

    def shift(p):
        return p if p < slot else p + 1

    old_lists = {shift(p): tuple(shift(u) for u in v)
                 for p, v in tiling.lists.items()}
    partners = {shift(p) for p in range(len(word1))
                if (crosses(word1[p], letter) if p < slot
                    else crosses(letter, word1[p]))}
    cur = list(range(len(word2)))
    consumed = {p: 0 for p in old_lists}
    inserts: dict[int, int] = {}
    own: list[int] = []
    done_old = 0
    total_old = sum(len(v) for v in old_lists.values()) // 2
    while done_old < total_old or len(own) < len(partners):
        pos = cur.index(slot)
        if letter == E and pos > 0 and cur[pos - 1] in partners \
                and cur[pos - 1] not in inserts:
            u = cur[pos - 1]
            inserts[u] = consumed[u]
            own.append(u)
            cur[pos - 1], cur[pos] = cur[pos], cur[pos - 1]
            continue
        if letter == D and pos < len(cur) - 1 and cur[pos + 1] in partners \
                and cur[pos + 1] not in inserts:
            u = cur[pos + 1]
            inserts[u] = consumed[u]
            own.append(u)
            cur[pos], cur[pos + 1] = cur[pos + 1], cur[pos]
            continue
        for t in range(len(cur) - 1):
            x, y = cur[t], cur[t + 1]
            if x == slot or y == slot:
                continue
            if (crosses(word2[x], word2[y])
                    and old_lists[x][consumed[x]:consumed[x] + 1] == (y,)
                    and old_lists[y][consumed[y]:consumed[y] + 1] == (x,)):
                consumed[x] += 1
                consumed[y] += 1
                done_old += 1
                cur[t], cur[t + 1] = y, x
                break
        else:
            raise AssertionError("insertion sweep stuck")
    lists = {}
    for p, v in old_lists.items():
        if p in inserts:
            i = inserts[p]
            lists[p] = v[:i] + (slot,) + v[i:]
        else:
            lists[p] = v
    lists[slot] = tuple(own)
    return Tiling(word2, lists, tiling.k)


def add_boundary_tile(tiling: Tiling, p: int, q: int) -> Tiling:
    """Add the tile (p, q) at the boundary corner between edges p and q."""
    if not crosses(tiling.word[p], tiling.word[q]) or q != p + 1:
        raise ValueError(f"({p}, {q}) is not a corner crossing")
    if q in tiling.lists[p]:
        raise ValueError("tile already present")
    lists = {a: list(v) for a, v in tiling.lists.items()}
    lists[p] = [q] + lists[p]
    lists[q] = [p] + lists[q]
    return Tiling(tiling.word, lists, tiling.k)


def remove_boundary_tile(tiling: Tiling, p: int, q: int) -> Tiling:
    """Remove the tile (p, q); it must sit at the boundary corner."""
    if not (tiling.lists[p] and tiling.lists[p][0] == q
            and tiling.lists[q] and tiling.lists[q][0] == p):
        raise ValueError(f"tile ({p}, {q}) is not at the boundary corner")
    lists = {a: list(v) for a, v in tiling.lists.items()}
    lists[p] = lists[p][1:]
    lists[q] = lists[q][1:]
    return Tiling(tiling.word, lists, tiling.k)
