from itertools import product

import pytest

from kpasep.polyring import ALPHA, BETA, Q, Poly
from kpasep.rhombic import (class_count_formula, closed_form_z_at_q1,
                            conjecture_probe, count_classes, diagram_tiles,
                            enumerate_fillings, filling_flip, prop28_check,
                            sector_weight_sum, transfer_step_ok,
                            weight_bridge_ok, word_weight)
from kpasep.tilings import all_tilings, maximal_tiling
from kpasep.words import alphabet, parse_word


def test_diagram_tiles():
    assert diagram_tiles(parse_word("de")) == {(0, 1): ("d", "e")}
    assert diagram_tiles(parse_word("dae")) == {
        (0, 1): ("d", "a1"), (0, 2): ("d", "e"), (1, 2): ("a1", "e")}
    assert diagram_tiles(parse_word("ea")) == {}


def test_area_is_tiling_independent():
    for w in product(alphabet(2), repeat=4):
        tilings = all_tilings(w, 2)
        areas = {t.area for t in tilings}
        assert areas == {len(diagram_tiles(w))}


def test_maximal_tiling_strip_structure():
    # e-strips: d-partners (descending) below a-partners (descending);
    # d-strips: partners in word order, earliest at the boundary end
    for n in range(1, 6):
        for w in product(alphabet(2), repeat=n):
            t = maximal_tiling(w, 2)
            for p, letter in enumerate(w):
                if letter == "e":
                    ds = [u for u in t.lists[p] if w[u] == "d"]
                    As = [u for u in t.lists[p] if w[u] != "d"]
                    assert list(t.lists[p]) == ds + As
                    assert ds == sorted(ds, reverse=True)
                    assert As == sorted(As, reverse=True)
                elif letter == "d":
                    assert list(t.lists[p]) == sorted(t.lists[p])


def test_maximal_tiling_dae():
    # the d-e tile sits below the a-e tile in the e-strip
    t = maximal_tiling(parse_word("dae"))
    assert t.lists[2] == (0, 1)


def test_enumerate_fillings_counts():
    assert len(enumerate_fillings(parse_word("de"))) == 3
    assert len(enumerate_fillings(parse_word("a"), k=2)) == 1
    assert len(enumerate_fillings(parse_word("da"))) == 2


def test_filling_weights():
    fillings = {f.symbols: f for f in enumerate_fillings(parse_word("de"))}
    assert fillings[(((0, 1), "alpha"),)].weight() == ALPHA ** 2 * BETA
    assert fillings[()].weight() == ALPHA * BETA * Q
    da = {f.symbols: f for f in enumerate_fillings(parse_word("da"))}
    assert da[()].weight() == ALPHA * Q
    (ea,) = enumerate_fillings(parse_word("ea"))
    assert ea.weight() == BETA


def test_word_weight_values():
    assert word_weight(parse_word("de")) == ALPHA * BETA * (ALPHA + BETA + Q)
    core = (Q ** 3 + ALPHA * Q ** 2 + ALPHA * Q + BETA * Q ** 2
            + ALPHA * BETA * Q + BETA * Q + ALPHA * BETA)
    assert word_weight(parse_word("dae")) == ALPHA * BETA * core


def test_figure_witnesses():
    w1 = word_weight(parse_word("daaddedae"))
    assert w1.terms.get((("alpha", 6), ("beta", 5), ("q", 5)), 0) > 0
    w2 = word_weight(parse_word("a2da1ea2a1eed"))
    assert w2.terms.get((("alpha", 4), ("beta", 4), ("q", 8)), 0) > 0


def test_sector_weight_sum():
    z = sector_weight_sum(2, 2, (1,))
    expected = (ALPHA * (BETA + Q) + ALPHA + ALPHA * BETA + BETA * Q + BETA)
    assert z == expected
    assert sector_weight_sum(2, 1, ()).substitute({"q": 1}) == \
        closed_form_z_at_q1(2, 0)
    # a sector with no light particles reduces to the single-species sum
    assert sector_weight_sum(3, 2, (0,)) == sector_weight_sum(3, 1, ())


def test_closed_form_small():
    for n in range(1, 6):
        for r in range(n + 1):
            z = sector_weight_sum(n, 2, (r,)).substitute({"q": 1})
            assert z == closed_form_z_at_q1(n, r)


def test_count_classes():
    assert count_classes(4, 1) == 240 == class_count_formula(4, 1)
    assert count_classes(3, 0) == 24 == class_count_formula(3, 0)
    assert count_classes(4, 4) == 1 == class_count_formula(4, 4)
    for n in range(1, 6):
        for r in range(n + 1):
            assert count_classes(n, r) == class_count_formula(n, r)


def test_degenerate_words():
    for w in [parse_word("aaa", 2), parse_word("a1a2", 3)]:
        assert word_weight(w) == Poly.const(1)
    # no crossings means a single filling of weight alpha^#d beta^#e
    assert word_weight(parse_word("ead")) == ALPHA * BETA
    assert word_weight(parse_word("eda")) == ALPHA * BETA * (BETA + Q)


def test_flips_dae():
    w = parse_word("dae")
    tilings = all_tilings(w)
    assert len(tilings) == 2
    t = maximal_tiling(w)
    (triple,) = t.hexagon_triples()
    assert triple == (0, 1, 2)
    t2 = t.flip(triple)
    assert t2 != t and t2.flip(triple) == t
    assert t2.area == t.area


def test_filling_flip_exhaustive_small():
    # weight preservation, involution, and bijectivity per hexagon
    for n in range(2, 5):
        for w in product(alphabet(2), repeat=n):
            for t in all_tilings(w, 2):
                for triple in t.hexagon_triples():
                    images = set()
                    for f in enumerate_fillings(w, t):
                        g = filling_flip(f, triple)
                        g.validate()
                        assert g.weight() == f.weight()
                        assert filling_flip(g, triple).key() == f.key()
                        images.add(g.key())
                    assert len(images) == len(enumerate_fillings(w, t))


def test_prop28():
    assert prop28_check(parse_word("dae"))["equal"]
    assert prop28_check(parse_word("de"))["tilings"] == 1
    assert prop28_check(parse_word("daae"))["equal"]
    for w in product(alphabet(2), repeat=5):
        assert prop28_check(w, 2)["equal"]


def test_conjecture_probe():
    w = parse_word("a2da1e")
    t = maximal_tiling(w)
    assert conjecture_probe(w, t)["agrees"]
    for triple in t.hexagon_triples():
        assert conjecture_probe(w, t.flip(triple))["agrees"]


def test_weight_bridge():
    for k in (1, 2, 3):
        for n in range(1, 4):
            for w in product(alphabet(k), repeat=n):
                assert weight_bridge_ok(w, k)


def test_transfer_steps():
    for n in range(1, 4):
        for w in product(alphabet(2), repeat=n):
            for x in alphabet(2):
                assert transfer_step_ok(w, x, 2)
    for w in [parse_word("a2d", 3), parse_word("da1a2", 3)]:
        for x in alphabet(3):
            assert transfer_step_ok(w, x, 3)


def test_flip_needs_hexagon():
    t = maximal_tiling(parse_word("de"))
    with pytest.raises(ValueError):
        t.orientation((0, 1, 2))
