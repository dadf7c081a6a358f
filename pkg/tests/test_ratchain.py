from fractions import Fraction

import pytest

from kpasep.pasep import RateParams
from kpasep.polyring import ALPHA, BETA, ONE, Q
from kpasep.ratchain import (Locus, canonical_states, chain_transitions,
                             classify_corner, classify_corner_by_flips,
                             detailed_balance_check, loci, profile,
                             projection_check, pushforward_matches_pasep,
                             rat_chain, stationary_matches_weights,
                             transition, weight_contract_ok)
from kpasep.words import parse_word, word_str

PARAMS = RateParams.single_q(Fraction(1, 2), Fraction(1, 3), Fraction(1, 5), 2)


def _state(n, r, word_text, symbols=()):
    word = parse_word(word_text, 2)
    for f in canonical_states(n, r):
        if f.word == word and f.symbols == tuple(sorted(symbols)):
            return f
    raise LookupError(f"no state {word_text} {symbols}")


def test_canonical_state_count():
    assert len(canonical_states(2, 1)) == 6
    labels = {(word_str(f.word, 2), f.symbols) for f in canonical_states(2, 1)}
    assert labels == {
        ("da", ()), ("da", (((0, 1), "beta"),)), ("ad", ()),
        ("ae", ()), ("ae", (((0, 1), "alpha"),)), ("ea", ()),
    }


def test_loci_examples():
    kinds = [(l.kind, l.pos) for l in loci(_state(2, 1, "ad"))]
    assert kinds == [("inner", 0), ("empty_d", -1)]
    kinds = [(l.kind, l.pos) for l in loci(_state(2, 1, "ea"))]
    assert kinds == [("inner", 0), ("empty_e", -1)]
    kinds = [(l.kind, l.pos) for l in loci(_state(2, 1, "da"))]
    assert kinds == [("corner", 0)]


def test_classify_examples():
    f = _state(2, 1, "da", [((0, 1), "beta")])
    assert classify_corner(f, 0) == "beta"
    assert classify_corner(_state(2, 1, "da"), 0) == "q"
    # a-e corner behind a d-e stack: label comes from the strip descent
    f = _state(3, 1, "dae", [((0, 2), "alpha")])
    assert classify_corner(f, 1) == "alpha"
    f = _state(3, 1, "dae")
    assert classify_corner(f, 1) == "q"


def test_classify_routes_agree():
    # the strip-descent shortcut against the flip-orbit search, on every
    # corner of every state with n <= 5
    for n in range(2, 6):
        for r in range(n + 1):
            for f in canonical_states(n, r):
                for l in loci(f):
                    if l.kind == "corner":
                        assert classify_corner(f, l.pos) == \
                            classify_corner_by_flips(f, l.pos)


def test_transition_examples():
    # beta-corner of (da, beta): to (ad) at rate 1, weight alpha*beta -> alpha
    f = _state(2, 1, "da", [((0, 1), "beta")])
    t, rate = transition(f, Locus("corner", 0, ("d", "a1")))
    assert (word_str(t.word, 2), t.symbols, rate) == ("ad", (), ONE)
    assert f.weight() == BETA * t.weight()
    # empty e-strip of (ea): to (da, beta) at rate alpha
    f = _state(2, 1, "ea")
    t, rate = transition(f, Locus("empty_e"))
    assert (word_str(t.word, 2), t.symbols, rate) == \
        ("da", (((0, 1), "beta"),), ALPHA)
    assert t.weight() == ALPHA * f.weight()
    # inner corner of (ad): to (da) with a free q, at rate q
    f = _state(2, 1, "ad")
    t, rate = transition(f, Locus("inner", 0, ("a1", "d")))
    assert (word_str(t.word, 2), t.symbols, rate) == ("da", (), Q)
    assert t.weight() == Q * f.weight()


def test_chain_rows_are_stochastic():
    chain = rat_chain(3, 1, PARAMS)
    for i in range(len(chain.states)):
        assert sum(chain.row_probs(i).values()) == 1


def test_weight_contracts():
    for (n, r) in [(2, 1), (3, 1), (4, 1)]:
        for f in canonical_states(n, r):
            for l in loci(f):
                t, rate = transition(f, l)
                assert weight_contract_ok(f, l, t, rate), (f.word, f.symbols, l)


def test_projection():
    for (n, r) in [(2, 1), (3, 1), (4, 1), (4, 2)]:
        assert projection_check(n, r)["projection_ok"]


def test_detailed_balance():
    # spec'd inflow identities: (ad) balances against (da, beta), (da, q)
    states, trans = chain_transitions(2, 1)
    rep = detailed_balance_check(2, 1)
    assert rep["balance_ok"] and rep["feature_outflow_ok"]
    for (n, r) in [(3, 1), (4, 1)]:
        rep = detailed_balance_check(n, r)
        assert rep["balance_ok"] and rep["feature_outflow_ok"]


def test_balance_worked_example():
    # LHS of (ad): wt * (beta + q); inflow: (da,beta) and (da,q) at rate 1
    f = _state(2, 1, "ad")
    total = sum((rate for l in loci(f) for rate in [transition(f, l)[1]]),
                start=ALPHA * 0)
    assert f.weight() * total == ALPHA * (BETA + Q)
    src1 = _state(2, 1, "da", [((0, 1), "beta")])
    src2 = _state(2, 1, "da")
    assert src1.weight() + src2.weight() == ALPHA * BETA + ALPHA * Q


def test_stationary_proportional_to_weights():
    for n in range(1, 6):
        for r in range(n + 1):
            assert stationary_matches_weights(n, r, PARAMS), (n, r)
    for (n, r) in [(2, 1), (3, 1), (4, 1), (4, 2)]:
        assert pushforward_matches_pasep(n, r, PARAMS)


def test_stationary_by_direct_solve():
    # solve the small chains outright and compare with the weight vector
    for (n, r) in [(2, 1), (3, 1)]:
        chain = rat_chain(n, r, PARAMS)
        pi = chain.stationary()
        states, _ = chain_transitions(n, r)
        assign = {"alpha": PARAMS.alpha, "beta": PARAMS.beta,
                  "q": PARAMS.q0inf}
        w = [f.weight().evaluate(assign) for f in states]
        z = sum(w)
        assert pi == [wi / z for wi in w]


def test_profile_counts():
    f = _state(2, 1, "ad")
    prof = profile(f)
    assert prof["C"] + prof["C0"] == 0
    assert prof["I"] == 1 and prof["delta_L"] == 1 and prof["delta_R"] == 0
    f = _state(2, 1, "da", [((0, 1), "beta")])
    prof = profile(f)
    assert prof["C"] == 1 and prof["delta_R_beta"] == 1


def test_transition_requires_valid_locus():
    f = _state(2, 1, "da")
    with pytest.raises(Exception):
        transition(f, Locus("empty_e"))
