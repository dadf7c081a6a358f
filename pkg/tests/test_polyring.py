import random
from fractions import Fraction

import pytest

from kpasep.polyring import ALPHA, BETA, ONE, Q, Poly, qint


def test_add_examples():
    assert ALPHA + BETA + (-BETA) == ALPHA
    assert ALPHA + Poly.zero() == ALPHA
    assert Q + Q == 2 * Q


def test_mul_examples():
    assert (ALPHA + BETA) * ALPHA == ALPHA * ALPHA + ALPHA * BETA
    assert Poly.var("beta", -1) * BETA == ONE
    assert (1 + Q) * (1 + Q) == 1 + 2 * Q + Q * Q


def test_eval_examples():
    p = ALPHA + BETA + ALPHA * BETA
    assert p.evaluate({"alpha": 1, "beta": 1}) == 3
    assert Poly.var("alpha", -1).evaluate({"alpha": Fraction(1, 2)}) == 2
    # cross-checked against the n=2 single-species tableau count
    assert ((ALPHA + BETA) * p).evaluate({"alpha": 1, "beta": 1}) == 6


def test_eval_errors():
    with pytest.raises(ValueError):
        ALPHA.evaluate({"beta": 1})
    with pytest.raises(ZeroDivisionError):
        Poly.var("alpha", -1).evaluate({"alpha": 0})


def test_coeff_extract():
    y = Poly.var("y1")
    assert ((1 + y * ALPHA) ** 2).coeff_extract("y1", 1) == 2 * ALPHA
    assert (ALPHA + y * BETA).coeff_extract("y1", 0) == ALPHA
    assert (ALPHA + y * BETA).coeff_extract("y1", 2) == Poly.zero()


def test_qint():
    assert qint(0) == Poly.zero()
    assert qint(1) == ONE
    assert qint(3) == 1 + Q + Q * Q
    for j in range(21):
        assert (Q - 1) * qint(j) == Poly.var("q", j) - 1


def test_negative_exponent_rules():
    with pytest.raises(ValueError):
        Poly.var("q", -1)
    with pytest.raises(ValueError):
        Poly.var("y1", -2)
    # alpha and beta may be Laurent
    assert Poly.var("alpha", -3) * Poly.var("alpha", 3) == ONE


def _random_poly(rng, nterms=4):
    out = Poly.zero()
    for _ in range(nterms):
        coeff = Fraction(rng.randint(-4, 4), rng.randint(1, 5))
        out = out + Poly.monomial(coeff,
                                  alpha=rng.randint(-2, 3),
                                  beta=rng.randint(-2, 3),
                                  q=rng.randint(0, 3))
    return out


def test_eval_is_ring_homomorphism():
    rng = random.Random(7)
    assign = {"alpha": Fraction(2, 3), "beta": Fraction(5, 7),
              "q": Fraction(1, 4)}
    for _ in range(40):
        p, r = _random_poly(rng), _random_poly(rng)
        assert (p * r).evaluate(assign) == p.evaluate(assign) * r.evaluate(assign)
        assert (p + r).evaluate(assign) == p.evaluate(assign) + r.evaluate(assign)


def test_coeff_extract_is_linear():
    rng = random.Random(11)
    for _ in range(30):
        p, r = _random_poly(rng), _random_poly(rng)
        y = Poly.var("y1")
        p, r = p + y * _random_poly(rng), r + y * y * _random_poly(rng)
        for power in (0, 1, 2):
            assert ((p + r).coeff_extract("y1", power)
                    == p.coeff_extract("y1", power) + r.coeff_extract("y1", power))


def test_render_golden():
    w = ALPHA * ALPHA * BETA + ALPHA * BETA * BETA + ALPHA * BETA * Q
    assert w.render() == "alpha^2*beta + alpha*beta^2 + alpha*beta*q"
    assert Poly.zero().render() == "0"
    assert Poly.var("alpha", -1).render() == "alpha^-1"
    assert (Poly.const(Fraction(1, 2)) * ALPHA - BETA).render() == "1/2*alpha + -beta"


def test_parse_render_roundtrip():
    rng = random.Random(13)
    for _ in range(60):
        p = _random_poly(rng)
        assert Poly.parse(p.render()) == p
    assert Poly.parse("0") == Poly.zero()


def test_substitute_partial():
    p = ALPHA * Q + BETA
    assert p.substitute({"q": 1}) == ALPHA + BETA
    assert p.substitute({"q": 0}) == BETA
