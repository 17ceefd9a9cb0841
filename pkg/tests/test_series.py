import random
from fractions import Fraction
from math import factorial

import pytest

from loopex.exactalg import (LaurentPolynomial, ParameterMismatchError,
                             SeriesDomainError, TruncatedSeries, series_arith,
                             substitute_exponential)


def test_geometric_series_inversion():
    one_minus_h = TruncatedSeries("hbar", 8, [1, -1])
    inv = one_minus_h.invert()
    assert inv.coeffs == tuple(Fraction(1) for _ in range(9))
    assert (inv * one_minus_h).coeffs == (1,) + (0,) * 8


def test_exp_log_inverse_pair():
    one_plus_h = TruncatedSeries("hbar", 10, [1, 1])
    assert one_plus_h.log().exp() == one_plus_h
    assert series_arith(series_arith(one_plus_h, None, "log"), None, "exp") == one_plus_h


def test_exponential_expansion_of_trefoil_alexander():
    # independent oracle: e^x - 1 + e^-x = 1 + 2 sum_{k>=1} x^(2k)/(2k)!
    expected = [Fraction(1) if k == 0 else
                (Fraction(2, factorial(k)) if k % 2 == 0 else Fraction(0))
                for k in range(9)]
    delta = LaurentPolynomial(("t",), {(1,): 1, (0,): -1, (-1,): 1})
    got = substitute_exponential(delta, {"t": 1}, 8)
    assert list(got.coeffs) == expected
    assert got.coeffs[2] == 1 and got.coeffs[4] == Fraction(1, 12)


def test_substitute_exponential_basics():
    t = LaurentPolynomial(("t",), {(1,): 1})
    s = substitute_exponential(t, {"t": 1}, 5)
    assert s.coeffs == tuple(Fraction(1, factorial(k)) for k in range(6))
    # cancellation: t1*t2 with slopes 1, -1 collapses to 1
    p = LaurentPolynomial(("t1", "t2"), {(1, 1): 1})
    s2 = substitute_exponential(p, {"t1": 1, "t2": -1}, 6)
    assert s2.coeffs == (1,) + (0,) * 6
    with pytest.raises(ValueError):
        substitute_exponential(p, {"t1": 1}, 4)


def test_substitute_exponential_is_ring_homomorphism():
    rng = random.Random(11)
    vars2 = ("t1", "t2")
    for _ in range(25):
        terms_a = {(rng.randint(-2, 2), rng.randint(-2, 2)): rng.randint(-4, 4)
                   for _ in range(3)}
        terms_b = {(rng.randint(-2, 2), rng.randint(-2, 2)): rng.randint(-4, 4)
                   for _ in range(3)}
        a = LaurentPolynomial(vars2, terms_a)
        b = LaurentPolynomial(vars2, terms_b)
        assign = {"t1": rng.randint(-3, 3), "t2": rng.randint(-3, 3)}
        fa = substitute_exponential(a, assign, 7)
        fb = substitute_exponential(b, assign, 7)
        fab = substitute_exponential(a * b, assign, 7)
        assert fa * fb == fab


def test_invert_random_unit_series():
    rng = random.Random(5)
    for _ in range(100):
        coeffs = [Fraction(1)] + [Fraction(rng.randint(-6, 6), rng.randint(1, 3))
                                  for _ in range(7)]
        s = TruncatedSeries("h", 7, coeffs)
        prod = s.invert() * s
        assert prod.coeffs == (1,) + (0,) * 7


def test_parameter_and_domain_errors():
    a = TruncatedSeries("hbar", 4, [1, 1])
    b = TruncatedSeries("h", 4, [1, 1])
    with pytest.raises(ParameterMismatchError):
        a + b
    with pytest.raises(SeriesDomainError):
        TruncatedSeries("h", 4, [0, 1]).invert()
    with pytest.raises(SeriesDomainError):
        TruncatedSeries("h", 4, [1, 1]).exp()
    with pytest.raises(SeriesDomainError):
        TruncatedSeries("h", 4, [2, 1]).log()


def test_truncation_tracks_minimum_order():
    a = TruncatedSeries("x", 6, [1, 1, 1, 1, 1, 1, 1])
    b = TruncatedSeries("x", 3, [1, 2])
    assert (a * b).order == 3
    assert (a + b).order == 3


def test_rescale():
    s = TruncatedSeries("x", 4, [1, 1, Fraction(1, 2)])
    r = s.rescale(3, "hbar")
    assert r.parameter == "hbar"
    assert r.coeffs[1] == 3 and r.coeffs[2] == Fraction(9, 2)


def test_exponential_constructor():
    s = TruncatedSeries.exponential(Fraction(1, 2), "hbar", 4)
    assert s.coeffs == (1, Fraction(1, 2), Fraction(1, 8), Fraction(1, 48), Fraction(1, 384))
