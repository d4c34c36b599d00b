import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from subres.arith import GF, QQ, ZZ
from subres.polynomial import (
    BernsteinSubresultant,
    Polynomial,
    PolynomialRing,
    bernstein_expand,
    power_of_linear,
    shift,
)
from subres.report import parse_value, serialize

x = Polynomial.gen(QQ)


def test_power_of_linear():
    assert power_of_linear(1, 2) == x**2 - 2 * x + 1
    assert power_of_linear(Fraction(1, 2), 3) == (x - Fraction(1, 2)) * (x - Fraction(1, 2)) * (x - Fraction(1, 2))
    assert power_of_linear(5, 0) == 1


def test_basic_arithmetic():
    assert (x**2 - 2 * x + 1)(1) == 0
    assert (x - 1) * (x + 1) == x**2 - 1
    assert (x + 1) - (x + 1) == Polynomial()
    assert Polynomial([1, 2, 0, 0]).degree == 1
    assert Polynomial().degree == -1
    assert (3 * x).scale(Fraction(1, 3)) == x


def test_domain_mismatch():
    with pytest.raises(ValueError):
        Polynomial([1, 1], QQ) + Polynomial([1, 1], GF(5))


def test_shift_examples():
    assert shift(x**2, 1) == x**2 + 2 * x + 1
    f = 3 * x**3 - x + Fraction(2, 7)
    assert shift(f, 0) == f
    assert shift(shift(f, Fraction(5, 3)), Fraction(-5, 3)) == f


def test_division():
    q, r = divmod(x**3 + 2 * x + 5, x - 1)
    assert q * (x - 1) + r == x**3 + 2 * x + 5
    assert r.degree < 1


small_polys = st.lists(st.fractions(max_denominator=9).filter(lambda c: abs(c) < 20), max_size=6).map(Polynomial)


@given(small_polys, small_polys)
def test_degree_is_additive(f, g):
    if f and g:
        assert (f * g).degree == f.degree + g.degree


@given(small_polys, small_polys, st.fractions(max_denominator=9))
def test_shift_is_multiplicative(f, g, a):
    assert (f * g).shift(a) == f.shift(a) * g.shift(a)


@given(small_polys, st.fractions(max_denominator=9), st.fractions(max_denominator=9))
def test_shift_matches_evaluation(f, a, point):
    assert f.shift(a)(point) == f(point + a)


def test_text_form():
    assert (6 * x**2 - 4 * x + 1).to_text() == "6*x^2 - 4*x + 1"
    assert (-x**3 + Fraction(1, 2) * x).to_text() == "-x^3 + 1/2*x"
    assert Polynomial().to_text() == "0"
    assert Polynomial([-7]).to_text() == "-7"


def test_json_form_round_trip():
    f = 6 * x**2 - 4 * x + Fraction(1, 3)
    data = json.loads(json.dumps(serialize(f)))
    assert data == ["1/3", "-4", "6"]
    assert Polynomial(parse_value(data)) == f


def test_nested_ring_arithmetic():
    F = GF(3)
    R = PolynomialRing(F, "t")
    t = R.gen()
    X = Polynomial.gen(R)
    f = power_of_linear(t, 3, R)
    # (x - t)^3 = x^3 - t^3 in characteristic 3
    assert f == X**3 - t**3
    assert R.exact_div(t**2 - 1, t + 1) == t - 1
    with pytest.raises(ArithmeticError):
        R.exact_div(t**2 + 1, t + 2 * t**2)
    assert serialize(f) == [["0", "0", "0", "2"], [], [], ["1"]]


def test_bernstein_expand_examples():
    B = BernsteinSubresultant(2, 2, 1, Fraction(3), Fraction(1), 1, 1, (1, 1))
    assert bernstein_expand(B) == 4 * x - 8
    B = BernsteinSubresultant(4, 3, 2, Fraction(1), Fraction(0), -1, 2, (-3, -2, -1))
    assert bernstein_expand(B) == 6 * x**2 - 4 * x + 1
    B = BernsteinSubresultant(4, 3, 2, Fraction(5), Fraction(5), -1, 2, (-3, -2, -1))
    assert bernstein_expand(B) == Polynomial()


@given(st.fractions(max_denominator=9), st.fractions(max_denominator=9))
def test_bernstein_general_two_two_one(a, b):
    B = BernsteinSubresultant(2, 2, 1, a, b, 1, 1, (1, 1))
    assert bernstein_expand(B) == Polynomial([-(a * a - b * b), 2 * (a - b)])


def test_bernstein_invariants_enforced():
    with pytest.raises(ValueError):
        BernsteinSubresultant(4, 3, 2, 1, 0, -1, 2, (1, 2))
    with pytest.raises(ValueError):
        BernsteinSubresultant(4, 3, 2, 1, 0, 2, 2, (1, 2, 3))
    with pytest.raises(ValueError):
        BernsteinSubresultant(4, 3, 2, 1, 0, 1, 3, (1, 2, 3))
    B = BernsteinSubresultant(4, 3, 2, 1, 0, 1, 2, (1, 2, 3), ZZ)
    assert B.c == 2


def test_bernstein_reduces_q_mod_p():
    F = GF(5)
    B = BernsteinSubresultant(4, 3, 2, F(1), F(0), -1, 2, (-3, -2, -1), F)
    expanded = bernstein_expand(B)
    assert [c.value for c in expanded.coeffs] == [1, 1, 1]  # 6x^2 - 4x + 1 mod 5
