from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from subres.arith import (
    GF,
    QQ,
    ZZ,
    FpElement,
    binomial,
    factorial,
    factorize,
    format_rational,
    is_prime,
    parse_integer,
    parse_rational,
    pochhammer,
)


@pytest.mark.parametrize("c, k, expected", [(2, 1, 2), (2, 3, 0), (5, -1, 0), (0, 0, 1), (10, 10, 1), (30, 15, 155117520)])
def test_binomial_values(c, k, expected):
    assert binomial(c, k) == expected


def test_binomial_negative_upper_is_error():
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_binomial_matches_pascal_triangle():
    row = [1]
    for c in range(40):
        assert [binomial(c, k) for k in range(-2, c + 3)] == [0, 0] + row + [0, 0]
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]


@given(st.integers(0, 200), st.integers(-5, 205))
def test_binomial_symmetry_and_pascal(c, k):
    if 0 <= k <= c:
        assert binomial(c, k) == binomial(c, c - k)
    assert binomial(c, k - 1) + binomial(c, k) == binomial(c + 1, k)


@pytest.mark.parametrize("x, j, expected", [(Fraction(7, 2), 0, 1), (2, 3, 24), (-1, 3, 0), (Fraction(1, 2), 2, Fraction(3, 4))])
def test_pochhammer_values(x, j, expected):
    assert pochhammer(x, j) == expected


rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 100)


@given(rationals, st.integers(0, 8), st.integers(0, 8))
def test_pochhammer_splits(x, j, k):
    assert pochhammer(x, j) * pochhammer(x + j, k) == pochhammer(x, j + k)


def test_factorial_against_repeated_multiplication():
    acc = 1
    for k in range(0, 30):
        if k:
            acc *= k
        assert factorial(k) == acc
    assert factorial(11) == 39916800
    with pytest.raises(ValueError):
        factorial(-1)


@given(rationals, rationals)
def test_rationals_stay_reduced(a, b):
    for value in (a + b, a - b, a * b):
        assert gcd(value.numerator, value.denominator) == 1
        assert value.denominator > 0


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_prime_field_inverses(p):
    F = GF(p)
    for r in range(1, p):
        a = F(r)
        assert a * a.inverse() == F.one
        assert F.inv(a) * a == 1
    with pytest.raises(ZeroDivisionError):
        F(0).inverse()


def test_prime_field_rejects_composite_modulus():
    with pytest.raises(ValueError):
        GF(9)


def test_mixing_moduli_is_an_error():
    with pytest.raises(ValueError):
        GF(5)(2) + GF(7)(2)
    with pytest.raises(ValueError):
        GF(7)(GF(5)(1))


def test_prime_field_reduces_rationals_and_integers():
    F = GF(7)
    assert F(Fraction(1, 3)) == F(5)
    assert F(-1).value == 6
    assert F("7/3").value == 0
    with pytest.raises(ZeroDivisionError):
        F(Fraction(1, 7))
    assert F.characteristic == 7 and QQ.characteristic == 0 and ZZ.characteristic == 0


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50))
def test_ring_axioms_sampled(a, b, c):
    for dom in (ZZ, QQ, GF(13)):
        x, y, z = dom(a), dom(b), dom(c)
        assert (x + y) * z == x * z + y * z
        assert (x * y) * z == x * (y * z)
        assert x + (-x) == dom.zero
        if y != dom.zero:
            assert dom.exact_div(x * y, y) == x


def test_integer_exact_division_rejects_remainders():
    with pytest.raises(ArithmeticError):
        ZZ.exact_div(7, 2)


@pytest.mark.parametrize("text, value", [("-123", Fraction(-123)), ("7/3", Fraction(7, 3)), ("14/6", Fraction(7, 3)), ("+5", Fraction(5))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["1e3", "1.5", "", "3/", "/3", "1/2/3", "0x10"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


@given(rationals)
def test_rational_text_round_trip(q):
    assert parse_rational(format_rational(q)) == q


def test_integer_text():
    assert parse_integer("-123") == -123
    with pytest.raises(ValueError):
        parse_integer("7/3")


def test_primes_and_factorization():
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert factorize(13860) == {2: 2, 3: 2, 5: 1, 7: 1, 11: 1}
    assert factorize(-97) == {97: 1}
    assert isinstance(GF(3)(1), FpElement)
