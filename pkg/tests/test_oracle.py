import itertools
import random
from fractions import Fraction

import pytest

from subres.arith import GF, QQ
from subres.oracle import (
    check_sylvester_identity,
    principal_subresultant,
    subresultant_det,
    sylvester_double_sum,
)
from subres.polynomial import Polynomial, power_of_linear

x = Polynomial.gen(QQ)


def test_hand_examples():
    assert subresultant_det((x - 1) ** 2, x**2, 1) == 2 * x - 1
    assert subresultant_det((x - 1) ** 3, x**2, 1) == 3 * x - 1
    assert principal_subresultant((x - 1) ** 2, x**2, 1) == 2
    assert principal_subresultant((x - 1) ** 3, x**2, 1) == 3
    assert principal_subresultant((x - 1) ** 4, x**3, 2) == 6


def test_invalid_inputs():
    with pytest.raises(ValueError):
        subresultant_det(x**2, x**2, 2)
    with pytest.raises(ValueError):
        subresultant_det(Polynomial([3]), x**2, 0)
    with pytest.raises(ValueError):
        subresultant_det(x**2, Polynomial([0, 1], GF(5)), 0)


def test_poisson_formula_for_pure_powers():
    rng = random.Random(1)
    for m in range(1, 6):
        for n in range(1, 6):
            a, b = Fraction(rng.randint(-9, 9), rng.randint(1, 4)), Fraction(rng.randint(-9, 9), rng.randint(1, 4))
            res = subresultant_det(power_of_linear(a, m), power_of_linear(b, n), 0)
            assert res == Polynomial([(a - b) ** (m * n)])


def test_poisson_formula_square_free():
    rng = random.Random(2)
    for _ in range(30):
        A = rng.sample(range(-10, 11), rng.randint(1, 5))
        B = rng.sample(range(-10, 11), rng.randint(1, 5))
        f = Polynomial([1])
        for a in A:
            f = f * (x - a)
        g = Polynomial([1])
        for b in B:
            g = g * (x - b)
        expected = 1
        for a, b in itertools.product(A, B):
            expected *= a - b
        assert subresultant_det(f, g, 0) == expected


def _random_poly(rng, deg):
    return Polynomial([Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(deg)] + [rng.choice([-2, -1, 1, 3])])


def test_degree_bound_and_translation_covariance():
    rng = random.Random(3)
    for _ in range(60):
        m, n = rng.randint(1, 6), rng.randint(1, 6)
        f, g = _random_poly(rng, m), _random_poly(rng, n)
        a = Fraction(rng.randint(-7, 7), rng.randint(1, 5))
        for d in range(min(m, n)):
            s = subresultant_det(f, g, d)
            assert s.degree <= d
            assert s.shift(a) == subresultant_det(f.shift(a), g.shift(a), d)


def test_common_root_vanishing():
    for m in range(2, 7):
        for n in range(2, 7):
            for d in range(min(m, n)):
                a = Fraction(3, 2)
                assert subresultant_det(power_of_linear(a, m), power_of_linear(a, n), d) == Polynomial()


def test_last_subresultant_is_scaled_gcd():
    # gcd of degree d forces Sres_d to be a nonzero multiple of it
    f = (x - 1) * (x - 2) * (x + 3)
    g = (x - 1) * (x - 2) * (x - 5) * (x + 7)
    s = subresultant_det(f, g, 2)
    assert s.degree == 2
    assert (s % ((x - 1) * (x - 2))) == Polynomial()
    assert subresultant_det(f, g, 1) == Polynomial()


def test_sylvester_double_sum_examples():
    assert sylvester_double_sum([0, 1], [2, 3], 1, 0) == 4 * x - 6
    assert sylvester_double_sum([0, 1], [2, 3], 0, 0) == Polynomial([(0 - 2) * (0 - 3) * (1 - 2) * (1 - 3)])


def test_sylvester_double_sum_brute_force_enumeration():
    # the q = 1 sum written out term by term for A = {0, 1}, B = {2, 3}
    # B' = {2}: R(A, {3}) / R({2}, {3}) * (x - 2) = (0-3)(1-3)/(2-3) (x - 2) = -6(x - 2)
    # B' = {3}: R(A, {2}) / R({3}, {2}) * (x - 3) = (0-2)(1-2)/(3-2) (x - 3) = 2(x - 3)
    assert sylvester_double_sum([0, 1], [2, 3], 0, 1) == -6 * (x - 2) + 2 * (x - 3)
    assert check_sylvester_identity([0, 1], [2, 3], 0, 1).passed


def test_sylvester_identity_examples():
    report = check_sylvester_identity([0, 1], [2, 3], 1, 0)
    assert report.passed
    assert report.lhs == ["6", "-4"]
    assert check_sylvester_identity([4, -1, 7], [0, 2], 0, 0).passed


def test_sylvester_rejects_repeated_roots():
    with pytest.raises(ValueError):
        sylvester_double_sum([1, 1], [2, 3], 1, 0)
    with pytest.raises(ValueError):
        check_sylvester_identity([0, 1], [2, 3], 1, 1)


def test_sylvester_identity_random_sweep():
    rng = random.Random(4)
    for _ in range(50):
        A = rng.sample(range(-20, 21), rng.randint(1, 6))
        B = rng.sample(range(-20, 21), rng.randint(1, 6))
        d = rng.randrange(min(len(A), len(B)))
        p = rng.randint(0, d)
        assert check_sylvester_identity(A, B, p, d - p).passed


def test_sylvester_identity_over_prime_field():
    F = GF(101)
    assert check_sylvester_identity([0, 1, 5], [2, 3, 9, 4], 1, 1, F).passed
