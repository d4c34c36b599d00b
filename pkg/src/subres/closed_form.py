"""Closed formulas for subresultants of (x - alpha)^m and (x - beta)^n.

Factorial quotients are always evaluated over QQ and checked to be integral;
integers reach a prime field only afterwards, through ``domain(int)``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from .arith import QQ, Domain, binomial, factorial, is_prime, pochhammer
from .linalg import ExactMatrix, HankelSpec, bareiss_det, maximal_minors
from .polynomial import BernsteinSubresultant, Polynomial, power_of_linear
from .report import VerificationReport, timed_compare

log = logging.getLogger(__name__)

__all__ = [
    "PoleError",
    "CofactorPair",
    "CharPDegreeReport",
    "q0_closed",
    "qj_closed",
    "subresultant_closed",
    "psres_factor",
    "psres_closed",
    "ostrowski_matrix",
    "ostrowski_product",
    "ostrowski_det",
    "pfaff_saalschutz",
    "binomial_identity_check",
    "hd_polynomial",
    "hd_cofactors",
    "sum_q_identity",
    "charp_degree",
]


class PoleError(ZeroDivisionError):
    """A specialization hits a vanishing denominator."""


def _check_mnd(m: int, n: int, d: int) -> None:
    if min(m, n) < 1 or not 0 <= d < min(m, n):
        raise ValueError(f"need m, n >= 1 and 0 <= d < min(m, n); got ({m}, {n}, {d})")


def _integral(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"{what} evaluated to non-integer {value}")
    return value.numerator


def _sign_d(d: int) -> int:
    return -1 if binomial(d, 2) % 2 else 1


def q0_closed(m: int, n: int, d: int) -> int:
    """First maximal minor of H(m, n, d) as a product of factorial quotients."""
    _check_mnd(m, n, d)
    c = m + n - 2 * d - 1
    prod = Fraction(1)
    for i in range(1, d + 1):
        prod *= Fraction(factorial(i - 1) * factorial(c + i - 1), factorial(m - i - 1) * factorial(n - i))
    return _sign_d(d) * _integral(prod, f"q_0({m}, {n}, {d})")


def qj_closed(m: int, n: int, d: int) -> list[int]:
    """All maximal minors ``[q_0, ..., q_d]`` via ratios to q_0."""
    q0 = q0_closed(m, n, d)
    out = [q0]
    for j in range(1, d + 1):
        ratio = Fraction(binomial(d, j) * binomial(n - d + j - 1, j), binomial(m - 1, j))
        out.append(_integral(ratio * q0, f"q_{j}({m}, {n}, {d})"))
    return out


def subresultant_closed(m: int, n: int, d: int, alpha, beta, domain: Domain = QQ) -> BernsteinSubresultant:
    q = tuple(qj_closed(m, n, d))
    return BernsteinSubresultant(
        m=m, n=n, d=d,
        alpha=domain(alpha), beta=domain(beta),
        sign=_sign_d(d),
        exponent=(m - d) * (n - d),
        q=q,
        domain=domain,
    )


def psres_factor(m: int, n: int, d: int) -> int:
    """Integer factor prod_{i=1}^d (i-1)! (c+i)! / ((m-i)! (n-i)!)."""
    _check_mnd(m, n, d)
    c = m + n - 2 * d - 1
    prod = Fraction(1)
    for i in range(1, d + 1):
        prod *= Fraction(factorial(i - 1) * factorial(c + i), factorial(m - i) * factorial(n - i))
    return _integral(prod, f"principal subresultant factor of ({m}, {n}, {d})")


def psres_closed(m: int, n: int, d: int, alpha, beta, domain: Domain = QQ):
    """Leading (x^d) coefficient of the order-d subresultant."""
    diff = domain(alpha) - domain(beta)
    return domain(psres_factor(m, n, d)) * diff ** ((m - d) * (n - d))


def ostrowski_matrix(l: int, a) -> ExactMatrix:
    """(k+1)-square matrix with entry (i, j) = binomial(l, a_i - j)."""
    a = list(a)
    if l < 0 or not a or any(x < 0 for x in a):
        raise ValueError("need l >= 0 and a nonempty sequence of naturals")
    return ExactMatrix.from_rows([[binomial(l, ai - j) for j in range(len(a))] for ai in a])


def ostrowski_product(l: int, a) -> Fraction | None:
    """Closed-form value of the Ostrowski determinant, or None if some
    l + k - a_i is negative (the product then has a negative factorial)."""
    a = list(a)
    k = len(a) - 1
    if l < 0 or k < 0 or any(x < 0 for x in a):
        raise ValueError("need l >= 0 and a nonempty sequence of naturals")
    if any(l + k - ai < 0 for ai in a):
        return None
    num = factorial(l) ** (k + 1)
    for i in range(1, k + 1):
        num *= (l + i) ** (k + 1 - i)
    for i in range(k + 1):
        for i2 in range(i + 1, k + 1):
            num *= a[i2] - a[i]
    den = 1
    for ai in a:
        den *= factorial(ai) * factorial(l + k - ai)
    return Fraction(num, den)


def ostrowski_det(l: int, a) -> int:
    closed = ostrowski_product(l, a)
    if closed is None:
        log.warning("Ostrowski product undefined for l=%d, a=%s; using the matrix determinant", l, list(a))
        return bareiss_det(ostrowski_matrix(l, a))
    return _integral(closed, f"Ostrowski product for l={l}, a={list(a)}")


def pfaff_saalschutz(k: int, x, y, z) -> tuple[Fraction, Fraction]:
    """Both sides of the Pfaff-Saalschutz summation, evaluated exactly.

    Raises PoleError naming the first vanishing denominator factor.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    x, y, z = Fraction(x), Fraction(y), Fraction(z)
    w = 1 + x + y - z - k
    for name, base in (("z", z), ("1+x+y-z-k", w), ("z-x-y", z - x - y)):
        for i in range(k):
            if base + i == 0:
                raise PoleError(f"pole: ({name})_{k} has vanishing factor ({name})+{i} = 0")
    lhs = Fraction(0)
    for j in range(k + 1):
        lhs += (pochhammer(x, j) * pochhammer(y, j) * pochhammer(Fraction(-k), j)
                / (pochhammer(z, j) * pochhammer(w, j) * factorial(j)))
    rhs = pochhammer(z - x, k) * pochhammer(z - y, k) / (pochhammer(z, k) * pochhammer(z - x - y, k))
    return lhs, rhs


def _kernel_ratio(m: int, n: int, d: int, j: int) -> Fraction:
    return Fraction(binomial(d, j) * binomial(n - d + j - 1, j), binomial(m - 1, j))


def binomial_identity_check(m: int, n: int, d: int, i: int) -> VerificationReport:
    """Alternating binomial sum against its hypergeometric closed form, for row index i."""
    if not 0 < d < min(m, n):
        raise ValueError(f"need 0 < d < min(m, n); got ({m}, {n}, {d})")
    if i < 1:
        raise ValueError("i must be >= 1")
    c = m + n - 2 * d - 1

    def compute():
        lhs = sum((binomial(c, m - j - i) * (-1) ** j * _kernel_ratio(m, n, d, j) for j in range(d + 1)),
                  Fraction(0))
        rhs = Fraction(binomial(i - 1, d) * binomial(m + n - d - 1, m - i), binomial(m - 1, d))
        return lhs, rhs

    return timed_compare("binomial-kernel", {"m": m, "n": n, "d": d, "i": i}, compute)


@dataclass(frozen=True)
class CofactorPair:
    F: Polynomial
    G: Polynomial


def hd_polynomial(m: int, n: int, d: int, alpha, beta, domain: Domain = QQ) -> Polynomial:
    """``(alpha-beta)^c * sum_j q_j (x-alpha)^j (x-beta)^(d-j)``."""
    _check_mnd(m, n, d)
    a, b = domain(alpha), domain(beta)
    total = Polynomial((), domain)
    for j, qj in enumerate(qj_closed(m, n, d)):
        total = total + (power_of_linear(a, j, domain) * power_of_linear(b, d - j, domain)).scale(qj)
    return total.scale((a - b) ** (m + n - 2 * d - 1))


def hd_cofactors(m: int, n: int, d: int, alpha, beta, domain: Domain = QQ) -> CofactorPair:
    """F, G with F (x-alpha)^m + G (x-beta)^n equal to the polynomial from
    :func:`hd_polynomial`, deg F < n-d, deg G < m-d.

    Expands (alpha-beta)^c = sum_k (-1)^k C(c,k) (x-alpha)^k (x-beta)^(c-k)
    against each Bernstein term; terms divisible by (x-alpha)^m go to F,
    those divisible by (x-beta)^n go to G, and the rest cancel because the
    alternating q vector spans the kernel of H(m, n, d).
    """
    _check_mnd(m, n, d)
    c = m + n - 2 * d - 1
    q = qj_closed(m, n, d)
    a, b = domain(alpha), domain(beta)
    top = c + d
    pa = [power_of_linear(a, e, domain) for e in range(top + 1)]
    pb = [power_of_linear(b, e, domain) for e in range(top + 1)]
    F = Polynomial((), domain)
    G = Polynomial((), domain)
    for j, qj in enumerate(q):
        for k in range(c + 1):
            coeff = domain((-1) ** k * binomial(c, k) * qj)
            ea, eb = k + j, c - k + d - j
            if ea >= m:
                F = F + (pa[ea - m] * pb[eb]).scale(coeff)
            elif eb >= n:
                G = G + (pa[ea] * pb[eb - n]).scale(coeff)
    return CofactorPair(F, G)


def sum_q_identity(m: int, n: int, d: int) -> VerificationReport:
    """Compare q_0 + ... + q_d for (m, n, d) against q_0 for (m+1, n, d), both as Hankel minors."""
    if not 0 < d < min(m, n):
        raise ValueError(f"need 0 < d < min(m, n); got ({m}, {n}, {d})")

    def compute():
        return sum(maximal_minors(HankelSpec(m, n, d))), maximal_minors(HankelSpec(m + 1, n, d))[0]

    return timed_compare("sum-q", {"m": m, "n": n, "d": d}, compute)


@dataclass(frozen=True)
class CharPDegreeReport:
    m: int
    n: int
    d: int
    p: int
    degree: int
    s: tuple[int, ...]


def charp_degree(m: int, n: int, d: int, p: int) -> CharPDegreeReport:
    """Degree in x of Sres_d((x-alpha)^m, (x-beta)^n) over any field of
    characteristic p, for any alpha != beta (-1 for the zero polynomial).

    With beta = 0 and alpha = t, the x^(d-r) coefficient of
    sum_j q_j (x-t)^j x^(d-j) is (-t)^r s_r where s_r = sum_j C(j, r) q_j, and
    the prefactor is a unit, so the degree is d - min{r : p does not divide s_r}.
    """
    _check_mnd(m, n, d)
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    q = qj_closed(m, n, d)
    s = tuple(sum(binomial(j, r) * q[j] for j in range(r, d + 1)) for r in range(d + 1))
    degree = -1
    for r, sr in enumerate(s):
        if sr % p:
            degree = d - r
            break
    return CharPDegreeReport(m, n, d, p, degree, s)
