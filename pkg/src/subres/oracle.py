"""Ground truth: subresultants straight from their determinantal definition.

The order-d subresultant of f (degree m) and g (degree n) is the determinant
of the (m+n-2d)-square matrix whose rows are x^(n-d-1) f, ..., f,
x^(m-d-1) g, ..., g; the first m+n-2d-1 columns hold the coefficients of
x^(m+n-d-1), ..., x^(d+1) and the last column holds the row polynomial
itself. Expanding along the last column, the coefficient of x^k is the
determinant with that column replaced by the x^k coefficients.
"""

from __future__ import annotations

from itertools import combinations

from .arith import QQ, Domain, binomial
from .linalg import ExactMatrix, bareiss_det
from .polynomial import Polynomial
from .report import VerificationReport, timed_compare

__all__ = [
    "subresultant_det",
    "principal_subresultant",
    "sylvester_double_sum",
    "check_sylvester_identity",
]


def _check_input(f: Polynomial, g: Polynomial, d: int) -> tuple[int, int]:
    if f.domain != g.domain:
        raise ValueError(f"domain mismatch: {f.domain} vs {g.domain}")
    m, n = f.degree, g.degree
    if m < 1 or n < 1:
        raise ValueError(f"need deg f >= 1 and deg g >= 1, got {m} and {n}")
    if not 0 <= d < min(m, n):
        raise ValueError(f"need 0 <= d < min(deg f, deg g) = {min(m, n)}, got d = {d}")
    return m, n


def _rows(f: Polynomial, g: Polynomial, d: int) -> list[tuple[Polynomial, int]]:
    # (polynomial, shift) pairs: x^shift * poly, top to bottom
    m, n = f.degree, g.degree
    return [(f, n - d - 1 - i) for i in range(n - d)] + [(g, m - d - 1 - i) for i in range(m - d)]


def subresultant_det(f: Polynomial, g: Polynomial, d: int) -> Polynomial:
    """Order-d subresultant as d+1 scalar determinants of size m+n-2d."""
    m, n = _check_input(f, g, d)
    dom = f.domain
    size = m + n - 2 * d
    top = m + n - d - 1
    rows = _rows(f, g, d)
    fixed = [[poly.coeff(top - col - s) for col in range(size - 1)] for poly, s in rows]
    coeffs = []
    for k in range(d + 1):
        mat = [r + [poly.coeff(k - s)] for r, (poly, s) in zip(fixed, rows)]
        entries = tuple(x for r in mat for x in r)
        coeffs.append(bareiss_det(ExactMatrix(size, size, entries, dom)))
    return Polynomial(coeffs, dom, f.var)


def principal_subresultant(f: Polynomial, g: Polynomial, d: int):
    """Coefficient of x^d in the order-d subresultant (may be zero)."""
    return subresultant_det(f, g, d).coeff(d)


def _distinct(roots, dom: Domain, label: str) -> list:
    roots = [dom(r) for r in roots]
    for i in range(len(roots)):
        for j in range(i):
            if roots[i] == roots[j]:
                raise ValueError(f"repeated root {roots[i]} in {label}")
    return roots


def _cross(dom: Domain, Y, Z):
    prod = dom.one
    for y in Y:
        for z in Z:
            prod = prod * (y - z)
    return prod


def sylvester_double_sum(A, B, p: int, q: int, domain: Domain = QQ) -> Polynomial:
    """Sylvester's double sum over subsets A' of A (size p) and B' of B (size q)."""
    A = _distinct(A, domain, "A")
    B = _distinct(B, domain, "B")
    if not (0 <= p <= len(A) and 0 <= q <= len(B)):
        raise ValueError(f"need 0 <= p <= {len(A)} and 0 <= q <= {len(B)}")
    x = Polynomial.gen(domain)
    total = Polynomial((), domain)
    for ia in combinations(range(len(A)), p):
        A1 = [A[i] for i in ia]
        A2 = [A[i] for i in range(len(A)) if i not in ia]
        den_a = _cross(domain, A1, A2)
        for ib in combinations(range(len(B)), q):
            B1 = [B[i] for i in ib]
            B2 = [B[i] for i in range(len(B)) if i not in ib]
            num = _cross(domain, A1, B1) * _cross(domain, A2, B2)
            weight = domain.exact_div(num, den_a * _cross(domain, B1, B2))
            if domain.is_zero(weight):
                continue
            term = Polynomial((domain.one,), domain)
            for r in A1 + B1:
                term = term * (x - r)
            total = total + term.scale(weight)
    return total


def check_sylvester_identity(A, B, p: int, q: int, domain: Domain = QQ) -> VerificationReport:
    """Compare binomial(d, p) Sres_d(f, g) with (-1)^(p(m-d)) Syl_{p,q}(A, B), d = p + q."""
    m, n, d = len(A), len(B), p + q
    if d >= min(m, n):
        raise ValueError(f"need p + q < min(|A|, |B|) = {min(m, n)}")

    def compute():
        x = Polynomial.gen(domain)
        f = Polynomial((domain.one,), domain)
        for a in A:
            f = f * (x - domain(a))
        g = Polynomial((domain.one,), domain)
        for b in B:
            g = g * (x - domain(b))
        lhs = subresultant_det(f, g, d).scale(binomial(d, p))
        rhs = sylvester_double_sum(A, B, p, q, domain)
        if (p * (m - d)) % 2:
            rhs = -rhs
        return lhs, rhs

    inputs = {"A": [domain.format(domain(a)) for a in A], "B": [domain.format(domain(b)) for b in B], "p": p, "q": q}
    return timed_compare("sylvester-identity", inputs, compute)
