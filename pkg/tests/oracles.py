"""Independent reference computations shared by the test modules."""

from subres.arith import GF
from subres.oracle import subresultant_det
from subres.polynomial import Polynomial, PolynomialRing, power_of_linear


def cofactor_det(rows):
    """Laplace expansion along the first row; independent of Bareiss."""
    if not rows:
        return 1
    total = 0
    for j, a in enumerate(rows[0]):
        if a:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += (-1) ** j * a * cofactor_det(minor)
    return total


def charp_symbolic_degree(m, n, d, p):
    """Degree in x of Sres_d((x - t)^m, x^n) computed over GF(p)[t]."""
    R = PolynomialRing(GF(p), "t")
    f = power_of_linear(R.gen(), m, R)
    g = Polynomial.gen(R) ** n
    return subresultant_det(f, g, d).degree
