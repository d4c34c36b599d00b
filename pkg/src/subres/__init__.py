"""Exact subresultants of two pure powers (x - alpha)^m and (x - beta)^n."""

from .arith import GF, QQ, ZZ, binomial, factorial, pochhammer
from .closed_form import (
    charp_degree,
    hd_cofactors,
    psres_closed,
    q0_closed,
    qj_closed,
    subresultant_closed,
)
from .linalg import ExactMatrix, HankelSpec, bareiss_det, hankel_matrix, maximal_minors
from .oracle import principal_subresultant, subresultant_det, sylvester_double_sum
from .polynomial import BernsteinSubresultant, Polynomial, PolynomialRing, bernstein_expand, power_of_linear
from .report import VerificationReport

__version__ = "0.1.0"
