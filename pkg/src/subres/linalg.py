"""Exact dense matrices, fraction-free determinants, binomial Hankel minors."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .arith import QQ, ZZ, Domain, Rationals, binomial

__all__ = ["ExactMatrix", "HankelSpec", "bareiss_det", "hankel_matrix", "maximal_minors"]


@dataclass(frozen=True)
class ExactMatrix:
    rows: int
    cols: int
    entries: tuple
    domain: Domain = ZZ

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be >= 0")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries")

    @classmethod
    def from_rows(cls, rows, domain: Domain = ZZ, cols: int | None = None) -> ExactMatrix:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else (cols or 0)
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        entries = tuple(domain(x) for r in rows for x in r)
        return cls(len(rows), ncols, entries, domain)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def delete_column(self, j: int) -> ExactMatrix:
        if not 0 <= j < self.cols:
            raise IndexError(j)
        kept = [[x for k, x in enumerate(self.row(i)) if k != j] for i in range(self.rows)]
        return ExactMatrix(self.rows, self.cols - 1, tuple(x for r in kept for x in r), self.domain)

    def matvec(self, vector) -> list:
        if len(vector) != self.cols:
            raise ValueError("dimension mismatch")
        out = []
        for i in range(self.rows):
            acc = self.domain.zero
            for a, v in zip(self.row(i), vector):
                acc = acc + a * v
            out.append(acc)
        return out


@dataclass(frozen=True)
class HankelSpec:
    """Parameters of H(m, n, d); also admits d = min(m, n) when m != n."""

    m: int
    n: int
    d: int

    def __post_init__(self):
        m, n, d = self.m, self.n, self.d
        if min(m, n) < 1 or d < 0:
            raise ValueError(f"invalid (m, n, d) = ({m}, {n}, {d})")
        if not (d < min(m, n) or (d == min(m, n) and m != n)):
            raise ValueError(f"need 0 <= d < min(m, n), or d = min(m, n) with m != n; got ({m}, {n}, {d})")

    @property
    def c(self) -> int:
        return self.m + self.n - 2 * self.d - 1


def bareiss_det(M: ExactMatrix):
    """Fraction-free determinant over an integral domain.

    Zero pivots are handled by swapping in a lower row with a nonzero entry in
    the pivot column (sign flipped per swap). Over QQ rows are scaled to
    integers first so elimination runs on ``int``.
    """
    if M.rows != M.cols:
        raise ValueError(f"determinant of non-square {M.rows}x{M.cols} matrix")
    size = M.rows
    dom = M.domain
    if size == 0:
        return dom.one
    rows = M.to_rows()
    if isinstance(dom, Rationals):
        scale = 1
        int_rows = []
        for r in rows:
            den = lcm(*(Fraction(x).denominator for x in r))
            scale *= den
            int_rows.append([(Fraction(x) * den).numerator for x in r])
        return Fraction(_bareiss(int_rows, ZZ), scale)
    return _bareiss(rows, dom)


def _bareiss(a: list[list], dom: Domain):
    size = len(a)
    negate = False
    prev = dom.one
    for k in range(size - 1):
        if dom.is_zero(a[k][k]):
            for i in range(k + 1, size):
                if not dom.is_zero(a[i][k]):
                    a[k], a[i] = a[i], a[k]
                    negate = not negate
                    break
            else:
                return dom.zero
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, size):
            row_i = a[i]
            lead = row_i[k]
            if dom.is_zero(lead):
                if pivot != prev:
                    for j in range(k + 1, size):
                        row_i[j] = dom.exact_div(row_i[j] * pivot, prev)
            else:
                for j in range(k + 1, size):
                    row_i[j] = dom.exact_div(row_i[j] * pivot - lead * row_k[j], prev)
        prev = pivot
    det = a[size - 1][size - 1]
    return -det if negate else det


def hankel_matrix(spec: HankelSpec) -> ExactMatrix:
    """d x (d+1) integer matrix with entry (i, j) = binomial(c, m - i - j), 1 <= i <= d."""
    m, d, c = spec.m, spec.d, spec.c
    rows = [[binomial(c, m - i - j) for j in range(d + 1)] for i in range(1, d + 1)]
    return ExactMatrix(d, d + 1, tuple(x for r in rows for x in r), ZZ)


def maximal_minors(spec: HankelSpec) -> list[int]:
    """``[q_0, ..., q_d]``: q_j is the determinant of H with column j removed."""
    H = hankel_matrix(spec)
    return [bareiss_det(H.delete_column(j)) for j in range(spec.d + 1)]
