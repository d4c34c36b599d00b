"""Dense univariate polynomials over an exact coefficient domain.

A :class:`PolynomialRing` is itself a :class:`~subres.arith.Domain`, so
polynomials can carry polynomial coefficients (e.g. ``GF(p)[t][x]``).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arith import QQ, Domain, binomial

__all__ = [
    "Polynomial",
    "PolynomialRing",
    "BernsteinSubresultant",
    "power_of_linear",
    "shift",
    "bernstein_expand",
]


class Polynomial:
    """Immutable dense polynomial; ``coeffs`` ascending, no trailing zeros."""

    __slots__ = ("coeffs", "domain", "var")

    def __init__(self, coeffs=(), domain: Domain = QQ, var: str = "x"):
        cs = [domain(c) for c in coeffs]
        while cs and domain.is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)
        self.domain = domain
        self.var = var

    @classmethod
    def _raw(cls, coeffs, domain, var):
        # coefficients already in the domain; only trimming needed
        cs = list(coeffs)
        while cs and domain.is_zero(cs[-1]):
            cs.pop()
        poly = cls.__new__(cls)
        poly.coeffs = tuple(cs)
        poly.domain = domain
        poly.var = var
        return poly

    @classmethod
    def constant(cls, c, domain: Domain = QQ, var: str = "x") -> Polynomial:
        return cls((c,), domain, var)

    @classmethod
    def gen(cls, domain: Domain = QQ, var: str = "x") -> Polynomial:
        return cls((0, 1), domain, var)

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self):
        return self.coeffs[-1] if self.coeffs else self.domain.zero

    def coeff(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.domain.zero

    def _lift(self, other) -> Polynomial:
        if self.domain.contains(other):
            return Polynomial._raw((other,), self.domain, self.var)
        if isinstance(other, Polynomial):
            if other.domain != self.domain:
                raise ValueError(f"domain mismatch: {self.domain} vs {other.domain}")
            return other
        try:
            c = self.domain(other)
        except (TypeError, ValueError):
            return NotImplemented
        return Polynomial._raw((c,), self.domain, self.var)

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial._raw(out, self.domain, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw([-c for c in self.coeffs], self.domain, self.var)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return Polynomial._raw((), self.domain, self.var)
        zero = self.domain.zero
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if self.domain.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial._raw(out, self.domain, self.var)

    __rmul__ = __mul__

    def scale(self, c) -> Polynomial:
        c = self.domain(c)
        return Polynomial._raw([c * a for a in self.coeffs], self.domain, self.var)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial._raw((self.domain.one,), self.domain, self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __divmod__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        dom = self.domain
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Polynomial._raw((), dom, self.var), self
        lead = other.coeffs[-1]
        quot = [dom.zero] * (dq + 1)
        for k in range(dq, -1, -1):
            top = rem[k + len(other.coeffs) - 1]
            if dom.is_zero(top):
                continue
            factor = dom.exact_div(top, lead)
            quot[k] = factor
            for i, b in enumerate(other.coeffs):
                rem[k + i] = rem[k + i] - factor * b
        return Polynomial._raw(quot, dom, self.var), Polynomial._raw(rem, dom, self.var)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, point):
        """Horner evaluation."""
        result = self.domain.zero
        for c in reversed(self.coeffs):
            result = result * point + c
        return result

    def shift(self, a) -> Polynomial:
        """Return ``f(x + a)``."""
        a = self.domain(a)
        result = Polynomial._raw((), self.domain, self.var)
        linear = Polynomial._raw((a, self.domain.one), self.domain, self.var)
        for c in reversed(self.coeffs):
            result = result * linear + c
        return result

    def map_coeffs(self, func, domain: Domain) -> Polynomial:
        return Polynomial([func(c) for c in self.coeffs], domain, self.var)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.domain == other.domain and self.coeffs == other.coeffs
        lifted = self._lift(other)
        if lifted is NotImplemented:
            return NotImplemented
        return self.coeffs == lifted.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.domain))

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Polynomial({self.to_text()!r}, domain={self.domain!r})"

    def to_text(self) -> str:
        """Descending conventional notation, e.g. ``6*x^2 - 4*x + 1``."""
        parts: list[str] = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if self.domain.is_zero(c):
                continue
            s = self.domain.format(c)
            negative = s.startswith("-") and " " not in s
            if negative:
                s = s[1:]
            if " " in s:
                s = f"({s})"
            mono = "" if k == 0 else self.var if k == 1 else f"{self.var}^{k}"
            if not mono:
                body = s
            elif s == "1":
                body = mono
            else:
                body = f"{s}*{mono}"
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(parts) if parts else "0"


class PolynomialRing(Domain):
    """``base[var]`` as a coefficient domain (an integral domain when base is a field)."""

    is_field = False

    def __init__(self, base: Domain, var: str = "t"):
        self.base = base
        self.var = var
        self.characteristic = base.characteristic

    def __call__(self, value) -> Polynomial:
        if isinstance(value, Polynomial):
            if value.domain != self.base:
                raise ValueError(f"polynomial over {value.domain} used in {self}")
            return value
        return Polynomial._raw((self.base(value),), self.base, self.var)

    def gen(self) -> Polynomial:
        return Polynomial((0, 1), self.base, self.var)

    def is_zero(self, a) -> bool:
        return not a

    def exact_div(self, a, b) -> Polynomial:
        q, r = divmod(self(a), self(b))
        if r:
            raise ArithmeticError(f"{a} is not divisible by {b}")
        return q

    def format(self, a) -> str:
        return self(a).to_text()

    def contains(self, a) -> bool:
        return isinstance(a, Polynomial) and a.domain == self.base

    def __eq__(self, other):
        return isinstance(other, PolynomialRing) and other.base == self.base and other.var == self.var

    def __hash__(self):
        return hash(("poly", self.base, self.var))

    def __repr__(self):
        return f"{self.base!r}[{self.var}]"


def power_of_linear(a, m: int, domain: Domain = QQ, var: str = "x") -> Polynomial:
    """``(x - a)^m`` by binomial expansion."""
    if m < 0:
        raise ValueError("exponent must be >= 0")
    neg_a = -domain(a)
    coeffs = [domain(binomial(m, k)) * neg_a ** (m - k) for k in range(m + 1)]
    return Polynomial(coeffs, domain, var)


def shift(f: Polynomial, a) -> Polynomial:
    return f.shift(a)


@dataclass(frozen=True)
class BernsteinSubresultant:
    """``sign * (alpha - beta)^exponent * sum_j q[j] (x-alpha)^j (x-beta)^(d-j)``."""

    m: int
    n: int
    d: int
    alpha: object
    beta: object
    sign: int
    exponent: int
    q: tuple[int, ...]
    domain: Domain = field(default=QQ, compare=True)

    def __post_init__(self):
        if len(self.q) != self.d + 1:
            raise ValueError(f"expected {self.d + 1} Bernstein coefficients, got {len(self.q)}")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.exponent != (self.m - self.d) * (self.n - self.d):
            raise ValueError("exponent must equal (m-d)(n-d)")

    @property
    def c(self) -> int:
        return self.m + self.n - 2 * self.d - 1


def bernstein_expand(B: BernsteinSubresultant) -> Polynomial:
    """Monomial-basis form of a Bernstein-form subresultant.

    Integer coefficients ``q_j`` enter the domain through ``domain(q_j)``, i.e.
    reduction mod p in positive characteristic.
    """
    dom = B.domain
    alpha, beta = dom(B.alpha), dom(B.beta)
    total = Polynomial((), dom)
    for j, qj in enumerate(B.q):
        if not qj:
            continue
        term = power_of_linear(alpha, j, dom) * power_of_linear(beta, B.d - j, dom)
        total = total + term.scale(dom(qj))
    prefactor = dom(B.sign) * (alpha - beta) ** B.exponent
    return total.scale(prefactor)
