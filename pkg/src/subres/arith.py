"""Exact scalar arithmetic: integers, rationals, prime fields, combinatorial kernels.

Elements are plain Python values wherever possible (``int`` for ZZ,
``fractions.Fraction`` for QQ); prime-field residues get a small immutable
class. A *domain* object wraps each element type and supplies the operations
that operators alone cannot express (exact division, inversion, parsing,
characteristic).
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd

__all__ = [
    "Domain",
    "Integers",
    "Rationals",
    "PrimeField",
    "FpElement",
    "ZZ",
    "QQ",
    "GF",
    "binomial",
    "pochhammer",
    "factorial",
    "is_prime",
    "factorize",
    "parse_integer",
    "parse_rational",
    "format_rational",
]

_INT_RE = re.compile(r"[+-]?\d+")
_RAT_RE = re.compile(r"([+-]?\d+)(?:/(\d+))?")


def parse_integer(text: str) -> int:
    """Parse a plain decimal integer such as ``"-123"``."""
    s = text.strip()
    if not _INT_RE.fullmatch(s):
        raise ValueError(f"not a decimal integer: {text!r}")
    return int(s)


def parse_rational(text: str) -> Fraction:
    """Parse ``"7/3"`` or ``"-5"``. No exponents, no decimal points."""
    s = text.strip()
    match = _RAT_RE.fullmatch(s)
    if not match:
        raise ValueError(f"not a rational literal: {text!r}")
    num, den = match.groups()
    if den is not None and int(den) == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(value: Fraction | int) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def is_prime(p: int) -> bool:
    """Deterministic trial division; adequate for the moduli used here."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    k = 3
    while k * k <= p:
        if p % k == 0:
            return False
        k += 2
    return True


def factorize(value: int) -> dict[int, int]:
    """Prime factorization of a nonzero integer by trial division (sign dropped)."""
    if value == 0:
        raise ValueError("cannot factor zero")
    value = abs(value)
    factors: dict[int, int] = {}
    k = 2
    while k * k <= value:
        while value % k == 0:
            factors[k] = factors.get(k, 0) + 1
            value //= k
        k += 1 if k == 2 else 2
    if value > 1:
        factors[value] = factors.get(value, 0) + 1
    return factors


def factorial(k: int) -> int:
    if k < 0:
        raise ValueError(f"factorial of negative number {k}")
    result = 1
    for i in range(2, k + 1):
        result *= i
    return result


def binomial(c: int, k: int) -> int:
    """Binomial coefficient with ``binomial(c, k) = 0`` for ``k < 0`` or ``k > c``.

    Uses the multiplicative formula; each partial product is an exact
    binomial, so every division is exact.
    """
    if c < 0:
        raise ValueError(f"binomial upper argument must be >= 0, got {c}")
    if k < 0 or k > c:
        return 0
    k = min(k, c - k)
    result = 1
    for i in range(1, k + 1):
        result = result * (c - k + i) // i
    return result


def pochhammer(x, j: int):
    """Rising factorial ``x (x+1) ... (x+j-1)``; ``(x)_0 = 1``."""
    if j < 0:
        raise ValueError(f"Pochhammer index must be >= 0, got {j}")
    result = Fraction(1) if isinstance(x, Fraction) else 1
    for i in range(j):
        result *= x + i
    return result


class Domain:
    """Coefficient domain contract.

    Elements support ``+``, ``-``, ``*`` and ``==`` through Python operators;
    the domain object converts integers in, tests for zero, divides exactly and
    reports its characteristic.
    """

    characteristic: int = 0
    is_field: bool = False

    def __call__(self, value):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def is_zero(self, a) -> bool:
        return not a

    def exact_div(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        if not self.is_field:
            raise TypeError(f"{self} is not a field")
        return self.exact_div(self.one, a)

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, a) -> str:
        return str(a)

    def contains(self, a) -> bool:
        raise NotImplementedError


class Integers(Domain):
    characteristic = 0
    is_field = False

    def __call__(self, value) -> int:
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise ValueError(f"{value} is not an integer")
            return value.numerator
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"cannot convert {value!r} to an integer")
        return value

    def exact_div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError("exact division by zero")
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError(f"{a} is not divisible by {b}")
        return q

    def parse(self, text: str) -> int:
        return parse_integer(text)

    def contains(self, a) -> bool:
        return isinstance(a, int) and not isinstance(a, bool)

    def __eq__(self, other):
        return isinstance(other, Integers)

    def __hash__(self):
        return hash("ZZ")

    def __repr__(self):
        return "ZZ"


class Rationals(Domain):
    characteristic = 0
    is_field = True

    def __call__(self, value) -> Fraction:
        if isinstance(value, str):
            return parse_rational(value)
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise TypeError(f"cannot convert {value!r} to a rational")
        return Fraction(value)

    def exact_div(self, a, b) -> Fraction:
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return Fraction(a) / b

    def parse(self, text: str) -> Fraction:
        return parse_rational(text)

    def format(self, a) -> str:
        return format_rational(a)

    def contains(self, a) -> bool:
        return isinstance(a, Fraction)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField(Domain):
    """GF(p). The modulus lives on the domain; elements point back to it."""

    is_field = True

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError(f"modulus must be prime, got {p!r}")
        self.p = p
        self.characteristic = p

    def __call__(self, value) -> FpElement:
        if isinstance(value, FpElement):
            if value.p != self.p:
                raise ValueError(f"element of GF({value.p}) used in GF({self.p})")
            return value
        if isinstance(value, str):
            value = parse_rational(value)
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator {value.denominator} vanishes mod {self.p}")
            return FpElement(value.numerator * pow(den, -1, self.p), self)
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"cannot convert {value!r} to GF({self.p})")
        return FpElement(value, self)

    def exact_div(self, a, b) -> FpElement:
        return self(a) / self(b)

    def parse(self, text: str) -> FpElement:
        return self(parse_rational(text))

    def format(self, a) -> str:
        return str(self(a).value)

    def contains(self, a) -> bool:
        return isinstance(a, FpElement) and a.p == self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class FpElement:
    __slots__ = ("value", "field")

    def __init__(self, value: int, field: PrimeField):
        self.value = value % field.p
        self.field = field

    @property
    def p(self) -> int:
        return self.field.p

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.field.p != self.field.p:
                raise ValueError(f"cannot mix GF({self.p}) and GF({other.p})")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(self.value + o, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(self.value - o, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(o - self.value, self.field)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(self.value * o, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElement(-self.value, self.field)

    def __pos__(self):
        return self

    def inverse(self) -> FpElement:
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return FpElement(pow(self.value, -1, self.p), self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * FpElement(o, self.field).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(o, self.field) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return FpElement(pow(self.value, k, self.p), self.field)

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return (self.value - o) % self.p == 0

    def __hash__(self):
        return hash((self.value, self.p))

    def __int__(self):
        return self.value

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"FpElement({self.value}, p={self.p})"


ZZ = Integers()
QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)
