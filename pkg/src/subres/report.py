"""Verification reports and canonical (decimal-string) serialization."""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .arith import FpElement, format_rational, parse_rational
from .polynomial import Polynomial

__all__ = ["VerificationReport", "serialize", "parse_value", "timed_compare"]


def serialize(value):
    """Canonical JSON-ready form: scalars become decimal strings, polynomials
    ascending coefficient lists, sequences lists."""
    if isinstance(value, bool):
        return value
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    if isinstance(value, FpElement):
        return str(value.value)
    if isinstance(value, Polynomial):
        return [serialize(c) for c in value.coeffs]
    if isinstance(value, (list, tuple)):
        return [serialize(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")


def parse_value(data, domain=None):
    """Inverse of :func:`serialize` for scalars and nested lists.

    Without a domain, scalars come back as ``int`` or ``Fraction``; with one,
    each scalar is passed through ``domain``.
    """
    if isinstance(data, list):
        return [parse_value(v, domain) for v in data]
    if isinstance(data, str):
        value = parse_rational(data)
        if domain is not None:
            return domain(value)
        return value.numerator if value.denominator == 1 else value
    raise TypeError(f"unexpected JSON value {data!r}")


@dataclass(frozen=True)
class VerificationReport:
    subject: str
    inputs: dict
    passed: bool
    lhs: object
    rhs: object
    elapsed_ms: float = field(default=0.0, compare=False)

    @classmethod
    def compare(cls, subject: str, inputs: dict, lhs, rhs, elapsed_ms: float = 0.0) -> VerificationReport:
        left, right = serialize(lhs), serialize(rhs)
        return cls(subject, dict(inputs), left == right, left, right, elapsed_ms)

    def to_dict(self) -> dict:
        out = asdict(self)
        out["pass"] = out.pop("passed")
        return out

    @classmethod
    def from_dict(cls, data: dict) -> VerificationReport:
        return cls(data["subject"], data["inputs"], data["pass"], data["lhs"], data["rhs"], data.get("elapsed_ms", 0.0))

    def __bool__(self):
        return self.passed


def timed_compare(subject: str, inputs: dict, compute):
    """Run ``compute() -> (lhs, rhs)`` and wrap the outcome in a report."""
    start = time.perf_counter()
    lhs, rhs = compute()
    elapsed = (time.perf_counter() - start) * 1000.0
    return VerificationReport.compare(subject, inputs, lhs, rhs, elapsed)
