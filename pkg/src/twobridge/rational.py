"""Exact rationals on the extended line Q u {1/0} and Farey-edge arithmetic."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

__all__ = [
    "Rational",
    "INFINITY",
    "farey_edge_det",
    "mediant",
    "is_farey_edge",
    "parse_rational",
    "parse_fraction_pair",
]


@dataclass(frozen=True, order=False)
class Rational:
    """A reduced fraction ``numerator/denominator`` with ``denominator >= 0``.

    ``1/0`` is the single point at infinity; ``0/0`` is rejected.
    """

    numerator: int
    denominator: int

    def __post_init__(self) -> None:
        p, q = int(self.numerator), int(self.denominator)
        if p == 0 and q == 0:
            raise ValueError("0/0 is not a rational")
        if q < 0:
            p, q = -p, -q
        if q == 0:
            p = 1
        else:
            g = gcd(p, q)
            p, q = p // g, q // g
        object.__setattr__(self, "numerator", p)
        object.__setattr__(self, "denominator", q)

    @classmethod
    def from_int(cls, n: int) -> Rational:
        return cls(n, 1)

    @classmethod
    def from_fraction(cls, f: Fraction) -> Rational:
        return cls(f.numerator, f.denominator)

    @property
    def is_infinite(self) -> bool:
        return self.denominator == 0

    def to_fraction(self) -> Fraction:
        if self.is_infinite:
            raise ZeroDivisionError("1/0 has no Fraction value")
        return Fraction(self.numerator, self.denominator)

    def __neg__(self) -> Rational:
        if self.is_infinite:
            return self
        return Rational(-self.numerator, self.denominator)

    def _key(self) -> tuple[int, int]:
        return self.numerator, self.denominator

    def __lt__(self, other: Rational) -> bool:
        # 1/0 sorts above every finite value
        if self.is_infinite:
            return False
        if other.is_infinite:
            return True
        return self.numerator * other.denominator < other.numerator * self.denominator

    def __le__(self, other: Rational) -> bool:
        return self == other or self < other

    def __gt__(self, other: Rational) -> bool:
        return other < self

    def __ge__(self, other: Rational) -> bool:
        return self == other or other < self

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"

    def __repr__(self) -> str:
        return f"Rational({self.numerator}, {self.denominator})"


INFINITY = Rational(1, 0)


def farey_edge_det(a: Rational, b: Rational) -> int:
    """Determinant of the directed edge ``a -> b``.

    The two points span a Farey edge exactly when the result is +1 or -1.
    """
    return a.numerator * b.denominator - b.numerator * a.denominator


def is_farey_edge(a: Rational, b: Rational) -> bool:
    return abs(farey_edge_det(a, b)) == 1


def mediant(a: Rational, b: Rational) -> Rational:
    """Third vertex ``(a+c)/(b+d)`` of the Farey triangle on the edge ``a, b``."""
    return Rational(a.numerator + b.numerator, a.denominator + b.denominator)


_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$", re.ASCII)


def parse_fraction_pair(text: str) -> tuple[int, int]:
    """Parse ``"p/q"`` or a bare integer into the unreduced pair ``(p, q)``."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"cannot parse rational from {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    return num, den


def parse_rational(text: str) -> Rational:
    """Parse ``"p/q"`` or a bare integer."""
    return Rational(*parse_fraction_pair(text))
