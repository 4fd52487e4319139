"""Integer Laurent polynomials in one variable ``t``, compared up to units ``+-t^k``."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import zip_longest
from typing import Iterable

__all__ = ["LaurentPoly", "laurent_divides", "poly_divmod_exact"]


def _trim(coeffs: list[int], low: int) -> tuple[tuple[int, ...], int]:
    lo, hi = 0, len(coeffs)
    while lo < hi and coeffs[lo] == 0:
        lo += 1
    while hi > lo and coeffs[hi - 1] == 0:
        hi -= 1
    if lo == hi:
        return (), 0
    return tuple(coeffs[lo:hi]), low + lo


@dataclass(frozen=True)
class LaurentPoly:
    """``sum(coefficients[i] * t**(min_exponent + i))`` with no zero end terms."""

    coefficients: tuple[int, ...]
    min_exponent: int = 0

    def __init__(self, coefficients: Iterable[int] = (), min_exponent: int = 0) -> None:
        coeffs, low = _trim([int(c) for c in coefficients], int(min_exponent))
        object.__setattr__(self, "coefficients", coeffs)
        object.__setattr__(self, "min_exponent", low)

    @classmethod
    def monomial(cls, coeff: int, exponent: int) -> LaurentPoly:
        return cls((coeff,), exponent)

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> LaurentPoly:
        """Build from ``{exponent: coefficient}``."""
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls()
        low = min(terms)
        coeffs = [0] * (max(terms) - low + 1)
        for e, c in terms.items():
            coeffs[e - low] += c
        return cls(coeffs, low)

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def span(self) -> int:
        """Difference between the highest and lowest exponent."""
        return len(self.coefficients) - 1 if self.coefficients else -1

    @property
    def max_exponent(self) -> int:
        return self.min_exponent + self.span

    def terms(self) -> dict[int, int]:
        return {self.min_exponent + i: c for i, c in enumerate(self.coefficients) if c}

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        low = min(self.min_exponent, other.min_exponent)
        a = [0] * (self.min_exponent - low) + list(self.coefficients)
        b = [0] * (other.min_exponent - low) + list(other.coefficients)
        return LaurentPoly([x + y for x, y in zip_longest(a, b, fillvalue=0)], low)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly([-c for c in self.coefficients], self.min_exponent)

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly([c * other for c in self.coefficients], self.min_exponent)
        if self.is_zero or other.is_zero:
            return LaurentPoly()
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return LaurentPoly(out, self.min_exponent + other.min_exponent)

    __rmul__ = __mul__

    def __call__(self, t: int) -> int:
        """Value at an integer unit ``t`` (``+-1``); general integers need ``min_exponent >= 0``."""
        if self.min_exponent < 0 and t not in (1, -1):
            raise ValueError("negative exponents need a unit argument")
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * t + c
        if t == -1 and self.min_exponent % 2:
            acc = -acc
        elif t not in (1, -1):
            acc *= t**self.min_exponent
        return acc

    def normalized(self) -> LaurentPoly:
        """Unit representative: lowest exponent 0, positive leading coefficient."""
        if self.is_zero:
            return self
        sign = 1 if self.coefficients[-1] > 0 else -1
        return LaurentPoly([sign * c for c in self.coefficients], 0)

    def equals_up_to_units(self, other: LaurentPoly) -> bool:
        return self.normalized() == other.normalized()

    def is_symmetric(self) -> bool:
        """``p(t)`` equals ``p(1/t)`` up to units."""
        n = self.normalized().coefficients
        return n == n[::-1] or n == tuple(-c for c in n[::-1])

    def to_json(self) -> dict:
        return {"coefficients": list(self.coefficients), "min_exponent": self.min_exponent}

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for e, c in sorted(self.terms().items()):
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            parts.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def poly_divmod_exact(n: tuple[int, ...], d: tuple[int, ...]) -> tuple[int, ...] | None:
    """Quotient of ``n`` by ``d`` in ``Z[t]`` (ascending coefficients), or None
    when ``d`` does not divide ``n`` there."""
    if not d:
        raise ZeroDivisionError("division by the zero polynomial")
    if len(n) < len(d):
        return None if any(n) else ()
    rem = list(n)
    lead = d[-1]
    out = [0] * (len(n) - len(d) + 1)
    for k in range(len(out) - 1, -1, -1):
        c, r = divmod(rem[k + len(d) - 1], lead)
        if r:
            return None
        out[k] = c
        if c:
            for i, di in enumerate(d):
                rem[k + i] -= c * di
    return tuple(out) if not any(rem) else None


def laurent_divides(d: LaurentPoly, n: LaurentPoly) -> bool:
    """True iff ``n = d * c`` for an integer Laurent polynomial ``c``."""
    if d.is_zero:
        return n.is_zero
    if n.is_zero:
        return True
    return poly_divmod_exact(n.normalized().coefficients, d.normalized().coefficients) is not None
