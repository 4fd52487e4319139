"""Continued fractions ``r+[b_1, ..., b_n]`` and their value-preserving rewrites.

The convention is ``r + 1/(b_1 + 1/(b_2 + ... + 1/b_n))``.  Evaluation uses the
product of ``[[b, 1], [1, 0]]`` matrices applied to ``(1, 0)``, which is total:
zero quotients and a vanishing final denominator (the value ``1/0``) are legal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from twobridge.rational import Rational

__all__ = [
    "ContinuedFraction",
    "eval_cf",
    "convergents",
    "rewrite_negate",
    "rewrite_drop_zero",
    "drop_all_zeros",
    "euclidean_cf",
    "cf_strongly_positive",
    "cf_reverse",
    "is_strongly_positive_vector",
    "parse_cf",
]


@dataclass(frozen=True)
class ContinuedFraction:
    integer_part: int
    quotients: tuple[int, ...]

    def __init__(self, integer_part: int = 0, quotients: Iterable[int] = ()) -> None:
        object.__setattr__(self, "integer_part", int(integer_part))
        object.__setattr__(self, "quotients", tuple(int(b) for b in quotients))

    @classmethod
    def of(cls, quotients: Iterable[int]) -> ContinuedFraction:
        """``0+[quotients]``."""
        return cls(0, quotients)

    def __len__(self) -> int:
        return len(self.quotients)

    @property
    def value(self) -> Rational:
        return eval_cf(self)

    @property
    def is_strongly_positive(self) -> bool:
        return self.integer_part == 0 and is_strongly_positive_vector(self.quotients)

    @property
    def is_even(self) -> bool:
        return all(b % 2 == 0 for b in self.quotients)

    def bracket(self) -> str:
        return "[" + ",".join(str(b) for b in self.quotients) + "]"

    def __str__(self) -> str:
        return f"{self.integer_part}+{self.bracket()}"


def is_strongly_positive_vector(b: Sequence[int]) -> bool:
    return len(b) > 0 and all(x > 0 for x in b) and b[0] > 1 and b[-1] > 1


def _matrix_vector(integer_part: int, quotients: Sequence[int]) -> tuple[int, int]:
    # M_(r, b_1, ..., b_n) (1, 0)^T, folded from the right
    p, q = 1, 0
    for b in reversed(quotients):
        p, q = b * p + q, p
    return integer_part * p + q, p


def eval_cf(cf: ContinuedFraction) -> Rational:
    """Exact value of ``cf``; the matrix form fixes the result only up to sign,
    which is resolved by making the denominator non-negative."""
    p, q = _matrix_vector(cf.integer_part, cf.quotients)
    return Rational(p, q)


def convergents(cf: ContinuedFraction) -> list[Rational]:
    """Vertices of the Farey path of ``cf``: ``1/0, r/1, r+[b_1], ...``."""
    p_prev, q_prev = 1, 0
    p, q = cf.integer_part, 1
    out = [Rational(p_prev, q_prev), Rational(p, q)]
    for b in cf.quotients:
        p, p_prev = b * p + p_prev, p
        q, q_prev = b * q + q_prev, q
        out.append(Rational(p, q))
    return out


def rewrite_negate(cf: ContinuedFraction, index: int) -> ContinuedFraction:
    """Rewrite ``[a, m, -n, b]`` as ``[a, m-1, 1, n-1, -b]``.

    ``index`` points at the negative entry ``-n``; the entry before it is ``m``.
    """
    qs = cf.quotients
    if not 1 <= index < len(qs):
        raise ValueError(f"index {index} has no preceding quotient in {cf}")
    if qs[index] >= 0:
        raise ValueError(f"quotient at index {index} of {cf} is not negative")
    m, n = qs[index - 1], -qs[index]
    new = qs[: index - 1] + (m - 1, 1, n - 1) + tuple(-b for b in qs[index + 1 :])
    return ContinuedFraction(cf.integer_part, new)


def rewrite_drop_zero(cf: ContinuedFraction, index: int) -> ContinuedFraction:
    """Rewrite ``[a, m, 0, n, b]`` as ``[a, m+n, b]``.

    A leading zero merges its right neighbour into the integer part:
    ``r+[0, n, b] = (r+n)+[b]``.
    """
    qs = cf.quotients
    if not 0 <= index < len(qs) or qs[index] != 0:
        raise ValueError(f"no zero quotient at index {index} of {cf}")
    if index == len(qs) - 1:
        raise ValueError(f"trailing zero in {cf} has no merge partner")
    if index == 0:
        return ContinuedFraction(cf.integer_part + qs[1], qs[2:])
    merged = qs[index - 1] + qs[index + 1]
    return ContinuedFraction(cf.integer_part, qs[: index - 1] + (merged,) + qs[index + 2 :])


def drop_all_zeros(cf: ContinuedFraction) -> ContinuedFraction:
    """Apply :func:`rewrite_drop_zero` left to right until no interior zero remains."""
    while 0 in cf.quotients:
        cf = rewrite_drop_zero(cf, cf.quotients.index(0))
    return cf


def euclidean_cf(x: Rational) -> ContinuedFraction:
    """All-positive expansion ``floor(x)+[b_1, ..., b_n]`` with ``b_n > 1``."""
    if x.is_infinite:
        raise ValueError("1/0 has no finite expansion")
    p, q = x.numerator, x.denominator
    r, p = divmod(p, q)
    out: list[int] = []
    # remaining value is p/q in [0, 1)
    while p:
        b, rem = divmod(q, p)
        out.append(b)
        q, p = p, rem
    return ContinuedFraction(r, out)


def cf_strongly_positive(x: Rational) -> ContinuedFraction:
    """Strongly positive expansion ``0+[b_1, ..., b_n]`` (all ``b_i > 0``,
    ``b_1, b_n > 1``) for ``0 < x < 1`` with odd denominator.

    When the Euclidean expansion starts with 1 the reversed expansion is
    returned instead; it evaluates to ``p'/q`` with ``p p' = (-1)^(n+1) mod q``,
    a fraction for the same knot.  Compare results through knot normalization,
    never by value.
    """
    if x.is_infinite or not 0 < x.numerator < x.denominator:
        raise ValueError(f"{x} is not in (0, 1)")
    if x.denominator % 2 == 0:
        raise ValueError(f"{x} has even denominator (a link, not a knot)")
    qs = euclidean_cf(x).quotients
    if qs[0] > 1:
        return ContinuedFraction(0, qs)
    # [1, b_2, ..., b_n] reversed is [b_n, ..., b_2, 1] = [b_n, ..., b_2 + 1]
    rev = list(reversed(qs[1:]))
    rev[-1] += 1
    return ContinuedFraction(0, rev)


def cf_reverse(cf: ContinuedFraction) -> tuple[ContinuedFraction, Rational]:
    """Reverse a strongly positive expansion; returns the reversed CF and its value."""
    if not cf.is_strongly_positive:
        raise ValueError(f"{cf} is not strongly positive")
    rev = ContinuedFraction(0, reversed(cf.quotients))
    x, y = eval_cf(cf), eval_cf(rev)
    q = x.denominator
    sign = 1 if len(cf) % 2 else -1
    if y.denominator != q or (x.numerator * y.numerator - sign) % q:
        raise AssertionError(f"reversal congruence fails for {cf}")
    return rev, y


_CF_RE = re.compile(r"^\s*(?:([+-]?\d+)\s*\+\s*)?\[\s*([^\]]*)\]\s*$", re.ASCII)


def parse_cf(text: str) -> ContinuedFraction:
    """Parse ``"r+[b1,b2,...]"``; the ``r+`` prefix is optional and defaults to 0."""
    m = _CF_RE.match(text)
    if m is None:
        raise ValueError(f"cannot parse continued fraction from {text!r}")
    r = int(m.group(1)) if m.group(1) is not None else 0
    body = m.group(2).strip()
    if not body:
        return ContinuedFraction(r, ())
    try:
        qs = [int(tok) for tok in body.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse continued fraction from {text!r}") from None
    return ContinuedFraction(r, qs)
