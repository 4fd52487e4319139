"""Minimal Farey-graph paths of a two-bridge knot and its boundary slopes.

A minimal edge path from ``1/0`` to ``p/q`` is the same thing as an expansion
``r+[b_1, ..., b_k]`` of ``p/q`` with every ``|b_i| >= 2``.  The unadjusted slope
``m`` of a path sums the determinants of its edges after the first; the boundary
slope of a path is ``-2 (m - m_even)`` where the even path has all ``b_i`` even.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

from twobridge.contfrac import ContinuedFraction, convergents
from twobridge.knots import TwoBridgeKnot
from twobridge.rational import Rational, farey_edge_det

__all__ = [
    "MinimalPath",
    "SlopeMultiset",
    "ExtremalTieError",
    "enumerate_minimal_expansions",
    "minimal_expansions_of",
    "even_expansion",
    "even_expansion_of",
    "boundary_slopes",
    "slopes_of",
    "unadjusted_slope_counts",
    "slope_count_bounds",
    "extremal_paths",
    "fibonacci",
]


@dataclass(frozen=True)
class MinimalPath:
    expansion: ContinuedFraction
    vertices: tuple[Rational, ...]
    unadjusted_slope: int

    @classmethod
    def from_expansion(cls, cf: ContinuedFraction) -> MinimalPath:
        if any(abs(b) < 2 for b in cf.quotients):
            raise ValueError(f"{cf} has a partial quotient of magnitude < 2")
        verts = tuple(convergents(cf))
        m = sum(farey_edge_det(u, v) for u, v in zip(verts[1:], verts[2:]))
        return cls(cf, verts, m)

    @property
    def is_even(self) -> bool:
        return self.expansion.is_even

    @property
    def endpoint(self) -> Rational:
        return self.vertices[-1]


@dataclass(frozen=True)
class SlopeMultiset:
    """Boundary slopes with multiplicities, stored as sorted ``(slope, count)`` pairs."""

    entries: tuple[tuple[int, int], ...]

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> SlopeMultiset:
        return cls(tuple(sorted((int(s), int(c)) for s, c in counts.items() if c)))

    @classmethod
    def from_slopes(cls, slopes: Sequence[int]) -> SlopeMultiset:
        return cls.from_counts(Counter(slopes))

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    @property
    def distinct(self) -> tuple[int, ...]:
        return tuple(s for s, _ in self.entries)

    @property
    def distinct_count(self) -> int:
        return len(self.entries)

    @property
    def total(self) -> int:
        return sum(c for _, c in self.entries)

    @property
    def diameter(self) -> int:
        return self.entries[-1][0] - self.entries[0][0]

    @property
    def crossing_number(self) -> int:
        return self.diameter // 2

    def negated(self) -> SlopeMultiset:
        return SlopeMultiset(tuple((-s, c) for s, c in reversed(self.entries)))

    def scaled(self, d: int) -> SlopeMultiset:
        return SlopeMultiset.from_counts({s * d: c for s, c in self.entries})

    def __contains__(self, slope: object) -> bool:
        return any(s == slope for s, _ in self.entries)

    def __str__(self) -> str:
        parts = [f"{s}" if c == 1 else f"{s}^{c}" for s, c in self.entries]
        return "{" + ", ".join(parts) + "}"


class ExtremalTieError(ValueError):
    """Two distinct paths share the largest (or smallest) unadjusted slope."""


def _split(num: int, den: int) -> tuple[int, ...]:
    # integers r with |num/den - r| < 1, plus the exact value when integral
    fl, rem = divmod(num, den)
    return (fl,) if rem == 0 else (fl, fl + 1)


@lru_cache(maxsize=65536)
def _tails(num: int, den: int) -> tuple[tuple[int, ...], ...]:
    """All ``(b_1, ..., b_k)`` with ``|b_i| >= 2`` and ``[b_1, ..., b_k] = num/den``."""
    if num == 0:
        return ((),)
    # [b, rest] = 1 / (b + [rest]) so b + [rest] = den/num with |[rest]| < 1
    if num < 0:
        num, den = -num, -den
    out = []
    for b in _split(den, num):
        if abs(b) < 2:
            continue
        for rest in _tails(den - b * num, num):
            out.append((b,) + rest)
    return tuple(out)


def _tail_states(roots: list[tuple[int, int, bool]]) -> list[tuple[int, int, bool]]:
    """States reachable from ``roots``, children before parents.

    The cached recursions below are evaluated in this order so that every
    recursive call is a cache hit; path lengths grow like ``q`` for torus knots,
    far past the interpreter's recursion limit.
    """
    seen = set(roots)
    stack = list(roots)
    while stack:
        num, den, odd = stack.pop()
        if num == 0:
            continue
        if num < 0:
            num, den = -num, -den
        for b in _split(den, num):
            if abs(b) >= 2:
                child = (den - b * num, num, not odd)
                if child not in seen:
                    seen.add(child)
                    stack.append(child)
    # a child's denominator is strictly smaller than its parent's
    return sorted(seen, key=lambda s: s[1])


def minimal_expansions_of(x: Rational) -> list[ContinuedFraction]:
    """Every expansion of ``x`` whose partial quotients all have magnitude >= 2."""
    if x.is_infinite:
        raise ValueError("1/0 is the start of every path")
    p, q = x.numerator, x.denominator
    for num, den, _ in _tail_states([(p - r * q, q, True) for r in _split(p, q)]):
        _tails(num, den)
    return [ContinuedFraction(r, t) for r in _split(p, q) for t in _tails(p - r * q, q)]


def _order(paths: list[MinimalPath]) -> list[MinimalPath]:
    # upper path first; ties broken lexicographically on (r, quotients)
    return sorted(paths, key=lambda g: (-g.unadjusted_slope, g.expansion.integer_part, g.expansion.quotients))


def enumerate_minimal_expansions(knot: TwoBridgeKnot, representative_p: int | None = None) -> list[MinimalPath]:
    """All minimal paths from ``1/0`` to ``representative_p/q``, upper path first."""
    p = knot.canonical_p if representative_p is None else representative_p
    _check_rep(knot, p)
    paths = [MinimalPath.from_expansion(cf) for cf in minimal_expansions_of(Rational(p, knot.q))]
    return _order(paths)


def _check_rep(knot: TwoBridgeKnot, p: int) -> None:
    if not 0 < p < knot.q or p not in knot.class_reps:
        raise ValueError(f"{p} does not represent {knot} in (0, {knot.q})")


@lru_cache(maxsize=65536)
def _even_tail(num: int, den: int) -> tuple[int, ...] | None:
    if num == 0:
        return ()
    if num < 0:
        num, den = -num, -den
    for b in _split(den, num):
        if b % 2 == 0 and b != 0:
            rest = _even_tail(den - b * num, num)
            if rest is not None:
                return (b,) + rest
    return None


def even_expansion_of(x: Rational) -> ContinuedFraction:
    """The unique minimal expansion of ``x`` with all partial quotients even."""
    p, q = x.numerator, x.denominator
    for num, den, _ in _tail_states([(p - r * q, q, True) for r in _split(p, q)]):
        _even_tail(num, den)
    found = []
    for r in _split(p, q):
        t = _even_tail(p - r * q, q)
        if t is not None:
            found.append(ContinuedFraction(r, t))
    if len(found) != 1:
        raise AssertionError(f"{x} has {len(found)} even expansions, expected exactly one")
    return found[0]


def even_expansion(knot: TwoBridgeKnot, representative_p: int | None = None) -> MinimalPath:
    p = knot.canonical_p if representative_p is None else representative_p
    _check_rep(knot, p)
    return MinimalPath.from_expansion(even_expansion_of(Rational(p, knot.q)))


# Along a path with every |b_i| >= 2 the convergent denominators q_k satisfy
# sign(q_k) = sign(q_{k-1}) * sign(b_k), so the normalized determinant of edge k
# (k >= 1) is (-1)^k * sign(b_k).  This lets the slope census run on counts of
# m-values per tail state instead of on explicit paths.


@lru_cache(maxsize=262144)
def _m_counts(num: int, den: int, odd: bool) -> tuple[tuple[int, int], ...]:
    if num == 0:
        return ((0, 1),)
    if num < 0:
        num, den = -num, -den
    acc: Counter[int] = Counter()
    for b in _split(den, num):
        if abs(b) < 2:
            continue
        step = -1 if (b > 0) == odd else 1
        for m, c in _m_counts(den - b * num, num, not odd):
            acc[m + step] += c
    return tuple(sorted(acc.items()))


def unadjusted_slope_counts(x: Rational) -> dict[int, int]:
    """Multiset ``{m: number of minimal paths to x with unadjusted slope m}``."""
    p, q = x.numerator, x.denominator
    for state in _tail_states([(p - r * q, q, True) for r in _split(p, q)]):
        _m_counts(*state)
    acc: Counter[int] = Counter()
    for r in _split(p, q):
        for m, c in _m_counts(p - r * q, q, True):
            acc[m] += c
    return dict(acc)


def _even_m(cf: ContinuedFraction) -> int:
    return sum((1 if k % 2 == 0 else -1) * (1 if b > 0 else -1) for k, b in enumerate(cf.quotients, start=1))


@lru_cache(maxsize=65536)
def _slope_entries(p: int, q: int) -> tuple[tuple[int, int], ...]:
    x = Rational(p, q)
    m_even = _even_m(even_expansion_of(x))
    counts = unadjusted_slope_counts(x)
    return SlopeMultiset.from_counts({-2 * (m - m_even): c for m, c in counts.items()}).entries


def slopes_of(x: Rational) -> SlopeMultiset:
    """Boundary slopes of ``K(x)`` read off the minimal paths to ``x`` itself."""
    return SlopeMultiset(_slope_entries(x.numerator, x.denominator))


def boundary_slopes(knot: TwoBridgeKnot, representative_p: int | None = None) -> SlopeMultiset:
    """Slope multiset computed from ``representative_p/q`` (default: canonical).

    The mirror representative ``q - p`` yields the negated multiset.
    """
    p = knot.canonical_p if representative_p is None else representative_p
    _check_rep(knot, p)
    return SlopeMultiset(_slope_entries(p, knot.q))


def fibonacci(n: int) -> int:
    """``F(n)`` with ``F(1) = F(2) = 1``."""
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def slope_count_bounds(cf: ContinuedFraction) -> tuple[int, int]:
    """Bounds ``(2 + floor(m/2), F(m+2))`` on the distinct slope count, ``m = len(cf)``."""
    if not cf.is_strongly_positive:
        raise ValueError(f"{cf} is not strongly positive")
    m = len(cf)
    return 2 + m // 2, fibonacci(m + 2)


def extremal_paths(paths: Sequence[MinimalPath]) -> tuple[MinimalPath, MinimalPath]:
    """``(upper, lower)``: the paths of largest and smallest unadjusted slope."""
    if not paths:
        raise ValueError("no paths given")
    hi = max(g.unadjusted_slope for g in paths)
    lo = min(g.unadjusted_slope for g in paths)
    upper = [g for g in paths if g.unadjusted_slope == hi]
    lower = [g for g in paths if g.unadjusted_slope == lo]
    if len(upper) > 1 or len(lower) > 1:
        raise ExtremalTieError(f"extremal unadjusted slope shared by several paths ({hi}, {lo})")
    return upper[0], lower[0]
