"""Two-bridge knots ``K(p/q)`` up to isotopy and mirror image."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from twobridge.contfrac import ContinuedFraction, cf_strongly_positive, eval_cf, parse_cf
from twobridge.rational import Rational, parse_fraction_pair

__all__ = [
    "KnotError",
    "LinkError",
    "UnknotError",
    "TwoBridgeKnot",
    "normalize_knot",
    "knots_equivalent",
    "parse_knot",
]


class KnotError(ValueError):
    """The pair ``(p, q)`` does not describe a nontrivial two-bridge knot."""


class LinkError(KnotError):
    """Even ``q``: the 4-plat closes up to a two-component link."""


class UnknotError(KnotError):
    """``q = 1``."""


@dataclass(frozen=True)
class TwoBridgeKnot:
    p: int
    q: int
    class_reps: tuple[int, ...] = field(compare=False)
    canonical_p: int = field(compare=False)
    chirality_reps: tuple[int, ...] = field(compare=False)

    @property
    def is_torus(self) -> bool:
        return 1 in self.class_reps

    @property
    def key(self) -> tuple[int, int]:
        """Equivalence key: two knots are equivalent iff their keys agree."""
        return self.q, self.canonical_p

    @property
    def fraction(self) -> Rational:
        return Rational(self.p, self.q)

    @property
    def mirror_p(self) -> int:
        return self.q - self.p

    def canonical(self) -> TwoBridgeKnot:
        return normalize_knot(self.canonical_p, self.q)

    def strongly_positive_cf(self) -> ContinuedFraction:
        """Strongly positive expansion of the smallest representative below ``q/2``."""
        p = min(r for r in self.class_reps if 2 * r < self.q)
        return cf_strongly_positive(Rational(p, self.q))

    def strongly_positive_cfs(self) -> list[ContinuedFraction]:
        """Every strongly positive expansion representing this knot or its mirror."""
        reps = sorted(r for r in self.class_reps if 2 * r < self.q)
        return [cf_strongly_positive(Rational(r, self.q)) for r in reps]

    def __str__(self) -> str:
        return f"K({self.p}/{self.q})"


def normalize_knot(p: int, q: int) -> TwoBridgeKnot:
    if gcd(p, q) != 1:
        raise KnotError(f"gcd({p}, {q}) = {gcd(p, q)} != 1")
    if q == 1:
        raise UnknotError("q = 1 gives the unknot")
    if q < 3:
        raise KnotError(f"q must be an odd integer >= 3, got {q}")
    if q % 2 == 0:
        raise LinkError(f"q = {q} is even: K({p}/{q}) is a two-component link")
    p %= q
    inv = pow(p, -1, q)
    reps = tuple(sorted({p, q - p, inv, q - inv}))
    chiral = tuple(sorted({p, inv}))
    return TwoBridgeKnot(p, q, reps, reps[0], chiral)


def knots_equivalent(a: TwoBridgeKnot, b: TwoBridgeKnot) -> bool:
    return a.key == b.key


def parse_knot(text: str) -> TwoBridgeKnot:
    """Parse ``"p/q"`` or a continued fraction string such as ``"[6,2,3]"``.

    Raises ``ValueError`` on malformed text and :class:`KnotError` when the
    parsed fraction is not a knot.
    """
    text = text.strip()
    if "[" not in text:
        # keep the pair unreduced so that a common factor is reported, not silently removed
        p, q = parse_fraction_pair(text)
        if q == 0:
            raise KnotError("1/0 is not a knot")
        return normalize_knot(p, q)
    x = eval_cf(parse_cf(text))
    if x.is_infinite:
        raise KnotError("1/0 is not a knot")
    return normalize_knot(x.numerator, x.denominator)
