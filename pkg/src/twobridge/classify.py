"""Closed-form classification of two-bridge knots with at most four boundary slopes.

Each family is a pattern on a strongly positive expansion together with the slope
multiset it forces.  A knot matches when either of its strongly positive
expansions (an expansion and its reverse) fits a pattern.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional, Sequence

from twobridge.contfrac import ContinuedFraction, eval_cf
from twobridge.farey import SlopeMultiset
from twobridge.knots import TwoBridgeKnot

__all__ = [
    "Family",
    "FamilyTag",
    "classify_family",
    "predicted_slopes",
    "family_cf",
    "corollary_arithmetic",
    "ArithmeticTier",
]


class Family(str, Enum):
    T2 = "2"
    T3I = "3_i"
    T3II = "3_ii"
    T3III = "3_iii"
    T4I = "4_i"
    T4II = "4_ii"
    T4III = "4_iii"
    T4IV = "4_iv"
    T4V = "4_v"

    @property
    def slope_count(self) -> int:
        return int(self.value[0])


def _odd(n: int) -> bool:
    return n % 2 == 1


def _even(n: int) -> bool:
    return n % 2 == 0


# (family, matcher on the quotient vector -> params or None, slopes from params, params -> quotients)
def _match_t2(b):
    return (b[0],) if len(b) == 1 and _odd(b[0]) else None


def _match_t3i(b):
    return tuple(b) if len(b) == 2 and _even(b[0]) and _even(b[1]) else None


def _match_t3ii(b):
    return tuple(b) if len(b) == 2 and _even(b[0]) and _odd(b[1]) else None


def _match_t3iii(b):
    return (b[0],) if len(b) == 3 and b[1] == 1 and b[0] == b[2] and _odd(b[0]) else None


def _match_t4i(b):
    if len(b) == 3 and b[0] == b[2] and _odd(b[0]) and _odd(b[1]) and b[1] > 1:
        return (b[0], b[1])
    return None


def _match_t4ii(b):
    if len(b) == 3 and b[1] == 1 and b[0] != b[2] and _odd(b[0]) and _odd(b[2]):
        return (b[0], b[2])
    return None


def _match_t4iii(b):
    if len(b) == 3 and b[1] == 1 and b[0] != b[2] and _even(b[0]) and _odd(b[2]):
        return (b[0], b[2])
    return None


def _match_t4iv(b):
    if len(b) == 4 and b[1] == 1 and b[2] == b[0] and b[3] == b[0] + 1 and _even(b[0]):
        return (b[0],)
    return None


def _match_t4v(b):
    return () if tuple(b) == (2, 1, 1, 1, 2) else None


_FAMILIES: list[tuple[Family, Callable[[Sequence[int]], Optional[tuple]], Callable[..., dict], Callable[..., list]]] = [
    (Family.T2, _match_t2, lambda a: {0: 1, 2 * a: 1}, lambda a: [a]),
    (Family.T3I, _match_t3i, lambda a1, a2: {-2 * a1: 1, 0: 1, 2 * a2: 1}, lambda a1, a2: [a1, a2]),
    (
        Family.T3II,
        _match_t3ii,
        lambda a1, a2: {0: 1, 2 * a1: 1, 2 * a1 + 2 * a2: 1},
        lambda a1, a2: [a1, a2],
    ),
    (
        Family.T3III,
        _match_t3iii,
        lambda a: {-4 * a - 2: 1, -2 * a - 2: 2, 0: 1},
        lambda a: [a, 1, a],
    ),
    (
        Family.T4I,
        _match_t4i,
        lambda a1, a2: {-4 * a1 - 2 * a2: 1, -2 * a1 - 2 * a2: 2, -2 * a2: 1, 0: 1},
        lambda a1, a2: [a1, a2, a1],
    ),
    (
        Family.T4II,
        _match_t4ii,
        lambda a1, a3: {-2 * a1 - 2 * a3 - 2: 1, -2 * a3 - 2: 1, -2 * a1 - 2: 1, 0: 1},
        lambda a1, a3: [a1, 1, a3],
    ),
    (
        Family.T4III,
        _match_t4iii,
        lambda a1, a3: {-2 * a1: 1, 0: 1, -2 * a1 + 2 * a3: 1, 2 * a3 + 2: 1},
        lambda a1, a3: [a1, 1, a3],
    ),
    (
        Family.T4IV,
        _match_t4iv,
        lambda a: {-2 * a: 1, 0: 2, 2 * a + 2: 2, 4 * a + 4: 1},
        lambda a: [a, 1, a, a + 1],
    ),
    (Family.T4V, _match_t4v, lambda: {-8: 1, -4: 2, 0: 3, 6: 1}, lambda: [2, 1, 1, 1, 2]),
]

_BY_FAMILY = {fam: (slopes, cf) for fam, _, slopes, cf in _FAMILIES}


def predicted_slopes(family: Family, params: Sequence[int]) -> SlopeMultiset:
    """Slope multiset of the fraction ``family_cf(family, params)``."""
    return SlopeMultiset.from_counts(_BY_FAMILY[family][0](*params))


def family_cf(family: Family, params: Sequence[int]) -> ContinuedFraction:
    return ContinuedFraction(0, _BY_FAMILY[family][1](*params))


@dataclass(frozen=True)
class FamilyTag:
    family: Family
    params: tuple[int, ...]
    cf: ContinuedFraction
    chirality_sign: int
    predicted: SlopeMultiset

    def to_json(self) -> dict:
        return {
            "family": self.family.value,
            "params": list(self.params),
            "cf": self.cf.bracket(),
            "chirality": self.chirality_sign,
            "predicted_slopes": {str(s): c for s, c in self.predicted.entries},
        }


def classify_family(knot: TwoBridgeKnot) -> FamilyTag | None:
    """Family of ``knot`` if it has at most four distinct slopes, else None.

    ``chirality_sign`` is +1 when the matched expansion evaluates to a fraction
    in the same chiral class as ``canonical_p/q`` and -1 when it describes the
    mirror, so that ``predicted == chirality_sign * boundary_slopes(knot)``.
    """
    cfs = knot.strongly_positive_cfs()
    for fam, match, _, _ in _FAMILIES:
        for cf in cfs:
            params = match(cf.quotients)
            if params is None:
                continue
            x = eval_cf(cf)
            canon = knot.canonical()
            sign = 1 if x.numerator in canon.chirality_reps else -1
            return FamilyTag(fam, params, cf, sign, predicted_slopes(fam, params))
    return None


@dataclass(frozen=True)
class ArithmeticTier:
    """Slope count predicted by divisibility conditions on ``p`` and ``q``.

    ``tier`` is 2, 3 or 4, or None when no condition holds (five or more slopes).
    ``conditions`` lists ``(label, p)`` for every representative satisfying a
    condition of the selected tier.
    """

    tier: int | None
    conditions: tuple[tuple[str, int], ...]


def _tier_conditions(p: int, q: int) -> dict[int, list[str]]:
    hits: dict[int, list[str]] = {2: [], 3: [], 4: []}
    if p == 1:
        hits[2].append("p=1")
    if (q - 1) % p == 0:
        hits[3].append("p|q-1")
    if p * p == q + 1:
        hits[3].append("p^2=q+1")
    if q % (p + 1) == 0 and (p * p - 1) % q == 0:
        hits[4].append("p+1|q,q|p^2-1")
    if (q + 1) % p == 0:
        hits[4].append("p|q+1")
    if (p - 1) ** 3 == q * q:
        hits[4].append("(p-1)^3=q^2")
    if (p, q) == (8, 21):
        hits[4].append("p/q=8/21")
    return hits


def corollary_arithmetic(knot: TwoBridgeKnot) -> ArithmeticTier:
    """Evaluate the arithmetic slope-count conditions over all class representatives.

    Lower tiers take precedence: a knot reaches tier 3 only if no representative
    satisfies the tier-2 condition, and tier 4 only if tiers 2 and 3 both fail.
    """
    per_tier: dict[int, list[tuple[str, int]]] = {2: [], 3: [], 4: []}
    for p in knot.class_reps:
        for tier, labels in _tier_conditions(p, knot.q).items():
            per_tier[tier].extend((label, p) for label in labels)
    for tier in (2, 3, 4):
        if per_tier[tier]:
            return ArithmeticTier(tier, tuple(sorted(per_tier[tier], key=lambda t: (t[1], t[0]))))
    return ArithmeticTier(None, ())
