"""Necessary conditions for an epimorphism ``K1 >= K2`` between two-bridge knot groups.

The battery runs cheapest-first: determinant divisibility, slope scaling by an
odd longitude degree ``d``, the crossing-number bound ``|d| cr(K2) <= cr(K1)``,
and Alexander polynomial divisibility.  Surviving the battery never proves
``K1 >= K2``; it only means no check here rules it out.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from twobridge.alexander import alexander_general
from twobridge.classify import Family, classify_family
from twobridge.farey import SlopeMultiset, boundary_slopes
from twobridge.genus import genus_3ii
from twobridge.knots import TwoBridgeKnot, knots_equivalent, normalize_knot
from twobridge.laurent import laurent_divides

__all__ = [
    "CHECK_ORDER",
    "Check",
    "OrderVerdict",
    "slope_scaling_witnesses",
    "crossing_number",
    "candidate_battery",
    "knots_with_denominator",
    "MinimalityReport",
    "minimality_scan",
    "genus_case_check",
]

CHECK_ORDER = ("determinant", "slopes", "crossing", "alexander")


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class OrderVerdict:
    larger: TwoBridgeKnot
    smaller: TwoBridgeKnot
    checks: tuple[Check, ...]
    witness_d: tuple[int, ...]

    @property
    def survives(self) -> bool:
        return all(c.passed for c in self.checks) and len(self.checks) == len(CHECK_ORDER)

    @property
    def failed_check(self) -> str | None:
        return next((c.name for c in self.checks if not c.passed), None)

    @property
    def verdict(self) -> str:
        return "survives" if self.survives else "excluded"

    def to_json(self) -> dict:
        return {
            "k1": f"{self.larger.p}/{self.larger.q}",
            "k2": f"{self.smaller.p}/{self.smaller.q}",
            "verdict": self.verdict,
            "failing_check": self.failed_check,
            "witness_d": list(self.witness_d),
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
        }


def slope_scaling_witnesses(s1: SlopeMultiset, s2: SlopeMultiset) -> tuple[int, ...]:
    """Odd ``d`` (either sign) with ``d * slopes(K2)`` contained in ``slopes(K1)``.

    Both signs of ``d`` are searched, which covers every mirror choice of either
    knot.  Only distinct slopes are compared.  ``|d|`` is capped by the diameter
    ratio, which containment would force anyway.
    """
    big = set(s1.distinct)
    small = s2.distinct
    if s2.diameter == 0:
        return ()
    bound = s1.diameter // s2.diameter
    out = []
    for d in range(-bound, bound + 1):
        if d % 2 and all(d * s in big for s in small):
            out.append(d)
    return tuple(out)


def crossing_number(knot: TwoBridgeKnot) -> int:
    """Sum of the strongly positive partial quotients."""
    return sum(knot.strongly_positive_cf().quotients)


def candidate_battery(k1: TwoBridgeKnot, k2: TwoBridgeKnot) -> OrderVerdict:
    """Run the checks in :data:`CHECK_ORDER`, stopping at the first failure."""
    if knots_equivalent(k1, k2):
        raise ValueError(f"{k1} and {k2} are equivalent")
    checks: list[Check] = []

    def done(witnesses: tuple[int, ...] = ()) -> OrderVerdict:
        return OrderVerdict(k1, k2, tuple(checks), witnesses)

    ok = k1.q % k2.q == 0 and k1.q > k2.q
    checks.append(Check("determinant", ok, f"q1={k1.q}, q2={k2.q}"))
    if not ok:
        return done()

    s1, s2 = boundary_slopes(k1), boundary_slopes(k2)
    witnesses = slope_scaling_witnesses(s1, s2)
    checks.append(Check("slopes", bool(witnesses), f"d in {list(witnesses)}"))
    if not witnesses:
        return done()

    cr1, cr2 = crossing_number(k1), crossing_number(k2)
    witnesses = tuple(d for d in witnesses if abs(d) * cr2 <= cr1)
    checks.append(Check("crossing", bool(witnesses), f"cr1={cr1}, cr2={cr2}"))
    if not witnesses:
        return done()

    ok = laurent_divides(alexander_general(k2), alexander_general(k1))
    checks.append(Check("alexander", ok, "divides" if ok else "does not divide"))
    return done(witnesses if ok else ())


def knots_with_denominator(q: int) -> list[TwoBridgeKnot]:
    """One knot per equivalence class with determinant ``q``, ordered by ``canonical_p``."""
    out = []
    for p in range(1, q):
        if gcd(p, q) == 1:
            k = normalize_knot(p, q)
            if k.canonical_p == p:
                out.append(k)
    return out


@dataclass(frozen=True)
class MinimalityReport:
    knot: TwoBridgeKnot
    verdicts: tuple[OrderVerdict, ...]
    case_labels: dict[tuple[int, int], tuple[str, str]] = field(default_factory=dict)
    genus_checks: dict[tuple[int, int], tuple[int, ...]] = field(default_factory=dict)

    @property
    def survivors(self) -> list[TwoBridgeKnot]:
        return [v.smaller for v in self.verdicts if v.survives]


def minimality_scan(k1: TwoBridgeKnot) -> MinimalityReport:
    """Run the battery against every knot whose determinant properly divides ``q1``."""
    k1 = k1.canonical()
    tag1 = classify_family(k1)
    three = tag1 is not None and tag1.family.slope_count == 3
    verdicts, labels, genus = [], {}, {}
    for q2 in range(3, k1.q // 2 + 1, 2):
        if k1.q % q2:
            continue
        for k2 in knots_with_denominator(q2):
            verdicts.append(candidate_battery(k1, k2))
            if three:
                tag2 = classify_family(k2)
                fam2 = tag2.family.value if tag2 else "5+"
                labels[k2.key] = (tag1.family.value, fam2)
                if tag2 is not None and tag1.family is tag2.family is Family.T3II:
                    genus[k2.key] = tuple(sorted(genus_case_check(k1, k2)))
    return MinimalityReport(k1, tuple(verdicts), labels, genus)


def genus_case_check(k1: TwoBridgeKnot, k2: TwoBridgeKnot) -> set[int]:
    """Degrees ``d`` compatible with both slope scaling and equal curve genus.

    Both knots must be of the form ``0+[even, odd]``; ``d`` must also scale the
    parameters, ``(a1, a2) = (d b1, d b2)``.
    """
    t1, t2 = classify_family(k1), classify_family(k2)
    if t1 is None or t2 is None or t1.family is not Family.T3II or t2.family is not Family.T3II:
        raise ValueError(f"{k1} and {k2} are not both of the form 0+[even, odd]")
    (a1, a2), (b1, b2) = t1.params, t2.params
    if knots_equivalent(k1, k2):
        witnesses: tuple[int, ...] = (1,)
    else:
        witnesses = slope_scaling_witnesses(boundary_slopes(k1), boundary_slopes(k2))
    g2 = genus_3ii(b1, b2)
    return {
        d
        for d in witnesses
        if d > 0 and (a1, a2) == (d * b1, d * b2) and genus_3ii(a1, a2) == g2
    }
