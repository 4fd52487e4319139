"""Exhaustive verification driver.

Every check walks one canonical knot per class (or one ORS seed, or one fixed
example) and reports anomalies: places where a computed value disagrees with
the closed form it is supposed to match.  Tasks are independent, so they run
in a process pool and are merged in sorted order; the output depends only on
the configuration, never on scheduling.
"""

from __future__ import annotations

import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from twobridge.alexander import alexander_family, alexander_general
from twobridge.classify import Family, classify_family, corollary_arithmetic
from twobridge.contfrac import ContinuedFraction, eval_cf, parse_cf, rewrite_drop_zero, rewrite_negate
from twobridge.errata import load_errata
from twobridge.farey import boundary_slopes, fibonacci, slope_count_bounds, slopes_of
from twobridge.knots import normalize_knot
from twobridge.order import candidate_battery, knots_with_denominator, minimality_scan
from twobridge.ors import (
    DichotomyViolation,
    OrsWord,
    all_words,
    ors_apply,
    ors_strongly_positive,
    random_words,
    seed_vectors,
    theorem42_check,
)
from twobridge.report import slopes_record, to_csv, to_json

__all__ = [
    "CHECKS",
    "PROPERTIES",
    "Anomaly",
    "CensusConfig",
    "CensusResult",
    "run_census",
    "ors_sweep_words",
    "random_rewrite_trial",
]

CHECKS = ("table1", "thm32", "cor33", "lemma31", "lemma41", "ors_sweep", "thm42", "alexander", "minimality")

# the property each check asserts; printed next to every anomaly
PROPERTIES = {
    "table1": "7/17 has five minimal paths with m = 4, 2, 1, -1, -3 and slopes 0, 4, 6, 10, 14",
    "thm32": "a family matches iff there are at most four distinct slopes, with the predicted multiset",
    "cor33": "the arithmetic tier equals the distinct slope count (2, 3 or 4)",
    "lemma31": "2 + floor(m/2) <= distinct slopes <= F(m+2) for a strongly positive expansion of length m",
    "lemma41": "both rewrite identities preserve the value of a continued fraction",
    "ors_sweep": "ORS pairs have q | q' and n(m-1) + m + 2k reduced quotients",
    "thm42": "an ORS child is a torus knot with two slopes or has at least five slopes, and survives the battery",
    "alexander": "|D(-1)| = q, |D(1)| = 1, D symmetric, closed forms agree up to units",
    "minimality": "three-slope knots have no surviving smaller candidate",
}

_PER_KNOT = ("thm32", "cor33", "lemma31", "alexander", "minimality")
_ORS_CHECKS = ("ors_sweep", "thm42")
_THREE = (Family.T3I, Family.T3II, Family.T3III)


@dataclass(frozen=True, order=True)
class Anomaly:
    q: int
    p: int
    check: str
    message: str

    @property
    def property(self) -> str:
        return PROPERTIES[self.check]

    def to_json(self) -> dict:
        return {"check": self.check, "p": self.p, "q": self.q, "property": self.property, "message": self.message}


@dataclass(frozen=True)
class CensusConfig:
    q_max: int = 999
    checks: frozenset[str] = frozenset(CHECKS)
    jobs: int = 1
    seed: int = 0
    ors_samples: int = 100
    rewrite_trials: int = 10_000

    def __post_init__(self) -> None:
        if self.q_max < 3 or self.q_max % 2 == 0:
            raise ValueError(f"q_max must be odd and >= 3, got {self.q_max}")
        unknown = set(self.checks) - set(CHECKS)
        if unknown:
            raise ValueError(f"unknown checks: {', '.join(sorted(unknown))}")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        object.__setattr__(self, "checks", frozenset(self.checks))


@dataclass
class _Partial:
    counts: Counter = field(default_factory=Counter)
    notes: Counter = field(default_factory=Counter)
    anomalies: list = field(default_factory=list)

    def merge(self, other: _Partial) -> None:
        self.counts.update(other.counts)
        self.notes.update(other.notes)
        self.anomalies.extend(other.anomalies)


@dataclass(frozen=True)
class CensusResult:
    config: CensusConfig
    counts: dict[str, int]
    notes: dict[str, int]
    anomalies: tuple[Anomaly, ...]

    @property
    def ok(self) -> bool:
        return not self.anomalies

    def to_json(self) -> dict:
        return {
            "q_max": self.config.q_max,
            "seed": self.config.seed,
            "checks": [c for c in CHECKS if c in self.config.checks],
            "counts": self.counts,
            "notes": self.notes,
            "anomalies": [a.to_json() for a in self.anomalies],
            "status": "ok" if self.ok else "anomalies",
        }

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return to_json(self.to_json())
        if fmt == "csv":
            return to_csv(
                ("check", "p", "q", "property", "message"),
                ((a.check, a.p, a.q, a.property, a.message) for a in self.anomalies),
            )
        lines = [f"census q_max={self.config.q_max} seed={self.config.seed}"]
        for c in CHECKS:
            if c in self.config.checks:
                bad = sum(1 for a in self.anomalies if a.check == c)
                lines.append(f"{c:<11} checked {self.counts.get(c, 0):>7}  anomalies {bad}")
        for k, v in self.notes.items():
            lines.append(f"note {k}: {v}")
        for a in self.anomalies:
            lines.append(f"ANOMALY {a.check} {a.p}/{a.q}: {a.message} [{a.property}]")
        lines.append("status: " + ("ok" if self.ok else f"{len(self.anomalies)} anomalies"))
        return "\n".join(lines) + "\n"


# per-knot checks


def _check_knot(p: int, q: int, checks: frozenset[str], out: _Partial) -> None:
    k = normalize_knot(p, q)
    slopes = boundary_slopes(k)
    n = slopes.distinct_count
    tag = classify_family(k)

    def bad(check: str, msg: str) -> None:
        out.anomalies.append(Anomaly(q, p, check, msg))

    if "thm32" in checks:
        out.counts["thm32"] += 1
        if (tag is None) != (n >= 5):
            bad("thm32", f"family {tag.family.value if tag else None} with {n} distinct slopes")
        elif tag is not None:
            seen = slopes if tag.chirality_sign == 1 else slopes.negated()
            if tag.predicted != seen:
                bad("thm32", f"predicted {tag.predicted}, computed {seen}")
            if tag.predicted != slopes_of(eval_cf(tag.cf)):
                bad("thm32", f"predicted {tag.predicted} differs from slopes of {tag.cf}")
    if "cor33" in checks:
        out.counts["cor33"] += 1
        tier = corollary_arithmetic(k).tier
        if tier != (n if n <= 4 else None):
            bad("cor33", f"tier {tier} but {n} distinct slopes")
    if "lemma31" in checks:
        out.counts["lemma31"] += 1
        cf = k.strongly_positive_cf()
        lo, hi = slope_count_bounds(cf)
        if not lo <= n <= hi:
            bad("lemma31", f"{n} distinct slopes outside [{lo}, {hi}] for {cf}")
        if n > fibonacci(len(cf) + 1):
            out.notes["distinct slopes above F(m+1)"] += 1
    if "alexander" in checks:
        out.counts["alexander"] += 1
        d = alexander_general(k)
        if abs(d(-1)) != q or abs(d(1)) != 1 or not d.is_symmetric():
            bad("alexander", f"D = {d}: D(-1) = {d(-1)}, D(1) = {d(1)}")
        if tag is not None and tag.family in _THREE and not alexander_family(tag).equals_up_to_units(d):
            bad("alexander", f"closed form {alexander_family(tag)} differs from {d}")
    if "minimality" in checks and tag is not None and tag.family.slope_count == 3:
        out.counts["minimality"] += 1
        rep = minimality_scan(k)
        for s in rep.survivors:
            bad("minimality", f"candidate {s.p}/{s.q} survives")
        for key, ds in rep.genus_checks.items():
            if ds:
                bad("minimality", f"genus check admits d in {list(ds)} against {key[1]}/{key[0]}")


def _task_q(q: int, checks: frozenset[str]) -> _Partial:
    out = _Partial()
    for k in knots_with_denominator(q):
        _check_knot(k.p, q, checks, out)
    return out


# fixed example


def _task_table1() -> _Partial:
    out = _Partial()
    out.counts["table1"] += 1
    ref = load_errata()["slope_data_7_17"]
    rec = slopes_record(normalize_knot(7, 17))
    got = [(g["vertices"], g["cf"], g["m"], g["slope"]) for g in rec["paths"]]
    want = [(r["vertices"], r["cf"], r["m"], r["slope"]) for r in ref["rows"]]
    if got != want:
        out.anomalies.append(Anomaly(17, 7, "table1", f"rows {got}"))
    for fix in ref["printed"]:
        # each printed misprint must really be wrong, or it would not be an erratum
        if fix["field"] == "cf" and str(eval_cf(parse_cf(fix["printed"]))) != fix["printed_value"]:
            out.anomalies.append(Anomaly(17, 7, "table1", f"printed {fix['printed']} not {fix['printed_value']}"))
    return out


# rewrite identities


def random_rewrite_trial(rng: random.Random) -> tuple[ContinuedFraction, ContinuedFraction]:
    """Apply one randomly chosen identity to a random expansion; returns ``(before, after)``."""
    n = rng.randint(2, 8)
    qs = [rng.choice([b for b in range(-9, 10) if b]) for _ in range(n)]
    r = rng.randint(-3, 3)
    if rng.random() < 0.5:
        i = rng.randrange(1, n)
        qs[i] = -abs(qs[i])
        cf = ContinuedFraction(r, qs)
        return cf, rewrite_negate(cf, i)
    i = rng.randrange(0, n - 1)
    qs[i] = 0
    cf = ContinuedFraction(r, qs)
    return cf, rewrite_drop_zero(cf, i)


def _task_rewrites(seed: int, trials: int) -> _Partial:
    out = _Partial()
    rng = random.Random(f"rewrite|{seed}")
    for _ in range(trials):
        before, after = random_rewrite_trial(rng)
        out.counts["lemma41"] += 1
        if eval_cf(before) != eval_cf(after):
            out.anomalies.append(Anomaly(0, 0, "lemma41", f"{before} -> {after}"))
    return out


# ORS sweep


def ors_sweep_words(seed_vector: tuple[int, ...], rng_seed: int, samples: int) -> list[OrsWord]:
    """Words swept for one seed vector, ``|c_i| <= 3``.

    Two syllables: all 169 words.  Four syllables: all words for one-quotient
    seeds, otherwise ``samples`` random words.  Six syllables: ``samples``
    random words.
    """
    words = list(all_words(2, 3))
    tag = ",".join(map(str, seed_vector))
    if len(seed_vector) == 1:
        words += all_words(4, 3)
    else:
        words += random_words(4, 3, samples, random.Random(f"ors|{rng_seed}|{tag}|4"))
    words += random_words(6, 3, samples, random.Random(f"ors|{rng_seed}|{tag}|6"))
    return words


def _task_ors(seed_vector: tuple[int, ...], rng_seed: int, samples: int, checks: frozenset[str]) -> _Partial:
    out = _Partial()
    for word in ors_sweep_words(seed_vector, rng_seed, samples):
        pair = ors_apply(seed_vector, word)
        k, parent = pair.child, pair.parent
        if "ors_sweep" in checks:
            out.counts["ors_sweep"] += 1
            msgs = []
            if k.q % parent.q:
                msgs.append(f"parent q {parent.q} does not divide {k.q}")
            if len(pair.reduced_cf) != pair.expected_reduced_length:
                msgs.append(f"{len(pair.reduced_cf)} quotients, expected {pair.expected_reduced_length}")
            sp = ors_strongly_positive(pair.reduced_cf)
            if eval_cf(sp) != eval_cf(pair.reduced_cf):
                msgs.append(f"strongly positive rewrite {sp} changed the value")
            for m in msgs:
                out.anomalies.append(Anomaly(k.q, k.p, "ors_sweep", f"seed {list(seed_vector)}: {m}"))
        if "thm42" in checks:
            out.counts["thm42"] += 1
            try:
                outcome = theorem42_check(pair)
                out.notes[f"thm42 {outcome.label}"] += 1
                v = candidate_battery(k, parent)
                if not v.survives:
                    raise DichotomyViolation(f"battery excludes the pair at {v.failed_check}")
            except DichotomyViolation as exc:
                out.anomalies.append(Anomaly(k.q, k.p, "thm42", f"seed {list(seed_vector)}: {exc}"))
    return out


def _run(task: tuple) -> _Partial:
    kind, *args = task
    return {"q": _task_q, "table1": _task_table1, "rewrites": _task_rewrites, "ors": _task_ors}[kind](*args)


def _tasks(config: CensusConfig) -> list[tuple]:
    checks = config.checks
    tasks: list[tuple] = []
    if "table1" in checks:
        tasks.append(("table1",))
    if "lemma41" in checks:
        tasks.append(("rewrites", config.seed, config.rewrite_trials))
    if checks & set(_ORS_CHECKS):
        for v in seed_vectors(3, 5):
            tasks.append(("ors", v, config.seed, config.ors_samples, checks))
    if checks & set(_PER_KNOT):
        # largest q first so the slow tail does not idle the pool
        for q in range(config.q_max, 2, -2):
            tasks.append(("q", q, checks))
    return tasks


def run_census(config: CensusConfig) -> CensusResult:
    tasks = _tasks(config)
    total = _Partial()
    if config.jobs == 1:
        for part in map(_run, tasks):
            total.merge(part)
    else:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            for part in pool.map(_run, tasks, chunksize=4):
                total.merge(part)
    counts = {c: total.counts[c] for c in CHECKS if c in config.checks}
    notes = dict(sorted(total.notes.items()))
    return CensusResult(config, counts, notes, tuple(sorted(set(total.anomalies))))
