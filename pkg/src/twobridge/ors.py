"""Ohtsuki-Riley-Sakuma pairs: from a seed expansion ``a`` and a word of syllables
``(c_i, eta_i)`` build the larger knot ``[e_1 a, 2 e_1 c_1, e_2 a^-1, ..., e_(n+1) a]``.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from twobridge.contfrac import (
    ContinuedFraction,
    drop_all_zeros,
    eval_cf,
    is_strongly_positive_vector,
    rewrite_drop_zero,
    rewrite_negate,
)
from twobridge.farey import boundary_slopes
from twobridge.knots import TwoBridgeKnot, knots_equivalent, normalize_knot

__all__ = [
    "OrsWord",
    "OrsPair",
    "TorusCase",
    "AtLeastFive",
    "DichotomyViolation",
    "ors_apply",
    "ors_strongly_positive",
    "theorem42_check",
    "parse_word",
    "format_word",
    "seed_vectors",
    "all_words",
    "random_words",
]


@dataclass(frozen=True)
class OrsWord:
    syllables: tuple[tuple[int, int], ...]

    def __init__(self, syllables: Iterable[tuple[int, int]]) -> None:
        syl = tuple((int(c), int(e)) for c, e in syllables)
        if len(syl) < 2 or len(syl) % 2:
            raise ValueError(f"a word needs an even number >= 2 of syllables, got {len(syl)}")
        for c, e in syl:
            if e not in (1, -1):
                raise ValueError(f"eta must be +1 or -1, got {e}")
            if c == 0 and e == 1:
                raise ValueError("syllable (0, +1) is the identity")
        object.__setattr__(self, "syllables", syl)

    def __len__(self) -> int:
        return len(self.syllables)

    @property
    def epsilons(self) -> tuple[int, ...]:
        """``e_1, ..., e_(n+1)`` with ``e_1 = 1`` and ``e_(i+1) = -eta_i e_i``."""
        eps = [1]
        for _, eta in self.syllables:
            eps.append(-eta * eps[-1])
        return tuple(eps)

    @property
    def nonzero_count(self) -> int:
        return sum(1 for c, _ in self.syllables if c)


_SYLLABLE_RE = re.compile(r"^\s*([+-]?\d+)\s*:\s*([+-])(1?)\s*$", re.ASCII)


def parse_word(text: str) -> OrsWord:
    """Parse ``"c1:e1,c2:e2,..."`` where each ``e`` is ``+`` or ``-``."""
    syl = []
    for tok in text.split(","):
        m = _SYLLABLE_RE.match(tok)
        if m is None:
            raise ValueError(f"cannot parse syllable {tok!r}")
        syl.append((int(m.group(1)), 1 if m.group(2) == "+" else -1))
    return OrsWord(syl)


def format_word(word: OrsWord) -> str:
    return ",".join(f"{c}:{'+' if e > 0 else '-'}" for c, e in word.syllables)


@dataclass(frozen=True)
class OrsPair:
    seed: tuple[int, ...]
    word: OrsWord
    raw_cf: ContinuedFraction
    reduced_cf: ContinuedFraction
    child: TwoBridgeKnot
    parent: TwoBridgeKnot

    @property
    def expected_reduced_length(self) -> int:
        n, m = len(self.word), len(self.seed)
        return n * (m - 1) + m + 2 * self.word.nonzero_count


def _blocks(seed: Sequence[int], word: OrsWord) -> list[tuple[int, ...]]:
    # alternating signed seed blocks and twist entries; the final block is a^(+1)
    eps = word.epsilons
    out: list[tuple[int, ...]] = []
    rev = tuple(reversed(seed))
    for i, (c, _) in enumerate(word.syllables):
        block = seed if i % 2 == 0 else rev
        out.append(tuple(eps[i] * b for b in block))
        out.append((2 * eps[i] * c,))
    out.append(tuple(eps[-1] * b for b in seed))
    return out


def ors_apply(seed: Sequence[int], word: OrsWord) -> OrsPair:
    seed = tuple(int(b) for b in seed)
    if not is_strongly_positive_vector(seed):
        raise ValueError(f"seed {list(seed)} is not strongly positive")
    parent_x = eval_cf(ContinuedFraction(0, seed))
    parent = normalize_knot(parent_x.numerator, parent_x.denominator)
    eps = word.epsilons
    for i, (c, _) in enumerate(word.syllables):
        if c == 0 and eps[i] != eps[i + 1]:
            raise AssertionError(f"zero twist at syllable {i} between blocks of opposite sign")
    raw = ContinuedFraction(0, [b for block in _blocks(seed, word) for b in block])
    reduced = drop_all_zeros(raw)
    x = eval_cf(reduced)
    if x != eval_cf(raw):
        raise AssertionError("zero elimination changed the value")
    child = normalize_knot(x.numerator, x.denominator)
    return OrsPair(seed, word, raw, reduced, child, parent)


def ors_strongly_positive(reduced_cf: ContinuedFraction) -> ContinuedFraction:
    """Rewrite a zero-free ORS expansion into a strongly positive one of equal value.

    Repeatedly negates the tail at the first negative quotient (``[.., m, -n, ..]``
    becomes ``[.., m-1, 1, n-1, ..]`` with the rest negated) and merges any zero
    this creates into its neighbours.  Each step removes a sign change and never
    shortens the expansion except when a zero merges two 1s.
    """
    qs = reduced_cf.quotients
    if reduced_cf.integer_part != 0 or not qs or 0 in qs or qs[0] < 2:
        raise ValueError(f"{reduced_cf} is not a zero-free expansion starting with a quotient > 1")
    cf = reduced_cf
    while True:
        neg = next((i for i, b in enumerate(cf.quotients) if b < 0), None)
        if neg is None:
            break
        cf = rewrite_negate(cf, neg)
        while 0 in cf.quotients:
            z = cf.quotients.index(0)
            if z == 0 or z == len(cf) - 1:
                raise ValueError(f"rewriting {reduced_cf} produced a boundary zero")
            cf = rewrite_drop_zero(cf, z)
    if not cf.is_strongly_positive:
        raise ValueError(f"rewriting {reduced_cf} ended at {cf}, which is not strongly positive")
    return cf


@dataclass(frozen=True)
class TorusCase:
    distinct: int = 2

    label = "torus"


@dataclass(frozen=True)
class AtLeastFive:
    distinct: int

    label = "at_least_five"


class DichotomyViolation(AssertionError):
    """A nontrivial pair whose larger knot has 3 or 4 slopes, or an unmatched torus case."""


def theorem42_check(pair: OrsPair) -> TorusCase | AtLeastFive:
    """Classify the larger knot: torus with two slopes, or at least five slopes."""
    if knots_equivalent(pair.child, pair.parent):
        raise DichotomyViolation(f"{pair.child} is equivalent to its parent {pair.parent}")
    n = boundary_slopes(pair.child).distinct_count
    if pair.child.is_torus:
        if pair.parent.is_torus and n == 2:
            return TorusCase()
        raise DichotomyViolation(f"torus child {pair.child} with parent {pair.parent} and {n} slopes")
    if n >= 5:
        return AtLeastFive(n)
    raise DichotomyViolation(f"{pair.child} has {n} distinct slopes")


def seed_vectors(max_length: int, max_quotient: int) -> list[tuple[int, ...]]:
    """Strongly positive vectors of length <= ``max_length`` that evaluate to knots."""
    out = []
    for n in range(1, max_length + 1):
        for b in itertools.product(range(1, max_quotient + 1), repeat=n):
            if is_strongly_positive_vector(b) and eval_cf(ContinuedFraction(0, b)).denominator % 2:
                out.append(b)
    return out


def _syllables(c_max: int) -> list[tuple[int, int]]:
    return [(c, e) for c in range(-c_max, c_max + 1) for e in (-1, 1) if (c, e) != (0, 1)]


def all_words(n: int, c_max: int) -> Iterator[OrsWord]:
    """Every word of ``n`` syllables with ``|c_i| <= c_max``."""
    for syl in itertools.product(_syllables(c_max), repeat=n):
        yield OrsWord(syl)


def random_words(n: int, c_max: int, count: int, rng: random.Random) -> list[OrsWord]:
    """``count`` independent uniform words of ``n`` syllables."""
    pool = _syllables(c_max)
    return [OrsWord(rng.choice(pool) for _ in range(n)) for _ in range(count)]
