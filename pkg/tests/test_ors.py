from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twobridge.contfrac import ContinuedFraction, eval_cf
from twobridge.farey import boundary_slopes
from twobridge.knots import knots_equivalent
from twobridge.ors import (
    AtLeastFive,
    DichotomyViolation,
    OrsWord,
    TorusCase,
    all_words,
    format_word,
    ors_apply,
    ors_strongly_positive,
    parse_word,
    random_words,
    seed_vectors,
    theorem42_check,
)

syllables = st.tuples(st.integers(-3, 3), st.sampled_from((-1, 1))).filter(lambda s: s != (0, 1))
words = st.integers(1, 3).flatmap(lambda h: st.lists(syllables, min_size=2 * h, max_size=2 * h)).map(OrsWord)


def test_worked_example():
    pair = ors_apply((3,), parse_word("0:-,1:-"))
    assert pair.raw_cf.bracket() == "[3,0,3,2,3]"
    assert pair.reduced_cf.bracket() == "[6,2,3]"
    assert (pair.child.p, pair.child.q) == (7, 45)
    assert (pair.parent.p, pair.parent.q) == (1, 3)
    outcome = theorem42_check(pair)
    assert isinstance(outcome, AtLeastFive) and outcome.distinct == 5


def test_epsilons():
    assert parse_word("0:-,1:-").epsilons == (1, 1, 1)
    assert parse_word("2:+,1:-").epsilons == (1, -1, -1)


def test_word_validation():
    with pytest.raises(ValueError):
        OrsWord([(1, -1)])
    with pytest.raises(ValueError):
        OrsWord([(1, -1), (0, 1)])
    with pytest.raises(ValueError):
        OrsWord([(1, 2), (1, -1)])
    with pytest.raises(ValueError):
        parse_word("1:*,2:+")
    assert format_word(parse_word(" 0:- , -2:+ ")) == "0:-,-2:+"


def test_seed_must_be_strongly_positive():
    with pytest.raises(ValueError):
        ors_apply((1, 3), parse_word("1:-,1:-"))


def test_seed_vectors():
    seeds = seed_vectors(3, 5)
    assert (3,) in seeds and (5,) in seeds
    assert (2,) not in seeds  # 1/2 is a link
    assert len(seeds) == 66
    assert all(eval_cf(ContinuedFraction(0, s)).denominator % 2 for s in seeds)


def test_word_generators():
    assert sum(1 for _ in all_words(2, 3)) == 13**2
    a = random_words(4, 3, 5, random.Random(0))
    b = random_words(4, 3, 5, random.Random(0))
    assert a == b and all(len(w) == 4 for w in a)


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(seed_vectors(3, 5)), words)
def test_pair_properties(seed, word):
    pair = ors_apply(seed, word)
    assert pair.child.q % pair.parent.q == 0
    assert len(pair.reduced_cf) == pair.expected_reduced_length
    assert 0 not in pair.reduced_cf.quotients
    assert eval_cf(pair.raw_cf) == eval_cf(pair.reduced_cf)
    sp = ors_strongly_positive(pair.reduced_cf)
    assert sp.is_strongly_positive
    assert eval_cf(sp) == eval_cf(pair.reduced_cf)
    outcome = theorem42_check(pair)
    n = boundary_slopes(pair.child).distinct_count
    if isinstance(outcome, TorusCase):
        assert pair.child.is_torus and pair.parent.is_torus and n == 2
    else:
        assert n >= 5


def test_torus_branch():
    # seed [3] with twists that only add full turns stays a torus knot
    for word in all_words(2, 3):
        pair = ors_apply((3,), word)
        if pair.child.is_torus:
            assert isinstance(theorem42_check(pair), TorusCase)
            assert not knots_equivalent(pair.child, pair.parent)
            return
    pytest.fail("no torus child found among two-syllable words on [3]")


def test_strongly_positive_rewrite_rejects_bad_input():
    with pytest.raises(ValueError):
        ors_strongly_positive(ContinuedFraction(0, (3, 0, 2)))
    with pytest.raises(ValueError):
        ors_strongly_positive(ContinuedFraction(1, (3, 2)))


def test_dichotomy_violation_is_an_assertion():
    assert issubclass(DichotomyViolation, AssertionError)
