from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twobridge.alexander import alexander_general
from twobridge.farey import SlopeMultiset, boundary_slopes
from twobridge.knots import normalize_knot, parse_knot
from twobridge.order import (
    CHECK_ORDER,
    candidate_battery,
    crossing_number,
    knots_with_denominator,
    minimality_scan,
    slope_scaling_witnesses,
)
from twobridge.ors import OrsWord, ors_apply, seed_vectors

syllables = st.tuples(st.integers(-3, 3), st.sampled_from((-1, 1))).filter(lambda s: s != (0, 1))


def test_witnesses_for_worked_pair():
    s1 = boundary_slopes(parse_knot("7/45"))
    s2 = boundary_slopes(parse_knot("1/3"))
    assert slope_scaling_witnesses(s1, s2) == (1, 3)


def test_witnesses_respect_diameter_ratio():
    s1 = SlopeMultiset.from_slopes([0, 4, 6, 10, 14])
    s2 = SlopeMultiset.from_slopes([0, 6])
    assert 1 in slope_scaling_witnesses(s1, s2)
    assert all(d % 2 and abs(d) * 6 <= 14 for d in slope_scaling_witnesses(s1, s2))


def test_negative_d_covers_mirror():
    s1 = SlopeMultiset.from_slopes([-18, 0])
    s2 = SlopeMultiset.from_slopes([0, 6])
    assert slope_scaling_witnesses(s1, s2) == (-3,)


def test_battery_worked_pair_survives():
    v = candidate_battery(parse_knot("7/45"), parse_knot("1/3"))
    assert v.survives
    assert [c.name for c in v.checks] == list(CHECK_ORDER)
    assert v.witness_d and all(d % 2 for d in v.witness_d)
    assert v.to_json()["verdict"] == "survives"


@pytest.mark.parametrize("k1, k2", [("7/17", "1/3"), ("2/5", "1/3")])
def test_battery_determinant_exclusion(k1, k2):
    v = candidate_battery(parse_knot(k1), parse_knot(k2))
    assert not v.survives
    assert v.failed_check == "determinant"
    assert len(v.checks) == 1


def test_prime_determinant_excludes_everything():
    k1 = normalize_knot(3, 13)
    for q2 in range(3, 13, 2):
        for k2 in knots_with_denominator(q2):
            assert candidate_battery(k1, k2).failed_check == "determinant"


def test_equivalent_knots_rejected():
    with pytest.raises(ValueError):
        candidate_battery(parse_knot("7/45"), parse_knot("38/45"))


def test_crossing_number():
    assert crossing_number(parse_knot("7/45")) == 11
    assert crossing_number(parse_knot("8/21")) == 7


@pytest.mark.parametrize("text", ["7/15", "4/15"])
def test_three_slope_knots_have_no_survivors(text):
    rep = minimality_scan(parse_knot(text))
    assert rep.verdicts
    assert rep.survivors == []
    assert all(len(label) == 2 for label in rep.case_labels.values())


def test_scan_finds_worked_pair():
    rep = minimality_scan(parse_knot("7/45"))
    assert any(k.key == normalize_knot(1, 3).key for k in rep.survivors)
    assert rep.case_labels == {}


def test_scan_candidates_cover_every_class():
    rep = minimality_scan(parse_knot("7/45"))
    keys = {v.smaller.key for v in rep.verdicts}
    want = {k.key for q2 in (3, 5, 9, 15) for k in knots_with_denominator(q2)}
    assert keys == want


def test_knots_with_denominator_counts_classes():
    # classes for q = 15: 8 units, grouped by p -> -p and p -> 1/p
    assert [k.p for k in knots_with_denominator(15)] == [1, 2, 4]


@settings(max_examples=150, deadline=None)
@given(
    st.sampled_from(seed_vectors(3, 5)),
    st.integers(1, 2).flatmap(lambda h: st.lists(syllables, min_size=2 * h, max_size=2 * h)),
)
def test_ors_pairs_never_excluded(seed, syl):
    pair = ors_apply(seed, OrsWord(syl))
    v = candidate_battery(pair.child, pair.parent)
    assert v.survives, v.to_json()


@given(st.integers(3, 99).filter(lambda q: q % 2), st.data())
def test_determinant_check_matches_alexander_at_minus_one(q1, data):
    k1 = data.draw(st.sampled_from(knots_with_denominator(q1)))
    q2 = data.draw(st.integers(3, q1).filter(lambda q: q % 2))
    k2 = data.draw(st.sampled_from(knots_with_denominator(q2)))
    if k1.key == k2.key:
        return
    v = candidate_battery(k1, k2)
    d1, d2 = abs(alexander_general(k1)(-1)), abs(alexander_general(k2)(-1))
    assert (v.checks[0].passed) == (d1 % d2 == 0 and d1 > d2)
