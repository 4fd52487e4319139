from __future__ import annotations

from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import box_vertices, brute_minimal_cfs, farey_paths, oracle_slopes, strip_vertices
from twobridge.contfrac import parse_cf
from twobridge.farey import (
    ExtremalTieError,
    MinimalPath,
    SlopeMultiset,
    boundary_slopes,
    enumerate_minimal_expansions,
    even_expansion,
    extremal_paths,
    fibonacci,
    minimal_expansions_of,
    slope_count_bounds,
    slopes_of,
    unadjusted_slope_counts,
)
from twobridge.knots import normalize_knot
from twobridge.rational import Rational

knot_fractions = st.integers(3, 401).filter(lambda q: q % 2).flatmap(
    lambda q: st.integers(1, q - 1).filter(lambda p: gcd(p, q) == 1).map(lambda p: (p, q))
)


def vertex_tuples(p, q):
    paths = [MinimalPath.from_expansion(cf) for cf in minimal_expansions_of(Rational(p, q))]
    return sorted(tuple((v.numerator, v.denominator) for v in g.vertices) for g in paths)


def test_paths_of_7_17():
    paths = enumerate_minimal_expansions(normalize_knot(7, 17), 7)
    assert [str(g.expansion) for g in paths] == [
        "1+[-2,4,-2,2]",
        "0+[2,3,-2,2]",
        "1+[-2,3,3]",
        "0+[2,2,3]",
        "0+[3,-2,4]",
    ]
    assert [g.unadjusted_slope for g in paths] == [4, 2, 1, -1, -3]
    assert paths[0].is_even


def test_unadjusted_slope_of_convergent_path():
    g = MinimalPath.from_expansion(parse_cf("0+[2,2,3]"))
    assert [str(v) for v in g.vertices] == ["1/0", "0/1", "1/2", "2/5", "7/17"]
    assert g.unadjusted_slope == -1
    assert g.endpoint == Rational(7, 17)


@pytest.mark.parametrize(
    "p, q, expected",
    [
        (7, 17, "{0, 4, 6, 10, 14}"),
        (8, 21, "{-8, -4^2, 0^3, 6}"),
        (1, 3, "{0, 6}"),
        (7, 45, "{0, 6, 12, 18, 22}"),
        (1, 999, "{0, 1998}"),
    ],
)
def test_slope_examples(p, q, expected):
    assert str(slopes_of(Rational(p, q))) == expected


def test_cf_input_gives_five_slopes():
    x = parse_cf("[6,2,3]").value
    assert slopes_of(x).distinct_count == 5


@pytest.mark.parametrize("q", range(3, 16, 2))
def test_paths_match_farey_search_in_a_box(q):
    # a generous box rather than the strip: minimal paths never leave the strip
    for p in range(1, q):
        if gcd(p, q) == 1:
            assert sorted(farey_paths(p, q, box_vertices(p, q))) == vertex_tuples(p, q)


@pytest.mark.parametrize("q", [3, 5, 7, 9])
def test_expansions_match_brute_force_window(q):
    # every expansion with length <= 4 and |b_i| <= 5, found by plain evaluation
    for p in range(1, q):
        if gcd(p, q) != 1:
            continue
        brute = brute_minimal_cfs(p, q, max_len=4, max_abs=5)
        ours = {
            (cf.integer_part, cf.quotients)
            for cf in minimal_expansions_of(Rational(p, q))
            if len(cf) <= 4 and all(abs(b) <= 5 for b in cf.quotients)
        }
        assert brute == ours


@settings(max_examples=60, deadline=None)
@given(knot_fractions)
def test_slopes_match_farey_oracle(pq):
    p, q = pq
    assert sorted(farey_paths(p, q, strip_vertices(p, q))) == vertex_tuples(p, q)
    assert slopes_of(Rational(p, q)).as_dict() == oracle_slopes(p, q)


@given(knot_fractions)
def test_dp_counts_match_enumeration(pq):
    p, q = pq
    paths = [MinimalPath.from_expansion(cf) for cf in minimal_expansions_of(Rational(p, q))]
    counts = {}
    for g in paths:
        counts[g.unadjusted_slope] = counts.get(g.unadjusted_slope, 0) + 1
    assert unadjusted_slope_counts(Rational(p, q)) == counts


@given(knot_fractions)
def test_exactly_one_even_path_and_it_has_slope_zero(pq):
    p, q = pq
    k = normalize_knot(p, q)
    paths = enumerate_minimal_expansions(k, p)
    assert sum(g.is_even for g in paths) == 1
    assert even_expansion(k, p).expansion == next(g.expansion for g in paths if g.is_even)
    assert 0 in boundary_slopes(k, p)


@given(knot_fractions)
def test_mirror_negates_slopes(pq):
    p, q = pq
    k = normalize_knot(p, q)
    assert boundary_slopes(k, q - p) == boundary_slopes(k, p).negated()


@given(knot_fractions)
def test_slopes_depend_only_on_chiral_class(pq):
    p, q = pq
    k = normalize_knot(p, q)
    assert boundary_slopes(k, pow(p, -1, q)) == boundary_slopes(k, p)


@given(knot_fractions)
def test_slopes_are_even_and_diameter_is_twice_crossing_number(pq):
    p, q = pq
    k = normalize_knot(p, q)
    s = boundary_slopes(k)
    assert all(x % 2 == 0 for x in s.distinct)
    assert s.diameter == 2 * sum(k.strongly_positive_cf().quotients)


@given(knot_fractions)
def test_extremal_paths_are_unique(pq):
    p, q = pq
    paths = enumerate_minimal_expansions(normalize_knot(p, q), p)
    upper, lower = extremal_paths(paths)
    assert upper is paths[0]
    assert lower is paths[-1]


def test_extremal_tie_detected():
    a = MinimalPath.from_expansion(parse_cf("0+[2,2,3]"))
    with pytest.raises(ExtremalTieError):
        extremal_paths([a, a])


def test_slope_multiset_basics():
    s = SlopeMultiset.from_slopes([0, -4, 6, -4, 0, 0, -8])
    assert str(s) == "{-8, -4^2, 0^3, 6}"
    assert s.distinct_count == 4
    assert s.total == 7
    assert s.diameter == 14
    assert s.crossing_number == 7
    assert str(s.negated()) == "{-6, 0^3, 4^2, 8}"
    assert s.scaled(3).diameter == 42


def test_fibonacci_and_bounds():
    assert [fibonacci(n) for n in range(1, 9)] == [1, 1, 2, 3, 5, 8, 13, 21]
    assert slope_count_bounds(parse_cf("[2,1,1,1,2]")) == (4, 13)
    with pytest.raises(ValueError):
        slope_count_bounds(parse_cf("[1,3]"))
