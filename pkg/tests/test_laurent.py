from __future__ import annotations

from hypothesis import given
from hypothesis import strategies as st

from twobridge.laurent import LaurentPoly, laurent_divides, poly_divmod_exact

coeff_lists = st.lists(st.integers(-20, 20), min_size=1, max_size=8)
polys = st.builds(LaurentPoly, coeff_lists, st.integers(-5, 5))


def test_trimming_and_str():
    p = LaurentPoly((0, 0, 1, -1, 1, 0), -2)
    assert p.coefficients == (1, -1, 1)
    assert p.min_exponent == 0
    assert str(p) == "1 - t + t^2"
    assert str(LaurentPoly((-2, 3), -1)) == "-2t^-1 + 3"
    assert str(LaurentPoly()) == "0"


def test_evaluation_at_units():
    p = LaurentPoly((2, -3, 2))
    assert p(-1) == 7
    assert p(1) == 1
    assert LaurentPoly((1,), -1)(-1) == -1
    assert p(2) == 4


def test_normalized_and_units():
    p = LaurentPoly((-1, 3, -1), 4)
    assert p.normalized() == LaurentPoly((-1, 3, -1)).normalized()
    assert p.normalized().coefficients == (1, -3, 1)
    assert p.equals_up_to_units(LaurentPoly((1, -3, 1), -7))
    assert p.is_symmetric()
    assert not LaurentPoly((1, 2)).is_symmetric()


def test_json():
    assert LaurentPoly((1, -1), 3).to_json() == {"coefficients": [1, -1], "min_exponent": 3}


@given(polys, polys)
def test_product_divides(a, b):
    if a.is_zero:
        return
    assert laurent_divides(a, a * b)
    # multiplication is commutative and evaluation is a ring map at t = -1
    assert a * b == b * a
    assert (a * b)(-1) == a(-1) * b(-1)


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a - a == LaurentPoly()
    assert -(-a) == a


@given(coeff_lists, coeff_lists)
def test_exact_division_quotient(n, d):
    d = LaurentPoly(d).coefficients
    if not d or not any(n):
        return
    prod = (LaurentPoly(n) * LaurentPoly(d)).coefficients
    q = poly_divmod_exact(prod, d)
    assert q is not None
    assert LaurentPoly(q) * LaurentPoly(d) == LaurentPoly(prod)


def test_non_division():
    assert not laurent_divides(LaurentPoly((1, -1, 1)), LaurentPoly((1, -3, 1)))
    assert not laurent_divides(LaurentPoly((2, 1)), LaurentPoly((1, 1)))
    assert laurent_divides(LaurentPoly((1, -1, 1)), LaurentPoly((1, -1, 1), 5))
