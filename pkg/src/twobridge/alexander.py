"""Alexander polynomials of two-bridge knots."""

from __future__ import annotations

from twobridge.classify import Family, FamilyTag
from twobridge.contfrac import ContinuedFraction
from twobridge.farey import even_expansion
from twobridge.knots import TwoBridgeKnot
from twobridge.laurent import LaurentPoly

__all__ = [
    "alexander_general",
    "alexander_from_even_cf",
    "alexander_family",
]

_ONE = LaurentPoly((1,))
_T = LaurentPoly.monomial(1, 1)
_ONE_MINUS_T = LaurentPoly((1, -1))


def alexander_from_even_cf(cf: ContinuedFraction) -> LaurentPoly:
    """Alexander polynomial from an even expansion ``r+[2c_1, ..., 2c_2g]``.

    The knot bounds a plumbing of ``2g`` twisted bands whose Seifert matrix is
    bidiagonal with diagonal ``c_1, -c_2, c_3, ...``; expanding
    ``det(V - t V^T)`` along the diagonal gives the continuant
    ``D_k = d_k (1 - t) D_(k-1) + t D_(k-2)``.
    """
    if not cf.is_even or len(cf) % 2:
        raise ValueError(f"{cf} is not an even expansion of even length")
    prev, cur = LaurentPoly(), _ONE
    for k, b in enumerate(cf.quotients):
        d = b // 2 if k % 2 == 0 else -(b // 2)
        prev, cur = cur, _ONE_MINUS_T * cur * d + _T * prev
    return cur.normalized()


def alexander_general(knot: TwoBridgeKnot) -> LaurentPoly:
    """Normalized Alexander polynomial (lowest exponent 0, positive leading coefficient)."""
    return alexander_from_even_cf(even_expansion(knot).expansion)


def _half(n: int) -> int:
    if n % 2:
        raise ValueError(f"{n} is odd")
    return n // 2


def alexander_family(tag: FamilyTag) -> LaurentPoly:
    """Closed-form Alexander polynomial for the three-slope families."""
    fam, a = tag.family, tag.params
    if fam is Family.T3I:
        # the t-coefficient sign is chosen so that |D(-1)| = q = a1*a2 + 1
        c = _half(a[0]) * _half(a[1])
        return LaurentPoly((c, -(1 + 2 * c), c)).normalized()
    if fam is Family.T3II:
        a1, a2 = a
        end = _half(a2 + 1)
        middle = [a2 * (-1) ** i for i in range(1, a1)]
        return LaurentPoly([end, *middle, end]).normalized()
    if fam is Family.T3III:
        s = _half(a[0] + 1) ** 2
        return LaurentPoly((s, 1 - 2 * s, s)).normalized()
    raise ValueError(f"no closed-form Alexander polynomial for family {fam.value}")

