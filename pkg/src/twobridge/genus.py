"""Genus of the character-variety curve for knots ``0+[b_1, b_2]``, ``b_1`` even, ``b_2`` odd."""

from __future__ import annotations

from math import isqrt

__all__ = ["genus_3ii", "equal_genus_d"]


def _check(b1: int, b2: int) -> None:
    if b1 < 2 or b1 % 2:
        raise ValueError(f"b1 must be even and >= 2, got {b1}")
    if b2 < 1 or b2 % 2 == 0:
        raise ValueError(f"b2 must be odd and >= 1, got {b2}")


def genus_3ii(b1: int, b2: int) -> int:
    """``3 h k - h - 4 k + 2`` with ``h = (b2+1)/2`` and ``k = b1/2``."""
    _check(b1, b2)
    h, k = (b2 + 1) // 2, b1 // 2
    return 3 * h * k - h - 4 * k + 2


def equal_genus_d(b1: int, b2: int) -> set[int]:
    """Positive integers ``d`` with ``genus_3ii(d*b1, d*b2) == genus_3ii(b1, b2)``.

    Equating the two genera reduces to
    ``d (3 d b1 b2 - 5 b1 - 2 b2) = 3 b1 b2 - 5 b1 - 2 b2``, a quadratic in ``d``
    solved here exactly over the integers.
    """
    _check(b1, b2)
    a = 3 * b1 * b2
    b = -(5 * b1 + 2 * b2)
    c = -(3 * b1 * b2 - 5 * b1 - 2 * b2)
    disc = b * b - 4 * a * c
    if disc < 0:
        return set()
    r = isqrt(disc)
    if r * r != disc:
        return set()
    out = set()
    for num in (-b + r, -b - r):
        if num > 0 and num % (2 * a) == 0:
            out.add(num // (2 * a))
    return out
