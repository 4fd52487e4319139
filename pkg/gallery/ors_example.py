"""Build a knot from a seed and a word, then run the order battery on the pair."""

from __future__ import annotations

from twobridge.farey import boundary_slopes
from twobridge.order import candidate_battery
from twobridge.ors import ors_apply, parse_word, theorem42_check
from twobridge.report import verdict_text

pair = ors_apply((3,), parse_word("0:-,1:-"))
print("raw expansion:    ", pair.raw_cf.bracket())
print("reduced expansion:", pair.reduced_cf.bracket())
print("child:", pair.child, " parent:", pair.parent)
print("child slopes:", boundary_slopes(pair.child))
print("dichotomy:", type(theorem42_check(pair)).__name__)
print()
print(verdict_text(candidate_battery(pair.child, pair.parent)))
