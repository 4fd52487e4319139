"""Print the minimal Farey paths and boundary slopes of a few 2-bridge knots."""

from __future__ import annotations

import sys

from twobridge.classify import classify_family
from twobridge.knots import parse_knot
from twobridge.report import slopes_record, slopes_text


def main(args: list[str]) -> None:
    for text in args or ["7/17", "8/21", "[6,2,3]"]:
        knot = parse_knot(text)
        print(slopes_text(slopes_record(knot)))
        tag = classify_family(knot)
        print("family:", tag.family.value if tag else "none (five or more slopes)")
        print()


if __name__ == "__main__":
    main(sys.argv[1:])
