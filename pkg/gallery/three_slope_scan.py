"""Scan every three-slope knot up to a bound and count candidate smaller knots."""

from __future__ import annotations

import sys
from collections import Counter

from twobridge.classify import classify_family
from twobridge.order import knots_with_denominator, minimality_scan


def main(q_max: int = 199) -> None:
    failing = Counter()
    scanned = survivors = 0
    for q in range(3, q_max + 1, 2):
        for knot in knots_with_denominator(q):
            tag = classify_family(knot)
            if tag is None or tag.family.slope_count != 3:
                continue
            scanned += 1
            report = minimality_scan(knot)
            survivors += len(report.survivors)
            failing.update(v.failed_check for v in report.verdicts)
    print(f"{scanned} three-slope knots with q <= {q_max}, {survivors} surviving candidates")
    for check, n in failing.most_common():
        print(f"  excluded by {check}: {n}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 199)
