"""Plain-data records and text renderings shared by the CLI and the census."""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, Sequence

from twobridge.classify import FamilyTag, classify_family
from twobridge.farey import boundary_slopes, enumerate_minimal_expansions
from twobridge.knots import TwoBridgeKnot
from twobridge.order import MinimalityReport, OrderVerdict
from twobridge.ors import AtLeastFive, OrsPair, TorusCase, format_word

__all__ = [
    "slopes_record",
    "slopes_text",
    "classification_record",
    "classification_text",
    "ors_record",
    "ors_text",
    "verdict_text",
    "scan_rows",
    "scan_text",
    "to_json",
    "to_csv",
    "SCAN_HEADER",
]


def to_json(obj: object) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def to_csv(header: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def slopes_record(knot: TwoBridgeKnot) -> dict:
    # paths are listed for the fraction as given, not the canonical representative
    p = knot.p
    paths = enumerate_minimal_expansions(knot, p)
    slopes = boundary_slopes(knot, p)
    m_even = next(g.unadjusted_slope for g in paths if g.is_even)
    return {
        "p": p,
        "q": knot.q,
        "canonical_p": knot.canonical_p,
        "paths": [
            {
                "cf": str(g.expansion),
                "vertices": [str(v) for v in g.vertices],
                "m": g.unadjusted_slope,
                "slope": -2 * (g.unadjusted_slope - m_even),
            }
            for g in paths
        ],
        "slopes": {str(s): c for s, c in slopes.entries},
        "distinct": slopes.distinct_count,
        "diameter": slopes.diameter,
        "crossing_number": slopes.crossing_number,
    }


def slopes_text(rec: dict) -> str:
    rows = [("minimal path", "fraction", "m", "slope")]
    for g in rec["paths"]:
        rows.append(("{" + ", ".join(g["vertices"]) + "}", g["cf"], str(g["m"]), str(g["slope"])))
    widths = [max(len(r[i]) for r in rows) for i in range(4)]
    lines = [f"K({rec['p']}/{rec['q']})  canonical {rec['canonical_p']}/{rec['q']}"]
    for i, r in enumerate(rows):
        lines.append(" | ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
        if i == 0:
            lines.append("-+-".join("-" * w for w in widths))
    slopes = ", ".join(f"{s}^{c}" if c > 1 else s for s, c in rec["slopes"].items())
    lines.append(f"slopes: {{{slopes}}}")
    lines.append(f"distinct: {rec['distinct']}  diameter: {rec['diameter']}  crossing number: {rec['crossing_number']}")
    return "\n".join(lines) + "\n"


def classification_record(knot: TwoBridgeKnot, tag: FamilyTag | None = None) -> dict:
    tag = classify_family(knot) if tag is None else tag
    slopes = boundary_slopes(knot)
    rec = {"p": knot.canonical_p, "q": knot.q}
    if tag is None:
        rec.update({"family": None, "distinct": slopes.distinct_count})
    else:
        rec.update(tag.to_json())
    rec["slopes"] = {str(s): c for s, c in slopes.entries}
    return rec


def classification_text(rec: dict) -> str:
    head = f"K({rec['p']}/{rec['q']})"
    if rec["family"] is None:
        return f"{head}: no family ({rec['distinct']} distinct slopes)\n"
    pred = ", ".join(f"{s}^{c}" if c > 1 else s for s, c in rec["predicted_slopes"].items())
    return (
        f"{head}: family {rec['family']} params {rec['params']} cf {rec['cf']}\n"
        f"chirality {rec['chirality']:+d}  predicted slopes {{{pred}}}\n"
    )


def ors_record(pair: OrsPair, outcome: TorusCase | AtLeastFive) -> dict:
    return {
        "seed": list(pair.seed),
        "word": [list(s) for s in pair.word.syllables],
        "raw": pair.raw_cf.bracket(),
        "reduced": pair.reduced_cf.bracket(),
        "child": f"{pair.child.p}/{pair.child.q}",
        "parent": f"{pair.parent.p}/{pair.parent.q}",
        "dichotomy": outcome.label,
        "distinct": outcome.distinct,
    }


def ors_text(rec: dict, pair: OrsPair) -> str:
    return (
        f"seed {rec['seed']}  word {format_word(pair.word)}\n"
        f"raw {rec['raw']}\nreduced {rec['reduced']} ({len(pair.reduced_cf)} quotients, "
        f"expected {pair.expected_reduced_length})\n"
        f"child {rec['child']}  parent {rec['parent']}\n"
        f"dichotomy {rec['dichotomy']} ({rec['distinct']} distinct slopes)\n"
    )


def verdict_text(v: OrderVerdict) -> str:
    lines = [f"K({v.larger.p}/{v.larger.q}) vs K({v.smaller.p}/{v.smaller.q}): {v.verdict}"]
    for c in v.checks:
        lines.append(f"  {c.name}: {'pass' if c.passed else 'FAIL'} ({c.detail})")
    if v.survives:
        lines.append(f"  witness d: {list(v.witness_d)}")
    return "\n".join(lines) + "\n"


SCAN_HEADER = ("k1", "k2", "verdict", "failing_check", "witness_d", "case")


def scan_rows(report: MinimalityReport) -> list[tuple[str, ...]]:
    rows = []
    for v in report.verdicts:
        case = report.case_labels.get(v.smaller.key)
        rows.append(
            (
                f"{v.larger.p}/{v.larger.q}",
                f"{v.smaller.p}/{v.smaller.q}",
                v.verdict,
                v.failed_check or "",
                " ".join(str(d) for d in v.witness_d),
                f"({case[0]},{case[1]})" if case else "",
            )
        )
    return rows


def scan_text(report: MinimalityReport) -> str:
    k = report.knot
    surv = report.survivors
    n = len(report.verdicts)
    lines = [f"K({k.p}/{k.q}): {n} candidate{'' if n == 1 else 's'}, {len(surv)} survivor{'' if len(surv) == 1 else 's'}"]
    for v in report.verdicts:
        if v.survives:
            lines.append(f"  survives: K({v.smaller.p}/{v.smaller.q}) d in {list(v.witness_d)}")
    for key, ds in sorted(report.genus_checks.items()):
        lines.append(f"  genus check vs K({key[1]}/{key[0]}): d in {list(ds)}")
    return "\n".join(lines) + "\n"
