"""Command-line entry point: ``twobridge <subcommand> ...``.

Exit codes: 0 success, 1 anomaly found (census) or scan survivors, 2 input
that does not parse, 3 input that parses but is not a knot.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from twobridge.census import CHECKS, CensusConfig, run_census
from twobridge.contfrac import parse_cf
from twobridge.knots import KnotError, parse_knot
from twobridge.order import candidate_battery, minimality_scan
from twobridge.ors import ors_apply, parse_word, theorem42_check
from twobridge.report import (
    SCAN_HEADER,
    classification_record,
    classification_text,
    ors_record,
    ors_text,
    scan_rows,
    scan_text,
    slopes_record,
    slopes_text,
    to_csv,
    to_json,
    verdict_text,
)

EXIT_OK = 0
EXIT_ANOMALY = 1
EXIT_PARSE = 2
EXIT_INVALID = 3


class _ParseError(Exception):
    pass


def _knot(text: str):
    try:
        return parse_knot(text)
    except KnotError:
        raise
    except ValueError as exc:
        raise _ParseError(str(exc)) from exc


def _cmd_slopes(args) -> tuple[str, int]:
    rec = slopes_record(_knot(args.knot))
    if args.format == "json":
        return to_json(rec), EXIT_OK
    if args.format == "csv":
        rows = [(rec["p"], rec["q"], g["cf"], " ".join(g["vertices"]), g["m"], g["slope"]) for g in rec["paths"]]
        return to_csv(("p", "q", "cf", "vertices", "m", "slope"), rows), EXIT_OK
    return slopes_text(rec), EXIT_OK


def _cmd_classify(args) -> tuple[str, int]:
    rec = classification_record(_knot(args.knot))
    if args.format == "json":
        return to_json(rec), EXIT_OK
    if args.format == "csv":
        return to_csv(
            ("p", "q", "family", "params", "chirality"),
            [(rec["p"], rec["q"], rec["family"] or "", " ".join(map(str, rec.get("params", []))), rec.get("chirality", ""))],
        ), EXIT_OK
    return classification_text(rec), EXIT_OK


def _cmd_ors(args) -> tuple[str, int]:
    try:
        seed = parse_cf(args.seed_cf)
        word = parse_word(args.word)
    except ValueError as exc:
        raise _ParseError(str(exc)) from exc
    if seed.integer_part != 0:
        raise _ParseError(f"seed {args.seed_cf} must have zero integer part")
    try:
        pair = ors_apply(seed.quotients, word)
    except ValueError as exc:
        raise KnotError(str(exc)) from exc
    rec = ors_record(pair, theorem42_check(pair))
    if args.format == "json":
        return to_json(rec), EXIT_OK
    if args.format == "csv":
        return to_csv(list(rec), [[str(v) for v in rec.values()]]), EXIT_OK
    return ors_text(rec, pair), EXIT_OK


def _cmd_order(args) -> tuple[str, int]:
    v = candidate_battery(_knot(args.k1), _knot(args.k2))
    if args.format == "json":
        return to_json(v.to_json()), EXIT_OK
    if args.format == "csv":
        rows = [(f"{v.larger.p}/{v.larger.q}", f"{v.smaller.p}/{v.smaller.q}", v.verdict, v.failed_check or "",
                 " ".join(map(str, v.witness_d)))]
        return to_csv(SCAN_HEADER[:5], rows), EXIT_OK
    return verdict_text(v), EXIT_OK


def _cmd_scan(args) -> tuple[str, int]:
    rep = minimality_scan(_knot(args.knot))
    code = EXIT_ANOMALY if rep.survivors and args.fail_on_survivor else EXIT_OK
    if args.format == "json":
        return to_json({
            "k1": f"{rep.knot.p}/{rep.knot.q}",
            "survivors": [f"{k.p}/{k.q}" for k in rep.survivors],
            "verdicts": [v.to_json() for v in rep.verdicts],
            "cases": {f"{k[1]}/{k[0]}": list(c) for k, c in sorted(rep.case_labels.items())},
            "genus_checks": {f"{k[1]}/{k[0]}": list(d) for k, d in sorted(rep.genus_checks.items())},
        }), code
    if args.format == "csv":
        return to_csv(SCAN_HEADER, scan_rows(rep)), code
    return scan_text(rep), code


def _cmd_census(args) -> tuple[str, int]:
    checks = frozenset(c.strip() for c in args.checks.split(",") if c.strip()) if args.checks else frozenset(CHECKS)
    try:
        config = CensusConfig(q_max=args.q_max, checks=checks, jobs=args.jobs, seed=args.seed)
    except ValueError as exc:
        raise _ParseError(str(exc)) from exc
    result = run_census(config)
    return result.render(args.format), EXIT_OK if result.ok else EXIT_ANOMALY


def _common(seed: bool = True) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--output", type=Path, help="write the report here instead of stdout")
    common.add_argument("--q-max", type=int, default=999, help="largest determinant for the census")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for the census")
    if seed:
        common.add_argument("--seed", type=int, default=0, help="seed for randomized sweeps")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twobridge", description="Boundary slopes and order checks for two-bridge knots.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("slopes", parents=[_common()], help="minimal paths and boundary slopes")
    p.add_argument("knot", help='"p/q" or a continued fraction such as "[6,2,3]"')
    p.set_defaults(func=_cmd_slopes)

    p = sub.add_parser("classify", parents=[_common()], help="family of a knot with at most four slopes")
    p.add_argument("knot")
    p.set_defaults(func=_cmd_classify)

    # here --seed is the seed vector of the construction, not an RNG seed
    p = sub.add_parser("ors", parents=[_common(seed=False)], help="build an ORS pair")
    p.add_argument("--seed", dest="seed_cf", required=True, help='strongly positive seed, e.g. "[3]"')
    p.add_argument("--word", required=True, help='syllables "c1:e1,c2:e2,..." with e in {+,-}')
    p.set_defaults(func=_cmd_ors)

    p = sub.add_parser("order", parents=[_common()], help="run the necessary-condition battery for K1 >= K2")
    p.add_argument("k1")
    p.add_argument("k2")
    p.set_defaults(func=_cmd_order)

    p = sub.add_parser("scan-minimality", parents=[_common()], help="battery against every smaller candidate")
    p.add_argument("knot")
    p.add_argument("--fail-on-survivor", action="store_true", help="exit 1 when any candidate survives")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("census", parents=[_common()], help="run the verification suite")
    p.add_argument("--checks", help=f"comma-separated subset of {','.join(CHECKS)}")
    p.set_defaults(func=_cmd_census)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        text, code = args.func(args)
    except _ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except KnotError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        # semantic problems with well-formed input, e.g. equivalent knots passed to order
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.output is not None:
        args.output.write_text(text, encoding="ascii")
    else:
        sys.stdout.write(text)
    return code
