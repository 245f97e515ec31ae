"""Command-line interface.

    diophantine-curves verify 1 3 8
    diophantine-curves torsion 4/3 -3/4 7/12
    diophantine-curves family z2z8 2
    diophantine-curves search --max-n 11 --out candidates.jsonl
    diophantine-curves evidence 1 3 8 --height 3000

Exit status: 0 success, 1 negative result (not a triple, degenerate family
parameter), 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import re
import sys

from .ec_core import j_invariant, order_of
from .evidence import rank_evidence
from .families import FAMILIES, FamilyDegenerateError, all_same_sign, sign_pattern
from .qarith import format_rat, parse_rat
from .search import RECORD_FIELDS, RecordStream, candidates, scan
from .torsion import (
    lemma_2S,
    lemma_3S_value,
    lemma_4S_factors,
    order_consistency,
    torsion_info,
)
from .triples import (
    InvalidElementError,
    NotATripleError,
    canonical_points,
    induced_curve,
    is_regular,
    regular_roles,
    validate,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

_SIGN = {1: "+", -1: "-"}


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-1/3" through as a positional value
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$")


def _rational(text: str):
    try:
        return parse_rat(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _fmt_order(n):
    return "inf" if n is None else n


def _point(pt):
    if pt.is_identity:
        return "O"
    return [format_rat(pt.x), format_rat(pt.y)]


def _verify_report(tr) -> dict:
    regular, sigma = is_regular(tr)
    return {
        "triple": [format_rat(x) for x in tr.elements],
        "valid": True,
        "r": format_rat(tr.r),
        "s": format_rat(tr.s),
        "t": format_rat(tr.t),
        "sign_pattern": "".join(_SIGN[s] for s in sign_pattern(tr)),
        "all_same_sign": all_same_sign(tr),
        "regular": regular,
        "regular_sign": _SIGN.get(sigma),
        "regular_roles": [{"c_index": i, "sign": _SIGN[s]} for i, s in regular_roles(tr)],
    }


def _torsion_report(tr) -> dict:
    curve = induced_curve(tr)
    pts = canonical_points(tr)
    info = torsion_info(curve, [pts.P, pts.S, pts.R])
    consistency = order_consistency(tr)
    return {
        "triple": [format_rat(x) for x in tr.elements],
        "curve": [format_rat(v) for v in (curve.p, curve.q, curve.w)],
        "j": format_rat(j_invariant(curve)),
        "points": {
            name: {"point": _point(pt), "order": _fmt_order(order_of(curve, pt))}
            for name, pt in pts._asdict().items()
        },
        "lemma_2S": lemma_2S(tr),
        "lemma_3S_value": format_rat(lemma_3S_value(tr)),
        "lemma_4S_factors": [format_rat(f) for f in lemma_4S_factors(tr)],
        "torsion": None if info.torsion is None else info.torsion.value,
        "three_part": info.three_part,
        "consistent": consistency.consistent,
        "mismatches": consistency.mismatches,
    }


def _plain(value) -> str:
    if isinstance(value, list):
        return ", ".join(_plain(v) for v in value) if value else "-"
    if isinstance(value, dict):
        return " ".join(f"{k}={_plain(v)}" for k, v in value.items())
    return str(value)


def _render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["key", "value"])
        for key, value in report.items():
            if not isinstance(value, str):
                value = json.dumps(value)
            writer.writerow([key, value])
        return buf.getvalue()
    lines = []
    for key, value in report.items():
        if isinstance(value, dict):
            lines.append(f"{key}:")
            lines.extend(f"  {k}: {_plain(v)}" for k, v in value.items())
        else:
            lines.append(f"{key}: {_plain(value)}")
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _validated(args):
    try:
        return validate(args.a, args.b, args.c), None
    except NotATripleError as exc:
        return None, {
            "triple": [format_rat(x) for x in (args.a, args.b, args.c)],
            "valid": False,
            "error": str(exc),
            "failing_pair": [format_rat(x) for x in exc.pair],
        }
    except InvalidElementError as exc:
        return None, {
            "triple": [format_rat(x) for x in (args.a, args.b, args.c)],
            "valid": False,
            "error": str(exc),
        }


def cmd_verify(args) -> int:
    tr, failure = _validated(args)
    _emit(_render(failure or _verify_report(tr), args.format), args.out)
    return EXIT_NEGATIVE if failure else EXIT_OK


def cmd_torsion(args) -> int:
    tr, failure = _validated(args)
    _emit(_render(failure or _torsion_report(tr), args.format), args.out)
    return EXIT_NEGATIVE if failure else EXIT_OK


def cmd_family(args) -> int:
    generator, arity = FAMILIES[args.tag]
    if len(args.params) != arity:
        args.parser.error(f"family {args.tag} takes {arity} parameter(s)")
    try:
        tr = generator(*args.params)
    except FamilyDegenerateError as exc:
        _emit(_render({"family": args.tag, "valid": False, "error": str(exc)}, args.format), args.out)
        return EXIT_NEGATIVE
    report = {"family": args.tag, "params": [format_rat(p) for p in args.params]}
    report.update(_torsion_report(tr))
    _emit(_render(report, args.format), args.out)
    return EXIT_OK


def _search_rows(records):
    return [rec.to_json() for rec in records]


def cmd_search(args) -> int:
    resumable = args.out is not None and args.format == "json"
    stream = RecordStream(args.out) if resumable else None
    records = scan(args.max_n, verbose=args.verbose, workers=args.workers, stream=stream)
    if not resumable:
        rows = _search_rows(records)
        if args.format == "json":
            text = "".join(json.dumps(row) + "\n" for row in rows)
        elif args.format == "csv":
            buf = io.StringIO()
            writer = csv.DictWriter(buf, fieldnames=RECORD_FIELDS, lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
            text = buf.getvalue()
        else:
            text = "".join(_text_record(row) for row in rows)
        _emit(text, args.out)
    found = candidates(records)
    skipped = sum(rec.skipped for rec in records)
    print(
        f"# n <= {args.max_n}: {len(found)} all-positive candidate(s)"
        f" at n = {[rec.n for rec in found]}, {skipped} skip record(s)",
        file=sys.stderr,
    )
    return EXIT_OK


def _text_record(row: dict) -> str:
    if row["skipped"]:
        return f"n={row['n']}: skipped ({row['skip_reason']})\n"
    return (
        f"n={row['n']}: r={row['r']} branch={row['root_branch']}"
        f" {{{row['a']}, {row['b']}, {row['c']}}} all_positive={row['all_positive']}"
        f" torsion={row['torsion']} ord(S')={row['s_order']}\n"
    )


def cmd_evidence(args) -> int:
    tr, failure = _validated(args)
    if failure:
        _emit(_render(failure, args.format), args.out)
        return EXIT_NEGATIVE
    report = {"triple": [format_rat(x) for x in tr.elements]}
    report.update(rank_evidence(induced_curve(tr), args.height).to_json())
    _emit(_render(report, args.format), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="diophantine-curves", description=__doc__.split("\n\n")[0])
    parser.add_argument("--log-level", default="WARNING")
    sub = parser.add_subparsers(dest="command", required=True)

    def io_options(p, default_format="text"):
        p.add_argument("--format", choices=("json", "csv", "text"), default=default_format)
        p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")

    def triple_command(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        io_options(p)
        for label in "abc":
            p.add_argument(label, type=_rational, help=f"element {label} as p/q")
        p.set_defaults(func=func)
        return p

    triple_command("verify", cmd_verify, "check the Diophantine property")
    triple_command("torsion", cmd_torsion, "torsion of the induced curve")
    p = triple_command("evidence", cmd_evidence, "bounded point search on the induced curve")
    p.add_argument("--height", type=_positive_int, default=100, metavar="H")

    p = sub.add_parser("family", help="generate a triple from a family")
    io_options(p)
    p.add_argument("tag", choices=sorted(FAMILIES))
    p.add_argument("params", nargs="+", type=_rational)
    p.set_defaults(func=cmd_family, parser=p)

    p = sub.add_parser("search", help="scan multiples of (0,1) on Y^2=X^3+X^2+X+1")
    io_options(p, default_format="json")
    p.add_argument("--max-n", type=_positive_int, required=True, metavar="N")
    p.add_argument("--verbose", action="store_true", help="also emit mixed-sign triples")
    p.add_argument("--workers", type=_positive_int, default=1)
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=args.log_level.upper(), format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
