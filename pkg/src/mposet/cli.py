"""Command-line front end.

Exit statuses: 0 pass, 1 claim failure or disagreement, 2 usage error,
3 resource cap reached.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from mposet.errors import InvalidInput, ResourceLimitExceeded
from mposet.join_irr import MPoset, build_M
from mposet.perm_core import (
    avoids_all,
    format_code,
    format_permutation,
    inversion_set,
    lehmer_code,
    parse_permutation,
)
from mposet.poset_patterns import find_B2, hasse_edges
from mposet.verify import (
    CLAIMS,
    DEFAULT_MAX_WITNESSES,
    MAIN_PATTERNS,
    catalan,
    count_avoiders,
    count_b2_free,
    verify_claim,
)
from mposet.weak_order import lambda_interval

SCHEMA_VERSION = "1"

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

COUNT_CAP_AVOID = 11
COUNT_CAP_B2 = 8


def export_document(M: MPoset) -> dict:
    witness = find_B2(M)
    return {
        "schema_version": SCHEMA_VERSION,
        "omega": list(M.omega.word),
        "elements": [{"i": e.i, "x": e.x, "vec": list(e.vec)} for e in M.elements],
        "covers": [list(edge) for edge in hasse_edges(M)],
        "flags": {"b2_free": witness is None},
        "witness": None if witness is None else {
            "kind": witness.kind,
            "labels": [list(lab) for lab in witness.labels],
        },
    }


_SCALAR_ARRAY = re.compile(r"\[\s*([^\[\]{}]*?)\s*\]")


def to_json(doc: dict) -> str:
    """Indented JSON with arrays of scalars kept on one line."""
    text = json.dumps(doc, indent=2)
    text = _SCALAR_ARRAY.sub(lambda m: "[" + re.sub(r",\s+", ", ", m.group(1)) + "]", text)
    return text + "\n"


def to_dot(M: MPoset) -> str:
    lines = [f'digraph "M_{format_permutation(M.omega)}" {{', "  rankdir=BT;"]
    for k, e in enumerate(M.elements):
        lines.append(f'  n{k} [label="{e}"];')
    for u, v in hasse_edges(M):
        lines.append(f"  n{u} -> n{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cmd_code(args) -> int:
    print(format_code(lehmer_code(args.perm)))
    return EXIT_OK


def _cmd_inv(args) -> int:
    print(" ".join(f"({i},{j})" for i, j in sorted(inversion_set(args.perm))))
    return EXIT_OK


def _cmd_mposet(args) -> int:
    M = build_M(args.perm)
    out = to_dot(M) if args.format == "dot" else to_json(export_document(M))
    sys.stdout.write(out)
    return EXIT_OK


def _cmd_lambda(args) -> int:
    members = sorted(lambda_interval(args.perm))
    if args.format == "json":
        sys.stdout.write(to_json({
            "schema_version": SCHEMA_VERSION,
            "omega": list(args.perm.word),
            "interval": [{"sigma": list(s.word), "code": list(lehmer_code(s))}
                         for s in members],
        }))
    else:
        for s in members:
            print(f"{format_permutation(s)}\t{format_code(lehmer_code(s))}")
    return EXIT_OK


def _cmd_check(args) -> int:
    # each side from its own module: the poset detector and the word scanner
    b2_free = find_B2(build_M(args.perm)) is None
    avoids = avoids_all(args.perm, MAIN_PATTERNS)
    agree = b2_free == avoids
    print(f"b2_free={str(b2_free).lower()} avoids_3412_3421={str(avoids).lower()} "
          f"agree={str(agree).lower()}")
    return EXIT_OK if agree else EXIT_FAIL


def _cmd_verify(args) -> int:
    report = verify_claim(args.claim, args.n, workers=args.workers,
                          max_witnesses=args.max_witnesses,
                          override_cap=args.override_cap)
    if args.format == "json":
        sys.stdout.write(to_json(report.to_dict()))
    else:
        print(report.summary())
        for ce in report.counterexamples:
            print("  " + json.dumps(ce))
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_count(args) -> int:
    if args.b2_free:
        cap = COUNT_CAP_B2
    else:
        cap = COUNT_CAP_AVOID
    if args.n > cap and not args.override_cap:
        raise ResourceLimitExceeded(
            f"count is capped at n={cap}; pass --override-cap to go further", cap)
    if args.b2_free:
        print("n,count")
        for n in range(1, args.n + 1):
            print(f"{n},{count_b2_free(n).count}")
        return EXIT_OK
    patterns = args.avoid
    with_catalan = all(p.n == 3 for p in patterns)
    print("n,count,catalan,match" if with_catalan else "n,count")
    for n in range(1, args.n + 1):
        count = count_avoiders(n, patterns).count
        if with_catalan:
            expected = catalan(n)
            print(f"{n},{count},{expected},{str(count == expected).lower()}")
        else:
            print(f"{n},{count}")
    return EXIT_OK


def _perm_arg(text: str):
    try:
        return parse_permutation(text)
    except InvalidInput as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _pattern_list(text: str):
    try:
        return [parse_permutation(tok) for tok in text.split(",")]
    except InvalidInput as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mposet",
        description="Join-irreducible posets M_w of weak-order intervals and "
                    "their B2 / 3412-3421 patterns.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("code", help="print the Lehmer code")
    p.add_argument("perm", type=_perm_arg)
    p.set_defaults(func=_cmd_code)

    p = sub.add_parser("inv", help="print the inversion set")
    p.add_argument("perm", type=_perm_arg)
    p.set_defaults(func=_cmd_inv)

    p = sub.add_parser("mposet", help="export M_w as JSON or DOT")
    p.add_argument("perm", type=_perm_arg)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=_cmd_mposet)

    p = sub.add_parser("lambda", help="list the interval [e, w] with codes")
    p.add_argument("perm", type=_perm_arg)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_lambda)

    p = sub.add_parser("check", help="compare B2-freeness with 3412/3421 avoidance")
    p.add_argument("perm", type=_perm_arg)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("verify", help="exhaustively verify a claim over S_n")
    p.add_argument("claim", choices=list(CLAIMS))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--max-witnesses", type=int, default=DEFAULT_MAX_WITNESSES)
    p.add_argument("--override-cap", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("count", help="CSV of pattern-class sizes for n = 1..N")
    p.add_argument("--n", type=int, required=True, help="largest n")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--avoid", type=_pattern_list,
                       help="comma-separated patterns, e.g. 3412,3421")
    group.add_argument("--b2-free", action="store_true")
    p.add_argument("--override-cap", action="store_true")
    p.set_defaults(func=_cmd_count)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitExceeded as exc:
        print(f"mposet: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InvalidInput as exc:
        print(f"mposet: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
