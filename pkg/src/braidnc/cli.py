"""
Command-line front end.

Exit codes: 0 success (or "conjugate"/"equal"), 1 negative verdict,
2 usage error, 3 internal invariant failure.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import draw, engine, ncp, periodic, sss
from .engine import NormalForm
from .periodic import NonConjugate
from .words import ParseError, parse_word

EXIT_OK = 0
EXIT_VERDICT = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidnc",
        description="Dual Garside engine for braid groups: normal forms, "
        "noncrossing partitions, and conjugacy of periodic braids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_n(p):
        p.add_argument("-n", type=int, required=True, help="strand count (>= 2)")

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("nf", help="left normal form of a braid word")
    add_n(p)
    add_format(p)
    p.add_argument("word")

    p = sub.add_parser("eq", help="decide equality of two braid words")
    add_n(p)
    add_format(p)
    p.add_argument("word1")
    p.add_argument("word2")

    p = sub.add_parser("classify", help="periodicity class of a braid word")
    add_n(p)
    add_format(p)
    p.add_argument("word")

    p = sub.add_parser("csp", help="conjugacy search against epsilon^k")
    add_n(p)
    add_format(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("word")

    p = sub.add_parser("sss", help="super summit sets of epsilon^d")
    ssub = p.add_subparsers(dest="sss_command", required=True)
    q = ssub.add_parser("count", help="exact cardinality")
    add_n(q)
    q.add_argument("--d", type=int, required=True)
    q = ssub.add_parser("enumerate", help="emit the table as JSON lines")
    add_n(q)
    q.add_argument("--d", type=int, required=True)
    q.add_argument("--output", help="write to a file instead of stdout")
    q = ssub.add_parser("check", help="membership test for a braid word")
    add_n(q)
    add_format(q)
    q.add_argument("--d", type=int, required=True)
    q.add_argument("word")

    p = sub.add_parser("zeta", help="zeta polynomial of the noncrossing partition lattice")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)

    p = sub.add_parser("oracle-sss", help="brute-force super summit set (small n)")
    add_n(p)
    p.add_argument("word")

    p = sub.add_parser("blocks", help="round reduction blocks S_k")
    add_n(p)
    add_format(p)
    p.add_argument("--d", type=int, required=True)

    p = sub.add_parser("draw", help="chord diagram of a simple element")
    add_n(p)
    p.add_argument("word")
    p.add_argument("--output", default="simple.svg")

    return parser


def _nf(args) -> NormalForm:
    return engine.normalize(parse_word(args.word, args.n))


def _run(args) -> int:
    if args.command == "nf":
        x = _nf(args)
        print(json.dumps(x.to_json()) if args.format == "json" else x.text())
        return EXIT_OK

    if args.command == "eq":
        same = engine.equals(
            engine.normalize(parse_word(args.word1, args.n)),
            engine.normalize(parse_word(args.word2, args.n)),
        )
        print(json.dumps({"equal": same}) if args.format == "json" else str(same).lower())
        return EXIT_OK if same else EXIT_VERDICT

    if args.command == "classify":
        cls = periodic.classify_periodic(_nf(args))
        if args.format == "json":
            print(json.dumps({"kind": cls.kind, "m": cls.m}))
        elif cls.is_periodic():
            print(f"{cls.kind} {cls.m}")
        else:
            print(cls.kind)
        return EXIT_OK

    if args.command == "csp":
        result = periodic.solve_csp(_nf(args), args.k)
        if isinstance(result, NonConjugate):
            print(json.dumps(result.to_json()) if args.format == "json"
                  else f"not conjugate: {result.reason}")
            return EXIT_VERDICT
        if not result.verified:
            print("certificate failed verification", file=sys.stderr)
            return EXIT_INTERNAL
        if args.format == "json":
            print(json.dumps(result.to_json()))
        else:
            print(f"conjugate to e^{args.k} by gamma = {result.gamma.text()}")
        return EXIT_OK

    if args.command == "sss":
        if args.sss_command == "count":
            print(sss.count_sss(args.n, args.d))
            return EXIT_OK
        if args.sss_command == "enumerate":
            table = sss.enumerate_sss(args.n, args.d)
            if args.output:
                with open(args.output, "w") as fh:
                    for line in table.json_lines():
                        fh.write(line + "\n")
            else:
                for line in table.json_lines():
                    print(line)
            return EXIT_OK
        if args.sss_command == "check":
            member = sss.verify_membership(_nf(args), args.n, args.d)
            print(json.dumps({"member": member}) if args.format == "json"
                  else str(member).lower())
            return EXIT_OK if member else EXIT_VERDICT

    if args.command == "zeta":
        print(ncp.zeta(args.d, args.r))
        return EXIT_OK

    if args.command == "oracle-sss":
        found = engine.sss_brute_force(_nf(args))
        for x in sorted(found, key=NormalForm.sort_key):
            print(x.text())
        return EXIT_OK

    if args.command == "blocks":
        blocks = periodic.round_reduction_blocks(args.n, args.d)
        if args.format == "json":
            print(json.dumps([sorted(b) for b in blocks]))
        else:
            print(" ".join("{" + ",".join(map(str, sorted(b))) + "}" for b in blocks))
        return EXIT_OK

    if args.command == "draw":
        x = _nf(args)
        if x.inf != 0 or x.canonical_length > 1:
            raise UsageError("draw expects a word representing a simple element")
        simple = x.factors[0] if x.factors else ncp.NoncrossingPartition.identity(args.n)
        path = draw.chord_diagram(simple, args.output, title=simple.text())
        print(path)
        return EXIT_OK

    raise UsageError(f"unknown command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return _run(args)
    except (ParseError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (AssertionError, RuntimeError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
