"""Command-line front end.

Exit codes: 0 success / equal / trivial / obstructed, 1 distinct / essential /
witness found, 2 parse or format error, 3 unknown generator or index violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import links, obstruction
from .magnus import UnassignedGeneratorError, expand
from .words import UnknownGeneratorError, WordSyntaxError, numbered_alphabet, parse_word

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_PARSE = 2
EXIT_GENERATOR = 3


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _parse(text: str, n: int):
    try:
        return parse_word(text, numbered_alphabet(n))
    except WordSyntaxError as e:
        raise CliError(f"parse error: {e}", EXIT_PARSE) from e
    except UnknownGeneratorError as e:
        raise CliError(f"error: {e} (--vars {n})", EXIT_GENERATOR) from e


def _load_link(args):
    if args.builtin:
        try:
            return links.builtin(args.builtin)
        except KeyError as e:
            raise CliError(f"error: {e.args[0]}", EXIT_PARSE) from e
    try:
        text = Path(args.link).read_text(encoding="utf-8")
    except OSError as e:
        raise CliError(f"error: cannot read {args.link}: {e.strerror}", EXIT_PARSE) from e
    try:
        return links.parse_link(text, name=args.link)
    except links.LinkFormatError as e:
        raise CliError(f"malformed link file: {e}", EXIT_PARSE) from e


def cmd_expand(args, out) -> int:
    w = _parse(args.word, args.vars)
    print(expand(w, args.vars), file=out)
    return EXIT_OK


def cmd_equal(args, out) -> int:
    u = _parse(args.word1, args.vars)
    v = _parse(args.word2, args.vars)
    same = expand(u, args.vars) == expand(v, args.vars)
    print("equal" if same else "distinct", file=out)
    return EXIT_OK if same else EXIT_NEGATIVE


def _int_list(text: str) -> list:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def cmd_mu(args, out) -> int:
    pres = _load_link(args)
    try:
        value = links.mu(pres, args.seq, args.target)
    except links.IndexViolation as e:
        raise CliError(f"error: {e}", EXIT_GENERATOR) from e
    print(value, file=out)
    return EXIT_OK


def cmd_trivial(args, out) -> int:
    pres = _load_link(args)
    if links.is_homotopically_trivial(pres):
        print("homotopically-trivial", file=out)
        return EXIT_OK
    print(f"essential ({links.first_nonvanishing_mu(pres)})", file=out)
    return EXIT_NEGATIVE


def cmd_verify_ab(args, out) -> int:
    l1 = None
    if args.l1_expr is not None:
        try:
            l1 = parse_word(args.l1_expr, obstruction.ALPHABET)
        except WordSyntaxError as e:
            raise CliError(f"parse error: {e}", EXIT_PARSE) from e
        except UnknownGeneratorError as e:
            raise CliError(f"error: {e}", EXIT_GENERATOR) from e
    report = obstruction.verify(obstruction.ConstraintSpec(args.standard), l1)
    if args.format == "machine":
        print(json.dumps(report.to_dict(), sort_keys=True), file=out)
    else:
        print(report.to_text(), file=out)
    return EXIT_OK if report.verdict == "nonzero-constant" else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="linkhomotopy",
        description="Magnus expansions, Milnor-group equality, mu-invariants and "
        "the A-B relative-slice obstruction.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("expand", help="print the Magnus expansion of a word")
    e.add_argument("--vars", type=int, required=True, metavar="N")
    e.add_argument("word")
    e.set_defaults(func=cmd_expand)

    q = sub.add_parser("equal", help="decide equality in the free Milnor group")
    q.add_argument("--vars", type=int, required=True, metavar="N")
    q.add_argument("word1")
    q.add_argument("word2")
    q.set_defaults(func=cmd_equal)

    for name, func, hlp in (("mu", cmd_mu, "print one mu-invariant"),
                            ("trivial", cmd_trivial, "decide homotopy triviality")):
        s = sub.add_parser(name, help=hlp)
        src = s.add_mutually_exclusive_group(required=True)
        src.add_argument("--link", metavar="FILE")
        src.add_argument("--builtin", metavar="NAME",
                         help="one of " + ", ".join(links.BUILTINS))
        if name == "mu":
            s.add_argument("--seq", type=_int_list, required=True, metavar="I1,I2,...")
            s.add_argument("--target", type=int, required=True)
        s.set_defaults(func=func)

    v = sub.add_parser("verify-ab", help="run the relative-slice obstruction check")
    v.add_argument("--standard", dest="standard", action="store_true", default=True)
    v.add_argument("--no-standard", dest="standard", action="store_false")
    v.add_argument("--format", choices=("text", "machine"), default="text")
    v.add_argument("--l1-expr", default=None, metavar="WORD",
                   help="alternative word over m2..m6, m_a, m_b, m_c")
    v.set_defaults(func=cmd_verify_ab)
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except CliError as e:
        print(e, file=sys.stderr)
        return e.code
    except UnassignedGeneratorError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_GENERATOR


if __name__ == "__main__":
    sys.exit(main())
