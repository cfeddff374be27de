"""Command-line front end.

Exit codes: 0 success / all checks pass, 1 domain or verification failure,
2 usage or parse error.  All output is deterministic given argv.

Two environment knobs:
  FIBCOMP_VERIFY_BOUND  materialization bound for `verify` (default 20)
  FIBCOMP_NMAX          default n_max for `identity` (default 30)
"""

from __future__ import annotations

import argparse
import os
import sys
from collections.abc import Iterable

from . import codec
from .bijections import (
    BIJECTIONS,
    InternalInvariantError,
    Origin,
    TaggedSource,
    verify_bijection,
)
from .core import (
    Cls,
    DomainError,
    ParseError,
    format_composition,
    parse_composition,
)
from .enumeration import count, enumerate_compositions, enumerate_range
from .identities import CHECKS, DEFAULT_N_MAX, IDENTITY_IDS
from .render import RenderSpec, render

_CLASS_NAMES = {spec.value: spec for spec in Cls}


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"{name} must be an integer, got {raw!r}")


def _stdin_lines() -> Iterable[str]:
    for line in sys.stdin:
        line = line.strip()
        if line:
            yield line


def _inputs(arg: str | None) -> Iterable[str]:
    return [arg] if arg is not None else _stdin_lines()


def cmd_enumerate(args: argparse.Namespace) -> int:
    spec = _CLASS_NAMES[args.cls]
    if args.rank_range is not None:
        try:
            lo_s, hi_s = args.rank_range.split("..")
            lo, hi = int(lo_s), int(hi_s)
        except ValueError:
            raise ParseError(f"bad rank range {args.rank_range!r}, expected A..B")
        stream = enumerate_range(spec, args.n, lo, hi)
    else:
        stream = enumerate_compositions(spec, args.n)
    emitted = 0
    for c in stream:
        if args.limit is not None and emitted >= args.limit:
            break
        print(format_composition(c))
        emitted += 1
    return 0


def cmd_count(args: argparse.Namespace) -> int:
    print(count(_CLASS_NAMES[args.cls], args.n))
    return 0


def cmd_codec(args: argparse.Namespace) -> int:
    if args.op == "decode":
        if args.input is None and args.board is not None:
            words = [""]
        else:
            words = _inputs(args.input)
        for word in words:
            board = args.board if args.board is not None else len(word) + 1
            if board != len(word) + 1:
                raise ParseError(
                    f"board {board} inconsistent with word length {len(word)}"
                )
            print(format_composition(codec.decode(codec.CutJoinSeq(word, board))))
        return 0
    for text in _inputs(args.input):
        c = parse_composition(text)
        if args.op == "encode":
            print(codec.encode(c).letters)
        else:
            print(format_composition(codec.conjugate(c)))
    return 0


def cmd_map(args: argparse.Namespace) -> int:
    spec = BIJECTIONS[args.name]
    operands = list(args.operands)
    if args.direction == "fwd":
        if not operands:
            raise ParseError("fwd needs an origin tag")
        tag_text, rest = operands[0], operands[1:]
        try:
            origin = Origin(tag_text)
        except ValueError:
            raise ParseError(f"unknown origin tag {tag_text!r}")
        if len(rest) > 1:
            raise ParseError("too many operands")
        for text in _inputs(rest[0] if rest else None):
            src = TaggedSource(origin, parse_composition(text))
            print(format_composition(spec.forward(src, args.n)))
    else:
        if len(operands) > 1:
            raise ParseError("too many operands")
        for text in _inputs(operands[0] if operands else None):
            src = spec.backward(parse_composition(text), args.n)
            print(f"{src.origin.value} {format_composition(src.payload)}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    bound = _env_int("FIBCOMP_VERIFY_BOUND", 20)
    names = list(BIJECTIONS) if args.target == "all" else [args.target]
    if args.n_max > bound:
        print(
            f"n_max {args.n_max} exceeds materialization bound {bound}",
            file=sys.stderr,
        )
        return 2
    if any(args.n_max < BIJECTIONS[name].min_n for name in names):
        print(f"n_max {args.n_max} is below the map's validity range", file=sys.stderr)
        return 2
    failed = False
    for name in names:
        for n in range(BIJECTIONS[name].min_n, args.n_max + 1):
            report = verify_bijection(name, n, bound=bound)
            print(report.summary())
            if not report.passed:
                print(report.failures[0])
                failed = True
                break
        if failed:
            break
    return 1 if failed else 0


def cmd_identity(args: argparse.Namespace) -> int:
    n_max = args.n_max if args.n_max is not None else _env_int(
        "FIBCOMP_NMAX", DEFAULT_N_MAX
    )
    ids = list(IDENTITY_IDS) if args.id == "all" else [args.id]
    ok = True
    for ident in ids:
        if len(ids) > 1:
            print(f"== {ident} ==")
        report = CHECKS[ident](n_max)
        for n, lhs, rhs in report.rows:
            print(f"{n} {lhs} {rhs} {'ok' if lhs == rhs else 'FAIL'}")
        for failure in report.failures:
            print(f"cross-check FAIL: {failure}")
        ok = ok and report.passed
    return 0 if ok else 1


def cmd_render(args: argparse.Namespace) -> int:
    c = parse_composition(args.composition)
    spec = RenderSpec(
        fmt="svg" if args.svg else "ascii",
        shading=args.shade,
        annotation=args.annotate,
    )
    sys.stdout.write(render(c, spec))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibcomp",
        description="Integer compositions as tilings: enumeration, "
        "cut/join codec, Fibonacci bijections, identity checks.",
        epilog="Environment: FIBCOMP_VERIFY_BOUND (verify materialization "
        "bound, default 20), FIBCOMP_NMAX (default identity n_max, 30).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list class-compositions of n")
    p.add_argument("cls", choices=sorted(_CLASS_NAMES))
    p.add_argument("n", type=int)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--rank-range", default=None, metavar="A..B")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", help="count class-compositions of n")
    p.add_argument("cls", choices=sorted(_CLASS_NAMES))
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("codec", help="cut/join encode, decode, conjugate")
    p.add_argument("op", choices=("encode", "decode", "conjugate"))
    p.add_argument("input", nargs="?", default=None,
                   help="composition or cut/join word; stdin batch if omitted")
    p.add_argument("--board", type=int, default=None,
                   help="board length (needed to decode the empty word)")
    p.set_defaults(func=cmd_codec)

    p = sub.add_parser("map", help="apply a named bijection")
    p.add_argument("name", choices=sorted(BIJECTIONS))
    p.add_argument("direction", choices=("fwd", "bwd"))
    p.add_argument("operands", nargs="*",
                   help="fwd: TAG [COMPOSITION]; bwd: [COMPOSITION]; "
                   "stdin batch if the composition is omitted")
    p.add_argument("--n", type=int, required=True, help="target total")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("verify", help="exhaustively verify a bijection")
    p.add_argument("target", choices=sorted(BIJECTIONS) + ["all"])
    p.add_argument("n_max", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("identity", help="check a counting identity")
    p.add_argument("id", choices=list(IDENTITY_IDS) + ["all"])
    p.add_argument("n_max", type=int, nargs="?", default=None)
    p.set_defaults(func=cmd_identity)

    p = sub.add_parser("render", help="draw the tiling of a composition")
    p.add_argument("composition")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--ascii", action="store_true")
    fmt.add_argument("--svg", action="store_true")
    p.add_argument("--shade", choices=("none", "even-gray"), default="none")
    p.add_argument("--annotate", choices=("none", "cutjoin", "lengths"),
                   default="none")
    p.set_defaults(func=cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, InternalInvariantError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
