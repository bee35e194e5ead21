"""Command line front end.

Every command reads one tangle file (``-`` for standard input) and writes
machine-readable output.  Exit status is 0 on success, 1 for a domain error
(invalid diagram, unsupported operation) and 2 for usage or syntax errors.
"""

from __future__ import annotations

import argparse
import sys

from . import codec
from .invariants import self_crossing_wriggle, vlk, wriggle_number, writhe
from .moves import random_tangle, scramble
from .tangle import closure, connected_sum, reverse_orientation
from .vassiliev import extension, order_witness_search


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _load(path: str):
    try:
        return codec.parse_tangle(_read(path))
    except codec.GaussSyntaxError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _poly(p, fmt: str) -> str:
    return codec.polynomial_to_json(p) if fmt == "json" else codec.polynomial_to_text(p)


def cmd_validate(args) -> str:
    try:
        d = codec.parse_tangle(_read(args.path))
    except codec.GaussSyntaxError as exc:
        raise UsageError(f"{args.path}: {exc}") from exc
    except codec.SemanticError as exc:
        sys.stdout.write("".join(f"{v}\n" for v in exc.report.violations))
        raise SystemExit(1)
    line = f"ok components={len(d.components)} crossings={len(d.crossings)}"
    if d.double_points:
        line += f" double_points={len(d.double_points)}"
    return line + "\n"


def cmd_invariant(args) -> str:
    d = _load(args.path)
    which, *rest = args.which
    if which in ("vlk", "wriggle"):
        if len(rest) != 2:
            raise UsageError(f"--which {which} needs two component indices")
        try:
            a, b = (int(x) for x in rest)
        except ValueError:
            raise UsageError("component indices must be integers") from None
        value = (vlk if which == "vlk" else wriggle_number)(d, a, b)
        return f"{value}\n"
    if rest:
        raise UsageError(f"--which {which} takes no arguments")
    if which == "writhe":
        return f"{writhe(d)}\n"
    if which == "selfwriggle":
        return _poly(self_crossing_wriggle(d), args.format) + "\n"
    raise UsageError(f"unknown invariant {which!r}")


def cmd_scramble(args) -> str:
    return codec.serialize_tangle(scramble(_load(args.path), args.moves, args.seed))


def cmd_vassiliev(args) -> str:
    return _poly(extension(_load(args.path)), args.format) + "\n"


def _one_line(d) -> str:
    return " ; ".join(codec.serialize_tangle(d).splitlines()[1:])


def cmd_witness_search(args) -> str:
    witnesses = order_witness_search(args.bound, args.components)
    if args.target is not None:
        try:
            target = codec.parse_polynomial(args.target)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        hits = [w for w in witnesses if w.extension == target]
        if hits:
            witnesses = hits
        else:
            print(f"target {codec.polynomial_to_text(target)} not attained at bound "
                  f"{args.bound}; listing the smallest witnesses", file=sys.stderr)
            if witnesses:
                smallest = len(witnesses[0].tangle.ids)
                witnesses = [w for w in witnesses if len(w.tangle.ids) == smallest]
    return "".join(
        f"{codec.polynomial_to_text(w.extension)}\t{_one_line(w.tangle)}\n" for w in witnesses)


def cmd_connect(args) -> str:
    d, plan = connected_sum(_load(args.top), _load(args.bottom))
    pairs = ", ".join(f"{i}->{j}" for i, j in sorted(plan.sigma.items()))
    return codec.serialize_tangle(d) + f"# sigma: {pairs}\n"


def cmd_reverse(args) -> str:
    d = _load(args.path)
    if not 0 <= args.component < len(d.components):
        raise UsageError(f"component {args.component} out of range")
    return codec.serialize_tangle(reverse_orientation(d, args.component))


def cmd_closure(args) -> str:
    return codec.serialize_tangle(closure(_load(args.path)))


def cmd_random(args) -> str:
    if min(args.closed, args.long, args.crossings) < 0:
        raise UsageError("counts must be non-negative")
    return codec.serialize_tangle(random_tangle(args.closed, args.long, args.crossings, args.seed))


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vwriggle", description="Self-crossing wriggle polynomial of virtual tangles.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a tangle file")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("invariant", help="compute an invariant")
    p.add_argument("path")
    p.add_argument("--which", nargs="+", default=["selfwriggle"],
                   metavar="NAME", help="selfwriggle | writhe | vlk A B | wriggle A B")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("scramble", help="apply random Reidemeister moves")
    p.add_argument("path")
    p.add_argument("--moves", type=int, required=True)
    p.add_argument("--seed", type=_seed, required=True)
    p.set_defaults(func=cmd_scramble)

    p = sub.add_parser("vassiliev", help="extension on a tangle with double points")
    p.add_argument("path")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_vassiliev)

    p = sub.add_parser("witness-search", help="one-double-point tangles with nonzero extension")
    p.add_argument("--bound", type=int, required=True, help="maximum classical crossings")
    p.add_argument("--components", type=int, default=1)
    p.add_argument("--target", help="only report witnesses with this extension")
    p.set_defaults(func=cmd_witness_search)

    p = sub.add_parser("connect", help="stack TOP above BOTTOM")
    p.add_argument("top")
    p.add_argument("bottom")
    p.set_defaults(func=cmd_connect)

    p = sub.add_parser("reverse", help="reverse one component")
    p.add_argument("path")
    p.add_argument("--component", type=int, required=True)
    p.set_defaults(func=cmd_reverse)

    p = sub.add_parser("closure", help="close a one-component long tangle")
    p.add_argument("path")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("random", help="random valid tangle")
    p.add_argument("--closed", type=int, default=1)
    p.add_argument("--long", type=int, default=0)
    p.add_argument("--crossings", type=int, required=True)
    p.add_argument("--seed", type=_seed, required=True)
    p.set_defaults(func=cmd_random)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except UsageError as exc:
        print(f"vwriggle: {exc}", file=sys.stderr)
        return 2
    except codec.SemanticError as exc:
        for v in exc.report.violations:
            print(v, file=sys.stderr)
        return 1
    except (ValueError, IndexError) as exc:
        print(f"vwriggle: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:
        return int(exc.code)
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
