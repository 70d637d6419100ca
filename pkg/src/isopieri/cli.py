"""Command-line interface: `isopieri <command> --type D --m 2 --n 2 ...`."""
from __future__ import annotations

import argparse
import json
import logging
import sys

from . import selfcheck
from .bruhat import DEFAULT_SIZE_CAP, BruhatPoset, leq, preceq, register_poset
from .cache import load_or_build
from .diagram import analyze
from .errors import DomainError, InvalidParameters
from .grassmannian import GrassmannianSpec, enumerate_symbols, make_spec, parse_symbol
from .ktheory import (
    SpecialSchubert,
    triple_intersection,
    triple_intersection_printed,
    triple_intersection_unified,
    validate_special,
)
from .pieri import build_matrices, pieri_coefficient, pieri_row
from .projection import shrink, z_data

FORMATS = ("text", "json", "csv", "dot")


def fmt(P) -> str:
    return "[" + ",".join(map(str, P)) + "]"


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", dest="lie_type", choices=["B", "C", "D", "b", "c", "d"])
    common.add_argument("--m", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--P", help="comma-separated symbol, e.g. 2,3,4,10")
    common.add_argument("--T")
    common.add_argument("--Q")
    common.add_argument("--r", type=int, help="codimension of the special class")
    common.add_argument("--tilde", action="store_true", help="second type-D special class at r = k")
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--cache-dir", default=None)
    common.add_argument("--no-cache", action="store_true")
    common.add_argument("--size-cap", type=int, default=DEFAULT_SIZE_CAP)

    parser = argparse.ArgumentParser(prog="isopieri", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "symbols": "list Schubert symbols in canonical order with codimensions",
        "order": "query T <= P, or print the whole Hasse diagram",
        "diagram": "Richardson diagram of (P, T) with cuts, L and Q",
        "zdata": "linear and quadratic equations of Z_{P,T}",
        "shrink": "shrunken symbol with the same Z-data",
        "triple": "triple intersection number, per-type and unified",
        "pieri": "Pieri coefficient, row, or full table",
        "selfcheck": "run the invariant sweeps",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, parents=[common], help=text)
        if name == "selfcheck":
            p.add_argument("--budget", type=int, default=selfcheck.DEFAULT_BUDGET,
                           help="skip spaces with more Schubert symbols than this")
            p.add_argument("--verbose", action="store_true")
    return parser


def _spec(args, parser) -> GrassmannianSpec:
    missing = [flag for flag, v in (("--type", args.lie_type), ("--m", args.m), ("--n", args.n)) if v is None]
    if missing:
        parser.error(f"{args.command} needs {', '.join(missing)}")
    return make_spec(args.lie_type, args.m, args.n)


def _symbol(spec, args, parser, name: str):
    text = getattr(args, name)
    if text is None:
        parser.error(f"{args.command} needs --{name}")
    return parse_symbol(spec, text)


def _special(spec, args, parser) -> SpecialSchubert:
    if args.r is None:
        parser.error(f"{args.command} needs --r")
    special = SpecialSchubert(args.r, args.tilde)
    validate_special(spec, special)
    return special


def _poset(spec, args) -> BruhatPoset:
    cache_dir = None if args.no_cache else args.cache_dir
    poset, status = load_or_build(spec, cache_dir, args.size_cap)
    logging.getLogger(__name__).info("poset cache: %s", status)
    register_poset(poset)
    return poset


def cmd_symbols(spec, args, parser, out) -> int:
    poset = _poset(spec, args)
    if args.format == "json":
        out.write(_dump([{"symbol": list(P), "codim": poset.codim(P)} for P in poset.symbols]))
    else:
        for P in poset.symbols:
            out.write(f"{fmt(P)}\t{poset.codim(P)}\n")
    return 0


def cmd_order(spec, args, parser, out) -> int:
    if args.P and args.T:
        P, T = _symbol(spec, args, parser, "P"), _symbol(spec, args, parser, "T")
        result = {"T": list(T), "P": list(P), "leq": leq(T, P), "preceq": preceq(spec, T, P)}
        if args.format == "json":
            out.write(_dump(result))
        else:
            rel = "is" if result["preceq"] else "is not"
            out.write(f"{fmt(T)} {rel} below {fmt(P)} in the Bruhat order (componentwise <=: {result['leq']})\n")
        return 0
    poset = _poset(spec, args)
    if args.format == "dot":
        out.write(poset.to_dot())
    elif args.format == "json":
        out.write(_dump(poset.to_json()))
    else:
        for lo, hi in poset.covers:
            out.write(f"{fmt(poset.symbols[lo])} < {fmt(poset.symbols[hi])}\n")
    return 0


def cmd_diagram(spec, args, parser, out) -> int:
    P, T = _symbol(spec, args, parser, "P"), _symbol(spec, args, parser, "T")
    report = analyze(spec, P, T)
    if args.format == "json":
        out.write(_dump(report.to_json()))
    else:
        out.write(report.render())
    return 0


def cmd_zdata(spec, args, parser, out) -> int:
    P, T = _symbol(spec, args, parser, "P"), _symbol(spec, args, parser, "T")
    zd = z_data(spec, P, T)
    if args.format == "json":
        out.write(_dump(zd.to_json()))
    else:
        out.write(f"linear: {list(zd.linear_vars)}\nquadratic gaps: {[list(g) for g in zd.quad_gaps]}\n")
        out.write(f"l = {zd.l}, q = {zd.q}\n")
    return 0


def cmd_shrink(spec, args, parser, out) -> int:
    P, T = _symbol(spec, args, parser, "P"), _symbol(spec, args, parser, "T")
    S = shrink(spec, P, T)
    out.write(_dump({"shrink": list(S)}) if args.format == "json" else fmt(S) + "\n")
    return 0


def cmd_triple(spec, args, parser, out) -> int:
    P, T = _symbol(spec, args, parser, "P"), _symbol(spec, args, parser, "T")
    special = _special(spec, args, parser)
    per_type = triple_intersection(spec, P, T, special)
    unified = triple_intersection_unified(spec, P, T, special)
    printed = triple_intersection_printed(spec, P, T, special)
    if args.format == "json":
        out.write(_dump({"per_type": per_type, "unified": unified, "printed_reading": printed,
                         "agree": per_type == unified}))
    else:
        out.write(f"per-type: {per_type}\nunified: {unified}\n")
        if printed != per_type:
            out.write(f"literal unified predicates give {printed} (known erratum)\n")
    if per_type != unified:
        print("error: per-type and unified formulas disagree", file=sys.stderr)
        return 1
    return 0


def cmd_pieri(spec, args, parser, out) -> int:
    special = _special(spec, args, parser)
    poset = _poset(spec, args)
    if args.P and args.Q:
        P, Q = _symbol(spec, args, parser, "P"), _symbol(spec, args, parser, "Q")
        value = pieri_coefficient(spec, P, Q, special, poset)
        out.write(_dump({"P": list(P), "Q": list(Q), "coefficient": value}) if args.format == "json" else f"{value}\n")
        return 0
    if args.P:
        row = pieri_row(spec, _symbol(spec, args, parser, "P"), special, poset)
        if args.format == "json":
            out.write(_dump(row.to_json()))
        else:
            for Q, c in sorted(row.coefficients.items()):
                out.write(f"{fmt(Q)}\t{c}\n")
        return 0
    mats = build_matrices(spec, special, poset)
    if args.format == "json":
        out.write(_dump(mats.to_json()))
    elif args.format == "csv":
        out.write(mats.to_csv())
    else:
        for P, row in zip(mats.symbols, mats.C_r):
            terms = [f"{c}*{fmt(Q)}" for Q, c in zip(mats.symbols, row) if c]
            out.write(f"{fmt(P)}: {' + '.join(terms) if terms else '0'}\n")
    return 0


def cmd_selfcheck(args, out) -> int:
    results = selfcheck.run(budget=args.budget)
    failed = 0
    for res in results:
        out.write(res.line() + "\n")
        if args.verbose:
            for note in res.notes[1:]:
                out.write(f"       {note}\n")
        failed += not res.passed
    out.write(f"{len(results) - failed} passed, {failed} failed\n")
    return 1 if failed else 0


COMMANDS = {
    "symbols": cmd_symbols,
    "order": cmd_order,
    "diagram": cmd_diagram,
    "zdata": cmd_zdata,
    "shrink": cmd_shrink,
    "triple": cmd_triple,
    "pieri": cmd_pieri,
}


def run(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    allowed = {
        "order": ("text", "json", "dot"),
        "pieri": ("text", "json", "csv"),
        "selfcheck": ("text",),
    }.get(args.command, ("text", "json"))
    if args.format not in allowed:
        parser.error(f"--format {args.format} is not available for {args.command}")
    try:
        if args.command == "selfcheck":
            return cmd_selfcheck(args, out)
        spec = _spec(args, parser)
        return COMMANDS[args.command](spec, args, parser, out)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
