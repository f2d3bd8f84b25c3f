"""Command-line interface.

Exit status: 0 success, 1 a verification found a monochromatic clique,
2 bad usage, unreadable input, or a failed precondition.
"""

from __future__ import annotations

import argparse
import os
import sys
from importlib import resources

from . import __version__
from .bounds import derive, explain, load_table
from .catalog import SEEDS, Metadata, read_coloring, seed, seed_metadata, seed_text, write_coloring
from .constructions import theorem1_construct, theorem2_construct
from .errors import RamseyError
from .verifier import Status, verify

TABLE_ENV = "RAMSEY_BOUNDS_TABLE"

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_USAGE = 2


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _fmt(vec) -> str:
    return ",".join(str(k) for k in vec)


def _base_bounds(args, meta: Metadata):
    bounds = args.base_bounds or meta.bounds
    if bounds is None:
        raise RamseyError(f"{args.base} declares no bounds; pass --base-bounds")
    return bounds


def cmd_construct(args) -> int:
    base, meta = read_coloring(args.base)
    bounds = _base_bounds(args, meta)
    if args.theorem == "thm1":
        result = theorem1_construct(base, bounds, args.k1)
        print(f"theorem 1: ({args.k1}-1)*{base.n} = {result.coloring.n} vertices")
        source = f"theorem 1 over {os.path.basename(args.base)} with k1={args.k1}"
    else:
        result = theorem2_construct(base, bounds, args.t, args.stretched)
        print(f"theorem 2: ({args.t}+1)*{base.n} = {result.coloring.n} vertices")
        source = f"theorem 2 over {os.path.basename(args.base)} with t={args.t}, stretched={args.stretched}"
    print(f"claimed bounds: {_fmt(result.claimed_bounds)}")
    write_coloring(args.output, result.coloring, Metadata(result.claimed_bounds, source))
    print(f"wrote {args.output}")
    return EXIT_OK


def cmd_verify(args) -> int:
    c, meta = read_coloring(args.file)
    bounds = args.bounds or meta.bounds
    if bounds is None:
        raise RamseyError(f"{args.file} declares no bounds; pass --bounds")
    report = verify(c, bounds, budget=args.budget)
    for res in report.per_color:
        line = f"color {res.color}: K{res.k} "
        if res.status is Status.CERTIFIED:
            line += "certified absent"
        elif res.status is Status.COUNTEREXAMPLE:
            line += "counterexample " + " ".join(str(v) for v in res.witness)
        else:
            line += "inconclusive (budget exhausted)"
        print(f"{line}  nodes={res.nodes} time={res.elapsed:.3f}s")
    if report.counterexamples:
        print("result: counterexample found")
        return EXIT_VIOLATED
    if not report.certified:
        print("result: inconclusive")
        return EXIT_USAGE
    print(f"result: n={c.n} certified for ({_fmt(bounds)})")
    return EXIT_OK


def _default_table():
    path = os.environ.get(TABLE_ENV)
    if path:
        return path
    return resources.files("ramsey_bounds").joinpath("data", "known_bounds.txt")


def cmd_bound(args) -> int:
    table = load_table(args.table or _default_table())
    tree = derive(args.target, table)
    print(f"R({_fmt(args.target)}) >= {tree.lower_bound}")
    if args.explain:
        print(explain(tree))
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.action == "list":
        for name in SEEDS:
            c, bounds = seed(name)
            print(f"{name:10s} n={c.n:<4d} bounds={_fmt(bounds)}  {seed_metadata(name).source}")
        return EXIT_OK
    text = seed_text(args.name)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.output}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ramsey-bounds",
        description="Build, verify and derive lower-bound colorings for multicolor Ramsey numbers.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser("construct", help="build a larger coloring from a base coloring")
    kinds = construct.add_subparsers(dest="theorem", required=True)
    thm1 = kinds.add_parser("thm1", help="k1-1 copies joined by a new color 1")
    thm1.add_argument("--k1", type=int, required=True)
    thm2 = kinds.add_parser("thm2", help="(t+1) x (t+1) block construction")
    thm2.add_argument("--t", type=int, required=True)
    thm2.add_argument("--stretched", type=int, required=True, help="base color whose bound grows")
    for p in (thm1, thm2):
        p.add_argument("--base", required=True, help="base coloring file")
        p.add_argument("--base-bounds", type=_int_list, help="override the bounds declared in the base file")
        p.add_argument("-o", "--output", required=True)
        p.set_defaults(func=cmd_construct)

    ver = sub.add_parser("verify", help="certify that no color i contains K_{k_i}")
    ver.add_argument("file")
    ver.add_argument("--bounds", type=_int_list, help="k1,...,kr (default: the file's declared bounds)")
    ver.add_argument("--budget", type=int, help="search-node budget per color")
    ver.set_defaults(func=cmd_verify)

    bnd = sub.add_parser("bound", help="derive a lower bound from a table of known bounds")
    bnd.add_argument("--target", type=_int_list, required=True)
    bnd.add_argument("--table", help=f"known-bounds file (default: ${TABLE_ENV}, else the shipped table)")
    bnd.add_argument("--explain", action="store_true")
    bnd.set_defaults(func=cmd_bound)

    cat = sub.add_parser("catalog", help="list or export the shipped seed colorings")
    actions = cat.add_subparsers(dest="action", required=True)
    actions.add_parser("list").set_defaults(func=cmd_catalog)
    get = actions.add_parser("get")
    get.add_argument("name")
    get.add_argument("-o", "--output")
    get.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (RamseyError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
