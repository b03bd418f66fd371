"""Command line: ``monobetti {betti,graph,polarize,complex,selftest}``.

Exit codes: 0 success, 1 usage error, 2 parse error or rejected input
(zero or unit ideal), 3 engines disagree, 4 resource cap exceeded.
"""
from __future__ import annotations

import argparse
import os
import sys

from . import report
from .betti import has_linear_resolution, invariants
from .complexes import complex_from_squarefree_ideal
from .corpus import random_corpus
from .errors import ParseError, ResourceCapError, UnitIdealError, ZeroIdealError
from .fileformats import format_graph, format_ideal, read_graph, read_ideal
from .graphs import complement, edge_ideal, froberg_check, index_via_cycles, is_chordal
from .hochster import hochster_betti
from .homology import FieldSpec
from .ideal import polarize
from .taylor import taylor_betti

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_DISAGREE, EXIT_CAP = 0, 1, 2, 3, 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _fmt_index(k) -> str:
    return "infinity" if k == float("inf") else str(k)


def _field(args) -> FieldSpec:
    try:
        return FieldSpec(args.char)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


def _threads(args) -> int:
    if args.threads is not None:
        return args.threads
    env = os.environ.get("BETTI_THREADS")
    try:
        return max(1, int(env)) if env else 1
    except ValueError:
        raise _UsageError(f"BETTI_THREADS must be an integer, got {env!r}") from None


def first_difference(a, b):
    """First (i, j) in sorted order where two value maps differ, or None."""
    va, vb = a.values(), b.values()
    for key in sorted(set(va) | set(vb)):
        if va.get(key, 0) != vb.get(key, 0):
            return key, va.get(key, 0), vb.get(key, 0)
    return None


def _cmd_betti(args, out) -> int:
    ideal = read_ideal(args.input)
    field = _field(args)
    tables = {}
    if args.engine in ("hochster", "both"):
        tables["hochster"] = hochster_betti(ideal, field, prune=not args.no_prune,
                                            parallel=_threads(args))
    if args.engine in ("taylor", "both"):
        tables["taylor"] = taylor_betti(ideal, field)
    if args.engine == "both":
        diff = first_difference(tables["hochster"], tables["taylor"])
        if diff is not None:
            (i, j), h, t = diff
            print(f"engines disagree at (i, j) = ({i}, {j}): hochster={h} taylor={t}", file=out)
            return EXIT_DISAGREE
    table = tables.get("hochster") or tables["taylor"]
    summary = invariants(table, ideal)
    if args.format == "json":
        print(report.dumps(report.report_dict(table, summary.index)), file=out)
        return EXIT_OK
    print(f"ideal {ideal.format()} over {field}", file=out)
    print(report.format_diagram(table), file=out)
    print(f"reg = {summary.reg}", file=out)
    print(f"projdim = {summary.projdim}", file=out)
    print(f"index = {_fmt_index(summary.index)}", file=out)
    print(f"linear = {str(summary.linear).lower()}", file=out)
    if "hochster" in tables:
        print(f"pruned cells = {tables['hochster'].pruned_cells}", file=out)
    if args.engine == "both":
        print("engines agree", file=out)
    return EXIT_OK


def _cmd_graph(args, out) -> int:
    G = read_graph(args.input)
    field = _field(args)
    wanted = [f for f in ("complement", "edge_ideal", "index", "chordal", "froberg")
              if getattr(args, f)]
    if not wanted:
        wanted = ["chordal", "index", "froberg"]
    for flag in wanted:
        if flag == "complement":
            print(format_graph(complement(G)), end="", file=out)
        elif flag == "edge_ideal":
            ideal = edge_ideal(G)
            if ideal.is_zero:
                raise ZeroIdealError("graph has no edges: zero ideal")
            print(format_ideal(ideal), end="", file=out)
        elif flag == "index":
            print(f"index = {_fmt_index(index_via_cycles(G))}", file=out)
        elif flag == "chordal":
            print(f"chordal = {str(is_chordal(G)).lower()}", file=out)
        elif flag == "froberg":
            rep = froberg_check(G, field)
            print(f"linear = {str(rep.linear).lower()}, chordal = {str(rep.chordal).lower()}, "
                  f"agree = {str(rep.agree).lower()}", file=out)
    return EXIT_OK


def _cmd_polarize(args, out) -> int:
    ideal = read_ideal(args.input)
    J, ctx2, _ = polarize(ideal)
    text = format_ideal(J, comments=[f"polarization of {ideal.format()}"])
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        print(text, end="", file=out)
    return EXIT_OK


def _cmd_complex(args, out) -> int:
    ideal = read_ideal(args.input)
    if not ideal.is_squarefree:
        raise ParseError("non-square-free generator; run 'polarize' first")
    cx = complex_from_squarefree_ideal(ideal)

    def fmt(face):
        return "{" + ",".join(face) + "}"

    print(f"vertices: {' '.join(cx.vertices)}", file=out)
    print("facets:", file=out)
    for f in cx.facets:
        print(f"  {fmt(f)}", file=out)
    print("minimal non-faces:", file=out)
    for f in (cx.labels_of(m) for m in cx.nonface_masks):
        print(f"  {fmt(f)}", file=out)
    return EXIT_OK


def _cmd_selftest(args, out) -> int:
    field = _field(args)
    for k, ideal in enumerate(random_corpus(args.count, args.seed)):
        h = hochster_betti(ideal, field)
        t = taylor_betti(ideal, field)
        diff = first_difference(h, t)
        if diff is not None:
            (i, j), a, b = diff
            print(f"ideal #{k} {ideal.format()}: disagree at ({i}, {j}): "
                  f"hochster={a} taylor={b}", file=out)
            return EXIT_DISAGREE
        if has_linear_resolution(h, ideal) != invariants(h, ideal).linear:
            print(f"ideal #{k}: linearity checks disagree", file=out)
            return EXIT_DISAGREE
    print(f"{args.count} ideals, seed {args.seed}, {field}: engines agree", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="monobetti", description="Graded Betti tables of monomial ideals.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def common(p, field=True):
        p.add_argument("--input", "-i", required=True)
        if field:
            p.add_argument("--char", type=int, default=0,
                           help="field characteristic: 0 (rationals) or a prime")

    p = sub.add_parser("betti", help="Betti diagram and invariants of an ideal file")
    common(p)
    p.add_argument("--engine", choices=("hochster", "taylor", "both"), default="hochster")
    p.add_argument("--no-prune", action="store_true")
    p.add_argument("--format", choices=("diagram", "json"), default="diagram")
    p.add_argument("--threads", type=int, default=None,
                   help="worker processes (default: $BETTI_THREADS or 1)")

    p = sub.add_parser("graph", help="graph reports")
    common(p)
    p.add_argument("--complement", action="store_true")
    p.add_argument("--edge-ideal", dest="edge_ideal", action="store_true")
    p.add_argument("--index", action="store_true")
    p.add_argument("--chordal", action="store_true")
    p.add_argument("--froberg", action="store_true")

    p = sub.add_parser("polarize", help="write the polarization of an ideal file")
    common(p, field=False)
    p.add_argument("--output", "-o")

    p = sub.add_parser("complex", help="facets and minimal non-faces of a square-free ideal")
    common(p, field=False)

    p = sub.add_parser("selftest", help="compare both engines on a seeded random corpus")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--char", type=int, default=0)
    return parser


_COMMANDS = {"betti": _cmd_betti, "graph": _cmd_graph, "polarize": _cmd_polarize,
             "complex": _cmd_complex, "selftest": _cmd_selftest}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return _COMMANDS[args.command](args, out)
    except _UsageError as exc:
        print(exc, file=err)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except (ParseError, ZeroIdealError, UnitIdealError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_PARSE
    except ResourceCapError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_CAP


def main():
    sys.exit(run())
