"""Command-line entry point.

Exit codes: 0 the query was answered "yes" (not-extendable, relating,
generating) or validation passed; 1 answered "no"; 2 input or class
violation; 3 internal invariant failure.
"""
from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction

from . import oracle
from .cycles import validate_c67_free
from .errors import C67Error, CapacityError, GraphInputError, InvariantError
from .extendable import extendability_witness_problem, is_extendable
from .fileio import QueryReport, emit_report, format_graph, gen_random_c67_free, parse_graph
from .generating import generating_witness_problem, is_generating
from .relating import relating_witness_problem, is_relating, side_subgraph
from .results import BipartiteSpec, format_restriction

YES, NO, BAD_INPUT, INTERNAL = 0, 1, 2, 3

NOTICE = "note: the graph is assumed to contain no 6- or 7-cycles (pass --validate to check)"


class UsageError(Exception):
    pass


def _id_list(text: str) -> list:
    try:
        ids = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated vertex ids, got {text!r}")
    if not ids:
        raise argparse.ArgumentTypeError("empty vertex list")
    return ids


def _globals(p: argparse.ArgumentParser, default):
    p.add_argument("--validate", action="store_true", default=default,
                   help="screen the graph for 6- and 7-cycles before answering")
    p.add_argument("--json", action="store_true", default=default, help="print a JSON report")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _globals(common, argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="c67gen",
        description="Extendable vertices, relating edges and generating subgraphs "
                    "in graphs without 6- and 7-cycles.",
    )
    _globals(parser, False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check that the graph has no C6 and no C7")
    p.add_argument("file")

    def query_parsers(container, suffix=""):
        q = container.add_parser("extendable", parents=[common], help="is vertex v extendable?" + suffix)
        q.add_argument("file")
        q.add_argument("v", type=int)
        q = container.add_parser("relating", parents=[common], help="is edge uv relating?" + suffix)
        q.add_argument("file")
        q.add_argument("u", type=int)
        q.add_argument("v", type=int)
        q = container.add_parser("generating", parents=[common], help="is (B_X, B_Y) generating?" + suffix)
        q.add_argument("file")
        q.add_argument("--bx", type=_id_list, required=True)
        q.add_argument("--by", type=_id_list, required=True)

    query_parsers(sub)
    p = sub.add_parser("oracle", parents=[common], help="answer a query by exhaustive search")
    query_parsers(p.add_subparsers(dest="query", required=True), " (exhaustive)")

    p = sub.add_parser("wcw", parents=[common], help="rational basis of the well-covered weight space")
    p.add_argument("file")

    p = sub.add_parser("gen", parents=[common], help="random graph without 6- and 7-cycles")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", help="write the graph here instead of stdout")
    return parser


def _load(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_graph(fh.read())
    except OSError as exc:
        raise GraphInputError(f"cannot read {path}: {exc.strerror}") from None


def _vertex(g, v: int) -> int:
    if not 1 <= v <= g.n:
        raise UsageError(f"vertex {v} outside 1..{g.n}")
    return v - 1


def _screen(g, args, out) -> int | None:
    if not args.validate:
        print(NOTICE, file=sys.stderr)
        return None
    bad = validate_c67_free(g)
    if bad is not None:
        cyc = " ".join(str(v + 1) for v in bad.cycle)
        print(f"class violation: {bad.length}-cycle {cyc}", file=out)
        return BAD_INPUT
    return None


def _answer(kind: str, g, args, use_oracle: bool) -> tuple[QueryReport, int]:
    t0 = time.perf_counter()
    if kind == "extendable":
        x = _vertex(g, args.v)
        if use_oracle:
            res, trace = oracle.oracle_extendable(g, x), {"method": "exhaustive"}
        else:
            res, tr = is_extendable(g, x)
            trace = tr.summary()
        ms = (time.perf_counter() - t0) * 1e3
        rep = QueryReport(kind, {"v": args.v}, res.outcome, res.witness, trace=trace, millis=ms)
        if res.witness is not None:
            rep.validated = extendability_witness_problem(g, x, res.witness) is None
        return rep, NO if res.extendable else YES
    if kind == "relating":
        x, y = _vertex(g, args.u), _vertex(g, args.v)
        if not g.has_edge(x, y):
            raise UsageError(f"{args.u} {args.v} is not an edge")
        if use_oracle:
            res, trace = oracle.oracle_relating(g, x, y), {"method": "exhaustive"}
        else:
            res = is_relating(g, x, y)
            trace = {"x_side": len(side_subgraph(g, x, y).kept), "y_side": len(side_subgraph(g, y, x).kept)}
        ms = (time.perf_counter() - t0) * 1e3
        rep = QueryReport(kind, {"u": args.u, "v": args.v}, res.outcome, res.witness, trace=trace, millis=ms)
        if res.witness is not None:
            rep.validated = relating_witness_problem(g, x, y, res.witness) is None
        return rep, YES if res.relating else NO
    bx = [_vertex(g, v) for v in args.bx]
    by = [_vertex(g, v) for v in args.by]
    spec = BipartiteSpec(bx, by)
    if use_oracle:
        res, trace = oracle.oracle_generating(g, spec), {"method": "exhaustive"}
    else:
        res, trace = is_generating(g, spec), {"b_vertices": len(spec.vertices)}
    ms = (time.perf_counter() - t0) * 1e3
    rep = QueryReport(kind, {"bx": sorted(args.bx), "by": sorted(args.by)}, res.outcome, res.witness,
                      trace=trace, millis=ms)
    if res.witness is not None:
        rep.restriction = format_restriction(spec.bx, spec.by, offset=1)
        rep.validated = generating_witness_problem(g, spec, res.witness) is None
    return rep, YES if res.generating else NO


def _print_report(rep: QueryReport, args, out) -> None:
    if args.json:
        print(emit_report(rep), file=out)
        return
    line = rep.outcome
    if rep.witness is not None:
        line += ": witness {" + ", ".join(str(v + 1) for v in rep.witness) + "}"
    if rep.restriction:
        line += f"; restriction {rep.restriction}"
    print(line, file=out)


def _fmt_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _dispatch(args, out) -> int:
    if args.command == "gen":
        g = gen_random_c67_free(args.n, args.p, args.seed)
        text = format_graph(g, comment=f"seed {args.seed}, p {args.p}; no 6- or 7-cycles")
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            out.write(text)
        return YES

    g = _load(args.file)
    if args.command == "validate":
        bad = validate_c67_free(g)
        if args.json:
            import json
            doc = {"query": {"kind": "validate"}, "outcome": "ok" if bad is None else "violation"}
            if bad is not None:
                doc["cycle"] = [v + 1 for v in bad.cycle]
            print(json.dumps(doc), file=out)
        elif bad is None:
            print("ok: no 6- or 7-cycle", file=out)
        else:
            print(f"violation: {bad.length}-cycle " + " ".join(str(v + 1) for v in bad.cycle), file=out)
        return YES if bad is None else BAD_INPUT

    if args.command == "wcw":
        basis = oracle.wcw_basis(g)
        if args.json:
            import json
            doc = {"query": {"kind": "wcw"}, "dimension": basis.dimension,
                   "basis": [[_fmt_fraction(q) for q in w] for w in basis.basis]}
            print(json.dumps(doc), file=out)
        else:
            print(f"dimension {basis.dimension}", file=out)
            for w in basis.basis:
                print(" ".join(_fmt_fraction(q) for q in w), file=out)
        return YES

    stop = _screen(g, args, out)
    if stop is not None:
        return stop
    use_oracle = args.command == "oracle"
    kind = args.query if use_oracle else args.command
    rep, code = _answer(kind, g, args, use_oracle)
    if args.validate:
        rep.trace["class_screened"] = True
    _print_report(rep, args, out)
    return code


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code else YES
    try:
        return _dispatch(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT
    except (GraphInputError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT
    except InvariantError as exc:
        print(f"internal invariant failed: {exc}", file=sys.stderr)
        return INTERNAL
    except C67Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
