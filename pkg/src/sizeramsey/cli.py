"""Command-line interface.

Exit status: 0 computed, 1 a verify-paper check failed, 2 usage error,
3 budget refusal.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path as FilePath

from . import __version__
from .arrowing import arrows
from .constructions import ArrowingChecker, build_family, parse_family, witness_search
from .enumeration import DEFAULT_EDGE_LIMIT, OVERRIDE_EDGE_LIMIT, EnumConstraints, enumerate_graphs
from .errors import BudgetExceeded, Graph6Error, GraphError, PatternSyntaxError, PreconditionError
from .graph6 import encode_graph6, parse_graph_arg, write_graph6_file
from .patterns import Matching, normalize, parse_pattern
from .ramsey import size_ramsey_exact
from .report import coloring_to_dict, dumps, emit_report, verdict_to_dict

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _workers(args) -> int:
    if getattr(args, "threads", None) is not None:
        if args.threads < 1:
            raise UsageError("--threads must be at least 1")
        return args.threads
    env = os.environ.get("ARROW_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"ARROW_THREADS={env!r} is not an integer") from None
    return os.cpu_count() or 1


def _left(text: str) -> int:
    p = normalize(parse_pattern(text))
    if isinstance(p, Matching):
        return p.t
    if str(p) == "P2":
        return 1
    raise UsageError(f"--left must be a matching M<t>, got {text!r}")


def _chord_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise UsageError(f"--chords expects A..B, got {text!r}") from None


def _write(path, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        FilePath(path).write_text(text)


# ------------------------------------------------------------------- verbs

def cmd_check(args) -> int:
    t = _left(args.left)
    h = parse_pattern(args.right)
    graphs = parse_graph_arg(args.graph)
    certs = []
    for g in graphs:
        v = arrows(g, t, h, method=args.method, max_edges=args.max_edges)
        line = f"{encode_graph6(g)} arrows={'true' if v.arrows else 'false'} method={v.method}"
        if v.trace is not None:
            line += f" deleted={v.trace.kind}:{','.join(map(str, v.trace.vertices))}"
        if v.certificate is not None:
            line += f" red={[list(e) for e in v.certificate.red]}"
            certs.append(coloring_to_dict(v.certificate, t, normalize(h)))
        print(line)
        if args.verbose:
            print(dumps(verdict_to_dict(v)), end="")
    if args.certificate:
        payload = certs[0] if len(graphs) == 1 and certs else {"certificates": certs}
        payload = dict(payload, tool_version=__version__)
        _write(args.certificate, dumps(payload))
    return EXIT_OK


def cmd_search_min(args) -> int:
    t = _left(args.left)
    h = parse_pattern(args.right)
    limit = args.enum_limit if args.enum_limit is not None else DEFAULT_EDGE_LIMIT
    if args.max_edges > limit:
        print(f"refused: --max-edges {args.max_edges} exceeds the enumeration limit {limit}"
              f" (raise it with --enum-limit, at most {OVERRIDE_EDGE_LIMIT})", file=sys.stderr)
        return EXIT_BUDGET
    r = size_ramsey_exact(t, h, args.connected, args.max_edges, enum_limit=limit, workers=_workers(args),
                          store_certificates=not args.no_certificates)
    c = r.conclusion
    label = f"{'connected ' if args.connected else ''}size Ramsey (M{t}, {normalize(h)})"
    if c["kind"] == "exact":
        print(f"{label}: exact {c['value']}")
    else:
        print(f"{label}: {c['kind']} [{c['lower']}, {c['upper'] if c['upper'] is not None else 'unknown'}]")
    if r.witness is not None:
        print(f"witness {r.witness['graph6']} ({r.witness['origin']}, {r.witness['edges']} edges)")
    if args.report:
        emit_report(r, args.report)
    return EXIT_BUDGET if c["kind"] == "budget-exhausted" else EXIT_OK


def cmd_construct(args) -> int:
    g = build_family(parse_family(args.family))
    if args.out:
        write_graph6_file(args.out, [g])
    print(encode_graph6(g))
    print(f"{g.order} vertices, {g.edge_count} edges", file=sys.stderr)
    return EXIT_OK


def cmd_find_witness(args) -> int:
    if args.family != "chorded":
        raise UsageError("only --family chorded is supported")
    t = _left(args.left)
    h = parse_pattern(args.right)
    checker = ArrowingChecker(t, h, min_girth=args.girth, triangle_free=args.triangle_free)
    res = witness_search(args.size, _chord_range(args.chords), checker, workers=_workers(args))
    if res.found:
        spec = res.report["spec"]
        print(f"witness {encode_graph6(res.graph)} C{spec['k']} chords={spec['chords']}")
    else:
        print(f"exhaustive-negative: no chorded cycle of size {args.size} satisfies {checker.describe()}")
    if args.report:
        emit_report(dict(res.report), args.report)
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    from .paper_checks import run_all

    results = run_all(quick=args.quick, workers=_workers(args), on_result=lambda r: print(r.line(), flush=True))
    passed = sum(r.passed for r in results)
    print(f"summary: {passed}/{len(results)} checks passed{' (quick mode)' if args.quick else ''}")
    if args.report:
        emit_report({"mode": "quick" if args.quick else "full", "checks": [r.to_dict() for r in results],
                     "passed": passed, "total": len(results)}, args.report)
    return EXIT_OK if passed == len(results) else EXIT_CHECK_FAILED


def cmd_enum(args) -> int:
    c = EnumConstraints(args.edges, connected=args.connected, min_degree=args.min_degree,
                        girth_at_least=args.girth)
    graphs = list(enumerate_graphs(c, limit=args.enum_limit, workers=_workers(args)))
    if args.out:
        write_graph6_file(args.out, graphs)
        print(f"{len(graphs)} graphs written to {args.out}")
    else:
        for g in graphs:
            print(encode_graph6(g))
    return EXIT_OK


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sizeramsey", description="Size Ramsey numbers of matchings versus small graphs.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="verb", required=True)

    def threads(sp):
        sp.add_argument("--threads", type=int, help="worker processes (overrides ARROW_THREADS)")

    sp = sub.add_parser("check", help="decide F -> (tK2, H) for each input graph")
    sp.add_argument("--graph", required=True, help="graph6 string or @file")
    sp.add_argument("--left", required=True, help="M<t>")
    sp.add_argument("--right", required=True, help="pattern: P<m>, C<n>, <n>P<m> or M<t>")
    sp.add_argument("--method", choices=["auto", "generic", "lemma"], default="auto")
    sp.add_argument("--max-edges", type=int, default=28, help="host size limit for the generic search")
    sp.add_argument("--certificate", help="write the colouring certificate(s) as JSON")
    sp.add_argument("--verbose", action="store_true", help="print the full verdict as JSON")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("search-min", help="smallest arrowing graph by exhaustive search")
    sp.add_argument("--left", required=True)
    sp.add_argument("--right", required=True)
    sp.add_argument("--connected", action="store_true")
    sp.add_argument("--max-edges", type=int, required=True)
    sp.add_argument("--enum-limit", type=int, help=f"enumeration edge cap (default {DEFAULT_EDGE_LIMIT}, "
                                                   f"at most {OVERRIDE_EDGE_LIMIT})")
    sp.add_argument("--no-certificates", action="store_true", help="do not store per-graph colourings")
    sp.add_argument("--report")
    threads(sp)
    sp.set_defaults(func=cmd_search_min)

    sp = sub.add_parser("construct", help="build a named graph family member")
    sp.add_argument("--family", required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("find-witness", help="search chorded cycles for an arrowing graph")
    sp.add_argument("--left", required=True)
    sp.add_argument("--right", required=True)
    sp.add_argument("--size", type=int, required=True)
    sp.add_argument("--family", default="chorded")
    sp.add_argument("--chords", default="0..4", help="chord counts A..B")
    sp.add_argument("--girth", type=int, help="only hosts of at least this girth")
    sp.add_argument("--triangle-free", action="store_true")
    sp.add_argument("--report")
    threads(sp)
    sp.set_defaults(func=cmd_find_witness)

    sp = sub.add_parser("verify-paper", help="run the reproduction suite")
    sp.add_argument("--quick", action="store_true")
    sp.add_argument("--report")
    threads(sp)
    sp.set_defaults(func=cmd_verify_paper)

    sp = sub.add_parser("enum", help="list graphs with a given number of edges up to isomorphism")
    sp.add_argument("--edges", type=int, required=True)
    sp.add_argument("--connected", action="store_true")
    sp.add_argument("--min-degree", type=int)
    sp.add_argument("--girth", type=int)
    sp.add_argument("--enum-limit", type=int)
    sp.add_argument("--out")
    threads(sp)
    sp.set_defaults(func=cmd_enum)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, PatternSyntaxError, PreconditionError, Graph6Error, GraphError, ValueError,
            FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
