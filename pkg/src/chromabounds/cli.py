"""Command-line entry point: ``chromabounds <subcommand> ...``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import chromatic, harness, logderiv, monotonicity, roots
from .graph import (FAMILIES, Graph6Error, GraphError, enumerate_labeled_graphs, generate,
                    make_graph, parse_graph6, read_graph6_file, structural_queries, to_graph6)
from .poly import parse_rational

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _check_list() -> str:
    return ", ".join(harness.CHECKS)


def _add_graph_input(p):
    g = p.add_argument_group("graph input (exactly one)")
    g.add_argument("--family", choices=FAMILIES)
    g.add_argument("--n", type=int, help="order for --family or --edges")
    g.add_argument("--graph6", help="a graph6 line")
    g.add_argument("--file", help="graph6 file; its first graph is used")
    g.add_argument("--edges", help='edge list such as "0-1,1-2" (with --n)')


def _add_output(p):
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out", help="write output here instead of stdout")


def _parse_k(text: str) -> tuple:
    out = []
    for part in text.split(","):
        part = part.strip()
        if "-" in part[1:]:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    if not out or min(out) < 1:
        raise UsageError(f"bad k specification {text!r}")
    return tuple(out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chromabounds",
        description="Exact chromatic polynomials and certified checks of their derivative bounds.",
        epilog=f"check ids: {_check_list()}",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="print P(G,x) coefficients")
    _add_graph_input(p)
    _add_output(p)
    p.add_argument("--method", choices=("dc", "ie", "bc"), default="dc")

    p = sub.add_parser("roots", help="numeric chromatic roots with residuals and rho")
    _add_graph_input(p)
    _add_output(p)
    p.add_argument("--tol", type=float, default=roots.DEFAULT_TOL)

    p = sub.add_parser("coeffs", help="Laurent coefficients c_1..c_N")
    _add_graph_input(p)
    _add_output(p)
    p.add_argument("--count", type=int, default=6)

    p = sub.add_parser("epsilon", help="epsilon(G) by both formulas")
    _add_graph_input(p)
    _add_output(p)
    p.add_argument("--x", default="-1", help="evaluation point for P'/P (p/q or decimal)")

    p = sub.add_parser("verify", help="run named checks on one graph",
                       epilog=f"check ids: {_check_list()}")
    _add_graph_input(p)
    _add_output(p)
    _add_check_options(p)

    p = sub.add_parser("scan", help="run checks over a catalog",
                       epilog=f"check ids: {_check_list()}")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--generated", type=int, metavar="N", help="all labeled graphs of order N")
    src.add_argument("--graph6-file", help="catalog file, one graph6 line per graph")
    p.add_argument("--connected", action="store_true", help="with --generated: connected graphs only")
    p.add_argument("--out", help="JSON-lines report path")
    p.add_argument("--summary", help="CSV summary path")
    p.add_argument("--workers", type=int, default=1)
    _add_check_options(p)

    p = sub.add_parser("catalog", help="enumerate labeled graphs or convert graph6")
    p.add_argument("--generated", type=int, metavar="N")
    p.add_argument("--connected", action="store_true")
    p.add_argument("--decode", help="graph6 line to decode into an edge list")
    _add_graph_input_encode(p)
    _add_output(p)
    return parser


def _add_graph_input_encode(p):
    p.add_argument("--encode", help='edge list such as "0-1,1-2" to encode (needs --n)')
    p.add_argument("--n", type=int)


def _add_check_options(p):
    p.add_argument("--check", "--checks", dest="checks", default="lemma22",
                   help=f"comma-separated check ids ({_check_list()})")
    p.add_argument("--k", default="2-4", help='derivative orders, e.g. "2-4" or "2,5"')
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--orderings", type=int, default=20, help="random edge orderings for oracle_eq")
    p.add_argument("--window-points", type=int, default=50)
    p.add_argument("--claw-free-bound", action="store_true",
                   help="let thm33 use the 3.81 Delta bound on claw-free graphs")
    p.add_argument("--seed", type=int, default=None,
                   help="seed (default: $CHROMABOUNDS_SEED or a fixed constant)")


def _parse_edges(text: str, n):
    if n is None:
        raise UsageError("--edges/--encode need --n")
    pairs = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            u, v = part.split("-")
            pairs.append((int(u), int(v)))
        except ValueError as exc:
            raise UsageError(f"bad edge {part!r}") from exc
    return make_graph(n, pairs)


def _graph_from_args(args):
    sources = [s for s in ("family", "graph6", "file", "edges") if getattr(args, s) is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one graph input: --family/--graph6/--file/--edges")
    if args.family:
        if args.n is None:
            raise UsageError("--family needs --n")
        return generate(args.family, args.n)
    if args.graph6:
        return parse_graph6(args.graph6)
    if args.file:
        graphs = read_graph6_file(args.file)
        if not graphs:
            raise UsageError(f"{args.file} holds no graphs")
        return graphs[0]
    return _parse_edges(args.edges, args.n)


def _params(args) -> harness.SuiteParams:
    return harness.SuiteParams(k_values=_parse_k(args.k), orderings=args.orderings,
                               samples=args.samples, window_points=args.window_points,
                               use_claw_free=args.claw_free_bound)


def _emit(args, payload: dict, text: str, rows=None):
    if args.format == "json":
        out = json.dumps(payload, indent=2)
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        for row in rows or [[k, json.dumps(v)] for k, v in payload.items()]:
            w.writerow(row)
        out = buf.getvalue().rstrip("\n")
    else:
        out = text
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def _frac(v: Fraction) -> str:
    return harness._frac(v)


# subcommands ---------------------------------------------------------------------------

def cmd_poly(args) -> int:
    g = _graph_from_args(args)
    fn = {"dc": chromatic.chromatic_deletion_contraction,
          "ie": chromatic.chromatic_inclusion_exclusion,
          "bc": chromatic.chromatic_broken_cycle}[args.method]
    p = fn(g)
    payload = {"graph6": to_graph6(g), **p.to_dict()}
    text = f"coeffs: [{', '.join(str(c) for c in p.coeffs)}]\nP(G,x) = {p}"
    _emit(args, payload, text, rows=[["power", "coeff"]] + [[i, c] for i, c in enumerate(p.coeffs)])
    return EXIT_OK


def cmd_roots(args) -> int:
    g = _graph_from_args(args)
    p = chromatic.chromatic_polynomial(g)
    if p.degree < 1:
        raise UsageError("graph has no chromatic roots (n = 0)")
    rs = roots.find_roots(p, args.tol)
    bound = roots.rho_upper_bound(g)
    payload = {"graph6": to_graph6(g), **rs.to_dict(), "rho_upper_bound": bound}
    lines = [f"{z.real:+.15g} {z.imag:+.15g}i   residual {r:.2e}" for z, r in zip(rs.roots, rs.residuals)]
    lines.append(f"rho = {rs.rho:.15g}  (degree bound {bound:g})")
    _emit(args, payload, "\n".join(lines),
          rows=[["re", "im", "residual"]] + [[z.real, z.imag, r] for z, r in zip(rs.roots, rs.residuals)])
    return EXIT_OK


def cmd_coeffs(args) -> int:
    g = _graph_from_args(args)
    s = structural_queries(g)
    c = monotonicity.laurent_coeffs(g, max(args.count, 2))
    d1 = c[1] + s.edge_count
    d2 = c[2] + s.triangle_count + Fraction(s.edge_count, 2)
    payload = {"graph6": to_graph6(g), "c": [_frac(v) for v in c.c[:args.count]],
               "lemma22_delta_c1": _frac(d1), "lemma22_delta_c2": _frac(d2)}
    lines = [f"c_{i} = {_frac(v)}" for i, v in enumerate(c.c[:args.count], 1)]
    lines.append(f"c_1 + m = {_frac(d1)}   c_2 + t + m/2 = {_frac(d2)}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if d1 == 0 and d2 == 0 else EXIT_FAIL


def cmd_epsilon(args) -> int:
    g = _graph_from_args(args)
    x = _rational(args.x)
    at_x = logderiv.epsilon_via_roots(g, x)
    at_minus1 = logderiv.epsilon_via_roots(g, -1)
    mean = logderiv.epsilon_mean_subgraph(g)
    agree = mean == g.n + at_minus1
    payload = {"graph6": to_graph6(g), "x": _frac(x), "epsilon_x": _frac(at_x),
               "epsilon_mean_subgraph": _frac(mean), "n_plus_epsilon_minus1": _frac(g.n + at_minus1),
               "agree": agree}
    text = (f"epsilon(G, {_frac(x)}) = {_frac(at_x)}\n"
            f"mean broken-cycle-free subgraph size = {_frac(mean)}\n"
            f"n + epsilon(G, -1) = {_frac(g.n + at_minus1)}   agree: {agree}")
    _emit(args, payload, text)
    return EXIT_OK if agree else EXIT_FAIL


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _checks(args) -> list:
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    unknown = [c for c in checks if c not in harness.CHECKS]
    if unknown:
        raise UsageError(f"unknown check id(s) {', '.join(unknown)}; known: {_check_list()}")
    return checks


def cmd_verify(args) -> int:
    g = _graph_from_args(args)
    checks = _checks(args)
    reports = list(harness.run_suite(harness.Catalog.of([g]), checks, _params(args), seed=args.seed))
    payload = {"graph6": to_graph6(g), "reports": [r.to_dict() for r in reports]}
    text = "\n".join(f"{r.check}: {r.verdict}" + (f"  {json.dumps(r.witness)}" if r.verdict != "pass" else "")
                     for r in reports)
    _emit(args, payload, text, rows=[["check", "verdict"]] + [[r.check, r.verdict] for r in reports])
    return EXIT_FAIL if any(r.verdict == "fail" for r in reports) else EXIT_OK


def cmd_scan(args) -> int:
    checks = _checks(args)
    if args.generated is not None:
        catalog = harness.Catalog.generated(args.generated, args.connected)
    else:
        catalog = harness.Catalog.graph6_file(args.graph6_file)
    reports = []
    stream = harness.run_suite(catalog, checks, _params(args), workers=args.workers, seed=args.seed)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            for r in stream:
                fh.write(r.to_json() + "\n")
                reports.append(r)
    else:
        reports = list(stream)
    summary = harness.summarize(reports)
    if args.summary:
        harness.write_summary_csv(summary, args.summary)
    for check, c in sorted(summary.counts.items()):
        print(f"{check}: pass={c['pass']} fail={c['fail']} skip={c['skip']}")
    for name, info in sorted(summary.extremals.items()):
        print(f"{name}: {json.dumps(info)}")
    return EXIT_OK if summary.all_passed else EXIT_FAIL


def cmd_catalog(args) -> int:
    chosen = [a for a in (args.generated is not None, args.decode is not None, args.encode is not None) if a]
    if len(chosen) != 1:
        raise UsageError("catalog needs exactly one of --generated, --decode, --encode")
    if args.generated is not None:
        lines = [to_graph6(g) for g in enumerate_labeled_graphs(args.generated, args.connected)]
        out = "\n".join(lines)
        if args.out:
            with open(args.out, "w", encoding="ascii") as fh:
                fh.write(out + "\n")
        else:
            print(out)
        return EXIT_OK
    if args.decode is not None:
        g = parse_graph6(args.decode)
        payload = {"n": g.n, "edges": [list(e) for e in g.edge_list]}
        _emit(args, payload, f"n={g.n} edges=" + ",".join(f"{u}-{v}" for u, v in g.edge_list),
              rows=[["u", "v"]] + [list(e) for e in g.edge_list])
        return EXIT_OK
    g = _parse_edges(args.encode, args.n)
    _emit(args, {"graph6": to_graph6(g)}, to_graph6(g))
    return EXIT_OK


COMMANDS = {"poly": cmd_poly, "roots": cmd_roots, "coeffs": cmd_coeffs, "epsilon": cmd_epsilon,
            "verify": cmd_verify, "scan": cmd_scan, "catalog": cmd_catalog}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except (UsageError, GraphError, Graph6Error, harness.SuiteError, chromatic.ResourceLimitError,
            ValueError) as exc:
        print(f"chromabounds: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
