"""Command-line front end.

Subcommands: ``transform`` (apply the k-distance operator to a graph6
stream), ``diam``, ``survey`` (CSV plus optional SVG heatmap),
``family`` (sharp even-k witness), ``verify`` (bound verdicts),
``sat-search`` (extremal witness search) and ``convert``.

Exit codes: 0 success or witness found, 1 clean negative (unsatisfiable
search, exhausted budget, or bound violations), 2 usage or input error.
File outputs are written to a temp file and renamed into place.
"""
from __future__ import annotations

import argparse
import math
import os
import sys
import tempfile
from typing import Iterable, TextIO

from . import bounds, graph6
from .enumeration import ENUM_CAP, ENUM_CAP_FORCED, survey
from .graphs import Graph, diameter, from_edge_list, k_distance
from .heatmap import heatmap_svg
from .sat.cnf import emit_dimacs
from .sat.encode import FormulaSizeError, build_formula
from .sat.external import SolverError
from .sat.search import BudgetExhausted, SearchParams, Unsat, Witness, search

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


def _fmt_ext(value: int | float) -> str:
    return "inf" if math.isinf(value) else str(int(value))


def _open_input(path: str) -> TextIO:
    if path == "-":
        return sys.stdin
    return open(path, "r")


def _write_atomic(path: str, content: str) -> None:
    if path == "-":
        sys.stdout.write(content)
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".distlab-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(content)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def _input_graphs(path: str) -> Iterable[Graph]:
    fh = _open_input(path)
    try:
        yield from graph6.iter_graphs(fh)
    finally:
        if fh is not sys.stdin:
            fh.close()


def cmd_transform(args) -> int:
    out_lines = []
    for g in _input_graphs(args.input):
        out_lines.append(graph6.emit(k_distance(g, args.k)))
    _write_atomic(args.out, "".join(line + "\n" for line in out_lines))
    return EXIT_OK


def cmd_diam(args) -> int:
    lines = []
    for idx, g in enumerate(_input_graphs(args.input)):
        lines.append(f"{idx},{_fmt_ext(diameter(g))}")
    _write_atomic(args.out, "".join(line + "\n" for line in lines))
    return EXIT_OK


def cmd_survey(args) -> int:
    table = survey(args.n, force=args.force, jobs=args.threads)
    _write_atomic(args.out, table.to_csv())
    if args.heatmap:
        _write_atomic(args.heatmap, heatmap_svg(table))
    return EXIT_OK


def cmd_family(args) -> int:
    g = bounds.family_graph(args.k)
    _write_atomic(args.out, graph6.emit(g) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    lines = []
    violations = 0
    for idx, g in enumerate(_input_graphs(args.input)):
        report = bounds.check_bounds(g)
        if report.verdict == bounds.VIOLATION:
            violations += 1
        lines.append(
            f"{idx},{_fmt_ext(report.d)},{_fmt_ext(report.d2)},{report.verdict}"
        )
    _write_atomic(args.out, "".join(line + "\n" for line in lines))
    return EXIT_NEGATIVE if violations else EXIT_OK


def cmd_sat_search(args) -> int:
    solver = args.solver if args.solver is not None else os.environ.get("DISTLAB_SOLVER")
    params = SearchParams(
        n=args.n,
        p2_len=args.p2_len,
        min_d2=args.min_d2,
        forbid_diam_le_2=not args.allow_diam_le_2,
        require_sharp=not args.allow_non_sharp,
        shortcut_max_len=args.shortcut_max_len,
        budget_seconds=args.budget_seconds,
        max_candidates=args.max_candidates,
        solver=solver or None,
        max_clauses=args.max_clauses,
    )
    if args.emit_cnf:
        vm, formula = build_formula(params)
        _write_atomic(args.emit_cnf, emit_dimacs(formula))
        _write_atomic(args.emit_cnf + ".vars", vm.sidecar())
        print(f"emitted {formula.clause_count} clauses over {formula.var_count} "
              f"variables to {args.emit_cnf}", file=sys.stderr)
        if args.emit_only:
            return EXIT_OK
    outcome = search(params)
    meta = {
        "n": params.n,
        "p2_len": params.p2_len,
        "min_d2": params.min_d2,
        "solver": solver or "builtin",
        "solve_calls": outcome.solve_calls,
        "candidates_rejected": outcome.candidates_rejected,
        "elapsed_seconds": f"{outcome.elapsed:.2f}",
    }
    if isinstance(outcome, Witness):
        meta["status"] = "witness"
        meta["d"] = _fmt_ext(outcome.d)
        meta["d2"] = _fmt_ext(outcome.d2)
        for key, value in meta.items():
            print(f"{key}={value}", file=sys.stderr)
        print(graph6.emit(outcome.graph))
        return EXIT_OK
    meta["status"] = "unsat" if isinstance(outcome, Unsat) else "budget-exhausted"
    if isinstance(outcome, BudgetExhausted):
        meta["budget"] = outcome.reason
    for key, value in meta.items():
        print(f"{key}={value}", file=sys.stderr)
    return EXIT_NEGATIVE


def cmd_convert(args) -> int:
    graphs = list(_input_graphs(args.input)) if args.source == "graph6" else None
    if graphs is None:
        fh = _open_input(args.input)
        try:
            graphs = list(_parse_edge_lists(fh))
        finally:
            if fh is not sys.stdin:
                fh.close()
    if args.to == "graph6":
        content = "".join(graph6.emit(g) + "\n" for g in graphs)
    else:
        blocks = []
        for g in graphs:
            lines = [f"{g.n} {g.edge_count()}"]
            lines += [f"{u} {v}" for u, v in g.edges()]
            blocks.append("\n".join(lines))
        content = "\n\n".join(blocks) + ("\n" if blocks else "")
    _write_atomic(args.out, content)
    return EXIT_OK


def _parse_edge_lists(fh: TextIO) -> Iterable[Graph]:
    """Blocks of ``n m`` then m ``u v`` lines, blank line between graphs."""
    lines = [ln.strip() for ln in fh]
    pos = 0
    while pos < len(lines):
        if not lines[pos]:
            pos += 1
            continue
        head = lines[pos].split()
        if len(head) != 2:
            raise ValueError(f"line {pos + 1}: expected 'n m' header")
        n, m = int(head[0]), int(head[1])
        pos += 1
        edges = []
        for _ in range(m):
            if pos >= len(lines) or not lines[pos]:
                raise ValueError(f"line {pos + 1}: truncated edge block")
            parts = lines[pos].split()
            if len(parts) != 2:
                raise ValueError(f"line {pos + 1}: expected 'u v' edge")
            edges.append((int(parts[0]), int(parts[1])))
            pos += 1
        yield from_edge_list(n, edges)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="distlab",
        description="k-distance graph transforms, diameter surveys and witness search",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", help="apply the k-distance operator to graph6 input")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--input", default="-", help="graph6 file, - for stdin")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("diam", help="diameters of graph6 input, one 'index,d' per line")
    p.add_argument("--input", default="-")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_diam)

    p = sub.add_parser("survey", help="joint (d, d2) census over connected graphs")
    p.add_argument("--n", type=int, required=True,
                   help=f"vertex count (cap {ENUM_CAP}, {ENUM_CAP_FORCED} with --force)")
    p.add_argument("--out", required=True, help="CSV path, - for stdout")
    p.add_argument("--heatmap", default=None, help="optional SVG path")
    p.add_argument("--threads", type=int, default=1,
                   help="worker processes for subtree fan-out")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("family", help="sharp even-k witness graph as graph6")
    p.add_argument("--k", type=int, required=True, help="even diameter >= 4")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="bound verdicts for graph6 input")
    p.add_argument("--input", default="-")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sat-search", help="search for an extremal witness")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p2-len", type=int, required=True, dest="p2_len")
    p.add_argument("--min-d2", type=int, required=True, dest="min_d2")
    p.add_argument("--shortcut-max-len", type=int, default=3, dest="shortcut_max_len")
    p.add_argument("--allow-diam-le-2", action="store_true",
                   help="drop the diameter > 2 requirement")
    p.add_argument("--allow-non-sharp", action="store_true",
                   help="accept witnesses even when diam G2 < diam G + 2")
    p.add_argument("--budget-seconds", type=float, default=None)
    p.add_argument("--max-candidates", type=int, default=None)
    p.add_argument("--max-clauses", type=int, default=500_000)
    p.add_argument("--solver", default=None,
                   help="external DIMACS solver command (default: $DISTLAB_SOLVER, "
                        "else the built-in DPLL)")
    p.add_argument("--emit-cnf", default=None,
                   help="write the DIMACS formula and a .vars sidecar here")
    p.add_argument("--emit-only", action="store_true",
                   help="with --emit-cnf: stop after writing the formula")
    p.set_defaults(func=cmd_sat_search)

    p = sub.add_parser("convert", help="convert between graph6 and edge-list blocks")
    p.add_argument("--source", choices=["graph6", "edges"], default="graph6")
    p.add_argument("--to", choices=["graph6", "edges"], required=True)
    p.add_argument("--input", default="-")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_convert)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (graph6.Graph6Error, SolverError, FormulaSizeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except KeyboardInterrupt:
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
