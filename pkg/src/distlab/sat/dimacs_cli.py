"""Run the built-in DPLL solver on a DIMACS file, competition-style output.

Usage: ``python -m distlab.sat.dimacs_cli FILE`` (or ``-`` for stdin).
Prints ``s SATISFIABLE`` with ``v`` lines, ``s UNSATISFIABLE``, or
``s UNKNOWN`` when ``--budget-seconds`` runs out.  This makes the
built-in solver usable anywhere an external DIMACS solver is expected.
"""
from __future__ import annotations

import argparse
import sys

from .cnf import parse_dimacs
from .dpll import SAT, UNSAT, DpllSolver


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("file", help="DIMACS CNF path, or - for stdin")
    parser.add_argument("--budget-seconds", type=float, default=None)
    args = parser.parse_args(argv)
    try:
        text = sys.stdin.read() if args.file == "-" else open(args.file).read()
        formula = parse_dimacs(text)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    solver = DpllSolver(formula.var_count, formula.clauses)
    status, model = solver.solve(time_budget=args.budget_seconds)
    if status == SAT:
        print("s SATISFIABLE")
        lits = [v if model[v] else -v for v in sorted(model)]
        for start in range(0, len(lits), 20):
            chunk = lits[start:start + 20]
            print("v " + " ".join(str(lit) for lit in chunk))
        print("v 0")
        return 10
    if status == UNSAT:
        print("s UNSATISFIABLE")
        return 20
    print("s UNKNOWN")
    return 0


if __name__ == "__main__":
    sys.exit(main())
