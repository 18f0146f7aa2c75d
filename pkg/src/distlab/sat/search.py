"""Counterexample-guided search for extremal 2-distance witnesses.

``search`` builds the CNF once, then alternates solving and exact
verification.  Every candidate model is first cross-checked: its
b-variables must agree with true distance-2 adjacency of the decoded
graph (any mismatch is an encoder bug and raises, never a silent skip).
Candidates that fail the stronger oracle conditions are excluded by a
blocking clause over the full adjacency assignment, so no candidate is
seen twice and surviving answers are verified, not trusted.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass

from ..graphs import Graph, all_pairs_distances, diameter, k_distance
from .cnf import CnfFormula, VarMap
from .dpll import SAT, UNSAT, DpllSolver
from .encode import build_formula, decode_model, model_b_edges
from .external import run_external


@dataclass
class SearchParams:
    """Knobs for the witness search.

    ``n`` vertices; vertices ``0..p2_len`` are pinned as a path of the
    2-distance graph with ``p2_len`` edges; ``min_d2`` asks for a finite
    2-distance diameter at least that large (0 disables the demand).
    ``require_sharp`` keeps refining until the witness meets the ceiling
    of the diameter bound, diam G2 >= diam G + 2; turn it off to accept
    any graph passing the other checks.  ``shortcut_max_len`` caps the
    detour length excluded at encode time; longer shortcuts are caught
    by verification.  ``solver`` is an external DIMACS solver command;
    ``None`` uses the built-in DPLL.
    """

    n: int
    p2_len: int
    min_d2: int
    forbid_diam_le_2: bool = True
    require_sharp: bool = True
    shortcut_max_len: int = 3
    budget_seconds: float | None = None
    max_candidates: int | None = None
    solver: str | None = None
    max_clauses: int = 500_000


@dataclass
class Witness:
    graph: Graph
    d: int | float
    d2: int | float
    candidates_rejected: int
    solve_calls: int
    elapsed: float


@dataclass
class Unsat:
    candidates_rejected: int
    solve_calls: int
    elapsed: float


@dataclass
class BudgetExhausted:
    candidates_rejected: int
    solve_calls: int
    elapsed: float
    reason: str = "budget"


SearchOutcome = Witness | Unsat | BudgetExhausted


class EncodingMismatch(RuntimeError):
    """A model's b-variables disagree with oracle distance-2 adjacency."""


def verify_witness(g: Graph, params: SearchParams) -> tuple[bool, int | float, int | float, str]:
    """Exact BFS verdict on a candidate: (ok, d, d2, reason).

    Checks, independently of the encoding: diameter above 2 when
    demanded, the pinned path is a geodesic of the 2-distance graph, and
    the 2-distance diameter is finite and at least ``min_d2`` (when
    ``min_d2 >= 1``).
    """
    d = diameter(g)
    g2 = k_distance(g, 2)
    d2 = diameter(g2)
    if params.forbid_diam_le_2 and not (math.isinf(d) or d > 2):
        return False, d, d2, f"diameter {d} is not above 2"
    dist = all_pairs_distances(g)
    for i in range(params.p2_len):
        if dist[i][i + 1] != 2:
            return False, d, d2, f"pinned pair ({i}, {i + 1}) not at distance 2"
    if params.p2_len >= 1:
        dist2 = all_pairs_distances(g2)
        if dist2[0][params.p2_len] != params.p2_len:
            return (
                False,
                d,
                d2,
                f"pinned path is not a geodesic: d2(0, {params.p2_len}) = "
                f"{int(dist2[0][params.p2_len])}",
            )
    if params.min_d2 >= 1:
        if math.isinf(d2):
            return False, d, d2, "2-distance graph is disconnected"
        if d2 < params.min_d2:
            return False, d, d2, f"2-distance diameter {d2} below {params.min_d2}"
    if params.require_sharp:
        if math.isinf(d) or math.isinf(d2) or d2 < d + 2:
            return (
                False,
                d,
                d2,
                f"({d}, {d2}) misses the sharp gap diam G2 >= diam G + 2",
            )
    return True, d, d2, "ok"


def search(params: SearchParams) -> SearchOutcome:
    """Run the encode / solve / verify / block loop to an outcome."""
    start = time.monotonic()
    vm, formula = build_formula(params)
    solver = None if params.solver else DpllSolver(formula.var_count, formula.clauses)
    blocked: list[list[int]] = []
    rejected = 0
    calls = 0
    while True:
        remaining: float | None = None
        if params.budget_seconds is not None:
            remaining = params.budget_seconds - (time.monotonic() - start)
            if remaining <= 0:
                return BudgetExhausted(
                    rejected, calls, time.monotonic() - start, "time budget"
                )
        calls += 1
        if solver is not None:
            status, model = solver.solve(time_budget=remaining)
        else:
            ext = CnfFormula(formula.var_count, formula.clauses + blocked)
            status, model = run_external(params.solver, ext, remaining)
        if status == UNSAT:
            return Unsat(rejected, calls, time.monotonic() - start)
        if status != SAT:
            return BudgetExhausted(
                rejected, calls, time.monotonic() - start, "solver budget"
            )
        g = decode_model(vm, model)
        dist = all_pairs_distances(g)
        claimed = model_b_edges(vm, model)
        actual = {(i, j) for i, j in vm.pairs() if dist[i][j] == 2}
        if claimed != actual:
            raise EncodingMismatch(
                f"b-variables disagree with distance-2 adjacency: "
                f"claimed-only {sorted(claimed - actual)}, "
                f"missing {sorted(actual - claimed)}"
            )
        ok, d, d2, _reason = verify_witness(g, params)
        if ok:
            return Witness(g, d, d2, rejected, calls, time.monotonic() - start)
        rejected += 1
        if params.max_candidates is not None and rejected >= params.max_candidates:
            return BudgetExhausted(
                rejected, calls, time.monotonic() - start, "candidate budget"
            )
        block = [
            -vm.a(i, j) if model[vm.a(i, j)] else vm.a(i, j) for i, j in vm.pairs()
        ]
        blocked.append(block)
        if solver is not None:
            solver.add_clause(block)
