"""CNF containers, the adjacency/2-distance variable map, and DIMACS io.

Variables are 1-based.  ``VarMap`` lays out a-variables (adjacency of
candidate graphs) first, then b-variables (2-distance adjacency), then
auxiliary definitions, all contiguous, and can serialize itself as a
sidecar mapping for debugging external solver runs.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable


@dataclass
class CnfFormula:
    """Clause list with a declared variable count; validates on add."""

    var_count: int
    clauses: list[list[int]] = field(default_factory=list)

    def add(self, clause: Iterable[int]) -> None:
        lits = list(clause)
        if not lits:
            raise ValueError("empty clause")
        seen = set()
        for lit in lits:
            if not isinstance(lit, int) or lit == 0:
                raise ValueError(f"bad literal {lit!r}")
            if abs(lit) > self.var_count:
                raise ValueError(f"literal {lit} exceeds var count {self.var_count}")
            if -lit in seen:
                raise ValueError(f"tautological clause {lits}")
            seen.add(lit)
        self.clauses.append(lits)

    def extend(self, clauses: Iterable[Iterable[int]]) -> None:
        for c in clauses:
            self.add(c)

    @property
    def clause_count(self) -> int:
        return len(self.clauses)


def emit_dimacs(formula: CnfFormula) -> str:
    lines = [f"p cnf {formula.var_count} {len(formula.clauses)}"]
    for clause in formula.clauses:
        lines.append(" ".join(str(lit) for lit in clause) + " 0")
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> CnfFormula:
    """Strict-enough DIMACS reader; clauses may span lines, comments skipped."""
    var_count = None
    declared = None
    formula = None
    pending: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("c"):
            continue
        if s.startswith("p"):
            if var_count is not None:
                raise ValueError(f"line {lineno}: duplicate problem line")
            parts = s.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"line {lineno}: malformed problem line {s!r}")
            var_count, declared = int(parts[2]), int(parts[3])
            formula = CnfFormula(var_count)
            continue
        if formula is None:
            raise ValueError(f"line {lineno}: clause before problem line")
        for tok in s.split():
            lit = int(tok)
            if lit == 0:
                formula.add(pending)
                pending = []
            else:
                pending.append(lit)
    if formula is None:
        raise ValueError("missing problem line")
    if pending:
        raise ValueError("unterminated clause at end of input")
    if len(formula.clauses) != declared:
        raise ValueError(
            f"declared {declared} clauses, found {len(formula.clauses)}"
        )
    return formula


class VarMap:
    """Contiguous 1-based layout: a-vars, then b-vars, then auxiliaries.

    a(i, j) is adjacency of the candidate graph, b(i, j) adjacency of its
    2-distance graph; both normalize to i < j.  Auxiliaries carry a kind
    tag plus the pair they serve, for the sidecar dump.
    """

    def __init__(self, n: int):
        if not 2 <= n <= 64:
            raise ValueError(f"need 2 <= n <= 64, got {n!r}")
        self.n = n
        self._pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        self._a = {}
        self._b = {}
        nxt = 1
        for p in self._pairs:
            self._a[p] = nxt
            nxt += 1
        for p in self._pairs:
            self._b[p] = nxt
            nxt += 1
        self._next = nxt
        self._aux: list[tuple[int, str, int, int]] = []

    @staticmethod
    def _norm(i: int, j: int) -> tuple[int, int]:
        if i == j:
            raise ValueError(f"no variable for the diagonal pair ({i}, {j})")
        return (i, j) if i < j else (j, i)

    def a(self, i: int, j: int) -> int:
        return self._a[self._norm(i, j)]

    def b(self, i: int, j: int) -> int:
        return self._b[self._norm(i, j)]

    def aux(self, kind: str, i: int, j: int) -> int:
        var = self._next
        self._next += 1
        self._aux.append((var, kind, i, j))
        return var

    @property
    def var_count(self) -> int:
        return self._next - 1

    def a_vars(self) -> list[int]:
        return [self._a[p] for p in self._pairs]

    def b_vars(self) -> list[int]:
        return [self._b[p] for p in self._pairs]

    def pairs(self) -> list[tuple[int, int]]:
        return list(self._pairs)

    def describe(self, var: int) -> tuple[str, int, int]:
        na = len(self._pairs)
        if 1 <= var <= na:
            i, j = self._pairs[var - 1]
            return ("a", i, j)
        if na < var <= 2 * na:
            i, j = self._pairs[var - na - 1]
            return ("b", i, j)
        for v, _kind, i, j in self._aux:
            if v == var:
                return ("aux", i, j)
        raise KeyError(f"unknown variable {var}")

    def sidecar(self) -> str:
        """One line per variable: ``<index> <kind> <i> <j>``."""
        lines = []
        na = len(self._pairs)
        for idx, (i, j) in enumerate(self._pairs, start=1):
            lines.append(f"{idx} a {i} {j}")
        for idx, (i, j) in enumerate(self._pairs, start=na + 1):
            lines.append(f"{idx} b {i} {j}")
        for v, _kind, i, j in self._aux:
            lines.append(f"{v} aux {i} {j}")
        return "\n".join(lines) + "\n"
