"""CNF fragments tying candidate adjacency to its 2-distance graph.

The fragments are full biconditionals, so every model decodes to a graph
whose b-variables agree exactly with distance-2 adjacency provided the
b-definition fragment is present.  ``build_formula`` combines them for
the extremal search: a fixed geodesic of the 2-distance graph, shortcut
exclusion up to a bounded detour length, optional exclusion of diameter
at most 2, a minimum-degree floor on the 2-distance graph (implied by
asking its diameter to be finite), and lex ordering on free vertices.
"""
from __future__ import annotations

from itertools import permutations
from typing import TYPE_CHECKING, Iterable, Mapping, Sequence

from ..graphs import Graph, from_edge_list
from .cnf import CnfFormula, VarMap

if TYPE_CHECKING:  # pragma: no cover
    from .search import SearchParams


class FormulaSizeError(RuntimeError):
    """Shortcut exclusion would exceed the clause budget."""

    def __init__(self, total: int, cap: int, per_len: dict[int, int]):
        self.total = total
        self.cap = cap
        self.per_len = per_len
        detail = ", ".join(f"len {k}: {v}" for k, v in sorted(per_len.items()))
        super().__init__(
            f"shortcut exclusion needs {total} clauses (cap {cap}); {detail}"
        )


def _others(n: int, i: int, k: int) -> list[int]:
    return [j for j in range(n) if j != i and j != k]


def encode_b_definition(vm: VarMap) -> CnfFormula:
    """b(i,k) holds iff some j is adjacent to both while i,k are not adjacent.

    One Tseitin conjunct t per middle vertex j, biconditional in both
    directions, then b as the disjunction of its conjuncts.
    """
    clauses: list[list[int]] = []
    n = vm.n
    for i, k in vm.pairs():
        a_ik = vm.a(i, k)
        ts = []
        for j in _others(n, i, k):
            t = vm.aux("t", i, k)
            a_ij = vm.a(i, j)
            a_jk = vm.a(j, k)
            clauses.append([-t, a_ij])
            clauses.append([-t, a_jk])
            clauses.append([-t, -a_ik])
            clauses.append([t, -a_ij, -a_jk, a_ik])
            ts.append(t)
        b = vm.b(i, k)
        clauses.append([-b] + ts)
        for t in ts:
            clauses.append([b, -t])
    out = CnfFormula(vm.var_count)
    out.extend(clauses)
    return out


def encode_p2_fixing(vm: VarMap, p2_len: int) -> CnfFormula:
    """Pin vertices 0..p2_len as a path of b-edges (unit clauses)."""
    if p2_len < 0 or p2_len + 1 > vm.n:
        raise ValueError(f"path with {p2_len} edges does not fit in n={vm.n}")
    out = CnfFormula(vm.var_count)
    for i in range(p2_len):
        out.add([vm.b(i, i + 1)])
    return out


def encode_shortcut_forbidding(
    vm: VarMap, p2_len: int, max_len: int = 3, max_clauses: int = 500_000
) -> CnfFormula:
    """Forbid b-paths between fixed-path vertices shorter than their gap.

    For path vertices x < y with gap y - x and each detour length
    1 <= L < gap (capped at ``max_len``), every b-path of length L from x
    to y through distinct free vertices is excluded by one all-negative
    clause.  Raises :class:`FormulaSizeError` beyond ``max_clauses``.
    """
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    n = vm.n
    free = list(range(p2_len + 1, n))
    per_len: dict[int, int] = {}
    total = 0
    for x in range(p2_len + 1):
        for y in range(x + 2, p2_len + 1):
            gap = y - x
            for length in range(1, min(max_len, gap - 1) + 1):
                # one clause per arrangement of length-1 distinct free vertices
                count = 1
                for r in range(length - 1):
                    count *= len(free) - r
                count = max(count, 0)
                per_len[length] = per_len.get(length, 0) + count
                total += count
    if total > max_clauses:
        raise FormulaSizeError(total, max_clauses, per_len)
    out = CnfFormula(vm.var_count)
    for x in range(p2_len + 1):
        for y in range(x + 2, p2_len + 1):
            gap = y - x
            for length in range(1, min(max_len, gap - 1) + 1):
                if length == 1:
                    out.add([-vm.b(x, y)])
                    continue
                for mids in permutations(free, length - 1):
                    lits = [-vm.b(x, mids[0])]
                    for u, v in zip(mids, mids[1:]):
                        lits.append(-vm.b(u, v))
                    lits.append(-vm.b(mids[-1], y))
                    out.add(lits)
    return out


def encode_diam2_exclusion(vm: VarMap) -> CnfFormula:
    """Exclude graphs of diameter at most 2.

    Self-contained within-2 indicators: c(i,j,k) marks a common neighbor
    j, r(i,k) marks distance at most 2, and one big clause demands some
    pair beyond 2.  Disconnected or diameter->=3 graphs stay admissible.
    """
    clauses: list[list[int]] = []
    n = vm.n
    rs = []
    for i, k in vm.pairs():
        a_ik = vm.a(i, k)
        cs = []
        for j in _others(n, i, k):
            c = vm.aux("c", i, k)
            a_ij = vm.a(i, j)
            a_jk = vm.a(j, k)
            clauses.append([-c, a_ij])
            clauses.append([-c, a_jk])
            clauses.append([c, -a_ij, -a_jk])
            cs.append(c)
        r = vm.aux("r", i, k)
        clauses.append([-r, a_ik] + cs)
        clauses.append([r, -a_ik])
        for c in cs:
            clauses.append([r, -c])
        rs.append(r)
    clauses.append([-r for r in rs])
    out = CnfFormula(vm.var_count)
    out.extend(clauses)
    return out


def encode_g2_min_degree(vm: VarMap) -> CnfFormula:
    """Every vertex needs some b-edge; implied by a finite G2 diameter."""
    out = CnfFormula(vm.var_count)
    for v in range(vm.n):
        out.add([vm.b(v, u) for u in range(vm.n) if u != v])
    return out


def encode_free_vertex_ordering(vm: VarMap, p2_len: int) -> CnfFormula:
    """Lex-leader ordering on adjacent free-vertex pairs.

    For free vertices u < u+1 the adjacency row of u (outside the pair)
    must be lexicographically <= the row of u+1, with prefix-equality
    auxiliaries defined biconditionally.  Sound: the lex-least member of
    each class under free-vertex permutations survives.
    """
    clauses: list[list[int]] = []
    n = vm.n
    free = list(range(p2_len + 1, n))
    for u in free[:-1]:
        v = u + 1
        cols = [w for w in range(n) if w not in (u, v)]
        if not cols:
            continue
        xs = [vm.a(u, w) for w in cols]
        ys = [vm.a(v, w) for w in cols]
        clauses.append([-xs[0], ys[0]])
        prev_eq = None
        for t in range(1, len(cols)):
            e = vm.aux("e", u, v)
            x_prev, y_prev = xs[t - 1], ys[t - 1]
            if prev_eq is None:
                clauses.append([-e, -x_prev, y_prev])
                clauses.append([-e, x_prev, -y_prev])
                clauses.append([e, -x_prev, -y_prev])
                clauses.append([e, x_prev, y_prev])
            else:
                clauses.append([-e, prev_eq])
                clauses.append([-e, -x_prev, y_prev])
                clauses.append([-e, x_prev, -y_prev])
                clauses.append([e, -prev_eq, -x_prev, -y_prev])
                clauses.append([e, -prev_eq, x_prev, y_prev])
            clauses.append([-e, -xs[t], ys[t]])
            prev_eq = e
    out = CnfFormula(vm.var_count)
    out.extend(clauses)
    return out


def build_formula(params: "SearchParams") -> tuple[VarMap, CnfFormula]:
    """Assemble the full search formula; fragments in a fixed order."""
    vm = VarMap(params.n)
    fragments = [encode_b_definition(vm)]
    fragments.append(encode_p2_fixing(vm, params.p2_len))
    fragments.append(
        encode_shortcut_forbidding(
            vm, params.p2_len, params.shortcut_max_len, params.max_clauses
        )
    )
    if params.forbid_diam_le_2:
        fragments.append(encode_diam2_exclusion(vm))
    if params.min_d2 >= 1:
        fragments.append(encode_g2_min_degree(vm))
    fragments.append(encode_free_vertex_ordering(vm, params.p2_len))
    out = CnfFormula(vm.var_count)
    for frag in fragments:
        out.clauses.extend(frag.clauses)
    return vm, out


def decode_model(vm: VarMap, model: Mapping[int, bool] | Sequence[int]) -> Graph:
    """Graph from the a-variables of a model.

    ``model`` is either a mapping var -> bool or an iterable of signed
    DIMACS literals.  Every a-variable must be assigned.
    """
    if isinstance(model, Mapping):
        values = dict(model)
    else:
        values = {}
        for lit in model:
            if lit == 0:
                continue
            values[abs(lit)] = lit > 0
    edges = []
    for i, j in vm.pairs():
        var = vm.a(i, j)
        if var not in values:
            raise ValueError(f"model leaves adjacency variable {var} (a {i} {j}) unset")
        if values[var]:
            edges.append((i, j))
    return from_edge_list(vm.n, edges)


def model_b_edges(vm: VarMap, model: Mapping[int, bool] | Sequence[int]) -> set[tuple[int, int]]:
    """Pairs whose b-variable is true in the model (for cross-checks)."""
    if isinstance(model, Mapping):
        values = dict(model)
    else:
        values = {abs(lit): lit > 0 for lit in model if lit != 0}
    out = set()
    for i, j in vm.pairs():
        var = vm.b(i, j)
        if var not in values:
            raise ValueError(f"model leaves variable {var} (b {i} {j}) unset")
        if values[var]:
            out.add((i, j))
    return out
