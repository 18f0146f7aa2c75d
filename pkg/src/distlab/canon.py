"""Exact canonical labeling via color refinement and pruned branching.

The canonical form of a graph is the lexicographically smallest packed
upper-triangle adjacency code over all relabelings reachable from an
equitable ordered partition.  The branch-and-bound individualizes one
vertex of the first smallest non-singleton cell at a time and prunes
siblings that discovered automorphisms already map onto tried choices,
so the generators collected along the way generate the full
automorphism group.  Everything works on plain-int bitset rows.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graphs import Graph


@dataclass
class CanonResult:
    code: int                      # packed upper triangle in canonical order
    order: list[int]               # position p holds vertex order[p]
    generators: list[tuple[int, ...]]  # automorphism generators (vertex maps)


def refine(rows: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement: split cells by neighbor counts into every cell.

    Cell order is deterministic (sub-cells sorted by count key), so the
    refinement commutes with relabeling and is safe for canonization.
    """
    cells = [list(c) for c in cells]
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        new_cells: list[list[int]] = []
        changed = False
        for c in cells:
            if len(c) == 1:
                new_cells.append(c)
                continue
            buckets: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                rv = rows[v]
                key = tuple((rv & m).bit_count() for m in masks)
                buckets.setdefault(key, []).append(v)
            if len(buckets) == 1:
                new_cells.append(c)
            else:
                changed = True
                for key in sorted(buckets):
                    new_cells.append(buckets[key])
        cells = new_cells
        if not changed:
            return cells


def _code_for_order(rows: Sequence[int], order: list[int]) -> int:
    code = 0
    for i in range(len(order)):
        ri = rows[order[i]]
        for j in range(i + 1, len(order)):
            code = (code << 1) | ((ri >> order[j]) & 1)
    return code


class _Search:
    __slots__ = ("rows", "n", "best_code", "best_order", "generators", "prefix")

    def __init__(self, rows, n):
        self.rows = rows
        self.n = n
        self.best_code: int | None = None
        self.best_order: list[int] | None = None
        self.generators: list[tuple[int, ...]] = []
        self.prefix: list[int] = []

    def run(self, cells):
        cells = refine(self.rows, cells)
        target = -1
        best_len = 0
        for idx, c in enumerate(cells):
            if len(c) > 1 and (target < 0 or len(c) < best_len):
                target = idx
                best_len = len(c)
        if target < 0:
            order = [c[0] for c in cells]
            code = _code_for_order(self.rows, order)
            if self.best_code is None or code < self.best_code:
                self.best_code = code
                self.best_order = order
            elif code == self.best_code:
                perm = [0] * self.n
                for p in range(self.n):
                    perm[self.best_order[p]] = order[p]
                tperm = tuple(perm)
                if any(perm[v] != v for v in range(self.n)) and tperm not in self.generators:
                    self.generators.append(tperm)
            return
        tried: list[int] = []
        for v in sorted(cells[target]):
            if tried and self._in_tried_orbit(v, tried):
                continue
            child = (
                cells[:target]
                + [[v], [u for u in cells[target] if u != v]]
                + cells[target + 1:]
            )
            self.prefix.append(v)
            self.run(child)
            self.prefix.pop()
            tried.append(v)

    def _in_tried_orbit(self, v: int, tried: list[int]) -> bool:
        # orbits under generators that fix the individualized prefix pointwise
        gens = [
            g for g in self.generators
            if all(g[x] == x for x in self.prefix)
        ]
        if not gens:
            return False
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in gens:
            for u in range(self.n):
                ru, rg = find(u), find(g[u])
                if ru != rg:
                    parent[ru] = rg
        rv = find(v)
        return any(find(t) == rv for t in tried)


def canonical_labeling_rows(
    rows: Sequence[int], n: int, init_cells: list[list[int]] | None = None
) -> CanonResult:
    """Canonical order, code and automorphism generators for bitset rows."""
    search = _Search(list(rows), n)
    search.run(init_cells if init_cells is not None else [list(range(n))])
    assert search.best_order is not None
    return CanonResult(search.best_code, search.best_order, search.generators)


def canonical_form_rows(rows: Sequence[int], n: int) -> bytes:
    res = canonical_labeling_rows(rows, n)
    nbytes = (n * (n - 1) // 2 + 7) // 8
    return bytes([n]) + res.code.to_bytes(nbytes, "big") if nbytes else bytes([n])


def canonical_form(g: Graph) -> bytes:
    """Relabeling-invariant adjacency encoding; equal iff isomorphic."""
    return canonical_form_rows(g.rows(), g.n)


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False
    return canonical_form(g1) == canonical_form(g2)


def orbits_from_generators(gens: Sequence[Sequence[int]], n: int) -> list[int]:
    """orbit[v] = least vertex reachable from v under the generated group."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for u in range(n):
            ru, rg = find(u), find(g[u])
            if ru != rg:
                parent[max(ru, rg)] = min(ru, rg)
    return [find(v) for v in range(n)]


def relabel_rows(rows: Sequence[int], perm: Sequence[int]) -> list[int]:
    """Rows of the graph with vertex v renamed perm[v]."""
    n = len(rows)
    out = [0] * n
    for v in range(n):
        rv = rows[v]
        nv = 0
        while rv:
            low = rv & -rv
            nv |= 1 << perm[low.bit_length() - 1]
            rv ^= low
        out[perm[v]] = nv
    return out
