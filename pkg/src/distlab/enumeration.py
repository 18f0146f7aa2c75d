"""Isomorph-free enumeration of connected graphs and diameter surveys.

Enumeration is by canonical augmentation: grow one vertex at a time,
keep one attachment set per orbit of the parent's automorphism group,
and accept a child only when the new vertex lies in the same orbit as
the canonical non-cut vertex of highest canonical position.  Each
isomorphism class is produced exactly once, memory stays flat, and the
stream order is deterministic.

The survey pairs each enumerated graph with (diam G, diam G2) where G2
joins vertices at distance exactly 2.  Counts land in a
:class:`SurveyTable`; infinite G2 diameters are kept under ``inf``.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from . import _kernels
from .canon import canonical_labeling_rows, orbits_from_generators
from .graphs import Graph

ENUM_CAP = 11
ENUM_CAP_FORCED = 12


def _check_cap(n: int, force: bool) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"vertex count must be a positive integer, got {n!r}")
    if n > ENUM_CAP_FORCED:
        raise ValueError(f"enumeration above n={ENUM_CAP_FORCED} is refused")
    if n > ENUM_CAP and not force:
        raise ValueError(
            f"enumeration at n={n} needs force=True (free cap is n={ENUM_CAP})"
        )


def _connected_without(rows: Sequence[int], n: int, v: int) -> bool:
    """Does the graph stay connected after deleting vertex v?"""
    mask = ((1 << n) - 1) & ~(1 << v)
    if mask == 0:
        return True
    start = mask & -mask
    reach = start
    while True:
        new = reach
        m = reach
        while m:
            low = m & -m
            new |= rows[low.bit_length() - 1]
            m ^= low
        new &= mask
        if new == reach:
            return reach == mask
        reach = new


def _apply_perm_to_set(perm: Sequence[int], bits: int) -> int:
    out = 0
    while bits:
        low = bits & -bits
        out |= 1 << perm[low.bit_length() - 1]
        bits ^= low
    return out


def _attachment_reps(m: int, gens: Sequence[tuple[int, ...]]) -> Iterator[int]:
    """Nonempty subsets of 0..m-1, one per orbit of the parent's group."""
    if not gens:
        yield from range(1, 1 << m)
        return
    seen = bytearray(1 << m)
    for s in range(1, 1 << m):
        if seen[s]:
            continue
        orbit = [s]
        seen[s] = 1
        head = 0
        while head < len(orbit):
            cur = orbit[head]
            head += 1
            for g in gens:
                img = _apply_perm_to_set(g, cur)
                if not seen[img]:
                    seen[img] = 1
                    orbit.append(img)
        yield s


def _children(rows: tuple[int, ...], gens: Sequence[tuple[int, ...]]):
    """Accepted one-vertex extensions with their automorphism generators."""
    m = len(rows)
    for s in _attachment_reps(m, gens):
        child = [r | (((s >> i) & 1) << m) for i, r in enumerate(rows)]
        child.append(s)
        res = canonical_labeling_rows(child, m + 1)
        orbit = orbits_from_generators(res.generators, m + 1)
        vstar = -1
        for p in range(m, -1, -1):
            v = res.order[p]
            if _connected_without(child, m + 1, v):
                vstar = v
                break
        if orbit[vstar] == orbit[m]:
            yield tuple(child), res.generators


def _walk(rows: tuple[int, ...], gens, n: int) -> Iterator[tuple[int, ...]]:
    if len(rows) == n:
        yield rows
        return
    for child, child_gens in _children(rows, gens):
        yield from _walk(child, child_gens, n)


def enumerate_connected(n: int, force: bool = False) -> Iterator[Graph]:
    """All connected graphs on n vertices, one per isomorphism class.

    Deterministic order; free up to n=11, n=12 behind ``force``.
    """
    _check_cap(n, force)
    for rows in _walk((0,), [], n):
        yield Graph(n, rows, _validate=False)


@dataclass
class SurveyTable:
    """Counts of connected isomorphism classes by (diam G, diam G2)."""

    n: int
    cells: dict[tuple[int, int | float], int] = field(default_factory=dict)

    def add(self, d: int, d2: int | float, count: int = 1) -> None:
        key = (d, d2)
        self.cells[key] = self.cells.get(key, 0) + count

    def get(self, d: int, d2: int | float) -> int:
        return self.cells.get((d, d2), 0)

    def total(self) -> int:
        return sum(self.cells.values())

    def sorted_items(self) -> list[tuple[tuple[int, int | float], int]]:
        def key(item):
            (d, d2), _ = item
            return (d, math.isinf(d2), d2)

        return sorted(self.cells.items(), key=key)

    def to_csv(self) -> str:
        lines = ["n,d,d2,count"]
        for (d, d2), count in self.sorted_items():
            d2s = "inf" if math.isinf(d2) else str(int(d2))
            lines.append(f"{self.n},{d},{d2s},{count}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_csv(cls, text: str) -> "SurveyTable":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines or lines[0].strip() != "n,d,d2,count":
            raise ValueError("expected header 'n,d,d2,count'")
        table: "SurveyTable | None" = None
        for ln in lines[1:]:
            nstr, dstr, d2str, cstr = ln.strip().split(",")
            n = int(nstr)
            if table is None:
                table = cls(n)
            elif table.n != n:
                raise ValueError("mixed n values in one survey table")
            d2: int | float = math.inf if d2str == "inf" else int(d2str)
            table.add(int(dstr), d2, int(cstr))
        if table is None:
            raise ValueError("empty survey table")
        return table


def _pair_of_rows(rows: Sequence[int]) -> tuple[int, int | float]:
    adj = np.asarray(rows, dtype=np.uint64)
    d, d2 = _kernels.diameter_pair(adj)
    return int(d), (math.inf if d2 < 0 else int(d2))


def _survey_subtree(args) -> dict[tuple[int, int | float], int]:
    rows, gens, n = args
    cells: dict[tuple[int, int | float], int] = {}
    for final in _walk(rows, gens, n):
        d, d2 = _pair_of_rows(final)
        cells[(d, d2)] = cells.get((d, d2), 0) + 1
    return cells


def survey(n: int, force: bool = False, jobs: int = 1) -> SurveyTable:
    """Joint (diam G, diam G2) census over connected graphs on n vertices.

    ``jobs > 1`` fans subtrees out to worker processes; the merged table
    is identical to the single-process one.
    """
    _check_cap(n, force)
    table = SurveyTable(n)
    split = n - 2
    if jobs <= 1 or split < 2:
        for rows in _walk((0,), [], n):
            d, d2 = _pair_of_rows(rows)
            table.add(d, d2)
        return table
    parents = []
    stack = [((0,), [])]
    while stack:
        rows, gens = stack.pop()
        if len(rows) == split:
            parents.append((rows, gens, n))
            continue
        for child, child_gens in _children(rows, gens):
            stack.append((child, child_gens))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for cells in pool.map(_survey_subtree, parents, chunksize=8):
            for (d, d2), count in cells.items():
                table.add(d, d2, count)
    return table
