"""Bitset graphs and the exact k-distance operator.

A :class:`Graph` is an undirected simple graph on ``1..64`` vertices,
stored as one ``uint64`` adjacency bitset per vertex.  All distance work
is exact integer BFS; "infinite" shows up as ``math.inf`` in diameters
and as :data:`UNREACHABLE` entries in distance matrices.
"""
from __future__ import annotations

import math
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import _kernels

MAX_VERTICES = 64
UNREACHABLE = _kernels.UNREACHABLE


class WindowNotInduced(ValueError):
    """A length-2 window of a walk closes a triangle or backtracks.

    ``index`` is the 0-based position where the offending window starts.
    """

    def __init__(self, index: int, message: str | None = None):
        self.index = index
        super().__init__(message or f"walk window at index {index} is not induced")


def bitset_to_vertices(bits: int) -> list[int]:
    """Decode a vertex bitset into a sorted vertex list."""
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


class Graph:
    """Immutable undirected simple graph backed by uint64 adjacency rows."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, rows: Sequence[int] | np.ndarray, _validate: bool = True):
        if _validate:
            if not isinstance(n, int) or not 1 <= n <= MAX_VERTICES:
                raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {n!r}")
            if len(rows) != n:
                raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
            full = (1 << n) - 1
            irows = [int(r) for r in rows]
            for i, r in enumerate(irows):
                if r & ~full:
                    raise ValueError(f"row {i} references vertices >= {n}")
                if (r >> i) & 1:
                    raise ValueError(f"self-loop at vertex {i}")
            for i, r in enumerate(irows):
                for j in bitset_to_vertices(r):
                    if not (irows[j] >> i) & 1:
                        raise ValueError(f"adjacency not symmetric at ({i}, {j})")
        arr = np.asarray(rows, dtype=np.uint64)
        arr.setflags(write=False)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", arr)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def rows(self) -> list[int]:
        """Adjacency rows as plain Python ints."""
        return [int(r) for r in self.adj]

    def has_edge(self, i: int, j: int) -> bool:
        return bool((int(self.adj[i]) >> j) & 1)

    def neighbors(self, i: int) -> list[int]:
        return bitset_to_vertices(int(self.adj[i]))

    def degree(self, i: int) -> int:
        return int(self.adj[i]).bit_count()

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i in range(self.n):
            r = int(self.adj[i]) >> (i + 1)
            j = i + 1
            while r:
                if r & 1:
                    out.append((i, j))
                r >>= 1
                j += 1
        return out

    def edge_count(self) -> int:
        return sum(int(r).bit_count() for r in self.adj) // 2

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and bool((self.adj == other.adj).all())
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adj.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from undirected edge pairs; duplicates collapse.

    Rejects self-loops and endpoints outside ``0..n-1``.
    """
    if not isinstance(n, int) or not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {n!r}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows, _validate=False)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty_graph(n: int) -> Graph:
    return from_edge_list(n, [])


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    rows = [(full & ~r) & ~(1 << i) for i, r in enumerate(g.rows())]
    return Graph(g.n, rows, _validate=False)


def all_pairs_distances(g: Graph) -> np.ndarray:
    """Exact BFS distance matrix, ``UNREACHABLE`` (-1) across components.

    Result is an int16 array with zero diagonal; entry (i, j) is 1 exactly
    when {i, j} is an edge.
    """
    return _kernels.distances(g.adj)


def diameter(g: Graph) -> int | float:
    """Largest pairwise distance; ``math.inf`` when disconnected."""
    dist = all_pairs_distances(g)
    if (dist == UNREACHABLE).any():
        return math.inf
    return int(dist.max())


def diameter_pair(g: Graph) -> tuple[int | float, int | float]:
    """(diam g, diam of the 2-distance graph) in one fused kernel call."""
    d, d2 = _kernels.diameter_pair(g.adj)
    return (math.inf if d < 0 else int(d), math.inf if d2 < 0 else int(d2))


def k_distance(g: Graph, k: int) -> Graph:
    """Graph on the same vertices joining pairs at distance exactly ``k``.

    ``k = 1`` reproduces ``g``; ``k >= 1`` required.
    """
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    dist = all_pairs_distances(g)
    idx = np.arange(g.n, dtype=np.uint64)
    bits = np.where(dist == k, np.uint64(1) << idx[None, :], np.uint64(0))
    rows = np.bitwise_or.reduce(bits, axis=1)
    return Graph(g.n, rows, _validate=False)


def common_neighborhood(g: Graph, s: Iterable[int]) -> int:
    """Bitset of vertices adjacent to every vertex of ``s``; ``s`` nonempty."""
    verts = list(s)
    if not verts:
        raise ValueError("common neighborhood of an empty set is undefined")
    out = (1 << g.n) - 1
    for v in verts:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
        out &= int(g.adj[v])
    return out


def halved_walk(g: Graph, walk: Sequence[int]) -> list[int]:
    """Every other vertex of a walk, checked to step through the 2-distance graph.

    Each window (w[t], w[t+1], w[t+2]) with even t must be induced: endpoints
    distinct and non-adjacent, else :class:`WindowNotInduced` with that ``t``.
    The returned vertices are verified to be consecutive edges of
    ``k_distance(g, 2)``.  Walks shorter than one window are rejected.
    """
    if len(walk) < 3:
        raise ValueError("walk must have at least 3 vertices")
    for v in walk:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    for t in range(1, len(walk)):
        if not g.has_edge(walk[t - 1], walk[t]):
            raise ValueError(f"({walk[t-1]}, {walk[t]}) at index {t-1} is not an edge")
    for t in range(0, len(walk) - 2, 2):
        u, w = walk[t], walk[t + 2]
        if u == w or g.has_edge(u, w):
            raise WindowNotInduced(t)
    out = list(walk[0::2])
    g2 = k_distance(g, 2)
    for s in range(len(out) - 1):
        if not g2.has_edge(out[s], out[s + 1]):  # unreachable given the window checks
            raise WindowNotInduced(2 * s)
    return out


def is_path_complement(g: Graph, order: Sequence[int]) -> bool:
    """True iff the listed vertices induce exactly the complement of a path.

    In the listed order, consecutive vertices must be non-adjacent and all
    other pairs adjacent.  Vertices must be distinct and in range.
    """
    verts = list(order)
    if len(set(verts)) != len(verts):
        raise ValueError("order contains repeated vertices")
    for v in verts:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    for p in range(len(verts)):
        for q in range(p + 1, len(verts)):
            want = (q - p) >= 2
            if g.has_edge(verts[p], verts[q]) != want:
                return False
    return True


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex partition into components, each sorted, ordered by least vertex."""
    rows = g.rows()
    seen = 0
    comps = []
    for s in range(g.n):
        if (seen >> s) & 1:
            continue
        reach = 1 << s
        while True:
            new = reach
            m = reach
            while m:
                low = m & -m
                new |= rows[low.bit_length() - 1]
                m ^= low
            if new == reach:
                break
            reach = new
        seen |= reach
        comps.append(bitset_to_vertices(reach))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def iter_vertices(bits: int) -> Iterator[int]:
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low
