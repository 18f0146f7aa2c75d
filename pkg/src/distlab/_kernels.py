"""Hot numeric kernels: word-parallel BFS over bitset adjacency rows.

Two interchangeable backends compute the same results bit for bit:

* ``numba``: ``@njit``-compiled scalar loops (default when numba imports).
* ``numpy``: pure-vectorized fallback, no compilation step.

Selection is made once at import time from the ``DISTLAB_BACKEND``
environment variable (``auto`` | ``numba`` | ``numpy``; default ``auto``).
Adjacency is a 1-D ``uint64`` array: bit ``j`` of ``adj[i]`` set iff
``{i, j}`` is an edge, so vertex counts are capped at 64.

Distance matrices use ``UNREACHABLE`` (-1) for pairs in different
components.  ``diameter_pair`` returns -1 in either slot to mean an
infinite diameter.
"""
from __future__ import annotations

import os

import numpy as np

UNREACHABLE = -1

try:
    from numba import njit
except ImportError:  # pragma: no cover - exercised only without numba installed
    njit = None


def apd_numpy(adj: np.ndarray) -> np.ndarray:
    """All-pairs BFS distances, every source advanced one level per pass."""
    n = adj.shape[0]
    idx = np.arange(n, dtype=np.uint64)
    dist = np.full((n, n), UNREACHABLE, dtype=np.int16)
    dist[np.arange(n), np.arange(n)] = 0
    visited = np.uint64(1) << idx
    frontier = visited.copy()
    d = 0
    while frontier.any():
        # gather the union of neighbor rows over each source's frontier
        in_frontier = ((frontier[:, None] >> idx[None, :]) & np.uint64(1)).astype(bool)
        gathered = np.where(in_frontier, adj[None, :], np.uint64(0))
        nxt = np.bitwise_or.reduce(gathered, axis=1) & ~visited
        d += 1
        newly = ((nxt[:, None] >> idx[None, :]) & np.uint64(1)).astype(bool)
        if not newly.any():
            break
        dist[newly] = d
        visited |= nxt
        frontier = nxt
    return dist


def _pack_rows_numpy(mask: np.ndarray) -> np.ndarray:
    """Pack a boolean (n, n) matrix into per-row uint64 bitsets."""
    n = mask.shape[0]
    idx = np.arange(n, dtype=np.uint64)
    bits = np.where(mask, np.uint64(1) << idx[None, :], np.uint64(0))
    return np.bitwise_or.reduce(bits, axis=1)


def pair_numpy(adj: np.ndarray) -> tuple[int, int]:
    """(diam G, diam G2) with -1 for infinity; G2 joins pairs at distance 2."""
    dist = apd_numpy(adj)
    d = -1 if (dist == UNREACHABLE).any() else int(dist.max())
    dist2 = apd_numpy(_pack_rows_numpy(dist == 2))
    d2 = -1 if (dist2 == UNREACHABLE).any() else int(dist2.max())
    return d, d2


if njit is not None:

    @njit(cache=True)
    def apd_numba(adj):  # pragma: no cover - compiled
        n = adj.shape[0]
        dist = np.full((n, n), -1, dtype=np.int16)
        one = np.uint64(1)
        zero = np.uint64(0)
        for s in range(n):
            dist[s, s] = 0
            visited = one << np.uint64(s)
            frontier = visited
            d = 0
            while frontier != zero:
                nxt = zero
                for v in range(n):
                    if (frontier >> np.uint64(v)) & one:
                        nxt |= adj[v]
                nxt &= ~visited
                if nxt == zero:
                    break
                d += 1
                for v in range(n):
                    if (nxt >> np.uint64(v)) & one:
                        dist[s, v] = d
                visited |= nxt
                frontier = nxt
        return dist

    @njit(cache=True)
    def pair_numba(adj):  # pragma: no cover - compiled
        n = adj.shape[0]
        one = np.uint64(1)
        dist = apd_numba(adj)
        d = 0
        for i in range(n):
            for j in range(n):
                if dist[i, j] < 0:
                    d = -1
                elif d >= 0 and dist[i, j] > d:
                    d = dist[i, j]
        adj2 = np.zeros(n, dtype=np.uint64)
        for i in range(n):
            for j in range(n):
                if dist[i, j] == 2:
                    adj2[i] |= one << np.uint64(j)
        dist2 = apd_numba(adj2)
        d2 = 0
        for i in range(n):
            for j in range(n):
                if dist2[i, j] < 0:
                    d2 = -1
                elif d2 >= 0 and dist2[i, j] > d2:
                    d2 = dist2[i, j]
        return d, d2

else:  # pragma: no cover
    apd_numba = None
    pair_numba = None


_requested = os.environ.get("DISTLAB_BACKEND", "auto").strip().lower() or "auto"
if _requested not in {"auto", "numba", "numpy"}:
    raise RuntimeError(
        f"DISTLAB_BACKEND={_requested!r}: expected 'auto', 'numba' or 'numpy'"
    )
if _requested == "numba" and njit is None:
    raise RuntimeError("DISTLAB_BACKEND=numba but numba is not importable")

_use_numba = njit is not None and _requested in {"auto", "numba"}

if _use_numba:
    distances = apd_numba
    diameter_pair = pair_numba
else:
    distances = apd_numpy
    diameter_pair = pair_numpy


def active_backend() -> str:
    return "numba" if _use_numba else "numpy"
