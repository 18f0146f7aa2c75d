"""Shared helpers for the test suite.

Everything here is deliberately written against plain adjacency lists
and itertools so it cannot share a bug with the package internals.
"""

import itertools
import random
from collections import deque

from distlab.graphs import Graph, from_edge_list


def reference_distances(g: Graph) -> list[list[int]]:
    """Deque BFS from every source, -1 for unreachable pairs."""
    n = g.n
    nbrs = [g.neighbors(v) for v in range(n)]
    out = []
    for src in range(n):
        dist = [-1] * n
        dist[src] = 0
        q = deque([src])
        while q:
            u = q.popleft()
            for w in nbrs[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    q.append(w)
        out.append(dist)
    return out


def reference_diameter(g: Graph) -> int:
    """-1 when disconnected, else the exact diameter."""
    best = 0
    for row in reference_distances(g):
        if -1 in row:
            return -1
        best = max(best, max(row))
    return best


def reference_k_distance_edges(g: Graph, k: int) -> set[tuple[int, int]]:
    dist = reference_distances(g)
    return {
        (i, j)
        for i in range(g.n)
        for j in range(i + 1, g.n)
        if dist[i][j] == k
    }


def relabeled(g: Graph, perm) -> Graph:
    """Image of g under vertex permutation perm (perm[v] = new label)."""
    return from_edge_list(g.n, [(perm[i], perm[j]) for i, j in g.edges()])


def brute_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Permutation search; fine up to n = 8."""
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False
    e2 = set(g2.edges())
    for perm in itertools.permutations(range(g1.n)):
        if all((min(perm[i], perm[j]), max(perm[i], perm[j])) in e2 for i, j in g1.edges()):
            return True
    return False


def brute_orbits(g: Graph) -> list[int]:
    """orbit[v] = least vertex in v's orbit under the full automorphism group."""
    n = g.n
    edges = set(g.edges())
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in itertools.permutations(range(n)):
        ok = all(
            (min(perm[i], perm[j]), max(perm[i], perm[j])) in edges for i, j in edges
        )
        if not ok:
            continue
        for v in range(n):
            a, b = find(v), find(perm[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return from_edge_list(n, edges)


def random_connected_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    """Rejection sample; falls back to sprinkling a random spanning tree."""
    for _ in range(200):
        g = random_graph(rng, n, p)
        if reference_diameter(g) >= 0:
            return g
    order = list(range(n))
    rng.shuffle(order)
    edges = [(order[i], order[rng.randrange(i)]) for i in range(1, n)]
    edges += [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return from_edge_list(n, edges)
