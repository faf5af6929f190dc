"""Brute-force generators for tiny graphs, used as independent oracles.

Isomorphism classes are separated by a permutation-minimal adjacency
bitmask, evaluated for all ``n!`` relabellings at once with numpy.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from .embedding import mpg_faces
from .errors import NotMaximalPlanar, TooLarge
from .graph import Graph, build_graph

ORACLE_LIMIT = 7


@lru_cache(maxsize=None)
def _perms(n: int) -> np.ndarray:
    return np.array(list(permutations(range(n))), dtype=np.int64).reshape(-1, n)


@lru_cache(maxsize=None)
def _weights(n: int) -> np.ndarray:
    iu = np.triu_indices(n, 1)
    w = np.zeros((n, n), dtype=np.int64)
    w[iu] = 1 << np.arange(len(iu[0]), dtype=np.int64)
    return w


def orbit_masks(g: Graph) -> np.ndarray:
    """Adjacency bitmask of ``g`` under every relabelling."""
    n = g.n
    if n > ORACLE_LIMIT:
        raise TooLarge(f"brute-force canonical form limited to order {ORACLE_LIMIT}")
    if n <= 1:
        return np.zeros(1, dtype=np.int64)
    a = np.zeros((n, n), dtype=np.int64)
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1
    p = _perms(n)
    permuted = a[p[:, :, None], p[:, None, :]]
    return (permuted * _weights(n)).sum(axis=(1, 2))


def canonical_mask(g: Graph) -> int:
    """Least upper-triangle adjacency bitmask over every relabelling."""
    return int(orbit_masks(g).min())


def graph_from_mask(n: int, mask: int) -> Graph:
    pairs = list(combinations(range(n), 2))
    return build_graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def all_graphs(n: int) -> list[Graph]:
    """One graph per isomorphism class of order ``n`` by one-vertex extension."""
    if n > ORACLE_LIMIT:
        raise TooLarge(f"order {n} beyond the oracle limit")
    if n == 0:
        return []
    if n == 1:
        return [build_graph(1, [])]
    found: dict[int, Graph] = {}
    for base in all_graphs(n - 1):
        for r in range(n):
            for nbrs in combinations(range(n - 1), r):
                g = build_graph(n, list(base.edges) + [(v, n - 1) for v in nbrs])
                key = canonical_mask(g)
                if key not in found:
                    found[key] = graph_from_mask(n, key)
    return [found[k] for k in sorted(found)]


def all_connected_graphs(n: int) -> list[Graph]:
    return [g for g in all_graphs(n) if g.is_connected]


def all_mpgs_bruteforce(n: int) -> list[Graph]:
    """Every maximal planar graph of order ``n`` up to isomorphism.

    Runs over all ``3n - 6``-edge subsets of ``K_n`` that have minimum
    degree three, keeps the ones whose faces close into a sphere, and
    buckets them by canonical mask.
    """
    if n > ORACLE_LIMIT:
        raise TooLarge(f"order {n} beyond the oracle limit")
    pairs = list(combinations(range(n), 2))
    m = 3 * n - 6
    found: dict[int, Graph] = {}
    seen: set[int] = set()
    for chosen in combinations(range(len(pairs)), m):
        mask = sum(1 << i for i in chosen)
        if mask in seen:
            continue
        deg = [0] * n
        for i in chosen:
            a, b = pairs[i]
            deg[a] += 1
            deg[b] += 1
        if min(deg) < 3:
            continue
        g = build_graph(n, [pairs[i] for i in chosen])
        adj = [set(x) for x in g.adjacency]
        # every edge of a triangulation lies on two triangles
        if any(len(adj[u] & adj[v]) < 2 for u, v in g.edges):
            continue
        try:
            mpg_faces(g)
        except NotMaximalPlanar:
            continue
        orbit = orbit_masks(g)
        seen.update(int(x) for x in orbit)
        key = int(orbit.min())
        found[key] = graph_from_mask(n, key)
    return [found[k] for k in sorted(found)]
