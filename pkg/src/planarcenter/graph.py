"""Immutable simple graphs and the distance machinery built on them.

Vertices are the integers ``0..n-1``; labels are cosmetic.  Every graph
computes its all-pairs distance matrix lazily, once, and shares it
read-only with every caller.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, shortest_path

from .errors import (
    Disconnected,
    DuplicateEdge,
    EmptySet,
    NotASubgraphMap,
    OutOfRange,
    SelfLoop,
)

UNREACHABLE = float("inf")

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on ``range(n)`` with a sorted edge tuple."""

    n: int
    edges: tuple[Edge, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    @property
    def order(self) -> int:
        return self.n

    @property
    def size(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_set

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def index_of(self, label: str) -> int:
        if self.labels is None:
            return int(label)
        return self.labels.index(label)

    @cached_property
    def distances(self) -> "DistanceMatrix":
        return distance_matrix(self)

    @cached_property
    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return bool(np.isfinite(self.distances.values[0]).all())

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.size})"


def build_graph(
    order: int,
    edge_list: Iterable[Sequence[int]],
    labels: Sequence[str] | None = None,
) -> Graph:
    """Validate and normalise an edge list into a :class:`Graph`.

    Raises:
        OutOfRange: an endpoint is not in ``range(order)``.
        SelfLoop: an edge joins a vertex to itself.
        DuplicateEdge: the same unordered pair occurs twice.
    """
    if order < 0:
        raise OutOfRange(f"negative order {order}")
    seen: set[Edge] = set()
    for pair in edge_list:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < order and 0 <= v < order):
            raise OutOfRange(f"edge ({u}, {v}) outside range({order})")
        if u == v:
            raise SelfLoop(f"self-loop at {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdge(f"duplicate edge {e}")
        seen.add(e)
    if labels is not None:
        labels = tuple(str(x) for x in labels)
        if len(labels) != order:
            raise OutOfRange(f"{len(labels)} labels for {order} vertices")
    return Graph(order, tuple(sorted(seen)), labels)


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


# ---------------------------------------------------------------------------
# distances
# ---------------------------------------------------------------------------


def bfs_distances(g: Graph, source: int) -> list[float]:
    """Hop distances from ``source``; unreachable vertices get ``inf``."""
    if not 0 <= source < g.n:
        raise OutOfRange(f"source {source} outside range({g.n})")
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = du
                queue.append(w)
    return [int(d) if d != UNREACHABLE else d for d in dist]


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """All-pairs hop counts.

    ``values`` is a float array where unreachable pairs hold ``inf``; use
    :attr:`hops` for an integer view, which refuses disconnected graphs.
    """

    values: np.ndarray

    def __post_init__(self) -> None:
        self.values.setflags(write=False)

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @cached_property
    def connected(self) -> bool:
        return bool(np.isfinite(self.values).all())

    @cached_property
    def hops(self) -> np.ndarray:
        if not self.connected:
            raise Disconnected("graph is disconnected")
        out = self.values.astype(np.int64)
        out.setflags(write=False)
        return out

    def __call__(self, u: int, v: int) -> int:
        d = self.values[u, v]
        if not np.isfinite(d):
            raise Disconnected(f"{u} and {v} are in different components")
        return int(d)

    def to_vertex_set(self, v: int, s: Iterable[int]) -> int:
        s = list(s)
        if not s:
            raise EmptySet("empty vertex set")
        d = self.values[v, s].min()
        if not np.isfinite(d):
            raise Disconnected(f"{v} cannot reach the set")
        return int(d)

    def rows_to_set(self, s: Iterable[int]) -> np.ndarray:
        """``d(v, S)`` for every vertex ``v``."""
        s = list(s)
        if not s:
            raise EmptySet("empty vertex set")
        return self.hops[:, s].min(axis=1)


def distance_matrix(g: Graph) -> DistanceMatrix:
    if g.n == 0:
        return DistanceMatrix(np.zeros((0, 0)))
    return DistanceMatrix(shortest_path(_csr(g), method="D", unweighted=True, directed=False))


def _csr(g: Graph) -> csr_matrix:
    if g.edges:
        e = np.asarray(g.edges, dtype=np.int64)
        rows = np.concatenate([e[:, 0], e[:, 1]])
        cols = np.concatenate([e[:, 1], e[:, 0]])
    else:
        rows = cols = np.zeros(0, dtype=np.int64)
    return csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(g.n, g.n))


def set_distance(g: Graph, a: Iterable[int], b: Iterable[int]) -> int:
    """``min d(x, y)`` over ``x`` in ``a`` and ``y`` in ``b``."""
    a, b = sorted(set(a)), sorted(set(b))
    if not a or not b:
        raise EmptySet("set_distance needs two non-empty sets")
    d = g.distances.values[np.ix_(a, b)].min()
    if not np.isfinite(d):
        raise Disconnected("the two sets lie in different components")
    return int(d)


@dataclass(frozen=True)
class EccentricityProfile:
    eccentricity: tuple[int, ...]
    radius: int
    diameter: int
    layers: dict[int, frozenset[int]]
    center: frozenset[int]

    @property
    def periphery(self) -> frozenset[int]:
        return self.layers[self.diameter]

    def is_self_centered(self) -> bool:
        return self.radius == self.diameter


def eccentricity_profile(g: Graph) -> EccentricityProfile:
    if not g.distances.connected or g.n == 0:
        raise Disconnected("eccentricity is only defined on connected graphs")
    ecc = tuple(int(x) for x in g.distances.hops.max(axis=1))
    layers: dict[int, set[int]] = {}
    for v, e in enumerate(ecc):
        layers.setdefault(e, set()).add(v)
    rad, diam = min(ecc), max(ecc)
    frozen = {i: frozenset(vs) for i, vs in sorted(layers.items())}
    return EccentricityProfile(ecc, rad, diam, frozen, frozen[rad])


def diameter(g: Graph) -> int:
    return int(g.distances.hops.max())


# ---------------------------------------------------------------------------
# structural predicates
# ---------------------------------------------------------------------------


def components(g: Graph, removed: Iterable[int] = ()) -> list[frozenset[int]]:
    """Connected components of ``G - removed``."""
    gone = set(removed)
    keep = [v for v in range(g.n) if v not in gone]
    if not keep:
        return []
    sub, back = induced_subgraph(g, keep)
    count, lab = connected_components(_csr(sub), directed=False)
    parts: list[set[int]] = [set() for _ in range(count)]
    for i, c in enumerate(lab):
        parts[c].add(back[i])
    return sorted((frozenset(p) for p in parts), key=min)


def is_separating_set(g: Graph, s: Iterable[int]) -> tuple[bool, list[frozenset[int]]]:
    """Whether ``G[V - S]`` is disconnected, together with its components."""
    parts = components(g, s)
    return len(parts) > 1, parts


def closed_neighborhood(g: Graph, t: Iterable[int]) -> frozenset[int]:
    out: set[int] = set()
    for v in t:
        out.add(v)
        out.update(g.adjacency[v])
    return frozenset(out)


def dominates(g: Graph, t: Iterable[int], s: Iterable[int]) -> bool:
    """``T`` dominates ``S`` when ``S`` lies inside ``N[T]``."""
    t = list(t)
    for v in t:
        if not 0 <= v < g.n:
            raise OutOfRange(v)
    return set(s) <= closed_neighborhood(g, t)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Vertex ``(u, v)`` of the product is numbered ``u * h.n + v``."""
    m = h.n
    edges = []
    for u in range(g.n):
        for a, b in h.edges:
            edges.append((u * m + a, u * m + b))
    for a, b in g.edges:
        for v in range(m):
            edges.append((a * m + v, b * m + v))
    return build_graph(g.n * m, edges)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Return ``G[S]`` and the map from its vertices back into ``g``."""
    back = tuple(sorted(set(s)))
    if not back:
        raise EmptySet("induced subgraph of an empty set")
    index = {v: i for i, v in enumerate(back)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    labels = tuple(g.label(v) for v in back) if g.labels else None
    return build_graph(len(back), edges, labels), back


@dataclass(frozen=True)
class IsometryCheck:
    isometric: bool
    witness: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.isometric


def is_isometric_subgraph(h: Graph, g: Graph, embedding: Sequence[int]) -> IsometryCheck:
    """Compare all pairwise distances of ``h`` with those of its image in ``g``.

    ``embedding[i]`` is the ``g``-vertex hosting ``h``-vertex ``i``.  On
    failure the first offending ``h``-pair is returned as the witness.
    """
    emb = [int(x) for x in embedding]
    if len(emb) != h.n or len(set(emb)) != h.n:
        raise NotASubgraphMap("embedding must be an injective map of every vertex")
    if any(not 0 <= x < g.n for x in emb):
        raise NotASubgraphMap("embedding leaves the host graph")
    for u, v in h.edges:
        if not g.has_edge(emb[u], emb[v]):
            raise NotASubgraphMap(f"edge ({u}, {v}) has no image edge")
    dh = h.distances.values
    dg = g.distances.values[np.ix_(emb, emb)]
    bad = np.argwhere(dh != dg)
    if len(bad):
        u, v = (int(x) for x in bad[0])
        return IsometryCheck(False, (u, v))
    return IsometryCheck(True)


def relabel(g: Graph, mapping: Sequence[int], n: int | None = None) -> Graph:
    """Image of ``g`` under the vertex map ``mapping`` inside ``range(n)``."""
    n = g.n if n is None else n
    return build_graph(n, [(mapping[u], mapping[v]) for u, v in g.edges])
