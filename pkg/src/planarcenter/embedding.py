"""Combinatorial embeddings: rotation systems, face tracing, cycle sides.

A rotation gives, for every vertex, the cyclic order of its neighbours.
Faces are traced with the rule "after the dart ``u -> v`` comes
``v -> succ_v(u)``", where ``succ_v`` is the next neighbour of ``v`` in its
rotation.  Faces are always derived, never taken on trust.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import BadRotation, NonPlanarGenus, NotACycle, NotMaximalPlanar, TooLarge
from .graph import Graph, components, is_separating_set

Dart = tuple[int, int]
Triangle = tuple[int, int, int]


@dataclass(frozen=True)
class PlaneGraph:
    """A graph together with a genus-0 rotation system and its faces.

    ``faces[i]`` lists the boundary walk of face ``i`` as vertices in
    traversal order; ``face_of_dart[(u, v)]`` is the face whose walk uses
    the dart ``u -> v``.
    """

    graph: Graph
    rotation: tuple[tuple[int, ...], ...]
    faces: tuple[tuple[int, ...], ...]
    face_of_dart: Mapping[Dart, int]

    @property
    def n(self) -> int:
        return self.graph.n

    @cached_property
    def triangles(self) -> tuple[Triangle, ...]:
        """Sorted vertex triples of the triangular faces, in face order."""
        return tuple(tuple(sorted(f)) for f in self.faces if len(f) == 3)  # type: ignore[misc]

    @cached_property
    def is_maximal_plane(self) -> bool:
        n = self.graph.n
        if n < 3:
            return False
        return all(len(f) == 3 for f in self.faces) and len(self.faces) == 2 * n - 4

    def faces_containing(self, v: int) -> list[int]:
        return [i for i, f in enumerate(self.faces) if v in f]

    def __repr__(self) -> str:
        return f"PlaneGraph(n={self.n}, m={self.graph.size}, f={len(self.faces)})"


def _trace(g: Graph, rotation: Sequence[Sequence[int]]) -> tuple[list[tuple[int, ...]], dict[Dart, int]]:
    position = [{w: i for i, w in enumerate(r)} for r in rotation]
    face_of: dict[Dart, int] = {}
    faces: list[tuple[int, ...]] = []
    for u, v in g.edges:
        for start in ((u, v), (v, u)):
            if start in face_of:
                continue
            fid = len(faces)
            walk = []
            a, b = start
            while (a, b) not in face_of:
                face_of[(a, b)] = fid
                walk.append(a)
                rb = rotation[b]
                c = rb[(position[b][a] + 1) % len(rb)]
                a, b = b, c
            if (a, b) != start:
                raise BadRotation("face walk did not close on its starting dart")
            faces.append(tuple(walk))
    return faces, face_of


def embed_from_rotation(g: Graph, rotation: Sequence[Sequence[int]]) -> PlaneGraph:
    """Trace the faces of ``rotation`` and require a genus-0 embedding.

    Raises:
        BadRotation: a vertex's rotation is not a permutation of its neighbours.
        NonPlanarGenus: Euler's formula reports positive genus.
    """
    if len(rotation) != g.n:
        raise BadRotation(f"expected {g.n} rotations, got {len(rotation)}")
    rot = tuple(tuple(int(w) for w in r) for r in rotation)
    for v, r in enumerate(rot):
        if len(r) != len(set(r)) or set(r) != set(g.adjacency[v]):
            raise BadRotation(f"rotation at {v} is not a permutation of its neighbours")
    faces, face_of = _trace(g, rot)
    n_comp = len(components(g))
    # isolated vertices contribute no darts
    isolated = sum(1 for v in range(g.n) if not rot[v])
    nontrivial = n_comp - isolated
    if nontrivial:
        # each component is traced on its own sphere
        chi = (g.n - isolated) - g.size + len(faces)
        if chi != 2 * nontrivial:
            genus = (2 * nontrivial - chi) // 2
            raise NonPlanarGenus(f"rotation system has genus {genus}")
    return PlaneGraph(g, rot, tuple(faces), face_of)


def rotation_from_coordinates(g: Graph, coords: Sequence[Sequence[float]]) -> tuple[tuple[int, ...], ...]:
    """Counter-clockwise neighbour order of a straight-line drawing."""
    rot = []
    for v in range(g.n):
        x0, y0 = coords[v]
        nbrs = sorted(
            g.adjacency[v],
            key=lambda w: math.atan2(coords[w][1] - y0, coords[w][0] - x0),
        )
        rot.append(tuple(nbrs))
    return tuple(rot)


def embed_from_faces(g: Graph, triangles: Iterable[Sequence[int]]) -> PlaneGraph:
    """Build the plane triangulation whose faces are exactly ``triangles``.

    The triangles are oriented coherently by propagation across shared
    edges; the resulting rotation is then traced and checked.

    Raises:
        NotMaximalPlanar: the triangles do not form an orientable closed
            surface around every vertex, or the surface is not a sphere.
    """
    tris = [tuple(t) for t in triangles]
    by_edge: dict[tuple[int, int], list[int]] = {}
    for i, t in enumerate(tris):
        if len(set(t)) != 3:
            raise NotMaximalPlanar(f"degenerate face {t}")
        for a, b in ((t[0], t[1]), (t[1], t[2]), (t[2], t[0])):
            if not g.has_edge(a, b):
                raise NotMaximalPlanar(f"face {t} uses a non-edge")
            by_edge.setdefault((min(a, b), max(a, b)), []).append(i)
    if set(by_edge) != g.edge_set or any(len(fs) != 2 for fs in by_edge.values()):
        raise NotMaximalPlanar("every edge must lie on exactly two faces")

    oriented: list[tuple[int, int, int] | None] = [None] * len(tris)
    for root in range(len(tris)):
        if oriented[root] is not None:
            continue
        oriented[root] = tris[root]  # type: ignore[assignment]
        queue = deque([root])
        while queue:
            i = queue.popleft()
            a, b, c = oriented[i]  # type: ignore[misc]
            for x, y in ((a, b), (b, c), (c, a)):
                for j in by_edge[(min(x, y), max(x, y))]:
                    if j == i:
                        continue
                    # the neighbour must use the reversed dart y -> x
                    t = tris[j]
                    k = t.index(y)
                    cand = (t[k], t[(k + 1) % 3], t[(k + 2) % 3])
                    if cand[1] != x:
                        cand = (t[k], t[(k + 2) % 3], t[(k + 1) % 3])
                    if oriented[j] is None:
                        oriented[j] = cand
                        queue.append(j)
                    elif set(_darts(oriented[j])) != set(_darts(cand)):
                        raise NotMaximalPlanar("faces cannot be oriented coherently")

    succ: list[dict[int, int]] = [{} for _ in range(g.n)]
    for a, b, c in oriented:  # type: ignore[misc]
        for p, q, r in ((a, b, c), (b, c, a), (c, a, b)):
            # dart p -> q is followed by q -> r, hence succ_q(p) = r
            if p in succ[q]:
                raise NotMaximalPlanar("inconsistent link around a vertex")
            succ[q][p] = r
    rotation = []
    for v in range(g.n):
        nbrs = g.adjacency[v]
        if not nbrs:
            raise NotMaximalPlanar(f"isolated vertex {v}")
        order = [nbrs[0]]
        while len(order) <= len(nbrs):
            nxt = succ[v].get(order[-1])
            if nxt is None:
                raise NotMaximalPlanar(f"link of {v} is not a cycle")
            if nxt == order[0]:
                break
            order.append(nxt)
        if len(order) != len(nbrs):
            raise NotMaximalPlanar(f"link of {v} is not a single cycle")
        rotation.append(order)
    try:
        pg = embed_from_rotation(g, rotation)
    except (BadRotation, NonPlanarGenus) as exc:
        raise NotMaximalPlanar(str(exc)) from exc
    if len(pg.faces) != len(tris):
        raise NotMaximalPlanar("traced faces differ from the supplied faces")
    return pg


def _darts(t: Sequence[int]) -> list[Dart]:
    return [(t[i], t[(i + 1) % len(t)]) for i in range(len(t))]


def triangles_of(g: Graph) -> list[Triangle]:
    out = []
    adj = g.adjacency
    for u, v in g.edges:
        common = set(adj[u]).intersection(adj[v])
        out.extend((u, v, w) for w in sorted(common) if w > v)
    return out


def mpg_faces(g: Graph) -> PlaneGraph:
    """Recover the (unique) face set of a maximal planar graph.

    For ``n >= 5`` the faces are the non-separating triangles; ``K4`` uses
    all four of its triangles and the lone triangle gets its two sides.

    Raises:
        NotMaximalPlanar: wrong edge count, wrong face count, or a face set
            that does not close up into a sphere.
    """
    n = g.n
    if n < 3:
        raise NotMaximalPlanar(f"order {n} is too small")
    if g.size != 3 * n - 6:
        raise NotMaximalPlanar(f"{g.size} edges, expected {3 * n - 6}")
    if not g.is_connected:
        raise NotMaximalPlanar("graph is disconnected")
    if n == 3:
        return embed_from_rotation(g, [(1, 2), (2, 0), (0, 1)])
    tris = triangles_of(g)
    if n > 4:
        tris = [t for t in tris if not is_separating_set(g, t)[0]]
    if len(tris) != 2 * n - 4:
        raise NotMaximalPlanar(f"{len(tris)} candidate faces, expected {2 * n - 4}")
    return embed_from_faces(g, tris)


# ---------------------------------------------------------------------------
# cycles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CycleSides:
    on_cycle: frozenset[int]
    side_a: frozenset[int]
    side_b: frozenset[int]

    @property
    def jordan_separating(self) -> bool:
        return bool(self.side_a) and bool(self.side_b)

    def side_of(self, v: int) -> str:
        if v in self.on_cycle:
            return "C"
        return "A" if v in self.side_a else "B"


def _check_cycle(pg: PlaneGraph, cycle: Sequence[int]) -> list[tuple[int, int]]:
    cyc = [int(v) for v in cycle]
    if len(cyc) < 3 or len(set(cyc)) != len(cyc):
        raise NotACycle(f"{cyc} is not a simple cycle")
    edges = []
    for i, u in enumerate(cyc):
        v = cyc[(i + 1) % len(cyc)]
        if not pg.graph.has_edge(u, v):
            raise NotACycle(f"({u}, {v}) is not an edge")
        edges.append((min(u, v), max(u, v)))
    return edges


def cycle_sides(pg: PlaneGraph, cycle: Sequence[int]) -> CycleSides:
    """Split the off-cycle vertices into the two regions of a simple cycle.

    Faces are grouped by dual adjacency that never crosses a cycle edge;
    side ``A`` holds the lowest-numbered off-cycle vertex.
    """
    cyc_edges = set(_check_cycle(pg, cycle))
    n_faces = len(pg.faces)
    parent = list(range(n_faces))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in pg.graph.edges:
        if (u, v) in cyc_edges:
            continue
        a, b = find(pg.face_of_dart[(u, v)]), find(pg.face_of_dart[(v, u)])
        if a != b:
            parent[a] = b
    regions = {find(i) for i in range(n_faces)}
    if len(regions) != 2:
        raise NotACycle(f"cycle bounds {len(regions)} regions")
    on = frozenset(cycle)
    side: dict[int, set[int]] = {r: set() for r in regions}
    for (u, v), fid in pg.face_of_dart.items():
        if u not in on:
            side[find(fid)].add(u)
    groups = sorted((frozenset(s) for s in side.values()), key=lambda s: (not s, min(s, default=0)))
    return CycleSides(on, groups[0], groups[1])


def is_jordan_separating(pg: PlaneGraph, cycle: Sequence[int]) -> bool:
    return cycle_sides(pg, cycle).jordan_separating


def simple_cycles(g: Graph, max_len: int, budget: int | None = None) -> Iterable[tuple[int, ...]]:
    """Every simple cycle of length ``3..max_len`` exactly once.

    Each cycle starts at its smallest vertex and is emitted in the
    direction whose second vertex is smaller than its last.
    """
    adj = g.adjacency
    emitted = 0
    for start in range(g.n):
        stack = [(start, iter(adj[start]))]
        path = [start]
        on_path = {start}
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if w == start and len(path) >= 3:
                    if path[1] < path[-1]:
                        emitted += 1
                        if budget is not None and emitted > budget:
                            raise TooLarge(f"more than {budget} cycles")
                        yield tuple(path)
                    continue
                if w <= start or w in on_path or len(path) >= max_len:
                    continue
                path.append(w)
                on_path.add(w)
                stack.append((w, iter(adj[w])))
                advanced = True
                break
            if not advanced:
                stack.pop()
                on_path.discard(path.pop())


def faces_as_sets(pg: PlaneGraph) -> set[frozenset[int]]:
    return {frozenset(f) for f in pg.faces}


def link_cycle(pg: PlaneGraph, v: int) -> tuple[int, ...]:
    return pg.rotation[v]


def all_triangle_faces_ok(pg: PlaneGraph) -> bool:
    """Every face a triangle, ``2n - 4`` faces, every edge on two faces."""
    if not pg.is_maximal_plane:
        return False
    count: dict[frozenset[int], int] = {}
    for f in pg.faces:
        for a, b in combinations(f, 2):
            key = frozenset((a, b))
            count[key] = count.get(key, 0) + 1
    return all(c == 2 for c in count.values()) and len(count) == pg.graph.size
