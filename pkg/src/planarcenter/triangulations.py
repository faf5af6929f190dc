"""Isomorph-free generation of maximal planar graphs and the census harness.

Classes are reached by breadth-first search over diagonal flips from a
stacked triangulation; two triangulations are merged when their canonical
codes agree.  A code is the lexicographically least breadth-first
encoding of the rotation system over every admissible root dart and both
orientations, which identifies 3-connected planar graphs up to
isomorphism.
"""

from __future__ import annotations

import csv
import io
import json
import os
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .criteria import qef_criterion
from .embedding import PlaneGraph, embed_from_faces, embed_from_rotation
from .errors import BudgetExceeded, NoSuchEdge, NotMaximalPlanar, TooLarge, TooSmall
from .graph import build_graph, complete_graph, eccentricity_profile
from .qcc import classify_case, face_configuration

MAX_ORDER = 10
BUDGET_ENV = "PLANARCENTER_ENUM_BUDGET"
DEFAULT_BUDGET = 50_000


def stacked_triangulation(n: int) -> PlaneGraph:
    """``K4`` followed by ``n - 4`` degree-3 insertions, each into the newest face."""
    if n < 4:
        raise TooSmall(f"order {n} < 4")
    tris = [(0, 1, 2), (0, 1, 3), (1, 2, 3), (0, 2, 3)]
    edges = set(complete_graph(4).edges)
    for v in range(4, n):
        a, b, c = tris.pop()
        tris += [(a, b, v), (b, c, v), (a, c, v)]
        edges.update({(a, v), (b, v), (c, v)})
    return embed_from_faces(build_graph(n, sorted(edges)), tris)


def _third(pg: PlaneGraph, u: int, v: int) -> int:
    face = pg.faces[pg.face_of_dart[(u, v)]]
    return next(w for w in face if w != u and w != v)


def diagonal_flip(pg: PlaneGraph, edge: Sequence[int]) -> PlaneGraph | None:
    """Swap ``uv`` for the other diagonal of its two faces, if that is simple.

    Raises:
        NoSuchEdge: ``uv`` is not an edge.
    """
    u, v = int(edge[0]), int(edge[1])
    g = pg.graph
    if not g.has_edge(u, v):
        raise NoSuchEdge((u, v))
    w, x = _third(pg, u, v), _third(pg, v, u)
    if w == x or g.has_edge(w, x):
        return None
    edges = set(g.edges)
    edges.discard((min(u, v), max(u, v)))
    edges.add((min(w, x), max(w, x)))
    old = {frozenset((u, v, w)), frozenset((u, v, x))}
    tris = [t for t in pg.triangles if frozenset(t) not in old] + [(w, x, u), (w, x, v)]
    return embed_from_faces(build_graph(g.n, sorted(edges), g.labels), tris)


# ---------------------------------------------------------------------------
# canonical codes
# ---------------------------------------------------------------------------


def _code_from(rot: Sequence[Sequence[int]], root: int, first: int, n: int) -> list[int]:
    label = [-1] * len(rot)
    label[root] = 0
    start = [-1] * len(rot)
    start[root] = first
    order = [root]
    out: list[int] = []
    nxt = 1
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        nb = rot[v]
        k = nb.index(start[v])
        for j in range(len(nb)):
            w = nb[(k + j) % len(nb)]
            if label[w] < 0:
                label[w] = nxt
                nxt += 1
                start[w] = v
                order.append(w)
            out.append(label[w])
        out.append(n)
    return out


def canonical_code(pg: PlaneGraph) -> bytes:
    """Least BFS encoding over both orientations and all minimal-degree root darts."""
    g = pg.graph
    n = g.n
    if n > 254:
        raise TooLarge("codes are byte strings")
    fwd = [list(r) for r in pg.rotation]
    rev = [list(reversed(r)) for r in pg.rotation]
    deg = [len(r) for r in fwd]
    key = min((deg[u], deg[v]) for a, b in g.edges for u, v in ((a, b), (b, a)))
    best: list[int] | None = None
    for u in range(n):
        if deg[u] != key[0]:
            continue
        for v in fwd[u]:
            if deg[v] != key[1]:
                continue
            for rot in (fwd, rev):
                code = _code_from(rot, u, v, n)
                if best is None or code < best:
                    best = code
    assert best is not None
    return bytes(best)


def decode(code: bytes) -> PlaneGraph:
    """Rebuild the labelled plane graph encoded by ``code``."""
    n = max(code)
    rot: list[list[int]] = [[]]
    for b in code[:-1]:
        if b == n:
            rot.append([])
        else:
            rot[-1].append(b)
    if len(rot) != n:
        raise NotMaximalPlanar("malformed code")
    edges = {(min(v, w), max(v, w)) for v in range(n) for w in rot[v]}
    return embed_from_rotation(build_graph(n, sorted(edges)), rot)


def code_hex(code: bytes) -> str:
    return code.hex()


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


def _budget(budget: int | None) -> int:
    if budget is not None:
        return budget
    return int(os.environ.get(BUDGET_ENV, DEFAULT_BUDGET))


def enumerate_mpgs(n: int, budget: int | None = None) -> list[PlaneGraph]:
    """One plane graph per isomorphism class of order ``n``, sorted by code.

    Raises:
        TooSmall: ``n < 4``.
        BudgetExceeded: ``n`` above the supported range, or more classes than
            the budget (default from ``PLANARCENTER_ENUM_BUDGET``).
    """
    if n < 4:
        raise TooSmall(f"order {n} < 4")
    if n > MAX_ORDER:
        raise BudgetExceeded(f"order {n} exceeds {MAX_ORDER}")
    limit = _budget(budget)
    seed = stacked_triangulation(n)
    seen: dict[bytes, PlaneGraph] = {canonical_code(seed): seed}
    queue = deque([seed])
    while queue:
        pg = queue.popleft()
        for e in pg.graph.edges:
            new = diagonal_flip(pg, e)
            if new is None:
                continue
            c = canonical_code(new)
            if c not in seen:
                seen[c] = new
                queue.append(new)
                if len(seen) > limit:
                    raise BudgetExceeded(f"more than {limit} classes at order {n}")
    return [seen[c] for c in sorted(seen)]


# ---------------------------------------------------------------------------
# census
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CensusRow:
    code: bytes
    order: int
    diam: int
    radius: int
    center_size: int
    alpha: int
    qef_pass: bool
    failing_vertex: int | None
    case_histogram: dict[str, int]
    synthesis: dict[str, bool] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "code": code_hex(self.code),
            "order": self.order,
            "diam": self.diam,
            "radius": self.radius,
            "center_size": self.center_size,
            "alpha": self.alpha,
            "qef_pass": self.qef_pass,
            "failing_vertex": self.failing_vertex,
            "case_histogram": self.case_histogram,
            **({"synthesis": self.synthesis} if self.synthesis else {}),
        }


@dataclass(frozen=True)
class CensusSummary:
    order: int
    classes: int
    passed: int
    failed: int
    failing_codes: tuple[bytes, ...]

    def to_json(self) -> dict:
        return {
            "summary": True,
            "order": self.order,
            "classes": self.classes,
            "passed": self.passed,
            "failed": self.failed,
            "failing_codes": [code_hex(c) for c in self.failing_codes],
        }


def case_histogram(pg: PlaneGraph) -> dict[str, int]:
    out: dict[str, int] = {}
    for f in sorted(set(pg.triangles)):
        case = classify_case(face_configuration(pg, f)).case
        out[case] = out.get(case, 0) + 1
    return dict(sorted(out.items()))


def census_row(pg: PlaneGraph, alpha_offset: int = 0, synthesize: bool = False) -> CensusRow:
    from .synthesis import build_supergraph

    prof = eccentricity_profile(pg.graph)
    alpha = prof.diameter + alpha_offset
    verdict = qef_criterion(pg, alpha)
    synth: dict[str, bool] = {}
    if synthesize and verdict:
        rep = build_supergraph(pg, alpha)
        synth = {
            "is_equi_eccentric": rep.is_equi_eccentric,
            "is_center_subset": rep.is_center_subset,
            "is_exact_center": rep.is_exact_center,
        }
    return CensusRow(
        canonical_code(pg),
        pg.n,
        prof.diameter,
        prof.radius,
        len(prof.center),
        alpha,
        verdict.passed,
        verdict.failing_vertex,
        case_histogram(pg),
        synth,
    )


def census(
    n: int,
    alpha_offset: int = 0,
    synthesize: bool = False,
    graphs: Iterable[PlaneGraph] | None = None,
) -> tuple[list[CensusRow], CensusSummary]:
    """Criterion verdict at ``α = diam + alpha_offset`` for every class of order ``n``."""
    pool = enumerate_mpgs(n) if graphs is None else list(graphs)
    rows = sorted((census_row(pg, alpha_offset, synthesize) for pg in pool), key=lambda r: r.code)
    fails = tuple(r.code for r in rows if not r.qef_pass)
    return rows, CensusSummary(n, len(rows), len(rows) - len(fails), len(fails), fails)


CSV_FIELDS = ("code", "order", "diam", "radius", "center_size", "qef_pass", "case_histogram")


def census_csv(rows: Iterable[CensusRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in rows:
        hist = ";".join(f"{k}:{v}" for k, v in r.case_histogram.items())
        w.writerow([code_hex(r.code), r.order, r.diam, r.radius, r.center_size, int(r.qef_pass), hist])
    return buf.getvalue()


def iter_census_json(rows: Iterable[CensusRow], summary: CensusSummary) -> Iterator[str]:
    for r in rows:
        yield json.dumps(r.to_json(), sort_keys=True)
    yield json.dumps(summary.to_json(), sort_keys=True)
