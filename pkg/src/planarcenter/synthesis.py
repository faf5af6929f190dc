"""Build hosts in which a maximal plane graph becomes equi-eccentric or central.

Every face of ``H`` receives a gadget picked by the case of its
configuration.  The union ``G`` of the per-face graphs ``G_f`` makes every
vertex of ``H`` reach eccentricity ``α``; deleting the host vertices with
exactly two neighbours in ``H`` then turns ``H`` into the exact center.
All claims are re-checked by breadth-first search on the final graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .criteria import has_dominating_face, qef_criterion
from .embedding import PlaneGraph, embed_from_faces, embed_from_rotation
from .errors import (
    AlphaTooSmall,
    CaseDispatchFailure,
    CriterionFails,
    HypothesisViolated,
    InternalInvariantViolation,
    NotMaximalPlanar,
    PreconditionFailed,
)
from .gadgets import GadgetSpec, build_gamma, gadget_for_face, glue
from .graph import Graph, build_graph, diameter, eccentricity_profile, induced_subgraph, is_isometric_subgraph
from .qcc import CaseLabel, FaceConfiguration, classify_case, face_configuration

Triangle = tuple[int, int, int]

# decorations per case, in the letters of the case description
CASE_GADGETS: dict[str, tuple[frozenset[str], frozenset[str]]] = {
    "Case1": (frozenset(), frozenset()),
    "Case3": (frozenset("z"), frozenset()),
    "Case4_1": (frozenset("yz"), frozenset()),
    "Case4_2": (frozenset("yz"), frozenset({"yz"})),
    "Case5_1": (frozenset("xyz"), frozenset()),
    "Case5_2": (frozenset("xyz"), frozenset({"yz"})),
    "Case5_3": (frozenset("xyz"), frozenset({"yz", "zx"})),
    "Case6": (frozenset("xyz"), frozenset({"xy", "yz", "zx"})),
}


def case_depth(case: str, alpha: int, k: int) -> int:
    return alpha - k if case == "Case1" else alpha - k - 1


@dataclass(frozen=True)
class FaceRecord:
    """What one face contributed to the host.

    ``spec`` is ``None`` when the face needs no gadget; ``exempt`` marks the
    shortcut taken when every quasi-eccentric vertex already has
    eccentricity ``α`` in ``H``.
    """

    face: Triangle
    configuration: FaceConfiguration
    case: CaseLabel
    spec: GadgetSpec | None
    plane: PlaneGraph
    exempt: bool = False

    @property
    def order(self) -> int:
        return self.plane.n

    def to_json(self) -> dict:
        return {
            "face": list(self.face),
            "k": self.configuration.k,
            "case": self.case.case,
            "permutation": list(self.case.permutation),
            "gadget": None if self.spec is None else self.spec.name(),
            "exempt": self.exempt,
            "order": self.order,
        }


def _check_alpha(h: PlaneGraph, alpha: int, slack: int = 0) -> int:
    if h.n < 4 or not h.is_maximal_plane:
        raise NotMaximalPlanar("synthesis needs a maximal plane graph of order >= 4")
    d = diameter(h.graph)
    if alpha < d + slack:
        raise AlphaTooSmall(f"alpha {alpha} < {d + slack}")
    return d


def build_gf(h: PlaneGraph, face: Sequence[int], alpha: int) -> FaceRecord:
    """Decorate a single face so its quasi-eccentric vertices reach ``alpha``.

    Raises:
        AlphaTooSmall: ``alpha`` is below the diameter of ``h``.
        CaseDispatchFailure: the BFS postcondition failed, which the
            construction rules out.
    """
    _check_alpha(h, alpha)
    cfg = face_configuration(h, face)
    label = classify_case(cfg)
    ecc_h = eccentricity_profile(h.graph).eccentricity
    if all(ecc_h[u] == alpha for u in cfg.qcc):
        return FaceRecord(cfg.face, cfg, label, None, h, exempt=True)
    delta = case_depth(label.case, alpha, cfg.k)
    if delta == 0 and label.case in ("Case1", "Case6"):
        rec = FaceRecord(cfg.face, cfg, label, None, h)
    elif delta <= 0:
        raise CaseDispatchFailure(f"{label.case} at face {cfg.face} gives depth {delta}")
    else:
        subs, sups = CASE_GADGETS[label.case]
        spec = gadget_for_face(GadgetSpec(delta, subs, sups), label.permutation)
        glued = glue(h, cfg.face, build_gamma(spec))
        rec = FaceRecord(cfg.face, cfg, label, spec, glued.plane)
    ecc = rec.plane.graph.distances.hops[: h.n].max(axis=1)
    for u in cfg.qcc:
        if ecc[u] != alpha:
            raise CaseDispatchFailure(f"{u} has eccentricity {ecc[u]} in G_f for face {cfg.face}, want {alpha}")
    if ecc.max() > alpha:
        raise CaseDispatchFailure(f"an H vertex exceeds {alpha} in G_f for face {cfg.face}")
    return rec


# ---------------------------------------------------------------------------
# assembly
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Part:
    """A graph placed in a shared arena; ``ids[i]`` is the arena id of vertex ``i``."""

    graph: Graph
    ids: tuple[int, ...]


@dataclass(frozen=True)
class SynthesisReport:
    """Host construction and its independently recomputed evidence."""

    h: PlaneGraph
    alpha: int
    records: tuple[FaceRecord, ...]
    host: PlaneGraph
    embedding: tuple[int, ...]
    eccentricity: tuple[int, ...]
    radius: int
    diameter: int
    parts: tuple[Part, ...]
    region: dict[int, Triangle]
    removed: tuple[int, ...] = ()
    supergraph: PlaneGraph | None = None
    notes: dict[str, bool] = field(default_factory=dict)

    @property
    def image(self) -> frozenset[int]:
        return frozenset(self.embedding)

    @property
    def center(self) -> frozenset[int]:
        return frozenset(v for v, e in enumerate(self.eccentricity) if e == self.radius)

    @property
    def is_equi_eccentric(self) -> bool:
        return all(self.eccentricity[v] == self.alpha for v in self.embedding)

    @property
    def is_center_subset(self) -> bool:
        return self.is_equi_eccentric and self.radius == self.alpha

    @property
    def is_exact_center(self) -> bool:
        return self.is_center_subset and self.center == self.image

    def case_histogram(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for r in self.records:
            out[r.case.case] = out.get(r.case.case, 0) + 1
        return dict(sorted(out.items()))

    def to_json(self) -> dict:
        return {
            "alpha": self.alpha,
            "h_order": self.h.n,
            "host_order": self.host.n,
            "host_size": self.host.graph.size,
            "radius": self.radius,
            "diameter": self.diameter,
            "is_equi_eccentric": self.is_equi_eccentric,
            "is_center_subset": self.is_center_subset,
            "is_exact_center": self.is_exact_center,
            "removed": list(self.removed),
            "faces": [r.to_json() for r in self.records],
            **{k: v for k, v in sorted(self.notes.items())},
        }


def _profile(host: Graph) -> tuple[tuple[int, ...], int, int]:
    prof = eccentricity_profile(host)
    return prof.eccentricity, prof.radius, prof.diameter


def build_supergraph(h: PlaneGraph, alpha: int) -> SynthesisReport:
    """Glue a case-chosen gadget into every face and verify the union.

    Raises:
        AlphaTooSmall: ``alpha`` is below the diameter.
        CriterionFails: some vertex is quasi-eccentric to no face.
    """
    _check_alpha(h, alpha)
    verdict = qef_criterion(h, alpha)
    if not verdict:
        raise CriterionFails(f"vertex {verdict.failing_vertex} is quasi-eccentric to no face", verdict.failing_vertex)
    n = h.n
    records = tuple(build_gf(h, f, alpha) for f in sorted(set(h.triangles)))
    tris: list[tuple[int, ...]] = []
    edges: set[tuple[int, int]] = set(h.graph.edges)
    parts: list[Part] = []
    region: dict[int, Triangle] = {}
    decorated = set()
    offset = n
    for rec in records:
        local = rec.plane
        ids = tuple(v if v < n else v - n + offset for v in range(local.n))
        parts.append(Part(local.graph, ids))
        if local.n == n:
            continue
        decorated.add(frozenset(rec.face))
        for v in range(n, local.n):
            region[ids[v]] = rec.face
        for t in local.triangles:
            if max(t) >= n:
                tris.append(tuple(ids[v] for v in t))
        for a, b in local.graph.edges:
            u, v = ids[a], ids[b]
            edges.add((min(u, v), max(u, v)))
        offset += local.n - n
    tris += [t for t in h.triangles if frozenset(t) not in decorated]
    labels = None
    if h.graph.labels is not None:
        labels = list(h.graph.labels) + [f"g{v}" for v in range(n, offset)]
    g = build_graph(offset, sorted(edges), labels)
    host = embed_from_faces(g, tris) if offset > n else h
    ecc, rad, diam = _profile(host.graph)
    report = SynthesisReport(h, alpha, records, host, tuple(range(n)), ecc, rad, diam, tuple(parts), region)
    report.notes["far_face"] = far_face_check(report)
    return report


def far_face_check(report: SynthesisReport) -> bool:
    """Every ``H`` vertex has an eccentric vertex inside a face it does not touch."""
    d = report.host.graph.distances.hops
    outside = [v for v in report.region]
    for u in report.embedding:
        if not any(d[u, v] == report.alpha and u not in report.region[v] for v in outside):
            return False
    return True


def build_center_host(h: PlaneGraph, alpha: int) -> SynthesisReport:
    """Trim the supergraph into a planar host whose center is exactly ``H``.

    Raises:
        AlphaTooSmall: ``alpha`` is below ``diam(H) + 3``.
        CriterionFails: the criterion fails.
        InternalInvariantViolation: the deleted vertices are not pairwise
            non-adjacent vertices of degree four, or the trimmed host is
            not isometric in the supergraph.
    """
    _check_alpha(h, alpha, slack=3)
    full = build_supergraph(h, alpha)
    g = full.host.graph
    n = h.n
    hset = set(range(n))
    removed = tuple(v for v in range(n, g.n) if len(hset.intersection(g.adjacency[v])) == 2)
    for v in removed:
        if g.degree(v) != 4:
            raise InternalInvariantViolation(f"removed vertex {v} has degree {g.degree(v)}")
    for a, b in combinations(removed, 2):
        if g.has_edge(a, b):
            raise InternalInvariantViolation(f"removed vertices {a} and {b} are adjacent")
    keep = [v for v in range(g.n) if v not in set(removed)]
    pg, back = induced_subgraph(g, keep)
    index = {v: i for i, v in enumerate(back)}
    rotation = [[index[w] for w in full.host.rotation[v] if w in index] for v in back]
    plane = embed_from_rotation(pg, rotation)
    if not is_isometric_subgraph(pg, g, back):
        raise InternalInvariantViolation("trimmed host is not isometric in the supergraph")
    ecc, rad, diam = _profile(pg)
    region = {index[v]: f for v, f in full.region.items() if v in index}
    report = SynthesisReport(
        h,
        alpha,
        full.records,
        plane,
        tuple(index[v] for v in range(n)),
        ecc,
        rad,
        diam,
        full.parts,
        region,
        removed,
        full.host,
        {"far_face": full.notes["far_face"], "pg_isometric": True},
    )
    return report


# ---------------------------------------------------------------------------
# independent certificates
# ---------------------------------------------------------------------------


def hedetniemi(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Add ``a, b`` joined to everything, then pendants ``c`` on ``a`` and ``d`` on ``b``.

    The original vertices become exactly the center, at eccentricity 2.
    """
    n = g.n
    if n < 1:
        raise PreconditionFailed("the construction needs a non-empty graph")
    a, b, c, d = n, n + 1, n + 2, n + 3
    edges = list(g.edges)
    edges += [(v, a) for v in range(n)] + [(v, b) for v in range(n)]
    edges += [(a, c), (b, d)]
    labels = None
    if g.labels is not None:
        labels = list(g.labels) + ["a", "b", "c", "d"]
    return build_graph(n + 4, edges, labels), tuple(range(n))


def union_of_parts(parts: Sequence[Part]) -> tuple[Graph, dict[int, int]]:
    """Union of the family, compacted; returns the graph and arena-id index."""
    index = {v: i for i, v in enumerate(sorted({v for p in parts for v in p.ids}))}
    edges = set()
    for p in parts:
        for u, v in p.graph.edges:
            a, b = index[p.ids[u]], index[p.ids[v]]
            edges.add((min(a, b), max(a, b)))
    return build_graph(len(index), sorted(edges)), index


def verify_gluing_theorem(parts: Sequence[Part]) -> bool:
    """Check both conclusions of the gluing theorem on an explicit family.

    The hypotheses are checked first: every pairwise intersection is the
    same non-empty set ``S``, the common subgraph on ``S`` is connected and
    isometric in every part.  Then each part must be isometric in the
    union and every ``S`` vertex must have eccentricity equal to the
    largest of its per-part eccentricities.

    Raises:
        HypothesisViolated: naming the hypothesis that fails.
    """
    if not parts:
        raise HypothesisViolated("empty family")
    vsets = [set(p.ids) for p in parts]
    if len(parts) == 1:
        common = vsets[0]
    else:
        pairs = {frozenset(a & b) for a, b in combinations(vsets, 2)}
        if len(pairs) != 1:
            raise HypothesisViolated("pairwise intersections differ")
        common = set(next(iter(pairs)))
    if not common:
        raise HypothesisViolated("the common vertex set is empty")
    edge_sets = []
    for p in parts:
        edge_sets.append({frozenset((p.ids[u], p.ids[v])) for u, v in p.graph.edges})
    shared = set.intersection(*edge_sets)
    s_sorted = sorted(common)
    s_index = {v: i for i, v in enumerate(s_sorted)}
    s_graph = build_graph(len(s_sorted), [tuple(s_index[x] for x in e) for e in shared if e <= common])
    if not s_graph.is_connected:
        raise HypothesisViolated("the common subgraph is disconnected")
    for p in parts:
        if not p.graph.is_connected:
            raise HypothesisViolated("a part is disconnected")
        local = {v: i for i, v in enumerate(p.ids)}
        if not is_isometric_subgraph(s_graph, p.graph, [local[v] for v in s_sorted]):
            raise HypothesisViolated("the common subgraph is not isometric in some part")

    union, index = union_of_parts(parts)
    du = union.distances.hops
    for p in parts:
        if not is_isometric_subgraph(p.graph, union, [index[v] for v in p.ids]):
            return False
    for v in s_sorted:
        best = max(int(p.graph.distances.hops[p.ids.index(v)].max()) for p in parts)
        if int(du[index[v]].max()) != best:
            return False
    return True


def verify_equi_in_center(h: PlaneGraph, host: Graph, embedding: Sequence[int]) -> bool:
    """With no dominating face, an equi-eccentric copy of ``h`` is central.

    Raises:
        PreconditionFailed: ``h`` has a dominating face, or its image is
            not equi-eccentric in ``host``.
    """
    if not h.is_maximal_plane:
        raise PreconditionFailed("h must be maximal plane")
    dom = has_dominating_face(h)
    if dom is not None:
        raise PreconditionFailed(f"face {dom} dominates h")
    prof = eccentricity_profile(host)
    values = {prof.eccentricity[v] for v in embedding}
    if len(values) != 1:
        raise PreconditionFailed("h is not equi-eccentric in the host")
    return set(embedding) <= prof.center
