"""The layered gadget family used to raise eccentricities inside a face.

``Γ(δ)`` is built from ``P_δ × C_3``: layers ``T_0 .. T_{δ-1}`` of
triangles ``x_i y_i z_i``, a stellation vertex in every quadrilateral
between consecutive layers and an apex ``s`` inside the innermost
triangle.  Decorations add ``t_p`` (one step farther from terminal ``p``)
and ``t_pq`` (one step farther from both ``p`` and ``q``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .embedding import PlaneGraph, embed_from_faces, embed_from_rotation
from .errors import FaceMismatch, InvalidSpec, NotMaximalPlanar
from .graph import build_graph

LETTERS = "xyz"
PAIRS = ("xy", "yz", "zx")


def pair_anchor(pair: str) -> str:
    """Letter whose ``t`` vertex carries ``t_pair``: the cyclically first one."""
    return pair[0]


def normalize_pair(pair: str) -> str:
    """Bring ``"yx"``, ``"xz"`` and the like into ``xy``/``yz``/``zx`` form."""
    s = set(pair)
    for p in PAIRS:
        if set(p) == s and len(pair) == 2:
            return p
    raise InvalidSpec(f"bad pair {pair!r}")


@dataclass(frozen=True)
class GadgetSpec:
    """Depth plus decorations identifying one member of the family."""

    depth: int
    subscripts: frozenset[str] = field(default_factory=frozenset)
    superscripts: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "subscripts", frozenset(self.subscripts))
        object.__setattr__(self, "superscripts", frozenset(normalize_pair(p) for p in self.superscripts))
        if self.depth < 0:
            raise InvalidSpec("negative depth")
        if not self.subscripts <= set(LETTERS):
            raise InvalidSpec(f"unknown subscripts {sorted(self.subscripts)}")
        if self.depth == 0 and (self.subscripts or self.superscripts):
            raise InvalidSpec("the bare triangle takes no decorations")
        for p in self.superscripts:
            if pair_anchor(p) not in self.subscripts:
                raise InvalidSpec(f"t_{p} needs t_{pair_anchor(p)}")

    @property
    def order(self) -> int:
        if self.depth == 0:
            return 3
        return 6 * self.depth - 2 + len(self.subscripts) + len(self.superscripts)

    def name(self) -> str:
        out = "Gamma"
        if self.subscripts:
            out += "_" + ",".join(sorted(self.subscripts))
        if self.superscripts:
            out += "^" + ",".join(p for p in PAIRS if p in self.superscripts)
        return f"{out}({self.depth})"

    def to_json(self) -> dict:
        return {
            "depth": self.depth,
            "subscripts": sorted(self.subscripts),
            "superscripts": [p for p in PAIRS if p in self.superscripts],
        }


def valid_shapes() -> list[tuple[frozenset[str], frozenset[str]]]:
    """Every admissible (subscripts, superscripts) pair for positive depth."""
    out = []
    for r in range(4):
        for subs in combinations(LETTERS, r):
            allowed = [p for p in PAIRS if pair_anchor(p) in subs]
            for t in range(len(allowed) + 1):
                for sups in combinations(allowed, t):
                    out.append((frozenset(subs), frozenset(sups)))
    return out


@dataclass(frozen=True)
class Gadget:
    spec: GadgetSpec
    plane: PlaneGraph
    terminals: tuple[int, int, int]  # x0, y0, z0
    specials: dict[str, int]

    @property
    def outer_face(self) -> tuple[int, int, int]:
        return self.terminals


def build_gamma(spec: GadgetSpec) -> Gadget:
    """Construct the gadget named by ``spec`` as a plane triangulation."""
    names: list[str] = []
    index: dict[str, int] = {}

    def vertex(name: str) -> int:
        index[name] = len(names)
        names.append(name)
        return index[name]

    d = spec.depth
    for i in range(max(d, 1)):
        for p in LETTERS:
            vertex(f"{p}{i}")
    tris: list[tuple[int, int, int]] = [(index["x0"], index["y0"], index["z0"])]
    if d == 0:
        g = build_graph(3, [(0, 1), (1, 2), (0, 2)], names)
        pg = embed_from_rotation(g, [(1, 2), (2, 0), (0, 1)])
        return Gadget(spec, pg, (0, 1, 2), {"x0": 0, "y0": 1, "z0": 2})

    for i in range(d - 1):
        for a, b in (("x", "y"), ("y", "z"), ("z", "x")):
            c = vertex(f"c{a}{b}{i}")
            ring = (index[f"{a}{i}"], index[f"{b}{i}"], index[f"{b}{i + 1}"], index[f"{a}{i + 1}"])
            for j in range(4):
                tris.append((c, ring[j], ring[(j + 1) % 4]))
    s = vertex("s")
    last = {p: index[f"{p}{d - 1}"] for p in LETTERS}
    inner = {(s, last["x"], last["y"]), (s, last["y"], last["z"]), (s, last["z"], last["x"])}

    def split(face: tuple[int, int, int], new: int) -> None:
        key = next((t for t in inner if set(t) == set(face)), None)
        if key is None:
            raise InvalidSpec(f"face {face} unavailable")
        inner.remove(key)
        a, b, c = key
        inner.update({(new, a, b), (new, b, c), (new, c, a)})

    for p in sorted(spec.subscripts):
        q, r = (x for x in LETTERS if x != p)
        split((s, last[q], last[r]), vertex(f"t_{p}"))
    for pq in PAIRS:
        if pq in spec.superscripts:
            r = next(x for x in LETTERS if x not in pq)
            split((s, last[r], index[f"t_{pair_anchor(pq)}"]), vertex(f"t_{pq}"))
    tris.extend(inner)

    edges = set()
    for t in tris:
        for a, b in combinations(t, 2):
            edges.add((min(a, b), max(a, b)))
    g = build_graph(len(names), sorted(edges), names)
    pg = embed_from_faces(g, tris)
    if not pg.is_maximal_plane:
        raise NotMaximalPlanar(f"{spec.name()} did not close into a triangulation")
    specials = {k: v for k, v in index.items() if k in ("x0", "y0", "z0", "s") or k.startswith("t_")}
    return Gadget(spec, pg, (index["x0"], index["y0"], index["z0"]), specials)


# ---------------------------------------------------------------------------
# distance audit
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AuditReport:
    ok: bool
    violations: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def _expected_far(spec: GadgetSpec, letter: str) -> set[str]:
    """Special vertices lying at depth+1 from terminal ``letter``."""
    out = {f"t_{letter}"} if letter in spec.subscripts else set()
    out.update(f"t_{p}" for p in spec.superscripts if letter in p)
    return out


def gadget_distance_audit(gadget: Gadget) -> AuditReport:
    """BFS-check every distance promise the gadget makes about its terminals."""
    spec = gadget.spec
    d = spec.depth
    dist = gadget.plane.graph.distances
    sp = gadget.specials
    bad: list[str] = []
    if d < 1:
        return AuditReport(False, ("audit needs positive depth",))
    names = gadget.plane.graph.labels or ()
    promised = {f"t_{a}" for a in spec.subscripts} | {f"t_{p}" for p in spec.superscripts}
    missing = promised - set(names)
    if missing or not promised <= set(sp):
        bad.append(f"missing specials {sorted(missing or promised - set(sp))}")
    for i, letter in enumerate(LETTERS):
        term = gadget.terminals[i]
        row = dist.hops[term]
        if row[sp["s"]] != d:
            bad.append(f"d({letter}0, s) = {row[sp['s']]}")
        inner = names.index(f"{letter}{d - 1}")
        if row[inner] != d - 1:
            bad.append(f"d({letter}0, {letter}{d - 1}) = {row[inner]}")
        far = _expected_far(spec, letter)
        for v in range(gadget.plane.n):
            want = d + 1 if names[v] in far else None
            if want is not None and row[v] != want:
                bad.append(f"d({letter}0, {names[v]}) = {row[v]}, want {want}")
            elif want is None and row[v] > d:
                bad.append(f"d({letter}0, {names[v]}) = {row[v]} exceeds {d}")
        for name in sp:
            if name.startswith("t_") and name not in far and row[sp[name]] != d:
                bad.append(f"d({letter}0, {name}) = {row[sp[name]]}, want {d}")
    return AuditReport(not bad, tuple(bad))


# ---------------------------------------------------------------------------
# gluing
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GlueResult:
    plane: PlaneGraph
    host_map: tuple[int, ...]
    gadget_map: tuple[int, ...]


def glue(h: PlaneGraph, face: Sequence[int], gadget: Gadget, first_new: int | None = None) -> GlueResult:
    """Identify the gadget's outer triangle with ``face`` of ``h``.

    ``face[i]`` is matched with terminal ``"xyz"[i]``.  Host vertices keep
    their indices; the remaining gadget vertices are numbered from
    ``first_new`` (default ``h.n``) upward.

    Raises:
        FaceMismatch: ``face`` is not a triangular face of ``h``.
    """
    face = tuple(face)
    if len(face) != 3 or frozenset(face) not in {frozenset(t) for t in h.triangles}:
        raise FaceMismatch(f"{face} is not a face")
    base = h.n if first_new is None else first_new
    gmap = [-1] * gadget.plane.n
    for i, t in enumerate(gadget.terminals):
        gmap[t] = face[i]
    nxt = base
    for v in range(gadget.plane.n):
        if gmap[v] < 0:
            gmap[v] = nxt
            nxt += 1
    if gadget.plane.n == 3:
        return GlueResult(h, tuple(range(h.n)), tuple(gmap))
    outer = frozenset(gadget.terminals)
    tris = [t for t in h.triangles if frozenset(t) != frozenset(face)]
    tris += [tuple(gmap[v] for v in t) for t in gadget.plane.triangles if frozenset(t) != outer]
    edges = set(h.graph.edges)
    for a, b in gadget.plane.graph.edges:
        u, v = gmap[a], gmap[b]
        edges.add((min(u, v), max(u, v)))
    labels = None
    if h.graph.labels is not None or gadget.plane.graph.labels is not None:
        labels = [h.graph.label(v) for v in range(h.n)] + [""] * (nxt - h.n)
        for v in range(gadget.plane.n):
            if gmap[v] >= h.n:
                labels[gmap[v]] = f"{gadget.plane.graph.label(v)}@{'-'.join(map(str, face))}"
    g = build_graph(nxt, sorted(edges), labels)
    return GlueResult(embed_from_faces(g, tris), tuple(range(h.n)), tuple(gmap))


def gadget_for_face(spec: GadgetSpec, permutation: Iterable[int]) -> GadgetSpec:
    """Rename the decorations of ``spec`` from case letters to face positions.

    ``permutation[i]`` is the face position playing case letter ``"xyz"[i]``.
    """
    perm = list(permutation)
    ren = {LETTERS[i]: LETTERS[perm[i]] for i in range(3)}
    subs = frozenset(ren[p] for p in spec.subscripts)
    sups = frozenset(normalize_pair(ren[p[0]] + ren[p[1]]) for p in spec.superscripts)
    # a renamed pair may now hang on the other letter; both are present
    return GadgetSpec(spec.depth, subs, sups)
