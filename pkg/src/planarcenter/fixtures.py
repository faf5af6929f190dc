"""Named example graphs with machine-checked facts attached.

Each fixture is a JSON file listing vertex labels, edges by label, optional
drawing coordinates and a list of facts.  Loading a fixture re-checks
every fact, so a transcription slip surfaces immediately.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Any, Callable

from .criteria import cycle_condition, face_qcc_table, has_dominating_face, qef_criterion
from .embedding import PlaneGraph, cycle_sides, embed_from_rotation, mpg_faces, rotation_from_coordinates
from .errors import FixtureFactFailed, NotMaximalPlanar, UnknownFixture
from .graph import (
    Graph,
    build_graph,
    components,
    dominates,
    eccentricity_profile,
    induced_subgraph,
    is_separating_set,
)
from .qcc import classify_case, distance_vector, face_configuration, qcc_set

PACKAGE = "planarcenter.data"


@dataclass(frozen=True)
class Fixture:
    name: str
    description: str
    graph: Graph
    plane: PlaneGraph | None
    annotations: dict[str, Any] = field(default_factory=dict)
    facts: tuple[dict, ...] = ()
    coords: dict[str, tuple[float, float]] | None = None

    def v(self, label: str) -> int:
        return self.graph.index_of(label)

    def vs(self, labels) -> list[int]:
        return [self.v(x) for x in labels]

    def names(self, vertices) -> list[str]:
        return sorted(self.graph.label(v) for v in vertices)


@dataclass(frozen=True)
class FactResult:
    fixture: str
    kind: str
    ok: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"fixture": self.fixture, "fact": self.kind, "pass": self.ok, "detail": self.detail}


def fixture_names() -> list[str]:
    files = resources.files(PACKAGE).iterdir()
    return sorted(p.name[:-5] for p in files if p.name.endswith(".json"))


def _read(name: str) -> dict:
    path = resources.files(PACKAGE).joinpath(f"{name}.json")
    if not path.is_file():
        raise UnknownFixture(name)
    return json.loads(path.read_text())


def fixture_from_dict(raw: dict) -> Fixture:
    labels = [str(x) for x in raw["vertices"]]
    index = {x: i for i, x in enumerate(labels)}
    g = build_graph(len(labels), [(index[a], index[b]) for a, b in raw["edges"]], labels)
    coords = raw.get("coords")
    plane: PlaneGraph | None
    if coords is not None and g.size != 3 * g.n - 6:
        plane = embed_from_rotation(g, rotation_from_coordinates(g, [coords[x] for x in labels]))
    else:
        try:
            plane = mpg_faces(g)
        except NotMaximalPlanar:
            plane = None
    return Fixture(
        raw["name"],
        raw.get("description", ""),
        g,
        plane,
        raw.get("annotations", {}),
        tuple(raw.get("facts", ())),
        {k: tuple(v) for k, v in coords.items()} if coords else None,
    )


def load_fixture(name: str, verify: bool = True) -> Fixture:
    """Load a fixture by name and, by default, check every fact it carries.

    Raises:
        UnknownFixture: no fixture has that name.
        FixtureFactFailed: a recorded fact does not hold.
    """
    fix = fixture_from_dict(_read(name))
    if verify:
        bad = [r for r in verify_fixture(fix) if not r.ok]
        if bad:
            raise FixtureFactFailed("; ".join(f"{r.kind}: {r.detail}" for r in bad))
    return fix


def verify_fixture(fix: Fixture) -> list[FactResult]:
    out = []
    for fact in fix.facts:
        kind = fact["kind"]
        try:
            ok, detail = CHECKS[kind](fix, fact)
        except Exception as exc:  # a crashing check is a failing fact
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(FactResult(fix.name, kind, ok, detail))
    return out


def verify_all() -> list[FactResult]:
    out = []
    for name in fixture_names():
        out.extend(verify_fixture(load_fixture(name, verify=False)))
    return out


# ---------------------------------------------------------------------------
# fact checks; each returns (ok, detail)
# ---------------------------------------------------------------------------


def _plane(fix: Fixture) -> PlaneGraph:
    if fix.plane is None:
        raise NotMaximalPlanar(f"{fix.name} has no embedding")
    return fix.plane


def _mpg(fix, fact):
    pg = _plane(fix)
    return pg.is_maximal_plane, f"{len(pg.faces)} faces"


def _qcc(fix, fact):
    res = qcc_set(fix.graph, fix.vs(fact["set"]))
    got = {"qcc": fix.names(res.qcc), "ecc": fix.names(res.ecc), "e": res.eccentricity, "q": res.quasi_eccentricity}
    want = {k: (sorted(fact[k]) if isinstance(fact[k], list) else fact[k]) for k in got if k in fact}
    ok = all(got[k] == want[k] for k in want)
    return ok, json.dumps({k: got[k] for k in want})


def _distance_vector(fix, fact):
    got = list(distance_vector(fix.graph, fix.v(fact["vertex"]), fix.vs(fact["face"])))
    return got == fact["vector"], str(got)


def _class(fix, fact):
    face = fix.vs(fact["face"])
    cfg = face_configuration(_plane(fix), face)
    u = fix.v(fact["vertex"])
    if u not in cfg.membership:
        return False, "not quasi-eccentric"
    off, near = cfg.membership[u]
    pos = {v: i for i, v in enumerate(cfg.face)}
    want_near = {pos[x] for x in fix.vs(fact["near"])}
    return cfg.k + off == fact["level"] and near == want_near, f"level {cfg.k + off}"


def _case(fix, fact):
    cfg = face_configuration(_plane(fix), fix.vs(fact["face"]))
    got = classify_case(cfg).case
    return got == fact["case"], got


def _diameter(fix, fact):
    d = eccentricity_profile(fix.graph).diameter
    return d == fact["value"], str(d)


def _radius(fix, fact):
    r = eccentricity_profile(fix.graph).radius
    return r == fact["value"], str(r)


def _eccentricity(fix, fact):
    e = eccentricity_profile(fix.graph).eccentricity[fix.v(fact["vertex"])]
    return e == fact["value"], str(e)


def _self_centered(fix, fact):
    return eccentricity_profile(fix.graph).is_self_centered(), ""


def _center(fix, fact):
    got = fix.names(eccentricity_profile(fix.graph).center)
    return got == sorted(fact["vertices"]), str(got)


def _center_components(fix, fact):
    center = eccentricity_profile(fix.graph).center
    sub, _ = induced_subgraph(fix.graph, center)
    parts = components(sub)
    sizes = sorted(len(p) for p in parts)
    ok = sizes == sorted(fact["sizes"])
    if fact.get("complete"):
        ok = ok and sub.size == sum(len(p) * (len(p) - 1) // 2 for p in parts)
    return ok, str(sizes)


def _qef(fix, fact):
    pg = _plane(fix)
    verdict = qef_criterion(pg, fact["alpha"])
    ok = verdict.passed == fact["pass"]
    if "unwitnessed" in fact:
        u = fix.v(fact["unwitnessed"])
        ok = ok and not any(u in q for q in face_qcc_table(pg).values())
    fv = None if verdict.failing_vertex is None else fix.graph.label(verdict.failing_vertex)
    return ok, f"pass={verdict.passed} failing={fv}"


def _cycle_condition(fix, fact):
    verdict = cycle_condition(_plane(fix))
    return verdict.passed == fact["pass"] and verdict.exact, f"pass={verdict.passed} bound={verdict.bound}"


def _contains(fix, fact):
    other = load_fixture(fact["fixture"], verify=False)
    for a, b in other.graph.edges:
        la, lb = other.graph.label(a), other.graph.label(b)
        if not fix.graph.has_edge(fix.v(la), fix.v(lb)):
            return False, f"missing {la}-{lb}"
    return True, ""


def _dominating_face(fix, fact):
    f = has_dominating_face(_plane(fix))
    return (f is not None) == fact["exists"], str(None if f is None else fix.names(f))


def _cycle_sides(fix, fact):
    cyc = fix.vs(fact["cycle"])
    sep, _ = is_separating_set(fix.graph, cyc)
    sides = cycle_sides(_plane(fix), cyc)
    ok = sep == fact["separating"] and sides.jordan_separating == fact["jordan"]
    return ok, f"separating={sep} jordan={sides.jordan_separating}"


def _hedetniemi(fix, fact):
    from .synthesis import hedetniemi

    host, emb = hedetniemi(fix.graph)
    return eccentricity_profile(host).center == frozenset(emb), ""


def _dominates(fix, fact):
    got = dominates(fix.graph, fix.vs(fact["set"]), fix.vs(fact["target"]))
    return got == fact["value"], str(got)


CHECKS: dict[str, Callable[[Fixture, dict], tuple[bool, str]]] = {
    "mpg": _mpg,
    "qcc": _qcc,
    "distance_vector": _distance_vector,
    "class": _class,
    "case": _case,
    "diameter": _diameter,
    "radius": _radius,
    "eccentricity": _eccentricity,
    "self_centered": _self_centered,
    "center": _center,
    "center_components": _center_components,
    "qef": _qef,
    "cycle_condition": _cycle_condition,
    "contains": _contains,
    "dominating_face": _dominating_face,
    "cycle_sides": _cycle_sides,
    "hedetniemi_center": _hedetniemi,
    "dominates": _dominates,
}
