"""Necessary conditions for a plane graph to sit inside a planar center.

Two tests are provided.  The quasi-eccentric face criterion asks every
vertex of eccentricity below ``α`` to be quasi-eccentric to some face.
The cycle condition forbids a cycle that Jordan-separates two vertices
both lying farther from it than its own diameter.  The first implies the
second.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .embedding import PlaneGraph, cycle_sides, simple_cycles
from .errors import AlphaTooSmall, Disconnected
from .graph import closed_neighborhood, eccentricity_profile
from .qcc import qcc_set

Triangle = tuple[int, int, int]


@dataclass(frozen=True)
class CriterionVerdict:
    """Outcome of the quasi-eccentric face criterion.

    Attributes:
        passed: Whether every constrained vertex found a face.
        alpha: Target eccentricity.
        witness_map: For each constrained vertex, one face it is
            quasi-eccentric to.
        failing_vertex: The first constrained vertex with no face, if any.
        exempt: Vertices already at eccentricity ``alpha``.
    """

    passed: bool
    alpha: int
    witness_map: dict[int, Triangle] = field(default_factory=dict)
    failing_vertex: int | None = None
    exempt: frozenset[int] = frozenset()

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict:
        return {
            "criterion": "qef",
            "pass": self.passed,
            "alpha": self.alpha,
            "witness_map": {str(u): list(f) for u, f in sorted(self.witness_map.items())},
            "failing_vertex": self.failing_vertex,
            "exempt": sorted(self.exempt),
        }


def face_qcc_table(h: PlaneGraph) -> dict[Triangle, frozenset[int]]:
    """``qcc(H[f])`` for every triangular face, keyed by sorted boundary."""
    return {f: qcc_set(h.graph, f).qcc for f in sorted(set(h.triangles))}


def qef_criterion(h: PlaneGraph, alpha: int) -> CriterionVerdict:
    """Run the quasi-eccentric face criterion at target eccentricity ``alpha``.

    Faces avoiding ``u`` are preferred as witnesses; a face through ``u``
    is used only when no other face works.

    Raises:
        AlphaTooSmall: ``alpha`` is below the diameter of ``h``.
        Disconnected: ``h`` is not connected.
    """
    prof = eccentricity_profile(h.graph)
    if alpha < prof.diameter:
        raise AlphaTooSmall(f"alpha {alpha} < diameter {prof.diameter}")
    table = face_qcc_table(h)
    exempt = frozenset(v for v, e in enumerate(prof.eccentricity) if e == alpha)
    witnesses: dict[int, Triangle] = {}
    for u in range(h.n):
        if u in exempt:
            continue
        hits = [f for f, q in table.items() if u in q]
        if not hits:
            return CriterionVerdict(False, alpha, witnesses, u, exempt)
        far = [f for f in hits if u not in f]
        witnesses[u] = (far or hits)[0]
    return CriterionVerdict(True, alpha, witnesses, None, exempt)


# ---------------------------------------------------------------------------
# cycle condition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CycleCounterexample:
    cycle: tuple[int, ...]
    a: int
    b: int
    cycle_diameter: int
    distance_a: int
    distance_b: int


@dataclass(frozen=True)
class CycleConditionVerdict:
    """Outcome of the Jordan-separating cycle condition.

    ``exact`` is false when cycles were capped below the length at which a
    violation could still exist; such a pass means "pass up to ``bound``".
    """

    passed: bool
    bound: int
    exact: bool
    counterexample: CycleCounterexample | None = None
    cycles_checked: int = 0

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict:
        ce = self.counterexample
        return {
            "criterion": "cycle",
            "pass": self.passed,
            "bound": self.bound,
            "exact": self.exact,
            "cycles_checked": self.cycles_checked,
            "counterexample": None
            if ce is None
            else {"cycle": list(ce.cycle), "a": ce.a, "b": ce.b, "cycle_diameter": ce.cycle_diameter},
        }


def cycle_diameter(length: int) -> int:
    return length // 2


def violation_length_bound(diam: int) -> int:
    """Longest cycle that could still violate the condition.

    A violation forces ``d(a, b) >= 2 * (L // 2) + 2``, which cannot
    exceed the diameter.  Returns 2 when no cycle qualifies.
    """
    r = (diam - 2) // 2
    return max(2, 2 * r + 1) if r >= 1 else 2


def cycle_condition(h: PlaneGraph, max_len: int | None = None, budget: int | None = 2_000_000) -> CycleConditionVerdict:
    """Search simple cycles for a Jordan-separated pair both too far away.

    Args:
        h: An embedded connected graph.
        max_len: Optional cap on cycle length.  Omitted, the cap is the
            longest length at which a violation is possible, so the
            verdict is exact.
        budget: Maximum number of cycles to inspect.

    Raises:
        TooLarge: more than ``budget`` cycles within the cap.
    """
    g = h.graph
    if not g.is_connected:
        raise Disconnected("cycle condition needs a connected graph")
    diam = int(g.distances.hops.max()) if g.n else 0
    needed = violation_length_bound(diam)
    bound = needed if max_len is None else max_len
    exact = bound >= needed or bound >= g.n
    hops = g.distances.hops
    checked = 0
    if bound < 3:
        return CycleConditionVerdict(True, bound, exact, None, 0)
    for cyc in simple_cycles(g, bound, budget):
        checked += 1
        r = cycle_diameter(len(cyc))
        to_c = hops[:, list(cyc)].min(axis=1)
        far = np.flatnonzero(to_c > r)
        if len(far) < 2:
            continue
        sides = cycle_sides(h, cyc)
        fa = [int(v) for v in far if v in sides.side_a]
        fb = [int(v) for v in far if v in sides.side_b]
        if fa and fb:
            ce = CycleCounterexample(tuple(cyc), fa[0], fb[0], r, int(to_c[fa[0]]), int(to_c[fb[0]]))
            return CycleConditionVerdict(False, bound, exact, ce, checked)
    return CycleConditionVerdict(True, bound, exact, None, checked)


def check_qef_implies_cycle(h: PlaneGraph, alpha: int) -> bool:
    """``True`` unless the criterion passes while the cycle condition fails."""
    if not qef_criterion(h, alpha):
        return True
    return cycle_condition(h).passed


def has_dominating_face(h: PlaneGraph) -> Triangle | None:
    """First face, in sorted order, whose closed neighbourhood is everything."""
    everything = frozenset(range(h.n))
    for f in sorted(set(h.triangles)):
        if closed_neighborhood(h.graph, f) == everything:
            return f
    return None
