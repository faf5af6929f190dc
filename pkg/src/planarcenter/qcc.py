"""Quasi-eccentric sets and the configuration of a face.

A vertex ``u`` is quasi-eccentric to ``S`` when no vertex ``v`` is strictly
farther than ``u`` from every member of ``S``.  For a triangular face
``x, y, z`` of a maximal plane graph, the quasi-eccentric vertices split
into classes by their distance vector: a base level (``k`` or ``k + 1``
where ``k`` is the quasi-eccentricity), the *near* letters realising that
level and the *far* letters sitting one further away.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Sequence

import numpy as np

from .embedding import PlaneGraph
from .errors import (
    EmptySet,
    InternalInvariantViolation,
    NotMaximalPlanar,
    NotTriangle,
    UnclassifiableConfiguration,
)
from .graph import Graph

LETTERS = "xyz"


@dataclass(frozen=True)
class QccResult:
    target: frozenset[int]
    qcc: frozenset[int]
    ecc: frozenset[int]
    eccentricity: int  # e(S)
    quasi_eccentricity: int  # q(S)


def qcc_set(g: Graph, s: Iterable[int]) -> QccResult:
    """Exact ``qcc(S)``, ``ecc(S)``, ``e(S)`` and ``q(S)`` from the distance matrix."""
    s = sorted(set(s))
    if not s:
        raise EmptySet("qcc of an empty set")
    d = g.distances.hops[:, s]  # raises Disconnected
    # beaten[u, v]: v is strictly farther than u from every member of S
    beaten = (d[None, :, :] > d[:, None, :]).all(axis=2)
    qcc = np.flatnonzero(~beaten.any(axis=1))
    to_s = d.min(axis=1)
    e = int(to_s.max())
    ecc = np.flatnonzero(to_s == e)
    q = int(to_s[qcc].min())
    return QccResult(
        frozenset(s),
        frozenset(int(x) for x in qcc),
        frozenset(int(x) for x in ecc),
        e,
        q,
    )


def distance_vector(g: Graph, u: int, face: Sequence[int]) -> tuple[int, int, int]:
    if len(face) != 3 or len(set(face)) != 3:
        raise NotTriangle(f"{face} is not a triangle")
    x, y, z = face
    if not (g.has_edge(x, y) and g.has_edge(y, z) and g.has_edge(x, z)):
        raise NotTriangle(f"{face} is not a triangle")
    d = g.distances
    return d(u, x), d(u, y), d(u, z)


# ---------------------------------------------------------------------------
# configurations
# ---------------------------------------------------------------------------

ClassKey = tuple[int, frozenset[int]]  # (level offset 0 or 1, near positions)


def class_name(offset: int, near: Iterable[int]) -> str:
    """Render a class in the familiar notation, e.g. ``(k)_x^yz``."""
    near = sorted(near)
    far = [i for i in range(3) if i not in near]
    level = "(k)" if offset == 0 else "(k+1)"
    out = level + "_" + "".join(LETTERS[i] for i in near)
    if far:
        out += "^" + "".join(LETTERS[i] for i in far)
    return out


@dataclass(frozen=True)
class FaceConfiguration:
    """Classification of ``qcc(H[f])`` for one triangular face.

    ``face`` is in canonical (sorted) order; position ``i`` plays the role
    of letter ``"xyz"[i]``.
    """

    face: tuple[int, int, int]
    k: int
    membership: dict[int, ClassKey]
    vectors: dict[int, tuple[int, int, int]]

    @property
    def qcc(self) -> frozenset[int]:
        return frozenset(self.membership)

    @property
    def configuration(self) -> frozenset[tuple[int, int, int]]:
        return frozenset(self.vectors.values())

    def members(self, offset: int, near: Iterable[int]) -> frozenset[int]:
        key = (offset, frozenset(near))
        return frozenset(v for v, c in self.membership.items() if c == key)

    def nonempty(self, offset: int, near: Iterable[int]) -> bool:
        key = (offset, frozenset(near))
        return any(c == key for c in self.membership.values())

    def level(self, offset: int) -> frozenset[int]:
        return frozenset(v for v, c in self.membership.items() if c[0] == offset)

    def at_letter(self, offset: int, letter: int) -> frozenset[int]:
        """Members of level ``k + offset`` whose near-set contains ``letter``."""
        return frozenset(v for v, c in self.membership.items() if c[0] == offset and letter in c[1])

    def classes(self) -> dict[str, list[int]]:
        out: dict[str, list[int]] = {}
        for v, (off, near) in sorted(self.membership.items()):
            out.setdefault(class_name(off, near), []).append(v)
        return dict(sorted(out.items()))

    def to_json(self, case: str | None = None) -> dict:
        out = {"face": list(self.face), "k": self.k, "classes": self.classes()}
        if case is not None:
            out["case"] = case
        return out


def face_configuration(h: PlaneGraph, face: Sequence[int]) -> FaceConfiguration:
    """Classify every quasi-eccentric vertex of a face and audit the structure.

    Raises:
        NotMaximalPlanar: ``h`` is not a maximal plane graph of order >= 4.
        InternalInvariantViolation: a structural lemma on configurations
            failed, which can only be a bug.
    """
    if h.n < 4 or not h.is_maximal_plane:
        raise NotMaximalPlanar("configurations need a maximal plane graph of order >= 4")
    face = tuple(sorted(face))
    if frozenset(face) not in {frozenset(t) for t in h.triangles}:
        raise NotTriangle(f"{face} is not a face")
    g = h.graph
    res = qcc_set(g, face)
    d = g.distances.hops[:, list(face)]
    k = res.quasi_eccentricity
    membership: dict[int, ClassKey] = {}
    vectors: dict[int, tuple[int, int, int]] = {}
    for u in sorted(res.qcc):
        row = tuple(int(x) for x in d[u])
        base = min(row)
        vectors[u] = row  # type: ignore[assignment]
        membership[u] = (base - k, frozenset(i for i in range(3) if row[i] == base))
    cfg = FaceConfiguration(face, k, membership, vectors)  # type: ignore[arg-type]
    audit_configuration(cfg)
    return cfg


def audit_configuration(cfg: FaceConfiguration) -> None:
    """Raise :class:`InternalInvariantViolation` if a configuration lemma fails."""
    for u, (off, near) in cfg.membership.items():
        if off not in (0, 1):
            raise InternalInvariantViolation(f"{u} sits at level k+{off}")
        if not near:
            raise InternalInvariantViolation(f"{u} has an empty near-set")
        if any(abs(a - b) > 1 for a in cfg.vectors[u] for b in cfg.vectors[u]):
            raise InternalInvariantViolation(f"distance vector of {u} spreads by more than one")
    full = frozenset(range(3))
    if cfg.nonempty(0, full) and cfg.level(1):
        raise InternalInvariantViolation("(k)_xyz coexists with level k+1")
    for size in (1, 2):
        for near in map(frozenset, _subsets(size)):
            if cfg.nonempty(0, near) and cfg.nonempty(1, near):
                raise InternalInvariantViolation(f"{class_name(0, near)} and {class_name(1, near)} both occupied")
    singles = [p for p in range(3) if cfg.nonempty(1, {p})]
    for p in singles:
        if cfg.at_letter(0, p):
            raise InternalInvariantViolation(f"{class_name(1, {p})} occupied while (k)_{LETTERS[p]} is not empty")
    if len(singles) == 3:
        raise InternalInvariantViolation("all three single-letter level-(k+1) classes occupied")
    if len(singles) == 2:
        r = next(i for i in range(3) if i not in singles)
        if any(cfg.nonempty(0, near) for near in map(frozenset, _subsets(2))) or cfg.nonempty(0, full):
            raise InternalInvariantViolation("two-letter level-k class beside two single level-(k+1) classes")
        if not cfg.nonempty(0, {r}):
            raise InternalInvariantViolation(f"{class_name(0, {r})} should be occupied")


def _subsets(size: int) -> list[tuple[int, ...]]:
    from itertools import combinations

    return list(combinations(range(3), size))


# ---------------------------------------------------------------------------
# case classification
# ---------------------------------------------------------------------------

CASES = ("Case1", "Case2", "Case3", "Case4_1", "Case4_2", "Case5_1", "Case5_2", "Case5_3", "Case6")


@dataclass(frozen=True)
class CaseLabel:
    """A case of the construction plus the relabelling that exhibits it.

    ``permutation[i]`` is the face position playing letter ``"xyz"[i]`` in
    the case description.
    """

    case: str
    permutation: tuple[int, int, int]

    def __str__(self) -> str:
        return self.case


def _matches(case: str, has) -> bool:
    x, y, z = 0, 1, 2
    singles = [has(1, {p}) for p in (x, y, z)]
    doubles_empty_singles = not any(singles)
    if case == "Case1":
        return not any(has(1, s) for s in _all_near())
    if case == "Case2":
        return all(singles)
    if case == "Case3":
        return singles[x] and singles[y] and not singles[z]
    if case == "Case4_1":
        return singles[x] and not singles[y] and not singles[z] and not has(0, {y, z})
    if case == "Case4_2":
        return singles[x] and not singles[y] and not singles[z] and has(0, {y, z})
    if case == "Case5_1":
        return doubles_empty_singles and has(1, {x, y}) and has(1, {x, z}) and has(1, {y, z})
    if case == "Case5_2":
        return doubles_empty_singles and has(1, {x, y}) and has(1, {x, z}) and not has(1, {y, z})
    if case == "Case5_3":
        return doubles_empty_singles and has(1, {x, y}) and not has(1, {x, z}) and not has(1, {y, z})
    if case == "Case6":
        level1 = [s for s in _all_near() if has(1, s)]
        return level1 == [{x, y, z}]
    raise ValueError(case)


def _all_near() -> list[set[int]]:
    return [{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}]


def classify_case(cfg: FaceConfiguration) -> CaseLabel:
    """Name the case of a configuration, up to relabelling ``x, y, z``.

    The first permutation (in lexicographic order) exhibiting the case is
    returned so the result is deterministic.

    Raises:
        UnclassifiableConfiguration: no case applies, or the impossible
            case with three single-letter level-(k+1) classes does.
    """
    hits: list[CaseLabel] = []
    for perm in permutations(range(3)):

        def has(offset: int, letters: set[int], perm=perm) -> bool:
            return cfg.nonempty(offset, {perm[i] for i in letters})

        for case in CASES:
            if _matches(case, has):
                hits.append(CaseLabel(case, perm))  # type: ignore[arg-type]
                break
    if not hits:
        raise UnclassifiableConfiguration(f"no case fits {cfg.classes()}")
    cases = {h.case for h in hits}
    if len(cases) != 1:
        raise UnclassifiableConfiguration(f"ambiguous cases {sorted(cases)}")
    label = hits[0]
    if label.case == "Case2":
        raise UnclassifiableConfiguration("three single-letter level-(k+1) classes")
    return label
