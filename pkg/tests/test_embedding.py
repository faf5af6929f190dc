import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import mpgs, plane_triangulations, to_nx
from planarcenter.embedding import (
    all_triangle_faces_ok,
    cycle_sides,
    embed_from_faces,
    embed_from_rotation,
    is_jordan_separating,
    link_cycle,
    mpg_faces,
    rotation_from_coordinates,
    simple_cycles,
    triangles_of,
)
from planarcenter.errors import BadRotation, NonPlanarGenus, NotACycle, NotMaximalPlanar, TooLarge
from planarcenter.graph import build_graph, complete_graph, cycle_graph, is_separating_set


def octahedron():
    edges = [(a, b) for a in range(6) for b in range(a + 1, 6) if (a, b) not in {(0, 3), (1, 4), (2, 5)}]
    return mpg_faces(build_graph(6, edges))


@given(plane_triangulations())
def test_triangulation_faces_satisfy_euler(pg):
    assert pg.is_maximal_plane
    assert all_triangle_faces_ok(pg)
    assert pg.n - pg.graph.size + len(pg.faces) == 2
    assert nx.check_planarity(to_nx(pg.graph))[0]


@given(plane_triangulations())
def test_mpg_faces_recovers_the_same_face_set(pg):
    again = mpg_faces(pg.graph)
    assert set(map(frozenset, again.triangles)) == set(map(frozenset, pg.triangles))


@given(plane_triangulations())
def test_rotation_round_trip(pg):
    again = embed_from_rotation(pg.graph, pg.rotation)
    assert set(again.faces) == set(pg.faces)
    for v in range(pg.n):
        assert sorted(link_cycle(pg, v)) == sorted(pg.graph.neighbors(v))


@given(plane_triangulations())
def test_every_dart_belongs_to_a_face_walk(pg):
    for (u, v), fid in pg.face_of_dart.items():
        face = pg.faces[fid]
        i = face.index(u)
        assert face[(i + 1) % len(face)] == v


def test_k5_is_not_maximal_planar():
    with pytest.raises(NotMaximalPlanar):
        mpg_faces(complete_graph(5))


def test_hexagon_is_not_a_triangulation():
    with pytest.raises(NotMaximalPlanar):
        mpg_faces(cycle_graph(6))


def test_twisted_rotation_has_positive_genus():
    k4 = complete_graph(4)
    # reversing a single vertex's rotation of a K4 embedding gives a torus walk
    pg = mpg_faces(k4)
    rot = [list(r) for r in pg.rotation]
    rot[0] = rot[0][::-1]
    with pytest.raises(NonPlanarGenus):
        embed_from_rotation(k4, rot)


def test_rotation_must_list_neighbours():
    with pytest.raises(BadRotation):
        embed_from_rotation(cycle_graph(3), [(1,), (0, 2), (0, 1)])


def test_square_from_coordinates():
    g = cycle_graph(4)
    pg = embed_from_rotation(g, rotation_from_coordinates(g, [(0, 0), (1, 0), (1, 1), (0, 1)]))
    assert sorted(len(f) for f in pg.faces) == [4, 4]


def test_embed_from_faces_rejects_inconsistent_triangles():
    with pytest.raises(NotMaximalPlanar):
        embed_from_faces(complete_graph(4), [(0, 1, 2), (0, 1, 3), (0, 2, 3)])


def test_triangles_of_counts_k4():
    assert len(triangles_of(complete_graph(4))) == 4


def test_octahedron_equator_separates():
    pg = octahedron()
    sides = cycle_sides(pg, [1, 2, 4, 5])
    assert sides.jordan_separating
    assert {sides.side_a, sides.side_b} == {frozenset({0}), frozenset({3})}
    assert sides.side_of(1) == "C"


@given(plane_triangulations())
def test_face_boundaries_never_separate(pg):
    for f in pg.triangles:
        assert not is_jordan_separating(pg, f)


@given(plane_triangulations(), st.data())
def test_link_cycles_separate_their_vertex(pg, data):
    v = data.draw(st.integers(0, pg.n - 1))
    link = link_cycle(pg, v)
    sides = cycle_sides(pg, link)
    mine, other = (sides.side_a, sides.side_b) if v in sides.side_a else (sides.side_b, sides.side_a)
    assert mine == {v}
    assert len(other) == pg.n - 1 - len(link)
    assert sides.jordan_separating == (pg.n - 1 - len(link) > 0)


def test_non_cycle_is_rejected():
    with pytest.raises(NotACycle):
        cycle_sides(octahedron(), [0, 3, 1])


@pytest.mark.parametrize("n", [6, 7, 8])
def test_simple_cycles_match_networkx(n):
    for pg in mpgs(n):
        ref = {frozenset(c) for c in nx.simple_cycles(to_nx(pg.graph), length_bound=6) if len(c) >= 3}
        ours = list(simple_cycles(pg.graph, 6))
        assert len(ours) == len(set(map(tuple, ours)))
        # vertex sets can repeat across distinct cycles, so compare counts too
        assert {frozenset(c) for c in ours} == ref
        assert len(ours) == sum(1 for c in nx.simple_cycles(to_nx(pg.graph), length_bound=6) if len(c) >= 3)


def test_cycle_budget():
    with pytest.raises(TooLarge):
        list(simple_cycles(complete_graph(6), 6, budget=10))


def test_octahedron_face_does_not_separate():
    pg = octahedron()
    for f in pg.triangles:
        assert not is_separating_set(pg.graph, f)[0]
