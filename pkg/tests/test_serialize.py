import json

from hypothesis import given

from conftest import connected_graphs, plane_triangulations
from planarcenter.embedding import embed_from_rotation, rotation_from_coordinates
from planarcenter.graph import build_graph, cycle_graph
from planarcenter.serialize import (
    dumps,
    graph_from_dict,
    graph_to_dict,
    load_path,
    plane_from_dict,
    plane_to_dict,
    to_dot,
)


@given(connected_graphs())
def test_graph_round_trip(g):
    assert graph_from_dict(json.loads(dumps(g))) == g


@given(plane_triangulations())
def test_plane_round_trip(pg):
    again = plane_from_dict(json.loads(dumps(pg)))
    assert again.graph == pg.graph and again.rotation == pg.rotation


@given(plane_triangulations())
def test_triangulations_need_no_rotations(pg):
    raw = graph_to_dict(pg.graph)
    again = plane_from_dict(raw)
    assert set(map(frozenset, again.triangles)) == set(map(frozenset, pg.triangles))


def test_non_triangulation_keeps_its_rotation():
    g = cycle_graph(4)
    pg = embed_from_rotation(g, rotation_from_coordinates(g, [(0, 0), (1, 0), (1, 1), (0, 1)]))
    assert plane_from_dict(plane_to_dict(pg)).faces == pg.faces


def test_labels_survive(tmp_path):
    g = build_graph(2, [(0, 1)], ["left", "right"])
    path = tmp_path / "g.json"
    path.write_text(dumps(g))
    assert graph_from_dict(load_path(path)).labels == ("left", "right")


def test_dot_output():
    g = build_graph(3, [(0, 1), (1, 2)], ["a", "b", "c"])
    dot = to_dot(g, highlight=[1], name="demo")
    assert dot.startswith('graph "demo" {')
    assert '1 [label="b", style=filled' in dot
    assert "  0 -- 1;" in dot and "  1 -- 2;" in dot
    assert dot.rstrip().endswith("}")
