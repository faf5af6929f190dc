import networkx as nx
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import connected_graphs, mpgs, plane_triangulations, to_nx
from planarcenter.criteria import qef_criterion
from planarcenter.errors import AlphaTooSmall, CriterionFails, HypothesisViolated, PreconditionFailed
from planarcenter.fixtures import load_fixture
from planarcenter.graph import build_graph, complete_graph, cycle_graph, eccentricity_profile, is_isometric_subgraph, path_graph
from planarcenter.synthesis import (
    CASE_GADGETS,
    Part,
    build_center_host,
    build_gf,
    build_supergraph,
    case_depth,
    hedetniemi,
    union_of_parts,
    verify_equi_in_center,
    verify_gluing_theorem,
)


def diam(pg):
    return eccentricity_profile(pg.graph).diameter


def test_case_depths():
    assert case_depth("Case1", 5, 2) == 3
    assert case_depth("Case6", 5, 2) == 2
    assert set(CASE_GADGETS) == {"Case1", "Case3", "Case4_1", "Case4_2", "Case5_1", "Case5_2", "Case5_3", "Case6"}


@given(plane_triangulations(max_n=9), st.integers(0, 2))
@settings(max_examples=25)
def test_supergraph_centers_h(pg, extra):
    alpha = diam(pg) + extra
    assume(qef_criterion(pg, alpha))
    rep = build_supergraph(pg, alpha)
    assert rep.is_center_subset
    assert rep.host.is_maximal_plane
    assert is_isometric_subgraph(pg.graph, rep.host.graph, rep.embedding)
    assert verify_gluing_theorem(rep.parts)
    # independent recount of eccentricities
    ecc = nx.eccentricity(to_nx(rep.host.graph))
    assert all(ecc[v] == alpha for v in rep.embedding)
    assert min(ecc.values()) == alpha


@given(plane_triangulations(max_n=8))
@settings(max_examples=15)
def test_center_host_is_exact(pg):
    alpha = diam(pg) + 3
    assume(qef_criterion(pg, alpha))
    rep = build_center_host(pg, alpha)
    ref = to_nx(rep.host.graph)
    assert set(nx.center(ref)) == set(rep.embedding)
    assert nx.check_planarity(ref)[0]
    assert rep.notes["pg_isometric"]
    assert rep.removed and all(rep.supergraph.graph.degree(v) == 4 for v in rep.removed)


def test_each_face_part_reaches_alpha():
    pg = load_fixture("g-star").plane
    alpha = diam(pg) + 1
    for f in pg.triangles:
        rec = build_gf(pg, f, alpha)
        hops = rec.plane.graph.distances.hops
        assert all(hops[u].max() == alpha for u in rec.configuration.qcc)


def test_failing_graph_is_refused():
    pg = load_fixture("g9").plane
    with pytest.raises(CriterionFails) as err:
        build_supergraph(pg, 2)
    assert err.value.failing_vertex == pg.graph.index_of("u")


def test_center_host_needs_slack():
    pg = mpgs(6)[0]
    with pytest.raises(AlphaTooSmall):
        build_center_host(pg, diam(pg) + 2)


def test_report_json_is_complete():
    rep = build_supergraph(load_fixture("octahedron").plane, 3)
    data = rep.to_json()
    assert data["is_center_subset"] and data["radius"] == 3
    assert len(data["faces"]) == 8
    assert sum(rep.case_histogram().values()) == 8


@given(connected_graphs(max_n=9))
def test_hedetniemi_center(g):
    host, emb = hedetniemi(g)
    assert set(nx.center(to_nx(host))) == set(emb)
    assert eccentricity_profile(host).radius == 2


def test_hedetniemi_needs_vertices():
    with pytest.raises(PreconditionFailed):
        hedetniemi(build_graph(0, []))


def test_gluing_theorem_on_two_paths():
    # two paths sharing an endpoint: eccentricities add along the union
    parts = [Part(path_graph(3), (0, 1, 2)), Part(path_graph(4), (0, 3, 4, 5))]
    assert verify_gluing_theorem(parts)
    union, index = union_of_parts(parts)
    assert union.n == 6 and union.size == 5


@pytest.mark.parametrize(
    "parts",
    [
        [Part(path_graph(2), (0, 1)), Part(path_graph(2), (2, 3))],
        [Part(path_graph(2), (0, 1)), Part(path_graph(2), (1, 2)), Part(path_graph(2), (0, 2))],
        [Part(build_graph(2, []), (0, 1)), Part(path_graph(3), (0, 2, 1))],
        [Part(cycle_graph(4), (0, 1, 2, 3)), Part(path_graph(4), (0, 1, 2, 3))],
    ],
    ids=["disjoint", "unequal-intersections", "disconnected-common", "not-isometric"],
)
def test_gluing_hypotheses_are_enforced(parts):
    with pytest.raises(HypothesisViolated):
        verify_gluing_theorem(parts)


def test_equi_eccentric_copy_is_central():
    ico = load_fixture("icosahedron").plane
    rep = build_supergraph(ico, 3)
    assert verify_equi_in_center(ico, rep.host.graph, rep.embedding)


def test_equi_in_center_refuses_dominating_faces():
    octa = load_fixture("octahedron").plane
    rep = build_supergraph(octa, 2)
    with pytest.raises(PreconditionFailed):
        verify_equi_in_center(octa, rep.host.graph, rep.embedding)


def test_k4_needs_no_gadget_at_its_diameter():
    k4 = load_fixture("k4").plane
    rep = build_supergraph(k4, 1)
    assert rep.host.n == 4 and rep.is_exact_center
    assert complete_graph(4).edges == rep.host.graph.edges
