import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import connected_graphs, to_nx
from planarcenter.errors import DuplicateEdge, OutOfRange, SelfLoop
from planarcenter.graph import (
    bfs_distances,
    build_graph,
    cartesian_product,
    closed_neighborhood,
    complete_graph,
    components,
    cycle_graph,
    distance_matrix,
    dominates,
    eccentricity_profile,
    induced_subgraph,
    is_isometric_subgraph,
    is_separating_set,
    path_graph,
    relabel,
    set_distance,
)


class TestConstruction:
    def test_edges_are_normalised_and_sorted(self):
        g = build_graph(3, [(2, 1), (1, 0)])
        assert g.edges == ((0, 1), (1, 2))
        assert g.adjacency == ((1,), (0, 2), (1,))

    @pytest.mark.parametrize(
        "edges, exc",
        [([(0, 3)], OutOfRange), ([(1, 1)], SelfLoop), ([(0, 1), (1, 0)], DuplicateEdge)],
    )
    def test_rejects_bad_edges(self, edges, exc):
        with pytest.raises(exc):
            build_graph(3, edges)

    def test_labels_round_trip(self):
        g = build_graph(2, [(0, 1)], ["a", "b"])
        assert g.label(1) == "b" and g.index_of("a") == 0
        assert path_graph(2).label(1) == "1"

    def test_label_count_must_match(self):
        with pytest.raises(OutOfRange):
            build_graph(2, [], ["a"])

    def test_families(self):
        assert complete_graph(5).size == 10
        assert cycle_graph(6).size == 6
        assert path_graph(4).size == 3


@given(connected_graphs())
def test_bfs_matches_networkx(g):
    ref = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
    dm = distance_matrix(g)
    for u in range(g.n):
        assert bfs_distances(g, u) == [ref[u][v] for v in range(g.n)]
        assert all(dm(u, v) == ref[u][v] for v in range(g.n))


@given(connected_graphs())
def test_eccentricity_profile_matches_networkx(g):
    ref = to_nx(g)
    prof = eccentricity_profile(g)
    ecc = nx.eccentricity(ref)
    assert prof.eccentricity == tuple(ecc[v] for v in range(g.n))
    assert prof.radius == nx.radius(ref)
    assert prof.diameter == nx.diameter(ref)
    assert prof.center == frozenset(nx.center(ref))
    assert prof.periphery == frozenset(nx.periphery(ref))


def test_disconnected_distances_are_infinite():
    g = build_graph(3, [(0, 1)])
    assert not g.is_connected
    assert bfs_distances(g, 0)[2] == float("inf")
    assert len(components(g)) == 2


@given(connected_graphs(min_n=2), st.data())
def test_set_distance_is_min_over_pairs(g, data):
    a = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1))
    b = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1))
    dm = distance_matrix(g)
    assert set_distance(g, a, b) == min(dm(x, y) for x in a for y in b)
    rows = dm.rows_to_set(b)
    assert all(rows[v] == min(dm(v, y) for y in b) for v in range(g.n))


@given(connected_graphs(min_n=2), st.data())
def test_domination_agrees_with_closed_neighborhoods(g, data):
    t = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1))
    s = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1))
    nbhd = closed_neighborhood(g, t)
    assert nbhd == set(t) | {w for v in t for w in g.neighbors(v)}
    assert dominates(g, t, s) == (set(s) <= nbhd)


@given(connected_graphs(max_n=5), connected_graphs(max_n=5))
def test_cartesian_product_distances_add(g, h):
    p = cartesian_product(g, h)
    assert p.n == g.n * h.n
    assert p.size == g.size * h.n + h.size * g.n
    dg, dh, dp = distance_matrix(g), distance_matrix(h), distance_matrix(p)
    for (a, b), (c, d) in itertools.product(itertools.product(range(g.n), range(h.n)), repeat=2):
        assert dp(a * h.n + b, c * h.n + d) == dg(a, c) + dh(b, d)


def test_induced_subgraph_keeps_only_inner_edges():
    sub, back = induced_subgraph(cycle_graph(6), [0, 1, 2, 4])
    assert back == (0, 1, 2, 4)
    assert sub.edges == ((0, 1), (1, 2))


def test_separating_sets_on_a_cycle():
    c = cycle_graph(6)
    assert is_separating_set(c, [0, 3])[0]
    assert not is_separating_set(c, [0, 1])[0]


@pytest.mark.parametrize("k, isometric", [(3, True), (4, True), (5, False)])
def test_paths_in_a_hexagon(k, isometric):
    check = is_isometric_subgraph(path_graph(k), cycle_graph(6), list(range(k)))
    assert bool(check) is isometric
    if not isometric:
        assert check.witness is not None


@given(connected_graphs(), st.randoms(use_true_random=False))
def test_relabel_preserves_distances(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = relabel(g, perm)
    assert nx.is_isomorphic(to_nx(g), to_nx(h))
    dg, dh = distance_matrix(g).values, distance_matrix(h).values
    p = np.array(perm)
    assert np.array_equal(dh[np.ix_(p, p)], dg)
