import networkx as nx
import pytest

from conftest import mpgs, to_nx
from planarcenter.errors import TooLarge
from planarcenter.graph import build_graph, relabel
from planarcenter.smallgraphs import (
    all_connected_graphs,
    all_graphs,
    all_mpgs_bruteforce,
    canonical_mask,
    graph_from_mask,
)


def atlas(n):
    return [g for g in nx.graph_atlas_g() if g.number_of_nodes() == n]


@pytest.mark.parametrize("n", range(1, 7))
def test_graph_counts_match_the_atlas(n):
    ours = all_graphs(n)
    ref = atlas(n)
    assert len(ours) == len(ref)
    assert len(all_connected_graphs(n)) == sum(nx.is_connected(g) for g in ref)


@pytest.mark.parametrize("n", range(2, 6))
def test_every_atlas_graph_has_one_representative(n):
    keys = {canonical_mask(g) for g in all_graphs(n)}
    for ref in atlas(n):
        mapping = {v: i for i, v in enumerate(ref.nodes)}
        edges = [(mapping[a], mapping[b]) for a, b in ref.edges]
        assert canonical_mask(build_graph(n, edges)) in keys


def test_mask_is_invariant_under_relabelling():
    g = all_connected_graphs(5)[7]
    assert canonical_mask(relabel(g, [4, 2, 0, 1, 3])) == canonical_mask(g)
    assert canonical_mask(graph_from_mask(5, canonical_mask(g))) == canonical_mask(g)


@pytest.mark.parametrize("n", range(4, 7))
def test_bruteforce_triangulations_match_enumeration(n):
    brute = all_mpgs_bruteforce(n)
    flips = mpgs(n)
    assert len(brute) == len(flips)
    for pg in flips:
        assert sum(nx.is_isomorphic(to_nx(pg.graph), to_nx(b)) for b in brute) == 1


def test_oracle_refuses_large_orders():
    with pytest.raises(TooLarge):
        all_graphs(8)
    with pytest.raises(TooLarge):
        all_mpgs_bruteforce(8)
