"""Shared strategies and cached corpora for the test suite."""

from __future__ import annotations

import os
from functools import lru_cache

import networkx as nx
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from planarcenter.graph import Graph, build_graph
from planarcenter.triangulations import diagonal_flip, enumerate_mpgs, stacked_triangulation

settings.register_profile(
    "default",
    max_examples=int(os.environ.get("HYPOTHESIS_EXAMPLES", 40)),
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@lru_cache(maxsize=None)
def mpgs(n: int):
    return tuple(enumerate_mpgs(n))


def to_nx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges)
    return out


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 10):
    """Random spanning tree plus a random sprinkle of extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n) if (a, b) not in edges]
    if pairs:
        extra = draw(st.lists(st.sampled_from(pairs), max_size=2 * n, unique=True))
        edges.update(extra)
    return build_graph(n, sorted(edges))


@st.composite
def plane_triangulations(draw, min_n: int = 4, max_n: int = 11):
    """Stacked triangulation scrambled by random diagonal flips."""
    n = draw(st.integers(min_n, max_n))
    pg = stacked_triangulation(n)
    for _ in range(draw(st.integers(0, 3 * n))):
        edges = pg.graph.edges
        flipped = diagonal_flip(pg, edges[draw(st.integers(0, len(edges) - 1))])
        if flipped is not None:
            pg = flipped
    return pg


@st.composite
def permutations_of(draw, n: int):
    return draw(st.permutations(list(range(n))))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(lines):
        terminalreporter.write_line(lines[n])
