import numpy as np
from hypothesis import given, settings

from conftest import plane_triangulations
from planarcenter.triangulations import stacked_triangulation
from planarcenter.plotting import plot_census, plot_plane_graph, tutte_layout


def inside(p, tri):
    a, b, c = tri
    m = np.array([b - a, c - a]).T
    s, t = np.linalg.solve(m, p - a)
    return s > 0 and t > 0 and s + t < 1


@given(plane_triangulations(min_n=5))
@settings(max_examples=20)
def test_inner_vertices_sit_inside_the_outer_triangle(pg):
    outer = pg.triangles[0]
    pos = tutte_layout(pg, outer)
    tri = pos[list(outer)]
    for v in range(pg.n):
        if v not in outer:
            assert inside(pos[v], tri)


def test_figures_are_written(tmp_path):
    pg = stacked_triangulation(6)
    out = plot_plane_graph(pg, tmp_path / "sub" / "g.png", highlight=[0, 1], title="demo")
    assert out.stat().st_size > 0
    bars = plot_census([4, 5, 6], [1, 1, 2], [0, 0, 0], tmp_path / "c.png")
    assert bars.stat().st_size > 0
