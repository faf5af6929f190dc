"""Figures for the CLI report path, rendered off-screen to files."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .embedding import PlaneGraph  # noqa: E402


def tutte_layout(pg: PlaneGraph, outer: Sequence[int] | None = None) -> np.ndarray:
    """Barycentric drawing with ``outer`` pinned to a triangle.

    Every other vertex sits at the mean of its neighbours, which for a
    3-connected plane graph gives a crossing-free straight-line drawing.
    """
    n = pg.n
    if outer is None:
        outer = max(pg.faces, key=len)
    outer = list(outer)
    pos = np.zeros((n, 2))
    angles = np.pi / 2 + 2 * np.pi * np.arange(len(outer)) / len(outer)
    pos[outer] = np.c_[np.cos(angles), np.sin(angles)]
    inner = [v for v in range(n) if v not in set(outer)]
    if inner:
        idx = {v: i for i, v in enumerate(inner)}
        a = np.zeros((len(inner), len(inner)))
        b = np.zeros((len(inner), 2))
        for v in inner:
            i = idx[v]
            a[i, i] = pg.graph.degree(v)
            for w in pg.graph.adjacency[v]:
                if w in idx:
                    a[i, idx[w]] -= 1
                else:
                    b[i] += pos[w]
        pos[inner] = np.linalg.solve(a, b)
    return pos


def plot_plane_graph(
    pg: PlaneGraph,
    path: str | Path,
    highlight: Iterable[int] = (),
    title: str = "",
    outer: Sequence[int] | None = None,
) -> Path:
    """Draw ``pg`` with a barycentric layout; highlighted vertices in black."""
    pos = tutte_layout(pg, outer)
    marked = set(highlight)
    fig, ax = plt.subplots(figsize=(6, 6))
    for u, v in pg.graph.edges:
        ax.plot(*pos[[u, v]].T, color="0.6", lw=0.6, zorder=1)
    colors = ["black" if v in marked else "white" for v in range(pg.n)]
    ax.scatter(pos[:, 0], pos[:, 1], s=18, c=colors, edgecolors="black", linewidths=0.6, zorder=2)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title)
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def plot_census(orders: Sequence[int], passed: Sequence[int], failed: Sequence[int], path: str | Path) -> Path:
    """Stacked bars of passing and failing classes per order."""
    fig, ax = plt.subplots(figsize=(6, 3.5))
    x = np.arange(len(orders))
    ax.bar(x, passed, color="0.7", label="criterion holds")
    bars = ax.bar(x, failed, bottom=passed, color="black", label="criterion fails")
    ax.bar_label(bars, labels=[f"{p + f}" for p, f in zip(passed, failed)], padding=2)
    ax.set_xticks(x, [str(n) for n in orders])
    ax.set_xlabel("order")
    ax.set_ylabel("isomorphism classes")
    ax.margins(y=0.15)
    ax.legend(frameon=False)
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path
