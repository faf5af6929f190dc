"""JSON and DOT round-tripping for graphs and plane graphs."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable

from .embedding import PlaneGraph, embed_from_rotation, mpg_faces
from .graph import Graph, build_graph


def graph_to_dict(g: Graph) -> dict:
    out: dict = {"n": g.n, "edges": [list(e) for e in g.edges]}
    if g.labels is not None:
        out["labels"] = list(g.labels)
    return out


def plane_to_dict(pg: PlaneGraph) -> dict:
    out = graph_to_dict(pg.graph)
    out["rotations"] = [list(r) for r in pg.rotation]
    return out


def graph_from_dict(obj: dict) -> Graph:
    return build_graph(int(obj["n"]), obj["edges"], obj.get("labels"))


def plane_from_dict(obj: dict) -> PlaneGraph:
    """Rebuild a plane graph; without rotations the input must be maximal planar.

    Faces are always traced afresh, never read from the input.
    """
    g = graph_from_dict(obj)
    if "rotations" in obj:
        return embed_from_rotation(g, obj["rotations"])
    return mpg_faces(g)


def dumps(obj: Graph | PlaneGraph) -> str:
    if isinstance(obj, PlaneGraph):
        return json.dumps(plane_to_dict(obj))
    return json.dumps(graph_to_dict(obj))


def load_path(path: str | Path) -> dict:
    return json.loads(Path(path).read_text())


def to_dot(g: Graph, highlight: Iterable[int] = (), name: str = "G") -> str:
    """Undirected DOT text; highlighted vertices are filled black."""
    marked = set(highlight)
    lines = [f"graph {json.dumps(name)} {{", "  node [shape=circle];"]
    for v in range(g.n):
        attrs = [f"label={json.dumps(g.label(v))}"]
        if v in marked:
            attrs += ["style=filled", "fillcolor=black", "fontcolor=white"]
        lines.append(f"  {v} [{', '.join(attrs)}];")
    lines += [f"  {u} -- {v};" for u, v in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"
