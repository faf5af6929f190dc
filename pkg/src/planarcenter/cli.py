"""Command-line driver; every report is line-delimited JSON on stdout.

Exit codes: 0 success, 1 a criterion or fact failed, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .criteria import cycle_condition, qef_criterion
from .embedding import PlaneGraph
from .errors import CriterionFails, PlanarCenterError
from .fixtures import fixture_from_dict, fixture_names, load_fixture, verify_all, verify_fixture
from .graph import eccentricity_profile
from .qcc import classify_case, face_configuration
from .serialize import load_path, plane_from_dict, plane_to_dict, to_dot
from .synthesis import build_center_host, build_supergraph
from .triangulations import census, census_csv, code_hex, canonical_code, enumerate_mpgs, iter_census_json


def _emit(obj: dict) -> None:
    print(json.dumps(obj, sort_keys=True))


def _load(spec: str) -> PlaneGraph:
    """Accept ``fixture:NAME``, a graph JSON file or a fixture-format file."""
    if spec.startswith("fixture:"):
        fix = load_fixture(spec.split(":", 1)[1])
    else:
        raw = load_path(spec)
        if "vertices" in raw:
            fix = fixture_from_dict(raw)
        else:
            return plane_from_dict(raw)
    if fix.plane is None:
        raise PlanarCenterError(f"{spec} carries no embedding")
    return fix.plane


def _alpha(pg: PlaneGraph, alpha: int | None) -> int:
    return eccentricity_profile(pg.graph).diameter if alpha is None else alpha


def cmd_analyze(args: argparse.Namespace) -> int:
    pg = _load(args.graph)
    prof = eccentricity_profile(pg.graph)
    _emit(
        {
            "kind": "profile",
            "order": pg.n,
            "size": pg.graph.size,
            "radius": prof.radius,
            "diameter": prof.diameter,
            "center": sorted(prof.center),
            "eccentricity": list(prof.eccentricity),
        }
    )
    if pg.is_maximal_plane and pg.n >= 4:
        for f in sorted(set(pg.triangles)):
            cfg = face_configuration(pg, f)
            _emit({"kind": "face", **cfg.to_json(classify_case(cfg).case)})
    if args.plot:
        from .plotting import plot_plane_graph

        out = plot_plane_graph(pg, Path(args.plot) / "graph.png", prof.center, "center in black")
        _emit({"kind": "figure", "path": str(out)})
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    pg = _load(args.graph)
    verdict = qef_criterion(pg, _alpha(pg, args.alpha))
    out = verdict.to_json()
    if verdict.failing_vertex is not None:
        out["failing_label"] = pg.graph.label(verdict.failing_vertex)
    _emit(out)
    cyc = cycle_condition(pg, args.max_len)
    _emit(cyc.to_json())
    return 0 if verdict and cyc else 1


def cmd_synthesize(args: argparse.Namespace) -> int:
    pg = _load(args.graph)
    d = eccentricity_profile(pg.graph).diameter
    alpha = args.alpha if args.alpha is not None else (d + 3 if args.exact_center else d)
    try:
        rep = build_center_host(pg, alpha) if args.exact_center else build_supergraph(pg, alpha)
    except CriterionFails as exc:
        _emit({"kind": "error", "error": "CriterionFails", "message": str(exc), "failing_vertex": exc.failing_vertex})
        return 1
    _emit({"kind": "report", **rep.to_json()})
    if args.host_json:
        Path(args.host_json).write_text(json.dumps(plane_to_dict(rep.host)) + "\n")
        _emit({"kind": "host", "path": args.host_json})
    if args.dot:
        Path(args.dot).write_text(to_dot(rep.host.graph, rep.embedding, "host"))
        _emit({"kind": "dot", "path": args.dot})
    if args.plot:
        from .plotting import plot_plane_graph

        out = plot_plane_graph(rep.host, Path(args.plot) / "host.png", rep.embedding, f"alpha = {alpha}")
        _emit({"kind": "figure", "path": str(out)})
    ok = rep.is_exact_center if args.exact_center else rep.is_center_subset
    return 0 if ok else 1


def cmd_enumerate(args: argparse.Namespace) -> int:
    n = args.order
    if not args.census:
        for pg in enumerate_mpgs(n):
            _emit({"kind": "class", "order": n, "code": code_hex(canonical_code(pg)), "graph": plane_to_dict(pg)})
        return 0
    rows, summary = census(n, args.alpha_offset, args.synthesize)
    for line in iter_census_json(rows, summary):
        print(line)
    if args.csv:
        Path(args.csv).write_text(census_csv(rows))
        _emit({"kind": "csv", "path": args.csv})
    if args.plot:
        from .plotting import plot_census

        orders = list(range(4, n + 1))
        tallies = [census(k, args.alpha_offset)[1] if k != n else summary for k in orders]
        out = plot_census(orders, [t.passed for t in tallies], [t.failed for t in tallies], Path(args.plot) / "census.png")
        _emit({"kind": "figure", "path": str(out)})
    return 0


def cmd_fixtures(args: argparse.Namespace) -> int:
    if args.verify_all:
        results = verify_all()
    elif args.name:
        results = verify_fixture(load_fixture(args.name, verify=False))
    else:
        for name in fixture_names():
            fix = load_fixture(name, verify=False)
            _emit({"kind": "fixture", "name": name, "order": fix.graph.n, "description": fix.description})
        return 0
    for r in results:
        _emit(r.to_json())
    return 0 if all(r.ok for r in results) else 1


def cmd_export(args: argparse.Namespace) -> int:
    pg = _load(args.graph)
    text = to_dot(pg.graph) if args.format == "dot" else json.dumps(plane_to_dict(pg)) + "\n"
    if args.out:
        Path(args.out).write_text(text)
        _emit({"kind": args.format, "path": args.out})
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="planarcenter", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)
    graph_help = "graph JSON path or fixture:NAME"

    a = sub.add_parser("analyze", help="eccentricity profile and face configurations")
    a.add_argument("graph", help=graph_help)
    a.add_argument("--plot", metavar="DIR")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("check", help="face criterion and cycle condition")
    c.add_argument("graph", help=graph_help)
    c.add_argument("--alpha", type=int)
    c.add_argument("--max-len", type=int, help="cap on cycle length")
    c.set_defaults(func=cmd_check)

    s = sub.add_parser("synthesize", help="build a certifying host")
    s.add_argument("graph", help=graph_help)
    s.add_argument("--alpha", type=int)
    s.add_argument("--exact-center", action="store_true", help="trim to a host whose center is exactly H")
    s.add_argument("--dot", metavar="FILE")
    s.add_argument("--host-json", metavar="FILE")
    s.add_argument("--plot", metavar="DIR")
    s.set_defaults(func=cmd_synthesize)

    e = sub.add_parser("enumerate", help="maximal planar graphs of one order")
    e.add_argument("--order", type=int, required=True)
    e.add_argument("--census", action="store_true")
    e.add_argument("--alpha-offset", type=int, default=0, help="census alpha = diam + offset")
    e.add_argument("--synthesize", action="store_true", help="also build hosts for passing classes")
    e.add_argument("--csv", metavar="FILE")
    e.add_argument("--plot", metavar="DIR")
    e.set_defaults(func=cmd_enumerate)

    f = sub.add_parser("fixtures", help="list or verify bundled example graphs")
    f.add_argument("--verify-all", action="store_true")
    f.add_argument("--name")
    f.set_defaults(func=cmd_fixtures)

    x = sub.add_parser("export", help="write a graph as DOT or JSON")
    x.add_argument("graph", help=graph_help)
    x.add_argument("--format", choices=("dot", "json"), default="json")
    x.add_argument("--out", metavar="FILE")
    x.set_defaults(func=cmd_export)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (PlanarCenterError, OSError, json.JSONDecodeError, KeyError) as exc:
        _emit({"kind": "error", "error": type(exc).__name__, "message": str(exc)})
        return 2


if __name__ == "__main__":
    sys.exit(main())
