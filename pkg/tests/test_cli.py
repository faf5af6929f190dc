import json

import pytest

from planarcenter.cli import main
from planarcenter.fixtures import load_fixture
from planarcenter.serialize import dumps


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def records(out):
    return [json.loads(line) for line in out.splitlines() if line.strip()]


def test_check_failing_graph_exits_one(capsys, tmp_path):
    path = tmp_path / "g9.json"
    path.write_text(dumps(load_fixture("g9").plane))
    code, out = run(capsys, "check", str(path))
    qef, cyc = records(out)
    assert code == 1
    assert qef["pass"] is False and qef["failing_vertex"] == 8
    assert cyc["criterion"] == "cycle"


def test_check_reports_labels_for_fixtures(capsys):
    code, out = run(capsys, "check", "fixture:g9")
    assert code == 1 and records(out)[0]["failing_label"] == "u"


def test_check_passing_graph(capsys):
    code, out = run(capsys, "check", "fixture:octahedron", "--alpha", "3")
    assert code == 0
    assert records(out)[0]["alpha"] == 3


def test_analyze_lists_every_face(capsys):
    code, out = run(capsys, "analyze", "fixture:octahedron")
    recs = records(out)
    assert code == 0
    assert recs[0]["kind"] == "profile" and recs[0]["diameter"] == 2
    assert sum(r["kind"] == "face" for r in recs) == 8


def test_synthesize_writes_host_and_dot(capsys, tmp_path):
    host, dot = tmp_path / "host.json", tmp_path / "host.dot"
    code, out = run(capsys, "synthesize", "fixture:h1", "--host-json", str(host), "--dot", str(dot))
    assert code == 0
    report = records(out)[0]
    assert report["is_center_subset"]
    assert json.loads(host.read_text())["n"] == report["host_order"]
    assert dot.read_text().startswith("graph")


def test_synthesize_exact_center(capsys):
    code, out = run(capsys, "synthesize", "fixture:octahedron", "--exact-center")
    assert code == 0 and records(out)[0]["is_exact_center"]


def test_synthesize_refuses_failing_graph(capsys):
    code, out = run(capsys, "synthesize", "fixture:g9")
    assert code == 1
    assert records(out)[0]["error"] == "CriterionFails"


def test_enumerate_census(capsys, tmp_path):
    table = tmp_path / "census.csv"
    code, out = run(capsys, "enumerate", "--order", "8", "--census", "--csv", str(table))
    recs = records(out)
    assert code == 0
    summary = next(r for r in recs if r.get("summary"))
    assert summary["classes"] == 14 and summary["failed"] == 0
    assert sum("code" in r for r in recs) == 14
    assert len(table.read_text().splitlines()) == 15


def test_enumerate_plain(capsys):
    code, out = run(capsys, "enumerate", "--order", "6")
    assert code == 0 and len(records(out)) == 2


def test_fixtures_verify_all(capsys):
    code, out = run(capsys, "fixtures", "--verify-all")
    assert code == 0 and all(r["pass"] for r in records(out))


def test_fixtures_listing(capsys):
    code, out = run(capsys, "fixtures")
    assert code == 0 and any(r["name"] == "g9" for r in records(out))


@pytest.mark.parametrize("fmt, start", [("dot", "graph"), ("json", "{")])
def test_export(capsys, fmt, start):
    code, out = run(capsys, "export", "fixture:k4", "--format", fmt)
    assert code == 0 and out.startswith(start)


def test_plot_flag_writes_figures(capsys, tmp_path):
    code, out = run(capsys, "enumerate", "--order", "6", "--census", "--plot", str(tmp_path))
    assert code == 0 and (tmp_path / "census.png").stat().st_size > 0
    code, out = run(capsys, "synthesize", "fixture:k4", "--alpha", "2", "--plot", str(tmp_path))
    assert code == 0 and (tmp_path / "host.png").exists()
    code, out = run(capsys, "analyze", "fixture:k4", "--plot", str(tmp_path))
    assert code == 0 and (tmp_path / "graph.png").exists()


def test_bad_input_exits_two(capsys, tmp_path):
    code, out = run(capsys, "check", str(tmp_path / "missing.json"))
    assert code == 2 and records(out)[0]["kind"] == "error"
    code, out = run(capsys, "check", "fixture:no-such")
    assert code == 2
    code, out = run(capsys, "check", "fixture:k4", "--alpha", "0")
    assert code == 2 and records(out)[0]["error"] == "AlphaTooSmall"


def test_usage_errors_exit_two():
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == 2
