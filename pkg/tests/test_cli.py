import json

import pytest

from wntdom import io
from wntdom.cli import main
from wntdom.generators import fixture
from wntdom.plane_graph import build, empty_graph


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


@pytest.fixture
def graph_file(tmp_path):
    def write(g, name="g.json"):
        p = tmp_path / name
        io.save(g, p)
        return str(p)

    return write


def test_dominate_octahedron(capsys, graph_file):
    code, out = run(capsys, "dominate", "--input", graph_file(fixture("octahedron")))
    rep = json.loads(out)
    assert code == 0 and rep["strategy"] == "ExactSmallInput" and rep["size"] == 2


def test_reduce_trace_fig2d(capsys, graph_file):
    code, out = run(capsys, "reduce", "--input", graph_file(fixture("fig2d")), "--trace")
    rep = json.loads(out)
    assert code == 0 and rep["steps"] == 1
    assert rep["trace"][0]["case_tag"] == "TwoBad.AdjacentOnlyU"


def test_verify_fig2a(capsys, graph_file):
    code, out = run(capsys, "verify", "--input", graph_file(fixture("fig2a")), "--set", "0,3")
    assert code == 0 and json.loads(out) == {"dominates": True}


def test_gen_round_trip(capsys):
    code, out = run(capsys, "gen", "--family", "stacked", "--n", "100", "--seed", "1")
    g = io.loads(out)
    assert code == 0 and len(g) == 100
    assert io.dumps(g) == out.strip().replace(" ", "")


def test_gen_fixture_and_dot(capsys):
    code, out = run(capsys, "gen", "--family", "fixture", "--name", "fig2a", "--format", "dot")
    assert code == 0 and out.startswith("graph G {")
    assert out.count("peripheries=2") == 5


def test_color_and_stats(capsys):
    code, out = run(capsys, "color", "--family", "wheel", "--n", "6")
    assert code == 0 and len(json.loads(out)["classes"]) == 3
    code, out = run(capsys, "stats", "--family", "fixture", "--name", "octahedron")
    rep = json.loads(out)
    assert code == 0 and rep["is_triangulation"] and rep["qualifying_blocks"] == []


def test_oracle_modes(capsys):
    code, out = run(capsys, "oracle", "--family", "fixture", "--name", "octahedron", "--exact")
    assert code == 0 and json.loads(out)["gamma"] == 2
    code, out = run(capsys, "oracle", "--family", "fixture", "--name", "fig2a", "--search-reduction")
    assert code == 0 and json.loads(out) == {"step": None}
    code, out = run(capsys, "oracle", "--family", "fixture", "--name", "k4", "--verify", "2")
    assert code == 0 and json.loads(out) == {"dominates": True}
    code, out = run(capsys, "oracle", "--family", "stacked", "--n", "30", "--exact", "--budget-n", "10")
    assert code == 1 and json.loads(out)["error"] == "BudgetExceeded"


def test_domain_errors_exit_1(capsys, graph_file, tmp_path):
    code, out = run(capsys, "dominate", "--family", "wheel", "--n", "5")
    assert code == 1 and json.loads(out)["error"] == "NotTriangulation"
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, out = run(capsys, "stats", "--input", str(bad))
    assert code == 1 and json.loads(out)["error"] == "GraphFormatError"
    asym = tmp_path / "asym.json"
    asym.write_text(json.dumps({"vertices": [0, 1], "rotation": {"0": [1], "1": []}, "outer_darts": [[0, 1]]}))
    code, out = run(capsys, "stats", "--input", str(asym))
    assert code == 1 and json.loads(out)["error"] == "AsymmetricRotation"


def test_usage_error_exit_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["dominate", "--n", "x"])
    assert exc.value.code == 1


def test_defect_exit_2(capsys, monkeypatch):
    from wntdom import cli
    from wntdom.errors import BoundViolation

    def boom(g):
        raise BoundViolation("forced")

    monkeypatch.setattr(cli, "dominate", boom)
    code, out = run(capsys, "dominate", "--family", "stacked", "--n", "9")
    assert code == 2 and json.loads(out)["error"] == "BoundViolation"


def test_batch_dir(capsys, graph_file, tmp_path):
    graph_file(fixture("icosahedron"), "a.json")
    graph_file(fixture("octastack7"), "b.json")
    (tmp_path / "c.json").write_text("[]")
    code, out = run(capsys, "dominate", "--dir", str(tmp_path))
    rep = json.loads(out)["results"]
    assert [r["file"] for r in rep] == ["a.json", "b.json", "c.json"]
    assert [r["exit"] for r in rep] == [0, 0, 1] and code == 1


class TestDot:
    def test_triangle(self):
        g = build({0: [1, 2], 1: [2, 0], 2: [0, 1]}, [(0, 2)])
        assert io.export_dot(g) == "graph G {\n  0;\n  1;\n  2;\n  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n"

    def test_empty(self):
        assert io.export_dot(empty_graph()) == "graph G {\n}\n"

    def test_annotations(self):
        txt = io.export_dot(fixture("fig2a"), removed=[0], dominating=[3], external=True)
        assert "0 [style=dashed]" in txt and "3 [peripheries=2, style=filled]" in txt
