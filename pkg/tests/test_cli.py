import json

import pytest

from twoended.cli import main


@pytest.fixture
def config(tmp_path):
    path = tmp_path / "run.json"
    path.write_text(
        json.dumps(
            {
                "delta": "cyclic:2",
                "quotient": "Z",
                "generators": [[1, 0, 0], [0, 1, 0], [0, -1, 0], [1, 1, 0], [1, -1, 0]],
                "N": 48,
            }
        )
    )
    return path


def test_color_report(config, capsys):
    assert main(["color", "--config", str(config), "--verify"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert (report["d"], report["d_0"], report["k"], report["deg_H"]) == (5, 1, 2, 4)
    assert report["proper"] and report["within_bound"]
    assert {"colors_used", "sparse_edges", "runtime_ms"} <= set(report)


def test_color_emit_and_verify(config, tmp_path, capsys):
    out = tmp_path / "coloring.json"
    assert main(["color", "--config", str(config), "--n", "10", "--emit", "json", "--output", str(out)]) == 0
    capsys.readouterr()
    doc = json.loads(out.read_text())
    assert doc["vertices"] == 20 and len(doc["edges"]) == 50
    assert main(["verify", "--graph", str(out)]) == 0
    assert json.loads(capsys.readouterr().out)["proper"]

    # break the coloring: give every edge color 1
    doc["edges"] = [[u, v, 1] for u, v, _ in doc["edges"]]
    out.write_text(json.dumps(doc))
    assert main(["verify", "--graph", str(out)]) == 1
    assert json.loads(capsys.readouterr().out)["witness"] is not None


def test_verify_separate_coloring(tmp_path, capsys):
    g = tmp_path / "g.json"
    c = tmp_path / "c.json"
    g.write_text(json.dumps({"vertices": 5, "edges": [[i, (i + 1) % 5] for i in range(5)]}))
    c.write_text(json.dumps({"colors": [1, 2, 1, 2, 3]}))
    assert main(["verify", "--graph", str(g), "--coloring", str(c), "--oracle-budget", "16"]) == 0
    assert json.loads(capsys.readouterr().out)["chromatic_index"] == 3


def test_color_dot_to_stdout(config, capsys):
    assert main(["color", "--config", str(config), "--n", "6", "--emit", "dot"]) == 0
    captured = capsys.readouterr()
    assert captured.out.startswith("graph G {")
    assert json.loads(captured.err)["d"] == 5


def test_oracle_budget(tmp_path, capsys):
    path = tmp_path / "line.json"
    path.write_text(json.dumps({"delta": "trivial", "generators": [[0, 1, 0], [0, -1, 0]], "N": 7}))
    assert main(["color", "--config", str(path), "--verify", "--oracle-budget", "16"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["chromatic_index"] == 3 == report["colors_used"]


def test_batch(tmp_path, capsys):
    path = tmp_path / "batch.json"
    runs = [
        {"delta": "trivial", "generators": [[0, 1, 0], [0, -1, 0]], "N": 8},
        {"delta": "cyclic:3", "quotient": "Dinf", "alpha": [0, 2, 1],
         "generators": [[0, 0, 1], [0, 1, 0], [0, -1, 0]], "N": 8},
    ]
    path.write_text(json.dumps({"runs": runs}))
    assert main(["color", "--config", str(path), "--verify"]) == 0
    reports = json.loads(capsys.readouterr().out)
    assert [r["quotient"] for r in reports] == ["Z", "Dinf"]


def test_table_delta(tmp_path, capsys):
    path = tmp_path / "t.json"
    path.write_text(json.dumps({
        "delta": {"order": 2, "table": [[0, 1], [1, 0]]},
        "generators": [[1, 0, 0], [0, 1, 0], [0, -1, 0]],
        "N": 8,
    }))
    assert main(["color", "--config", str(path), "--verify"]) == 0


def test_engine_z(tmp_path, capsys):
    assert main(["engine-z", "--n", "100", "--gens", "1,2,3", "--output", str(tmp_path / "h.json")]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["k"] == 3 and report["colors_used"] <= 7
    assert {"sparse_edge_count", "proper"} <= set(report)
    assert main(["verify", "--graph", str(tmp_path / "h.json")]) == 0


def test_engine_dinf(capsys):
    assert main(["engine-dinf", "--m", "24", "--reflections", "1", "--gens", "1,2"]) == 0
    captured = capsys.readouterr()
    assert json.loads(captured.out)["vertices"] == 48
    report = json.loads(captured.err)
    assert report["deg_H"] == 5 and report["colors_used"] <= 6


def test_vizing_cmd(tmp_path, capsys):
    g = tmp_path / "k4.json"
    g.write_text(json.dumps({"vertices": 4, "edges": [[a, b] for a in range(4) for b in range(a + 1, 4)]}))
    assert main(["vizing", "--graph", str(g), "--output", str(tmp_path / "out.json")]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["proper"] and report["colors_used"] <= 4


def test_errors_exit_2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"delta": "cyclic:2", "generators": [[0, 1, 0]], "N": 8}))
    assert main(["color", "--config", str(path)]) == 2
    assert "inverse" in capsys.readouterr().err
    path.write_text(json.dumps({"delta": "trivial", "generators": [[0, 2, 0], [0, -2, 0]], "N": 4}))
    assert main(["color", "--config", str(path)]) == 2
    assert "minimal admissible size is 5" in capsys.readouterr().err
    assert main(["engine-z", "--n", "5", "--gens", "3"]) == 2
    assert main(["verify", "--graph", str(tmp_path / "missing.json")]) == 2
