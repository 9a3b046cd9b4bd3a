import json

import pytest

from netspectra import Graph, write_edge_list
from netspectra.cli import main

from helpers import path_graph, star_graph


def write_graph(tmp_path, g, name="graph.txt"):
    p = tmp_path / name
    p.write_text(write_edge_list(g))
    return p


def get_field(out, label):
    for line in out.splitlines():
        if line.startswith(label + ":"):
            return line.split(":", 1)[1].strip()
    raise AssertionError(f"no line {label!r} in output:\n{out}")


def test_analyze_star(tmp_path, capsys):
    path = write_graph(tmp_path, star_graph(5))
    assert main(["analyze", str(path)]) == 0
    out = capsys.readouterr().out
    assert get_field(out, "nodes") == "5"
    assert get_field(out, "edges") == "4"
    assert float(get_field(out, "spectral radius")) == pytest.approx(2.0, abs=1e-8)
    assert float(get_field(out, "lambda ratio")) == pytest.approx(1.25, abs=1e-8)
    assert float(get_field(out, "degree cv")) == pytest.approx(0.75)
    assert get_field(out, "shifted") == "no"


def test_analyze_regular_graph_reports_unit_ratio(tmp_path, capsys):
    g = Graph(4)
    for u, v in ((0, 1), (1, 2), (2, 3), (3, 0)):
        g.add_edge(u, v)
    path = write_graph(tmp_path, g)
    assert main(["analyze", str(path)]) == 0
    out = capsys.readouterr().out
    assert get_field(out, "lambda ratio") == "1.0"


def test_analyze_missing_file(tmp_path, capsys):
    assert main(["analyze", str(tmp_path / "nope.txt")]) == 2
    assert "cannot read" in capsys.readouterr().err


def test_analyze_malformed_file(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("0 1\n0 1 2\n")
    assert main(["analyze", str(path)]) == 2
    assert "line 2" in capsys.readouterr().err


def test_analyze_self_loop_file(tmp_path, capsys):
    path = tmp_path / "loop.txt"
    path.write_text("0 0\n")
    assert main(["analyze", str(path)]) == 2


def test_analyze_edgeless_graph(tmp_path, capsys):
    path = tmp_path / "empty.txt"
    path.write_text("# nodes: 3\n")
    assert main(["analyze", str(path)]) == 0
    out = capsys.readouterr().out
    assert "undefined (no edges)" in out


def test_analyze_nonconvergence_exits_3(tmp_path, capsys):
    path = write_graph(tmp_path, path_graph(3))
    assert main(["analyze", str(path), "--max-iterations", "1"]) == 3
    captured = capsys.readouterr()
    assert "not converged" in captured.out
    assert "did not converge" in captured.err


def test_ba_outputs(tmp_path, capsys):
    out_dir = tmp_path / "out"
    code = main(
        ["ba", "--total", "30", "--links", "2", "--runs", "2", "--seed", "7",
         "--out", str(out_dir)]
    )
    assert code == 0
    csv_text = (out_dir / "ba_timeseries.csv").read_text()
    lines = csv_text.splitlines()
    assert lines[0] == "step,node_count,edge_count,lambda_ratio,cv"
    assert len(lines) == 1 + 28  # steps 2..29
    assert lines[1].split(",")[0] == "2"

    summary = json.loads((out_dir / "ba_summary.json").read_text())
    assert summary["model"] == "ba"
    assert summary["config"] == {
        "initial_nodes": 3, "total_nodes": 30, "links_per_node": 2,
    }
    assert summary["runs"] == 2
    assert summary["master_seed"] == 7
    assert summary["rng"] == "numpy-PCG64"
    assert summary["power"]["tolerance"] == 1e-10
    assert summary["results"]["mean_lambda_ratio"] > 1.0
    assert 0.9 <= summary["results"]["mean_correlation"] <= 1.0


def test_ba_deterministic_across_invocations(tmp_path):
    args = ["ba", "--total", "25", "--links", "2", "--runs", "2", "--seed", "5"]
    dir_a, dir_b = tmp_path / "a", tmp_path / "b"
    assert main(args + ["--out", str(dir_a)]) == 0
    assert main(args + ["--out", str(dir_b)]) == 0
    for name in ("ba_timeseries.csv", "ba_summary.json"):
        assert (dir_a / name).read_bytes() == (dir_b / name).read_bytes()


def test_ws_outputs(tmp_path, capsys):
    out_dir = tmp_path / "out"
    code = main(
        ["ws", "--ring", "10", "--beta", "0.5", "--runs", "2", "--seed", "3",
         "--out", str(out_dir)]
    )
    assert code == 0
    lines = (out_dir / "ws_timeseries.csv").read_text().splitlines()
    assert lines[0] == "step,node_count,edge_count,lambda_ratio,cv"
    # first data row is the pristine lattice
    assert lines[1] == "0,20,40,1.0,0.0"

    summary = json.loads((out_dir / "ws_summary.json").read_text())
    assert summary["model"] == "ws"
    assert summary["config"] == {"nodes_per_ring": 10, "rewiring_probability": 0.5}
    assert summary["results"]["mean_lambda_ratio"] > 1.0


def test_ws_beta_zero_summary(tmp_path):
    out_dir = tmp_path / "out"
    code = main(
        ["ws", "--ring", "8", "--beta", "0", "--runs", "3", "--seed", "1",
         "--out", str(out_dir)]
    )
    assert code == 0
    summary = json.loads((out_dir / "ws_summary.json").read_text())
    assert summary["results"]["mean_lambda_ratio"] == 1.0
    assert summary["results"]["mean_cv"] == 0.0
    assert summary["results"]["mean_correlation"] is None
    lines = (out_dir / "ws_timeseries.csv").read_text().splitlines()
    assert lines[1:] == ["0,16,32,1.0,0.0"]


def test_sweep_ba(tmp_path, capsys):
    out_dir = tmp_path / "out"
    code = main(
        ["sweep", "--model", "ba", "--values", "2,3", "--initial", "3",
         "--total", "25", "--runs", "2", "--seed", "5", "--out", str(out_dir)]
    )
    assert code == 0
    lines = (out_dir / "sweep_ba.csv").read_text().splitlines()
    assert lines[0] == "param,mean_lambda_ratio,mean_cv,mean_correlation,runs"
    assert len(lines) == 3
    assert lines[1].startswith("2.0,")
    assert lines[2].startswith("3.0,")

    summary = json.loads((out_dir / "sweep_ba_summary.json").read_text())
    assert [row["param"] for row in summary["rows"]] == [2.0, 3.0]
    assert summary["sweep"] == [2.0, 3.0]
    assert summary["master_seed"] == 5


def test_sweep_ws_zero_beta_has_empty_correlation(tmp_path):
    out_dir = tmp_path / "out"
    code = main(
        ["sweep", "--model", "ws", "--values", "0.0,1.0", "--ring", "8",
         "--runs", "2", "--seed", "5", "--out", str(out_dir)]
    )
    assert code == 0
    lines = (out_dir / "sweep_ws.csv").read_text().splitlines()
    assert lines[1] == "0.0,1.0,0.0,,2"
    summary = json.loads((out_dir / "sweep_ws_summary.json").read_text())
    assert summary["rows"][0]["mean_correlation"] is None


def test_usage_errors_exit_1(tmp_path, capsys):
    # argparse-level: missing required flag
    with pytest.raises(SystemExit) as exc:
        main(["ba", "--links", "2"])
    assert exc.value.code == 1
    # argparse-level: no subcommand
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 1
    # config-level: values out of range
    assert main(["ws", "--ring", "8", "--beta", "1.5", "--seed", "1"]) == 1
    assert main(["ba", "--total", "2", "--links", "1", "--initial", "3", "--seed", "1"]) == 1
    assert main(["ba", "--total", "10", "--links", "2", "--runs", "0", "--seed", "1"]) == 1
    # sweep-level: unusable values
    assert main(["sweep", "--model", "ba", "--values", "x,y", "--initial", "3",
                 "--total", "10", "--seed", "1"]) == 1
    assert main(["sweep", "--model", "ws", "--values", "0.5", "--seed", "1"]) == 1
    assert main(["sweep", "--model", "ba", "--values", "2.5", "--initial", "3",
                 "--total", "10", "--seed", "1", "--out", str(tmp_path)]) == 1


def test_generated_seed_is_printed(tmp_path, capsys):
    code = main(["ws", "--ring", "6", "--beta", "0", "--runs", "1",
                 "--out", str(tmp_path)])
    assert code == 0
    out = capsys.readouterr().out
    assert "master seed (generated):" in out
    seed = int(get_field(out, "master seed (generated)"))
    summary = json.loads((tmp_path / "ws_summary.json").read_text())
    assert summary["master_seed"] == seed
