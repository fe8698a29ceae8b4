"""CLI behavior: JSON records, exit codes, determinism, DOT output."""

import json

import pytest

from qudo.cli import main

SINGLE_EDGE = "n 2\n0 1 1\n"
TRIANGLE = "n 3\n0 1 1\n1 2 1\n0 2 1\n"
DISJOINT_EDGES = "n 4\n0 1 1\n2 3 1\n"


@pytest.fixture
def graph_file(tmp_path):
    def write(text, name="graph.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, argv):
    code, out, err = run_cli(capsys, argv)
    assert code == 0, err
    return json.loads(out)


class TestEnergyCommand:
    def test_d3_differing_labels(self, capsys, graph_file):
        record = run_json(capsys, ["energy", graph_file(SINGLE_EDGE), "01", "-d", "3"])
        assert record["results"]["energy"] == -0.5
        assert record["results"]["cut_value"] == 1
        assert record["schema_version"] == 1
        assert record["command"] == "energy"

    def test_d2_same_labels(self, capsys, graph_file):
        record = run_json(capsys, ["energy", graph_file(SINGLE_EDGE), "00"])
        assert record["results"]["energy"] == 1
        assert record["results"]["cut_value"] == 0

    def test_d4_opposite_labels(self, capsys, graph_file):
        record = run_json(capsys, ["energy", graph_file(SINGLE_EDGE), "02", "-d", "4"])
        assert record["results"]["energy"] == -1
        assert record["results"]["cut_value"] == 1

    def test_arity_mismatch_fails(self, capsys, graph_file):
        code, _, err = run_cli(capsys, ["energy", graph_file(SINGLE_EDGE), "02"])
        assert code != 0
        assert err.strip().startswith("error:")


class TestSolveCommand:
    def test_triangle_d3(self, capsys, graph_file):
        record = run_json(capsys, ["solve", graph_file(TRIANGLE), "-d", "3"])
        results = record["results"]
        assert results["ground_energy"] == -1.5
        assert results["num_ground_states"] == 6
        assert len(results["ground_states"]) == 6

    def test_decompose_disjoint_edges(self, capsys, graph_file):
        record = run_json(
            capsys, ["solve", graph_file(DISJOINT_EDGES), "--decompose"]
        )
        results = record["results"]
        assert results["component_count"] == 2
        assert results["num_ground_states"] == 4
        assert results["independent_vertex_set"] == [2, 3]

    def test_decompose_alias(self, capsys, graph_file):
        record = run_json(capsys, ["decompose", graph_file(DISJOINT_EDGES)])
        assert record["results"]["component_count"] == 2

    def test_decompose_rejects_d3(self, capsys, graph_file):
        code, _, err = run_cli(
            capsys, ["solve", graph_file(TRIANGLE), "-d", "3", "--decompose"]
        )
        assert code != 0
        assert "binary-only" in err

    def test_decompose_rejects_fields(self, capsys, graph_file):
        path = graph_file("n 2\n0 1 1\nh 0 0.5\n")
        code, _, err = run_cli(capsys, ["solve", path, "--decompose"])
        assert code != 0
        assert "field" in err

    def test_dot_output(self, capsys, graph_file, tmp_path):
        dot_path = tmp_path / "out.dot"
        record = run_json(
            capsys, ["solve", graph_file(SINGLE_EDGE), "--dot", str(dot_path)]
        )
        assert record["results"]["dot_path"] == str(dot_path)
        dot = dot_path.read_text()
        colors = [line.split('"')[1] for line in dot.splitlines() if "fillcolor" in line]
        assert len(colors) == 2 and len(set(colors)) == 2

    def test_json_graph_input(self, capsys, graph_file):
        path = graph_file(
            json.dumps({"n": 2, "edges": [[0, 1, 5.0]]}), name="graph.json"
        )
        record = run_json(capsys, ["solve", path])
        assert record["results"]["ground_energy"] == -5.0


class TestQaoaCommand:
    def test_optimized_single_edge(self, capsys, graph_file):
        record = run_json(
            capsys, ["qaoa", graph_file(SINGLE_EDGE), "--p", "1", "--seed", "0"]
        )
        results = record["results"]
        assert results["expectation"] <= -1.0 + 1e-6
        assert results["ground_energy"] == -1.0
        assert results["ground_state_probability"] > 0.99
        assert sum(results["counts"].values()) == 1024
        assert results["optimizer"]["evaluations"] > 0

    def test_fixed_angles_skip_optimization(self, capsys, graph_file):
        record = run_json(
            capsys,
            ["qaoa", graph_file(SINGLE_EDGE), "--gamma", "0", "--beta", "0"],
        )
        assert record["results"]["expectation"] == pytest.approx(0.0, abs=1e-12)
        assert record["results"]["optimizer"] is None

    def test_gate_path_agrees(self, capsys, graph_file):
        base = ["qaoa", graph_file(SINGLE_EDGE), "--gamma", "0.4", "--beta", "0.3"]
        plain = run_json(capsys, base)
        gates = run_json(capsys, base + ["--gate-path"])
        assert plain["results"]["expectation"] == pytest.approx(
            gates["results"]["expectation"], abs=1e-10
        )

    def test_mismatched_angle_lists_fail(self, capsys, graph_file):
        code, _, err = run_cli(
            capsys,
            ["qaoa", graph_file(SINGLE_EDGE), "--gamma", "0.1,0.2", "--beta", "0.3"],
        )
        assert code != 0
        assert "error:" in err

    def test_deterministic_records(self, capsys, graph_file):
        argv = ["qaoa", graph_file(TRIANGLE), "-d", "3", "--p", "2", "--seed", "11"]
        first = run_json(capsys, argv)
        second = run_json(capsys, argv)
        first.pop("wall_time_s")
        second.pop("wall_time_s")
        assert json.dumps(first, sort_keys=True) == json.dumps(second, sort_keys=True)


class TestDiagnostics:
    def test_parse_error_exit_code(self, capsys, graph_file):
        code, out, err = run_cli(capsys, ["solve", graph_file("n 2\n0 0 1\n")])
        assert code == 2
        assert out == ""
        assert len(err.strip().splitlines()) == 1
        assert "self-loop" in err

    def test_missing_file(self, capsys):
        code, _, err = run_cli(capsys, ["solve", "/nonexistent/path.txt"])
        assert code == 2
        assert "error:" in err

    def test_size_guard_exceeded(self, capsys, graph_file):
        code, _, err = run_cli(capsys, ["solve", graph_file("n 30\n0 1 1\n")])
        assert code == 2
        assert "exceeds" in err

    def test_nonpositive_weight_warning(self, capsys, graph_file):
        path = graph_file("n 2\n0 1 -1\n")
        code, _, err = run_cli(capsys, ["solve", path])
        assert code == 0
        assert "warning" in err
