"""End-to-end checks of the command-line tool (needs SBAPLACE_CLI)."""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("SBAPLACE_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="SBAPLACE_CLI not set")


def run(*args, check=True):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    if check and proc.returncode != 0:
        raise AssertionError(
            f"{args} exited {proc.returncode}\nstdout: {proc.stdout}\nstderr: {proc.stderr}"
        )
    return proc


def test_gen_and_validate(tmp_path):
    path = tmp_path / "g4.json"
    run("gen", "--preset", "G4", "-o", str(path))
    doc = json.loads(path.read_text())
    assert doc["version"] == 1
    assert len(doc["nodes"]) == 11
    assert len(doc["edges"]) == 22

    out = run("validate", str(path)).stdout
    assert "11 nodes" in out
    assert "254" in out


def test_solve_with_zero_fraction_is_free(tmp_path):
    path = tmp_path / "g7.json"
    run("gen", "--preset", "G7", "-o", str(path))
    out = run("solve", "--solver", "bpso", "--hq-frac", "0", str(path)).stdout
    assert "total:        0" in out


def test_exact_guard_rejects_large_instances(tmp_path):
    path = tmp_path / "big.txt"
    lines = ["31 0"] + [f"{i} 1" for i in range(31)]
    path.write_text("\n".join(lines) + "\n")
    proc = run("exact", str(path), check=False)
    assert proc.returncode != 0
    assert "31" in proc.stderr


def test_unknown_subcommand_exits_2():
    proc = run("frobnicate", check=False)
    assert proc.returncode == 2
    assert "Usage" in proc.stderr or "Subcommand" in proc.stderr


def test_bench_and_report(tmp_path):
    config = {
        "hq_fractions": [0.3, 0.6],
        "repetitions": 2,
        "instances": {
            "generated": [
                {"name": "tiny", "nodes": 6, "edges": 7, "total_hosting": 30, "seed": 3}
            ]
        },
        "solvers": [
            {"name": "exact"},
            {"name": "bpso", "config": {"swarm_size": 6, "max_iters": 10}},
            {"name": "greedy"},
        ],
    }
    config_path = tmp_path / "bench.json"
    config_path.write_text(json.dumps(config))
    csv_path = tmp_path / "out.csv"

    run("bench", "--config", str(config_path), "-o", str(csv_path))
    lines = csv_path.read_text().strip().splitlines()
    assert len(lines) == 1 + 2 * (1 + 2 + 1)  # header + cells
    assert lines[0].startswith("instance,n,edges,")

    report = run("report", str(csv_path)).stdout
    assert "exact" in report
    assert "bpso" in report
    assert "greedy" in report

    plot_dir = tmp_path / "plots"
    run("report", str(csv_path), "--plot-dir", str(plot_dir))
    assert (plot_dir / "tiny_cost.dat").exists()
    assert (plot_dir / "tiny_time.dat").exists()


def test_validate_rejects_broken_files(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("2 1\n0 1\n1 2\n1 1 4.0\n")  # self-loop
    proc = run("validate", str(bad), check=False)
    assert proc.returncode == 1
    assert "self-loop" in proc.stderr
