import csv
import json

import pytest

from click.testing import CliRunner

from app.cli import cli
from app.field import load_field


@pytest.fixture
def runner():
    return CliRunner()


def test_compute_two_peaks(runner, tmp_path):
    graph_path = tmp_path / "graph.json"
    dot_path = tmp_path / "graph.dot"
    cover_path = tmp_path / "cover.json"

    result = runner.invoke(
        cli,
        [
            "compute", "--pattern", "two_peaks", "--size", "128", "--slices", "16",
            "--simplify", "--json", str(graph_path), "--dot", str(dot_path),
            "--cover-json", str(cover_path),
        ],
    )

    assert result.exit_code == 0, result.output
    assert "tree=yes" in result.output
    assert "cycle_rank=0" in result.output
    assert "weights" in json.loads(graph_path.read_text())
    assert dot_path.read_text().startswith("graph mapper {")
    assert len(json.loads(cover_path.read_text())["intervals"]) == 16


def test_compute_ring_reports_cycle(runner, tmp_path):
    prefix = tmp_path / "ring"
    assert runner.invoke(
        cli, ["generate", "--pattern", "ring_gradient", "--size", "128", "--out", str(prefix)]
    ).exit_code == 0

    result = runner.invoke(
        cli, ["compute", "--input", str(prefix.with_suffix(".csv")), "--slices", "8"]
    )

    assert result.exit_code == 0, result.output
    assert "tree=no" in result.output
    assert "cycle_rank=0" not in result.output


@pytest.mark.parametrize("mode", ["contour", "join", "split"])
def test_compute_modes(runner, mode):
    result = runner.invoke(
        cli, ["compute", "--pattern", "saddle", "--size", "32", "--mode", mode]
    )
    assert result.exit_code == 0, result.output
    assert "nodes=" in result.output


def test_compute_zero_slices(runner):
    result = runner.invoke(cli, ["compute", "--pattern", "saddle", "--slices", "0"])
    assert result.exit_code != 0
    assert "n_slices must be positive" in result.output


def test_compute_needs_one_source(runner, tmp_path):
    assert runner.invoke(cli, ["compute"]).exit_code != 0
    result = runner.invoke(
        cli, ["compute", "--pattern", "saddle", "--input", str(tmp_path / "x.csv")]
    )
    assert result.exit_code != 0


def test_compute_unreadable_input(runner, tmp_path):
    path = tmp_path / "field.bin"
    path.write_bytes(b"\x00")
    result = runner.invoke(cli, ["compute", "--input", str(path)])
    assert result.exit_code == 1
    assert "Unsupported field format" in result.output


def test_multires_pass(runner, tmp_path):
    result = runner.invoke(
        cli,
        [
            "multires", "--pattern", "two_peaks", "--size", "128",
            "--slices", "2,4,8,16", "--out-dir", str(tmp_path),
        ],
    )

    assert result.exit_code == 0, result.output
    assert result.output.count("PASS") == 3
    assert sorted(p.name for p in tmp_path.iterdir()) == [
        "mapper_16.json", "mapper_2.json", "mapper_4.json", "mapper_8.json",
    ]


def test_multires_perlin_coarse_covers(runner, tmp_path):
    result = runner.invoke(
        cli,
        [
            "multires", "--pattern", "perlin", "--size", "128",
            "--slices", "2,4", "--out-dir", str(tmp_path),
        ],
    )

    assert result.exit_code == 0, result.output
    assert "2 -> 4: PASS" in result.output


def test_multires_single(runner):
    result = runner.invoke(cli, ["multires", "--pattern", "saddle", "--size", "32", "--slices", "4"])
    assert result.exit_code == 0
    assert "->" not in result.output


def test_multires_skip(runner):
    result = runner.invoke(
        cli, ["multires", "--pattern", "saddle", "--size", "32", "--slices", "3,4"]
    )
    assert result.exit_code == 0
    assert "3 -> 4: SKIP" in result.output


def test_multires_bad_slices(runner):
    result = runner.invoke(cli, ["multires", "--pattern", "saddle", "--slices", "2,x"])
    assert result.exit_code == 2


@pytest.mark.parametrize("mode", ["contour", "join"])
def test_tree_isomorphic(runner, mode):
    result = runner.invoke(
        cli, ["tree", "--pattern", "two_peaks", "--size", "64", "--mode", mode]
    )
    assert result.exit_code == 0, result.output
    assert "ISOMORPHIC" in result.output
    assert "NOT-ISOMORPHIC" not in result.output


def test_tree_writes_graph(runner, tmp_path):
    path = tmp_path / "tree.json"
    result = runner.invoke(
        cli, ["tree", "--pattern", "saddle", "--size", "64", "--json", str(path)]
    )
    assert result.exit_code == 0, result.output
    assert json.loads(path.read_text())["nodes"]


def test_generate(runner, tmp_path):
    prefix = tmp_path / "out" / "saddle"

    result = runner.invoke(
        cli, ["generate", "--pattern", "saddle", "--size", "2", "--out", str(prefix)]
    )

    assert result.exit_code == 0, result.output
    pgm = load_field(prefix.with_suffix(".pgm"))
    assert (pgm.width, pgm.height) == (2, 2)
    first = prefix.with_suffix(".csv").read_text()
    runner.invoke(cli, ["generate", "--pattern", "saddle", "--size", "2", "--out", str(prefix)])
    assert prefix.with_suffix(".csv").read_text() == first


def test_generate_unknown_pattern(runner, tmp_path):
    result = runner.invoke(
        cli, ["generate", "--pattern", "spiral", "--out", str(tmp_path / "x")]
    )
    assert result.exit_code == 2


def test_bench_small(runner, tmp_path):
    output = tmp_path / "bench.csv"

    result = runner.invoke(
        cli,
        [
            "bench", "--sizes", "16,32", "--slices", "4,8", "--repeats", "1",
            "--patterns", "bench1,bench4", "--output", str(output),
        ],
    )

    assert result.exit_code == 0, result.output
    rows = list(csv.reader(output.open()))
    assert rows[0] == ["pattern", "size", "slices", "mapper_ms", "ctree_ms"]
    mapper_rows = [r for r in rows[1:] if r[3]]
    ctree_rows = [r for r in rows[1:] if r[4]]
    assert len(mapper_rows) == 2 * 2 * 2
    assert len(ctree_rows) == 2 * 2


def test_bench_max_size(runner, tmp_path):
    output = tmp_path / "bench.csv"
    result = runner.invoke(
        cli,
        [
            "bench", "--sizes", "16,64", "--slices", "4", "--repeats", "1",
            "--patterns", "bench2", "--max-size", "32", "--no-ctree", "--output", str(output),
        ],
    )
    assert result.exit_code == 0, result.output
    rows = list(csv.reader(output.open()))[1:]
    assert [r[1] for r in rows] == ["16"]


def test_bench_unknown_pattern(runner, tmp_path):
    result = runner.invoke(
        cli, ["bench", "--patterns", "bench9", "--output", str(tmp_path / "b.csv")]
    )
    assert result.exit_code == 2
