"""Test the command line interface."""

from pathlib import Path

import pytest

from pymotif import cli
from pymotif.factories import parse_instance
from pymotif.factories import parse_legend

EXAMPLE_DIMACS = "p edge 4 4\ne 1 3\ne 1 4\ne 2 3\ne 3 4\n"


@pytest.fixture
def graph_file(tmp_path: Path) -> Path:
    path = tmp_path / "example.dimacs"
    path.write_text(EXAMPLE_DIMACS, encoding="utf-8")
    return path


@pytest.fixture
def instance_file(tmp_path: Path, graph_file: Path) -> Path:
    path = tmp_path / "example.msi"
    argv = ["reduce", "--variant", "unbounded", "--k", "3"]
    assert cli.main([*argv, "--graph", str(graph_file), "--out", str(path)]) == 0
    return path


def test_reduce(
    tmp_path: Path,
    graph_file: Path,
    capsys: pytest.CaptureFixture[str],
) -> None:
    out = tmp_path / "out.msi"
    legend = tmp_path / "out.legend"

    status = cli.main(
        [
            "reduce",
            "--variant",
            "unbounded",
            "--k",
            "3",
            "--graph",
            str(graph_file),
            "--out",
            str(out),
            "--legend",
            str(legend),
        ],
    )

    assert status == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "variant unbounded n 4 m 4 k 3"
    assert lines[1] == "strings 3 length 4 distance 1 alphabet 8"
    assert parse_instance(out.read_text(encoding="utf-8")).count == 3
    assert parse_legend(legend.read_text(encoding="utf-8")).alphabet_size == 8


def test_reduce_binary(
    tmp_path: Path,
    graph_file: Path,
    capsys: pytest.CaptureFixture[str],
) -> None:
    out = tmp_path / "binary.msi"
    argv = ["reduce", "--variant", "binary", "--k", "3", "--graph", str(graph_file)]

    assert cli.main([*argv, "--out", str(out)]) == 0
    assert "strings 4 length 480 distance 9 alphabet 2" in capsys.readouterr().out


def test_reduce_legend_needs_unbounded(tmp_path: Path, graph_file: Path) -> None:
    status = cli.main(
        [
            "reduce",
            "--variant",
            "binary",
            "--k",
            "3",
            "--graph",
            str(graph_file),
            "--out",
            str(tmp_path / "x.msi"),
            "--legend",
            str(tmp_path / "x.legend"),
        ],
    )

    assert status == cli.EXIT_USAGE


def test_reduce_small_k(tmp_path: Path, graph_file: Path) -> None:
    argv = ["reduce", "--variant", "binary", "--k", "2", "--graph", str(graph_file)]

    assert cli.main([*argv, "--out", str(tmp_path / "x.msi")]) == cli.EXIT_USAGE


def test_reduce_malformed_graph(
    tmp_path: Path,
    capsys: pytest.CaptureFixture[str],
) -> None:
    graph = tmp_path / "bad.dimacs"
    graph.write_text("p edge 2 1\ne 1 1\n", encoding="utf-8")
    argv = ["reduce", "--variant", "unbounded", "--k", "3", "--graph", str(graph)]

    status = cli.main([*argv, "--out", str(tmp_path / "x.msi")])

    assert status == cli.EXIT_DATAERR
    assert "line 2: Self-loop" in capsys.readouterr().err


def test_missing_graph_file(tmp_path: Path) -> None:
    argv = ["clique", "--k", "3", "--graph", str(tmp_path / "missing.dimacs")]

    assert cli.main(argv) == cli.EXIT_USAGE


def test_solve(instance_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
    capsys.readouterr()

    status = cli.main(["solve", "--in", str(instance_file)])

    assert status == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "SAT"
    assert lines[1].startswith("center ")
    assert lines[3] == "# aggregate 1"


def test_solve_writes_report(
    tmp_path: Path,
    instance_file: Path,
    capsys: pytest.CaptureFixture[str],
) -> None:
    capsys.readouterr()
    report = tmp_path / "report.txt"

    cli.main(["solve", "--in", str(instance_file), "--out", str(report)])

    assert report.read_text(encoding="utf-8") == capsys.readouterr().out


def test_solve_threads_are_deterministic(
    instance_file: Path,
    capsys: pytest.CaptureFixture[str],
) -> None:
    capsys.readouterr()
    cli.main(["solve", "--in", str(instance_file), "--threads", "1"])
    single = capsys.readouterr().out
    cli.main(["solve", "--in", str(instance_file), "--threads", "8"])

    assert capsys.readouterr().out == single


def test_solve_unsat(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    path = tmp_path / "unsat.msi"
    path.write_text("MSI max 2 2 2 0\n0 1 0\n1 1 1\n", encoding="utf-8")

    assert cli.main(["solve", "--in", str(path)]) == 1
    assert capsys.readouterr().out.startswith("UNSAT\n")


def test_solve_naive(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    path = tmp_path / "toy.msi"
    path.write_text("MSI sum 2 2 2 1\n0 1 0\n1 1 1\n", encoding="utf-8")

    assert cli.main(["solve", "--in", str(path), "--naive"]) == 0
    assert "# leaf_strategy naive" in capsys.readouterr().out


def test_solve_naive_cap(tmp_path: Path) -> None:
    path = tmp_path / "toy.msi"
    path.write_text("MSI sum 2 2 2 1\n0 1 0\n1 1 1\n", encoding="utf-8")

    argv = ["solve", "--in", str(path), "--naive", "--naive-cap", "2"]

    assert cli.main(argv) == cli.EXIT_SOFTWARE


def test_solve_malformed(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    path = tmp_path / "bad.msi"
    path.write_text("MSI max 2 1 1 0\n0 5\n", encoding="utf-8")

    assert cli.main(["solve", "--in", str(path)]) == cli.EXIT_DATAERR
    assert "line 2, column 2" in capsys.readouterr().err


def test_clique(graph_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.main(["clique", "--k", "3", "--graph", str(graph_file)]) == 0
    assert capsys.readouterr().out == "{1,3,4}\n"


def test_no_clique(graph_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.main(["clique", "--k", "4", "--graph", str(graph_file)]) == 1
    assert capsys.readouterr().out == "no 4-clique\n"


def test_clique_size(graph_file: Path) -> None:
    argv = ["clique", "--k", "0", "--graph", str(graph_file)]

    assert cli.main(argv) == cli.EXIT_USAGE


def test_verify_graph(graph_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
    argv = ["verify", "--variant", "unbounded", "--k", "3", "--graph", str(graph_file)]

    assert cli.main(argv) == 0
    assert capsys.readouterr().out == "0 pass {1,3,4} SAT 1\n1 pass / 0 fail\n"


def test_verify_inconclusive(
    graph_file: Path,
    capsys: pytest.CaptureFixture[str],
) -> None:
    argv = ["verify", "--variant", "binary", "--k", "3", "--graph", str(graph_file)]

    assert cli.main([*argv, "--node-cap", "1"]) == cli.EXIT_SOFTWARE
    assert "# node_cap of 1 exceeded" in capsys.readouterr().out


def test_verify_exhaustive(capsys: pytest.CaptureFixture[str]) -> None:
    argv = ["verify", "--variant", "unbounded", "--k", "3", "--exhaustive-n", "3"]

    assert cli.main(argv) == 0
    assert capsys.readouterr().out.endswith("8 pass / 0 fail\n")


def test_verify_random(capsys: pytest.CaptureFixture[str]) -> None:
    argv = ["verify", "--variant", "unbounded", "--k", "3", "--random", "3"]

    assert cli.main([*argv, "--n", "4", "--seed", "5"]) == 0
    assert "# seed 5" in capsys.readouterr().out


def test_verify_random_needs_n() -> None:
    argv = ["verify", "--variant", "unbounded", "--k", "3", "--random", "3"]

    assert cli.main(argv) == cli.EXIT_USAGE


def test_selftest(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.main(["selftest"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 12
    assert all(line.startswith("ok ") for line in lines)


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["reduce", "--variant", "ternary", "--k", "3", "--graph", "g", "--out", "o"],
        ["verify", "--variant", "binary", "--k", "3"],
        ["solve", "--in", "x", "--threads", "many"],
    ],
)
def test_usage_errors(argv: list) -> None:
    with pytest.raises(SystemExit) as excinfo:
        cli.main(argv)

    assert excinfo.value.code == cli.EXIT_USAGE


def test_solver_option_validation(instance_file: Path) -> None:
    argv = ["solve", "--in", str(instance_file), "--threads", "0"]

    assert cli.main(argv) == cli.EXIT_USAGE


def test_version(capsys: pytest.CaptureFixture[str]) -> None:
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["--version"])

    assert excinfo.value.code == 0
    assert capsys.readouterr().out.strip()
