"""
Tests for the Flask CLI application.
"""
import os
import sys

import pandas as pd
import pytest
from flask.testing import FlaskCliRunner

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from cli import app


@pytest.fixture
def cli_runner():
    """Fixture to provide a CLI runner for testing Flask CLI commands."""
    return FlaskCliRunner(app)


def test_commands_are_listed(cli_runner):
    result = cli_runner.invoke(args=["--help"])

    assert result.exit_code == 0
    for command in ("atom-probe", "polymax-bound", "mp-hist", "crossing-count", "maxeig-scan", "mineig-scan",
                    "bridge-sim"):
        assert command in result.output


def test_crossing_count(cli_runner, tmp_path):
    out = str(tmp_path / "crossing.csv")
    result = cli_runner.invoke(args=["crossing-count", "--n", "4,8", "--out", out])

    assert result.exit_code == 0, result.output
    assert f"saved to: {out}" in result.output
    frame = pd.read_csv(out)
    assert frame["N [1]"].tolist() == [4, 8]
    assert frame["count_pow2 [1]"].tolist() == [28, 120]
    with open(f"{out}.meta") as fd:
        meta = fd.read()
    assert "experiment: crossing-count" in meta
    assert "ns: 4,8" in meta


def test_json_output(cli_runner, tmp_path):
    out = str(tmp_path / "polymax.json")
    result = cli_runner.invoke(args=["polymax-bound", "--n", "4", "--trials", "3", "--format", "json",
                                     "--out", out])

    assert result.exit_code == 0, result.output
    assert pd.read_json(out)["N [1]"].tolist() == [4]


def test_companion_files(cli_runner, tmp_path):
    out = str(tmp_path / "bridge.csv")
    result = cli_runner.invoke(args=["bridge-sim", "--trials", "3", "--grid", "256", "--depth", "2", "--eps", "0.05",
                                     "--out", out])

    assert result.exit_code == 0, result.output
    assert "(5 files)" in result.output
    for name in ("dyadic", "ecdf", "trace"):
        assert os.path.exists(str(tmp_path / f"bridge.{name}.csv"))


def test_default_output_in_the_temp_directory(cli_runner, tmp_path, mocker):
    mocker.patch("cli.tempfile.gettempdir", return_value=str(tmp_path))
    result = cli_runner.invoke(args=["crossing-count", "--n", "4", "--seed", "5"])

    assert result.exit_code == 0, result.output
    assert os.path.exists(str(tmp_path / "vanderspec_crossing-count_5.csv"))


@pytest.mark.parametrize("args", [
    ["mineig-scan", "--d", "5"],
    ["crossing-count", "--n", "a,b"],
    ["mp-hist", "--k-seq", "cubic"],
    ["atom-probe", "--p-range", "16:1"],
    ["bridge-sim", "--grid", "1000"],
])
def test_configuration_errors_exit_with_two(cli_runner, args):
    result = cli_runner.invoke(args=args)
    assert result.exit_code == 2


def test_budget_errors_exit_with_three(cli_runner):
    result = cli_runner.invoke(args=["atom-probe", "--n", "2000", "--trials", "1"])

    assert result.exit_code == 3
    assert "atom probe limited" in result.output
