"""Tests for the dcj command line."""

import io
import json
import re

from typer.testing import CliRunner

from src.cli.main import app
from src.config import PRODUCT_NAME
from src.core.experiments import ExperimentConfig, run_experiment, write_records
from src.core.walks import CSV_COLUMNS

runner = CliRunner()
HEADER = ",".join(CSV_COLUMNS)
CSV_ROW = re.compile(r"^\d+(\.\d+)?,[^,]+,[^,]+$")


def expected_csv(**kwargs):
    stream = io.StringIO()
    write_records(run_experiment(ExperimentConfig(**kwargs), workers=1), stream)
    return stream.getvalue()


class TestVersion:
    """Tests for the version command."""

    def test_version(self):
        """Should print the product name."""
        result = runner.invoke(app, ["version"])
        assert result.exit_code == 0
        assert PRODUCT_NAME in result.output


class TestSimulate:
    """Tests for the simulate command."""

    def test_writes_csv_file(self, tmp_path):
        """--out should write exactly the records of the same in-process experiment."""
        out = tmp_path / "samples.csv"
        result = runner.invoke(
            app,
            ["simulate", "--n", "30", "--p", "0,1", "--reps", "2", "--checkpoints", "0.5,1", "--out", str(out)],
        )
        assert result.exit_code == 0, result.output
        assert out.read_text() == expected_csv(n=30, p_values=[0.0, 1.0], reps=2, checkpoints=[0.5, 1.0])

    def test_same_seed_same_bytes(self, tmp_path):
        """Two runs with equal flags should produce identical files."""
        args = ["simulate", "--sizes", "10,20", "--reps", "2", "--seed", "4", "--time-mode", "poisson"]
        first, second = tmp_path / "a.csv", tmp_path / "b.csv"
        assert runner.invoke(app, args + ["--out", str(first)]).exit_code == 0
        assert runner.invoke(app, args + ["--out", str(second)]).exit_code == 0
        assert first.read_bytes() == second.read_bytes()

    def test_stdout(self):
        """Without --out the CSV should go to stdout."""
        result = runner.invoke(app, ["simulate", "--n", "10", "--reps", "1", "--checkpoints", "0.5"])
        assert result.exit_code == 0
        assert HEADER in result.output
        assert "unrestricted,10,1,0.5,0,0,0.5,5," in result.output

    def test_config_file_with_override(self, tmp_path):
        """Flags should override values from --config."""
        config = tmp_path / "experiment.json"
        config.write_text(json.dumps({"n": 20, "reps": 5, "checkpoints": [0.5]}))
        out = tmp_path / "samples.csv"
        result = runner.invoke(app, ["simulate", "--config", str(config), "--reps", "1", "--out", str(out)])
        assert result.exit_code == 0, result.output
        assert len(out.read_text().splitlines()) == 2

    def test_genome_file(self, tmp_path):
        """--genome should start the walk from the genome in the file."""
        genome = tmp_path / "start.txt"
        genome.write_text("L: 1 2 3\nL: 4 5\n")
        out = tmp_path / "samples.csv"
        result = runner.invoke(
            app, ["simulate", "--genome", str(genome), "--reps", "1", "--checkpoints", "1", "--out", str(out)]
        )
        assert result.exit_code == 0, result.output
        row = out.read_text().splitlines()[1].split(",")
        assert row[1:3] == ["5", "2"]

    def test_track_components(self, tmp_path):
        """--track-components --validate should fill the fragmentation column."""
        out = tmp_path / "samples.csv"
        result = runner.invoke(
            app,
            ["simulate", "--n", "20", "--reps", "1", "--track-components", "--validate", "--out", str(out)],
        )
        assert result.exit_code == 0, result.output
        rows = [line.split(",") for line in out.read_text().splitlines()[1:]]
        assert rows and all(row[-1] != "" for row in rows)

    def test_invalid_p(self):
        """p outside [0, 1] should exit with status 1."""
        result = runner.invoke(app, ["simulate", "--n", "10", "--p", "1.5"])
        assert result.exit_code == 1
        assert "Invalid configuration" in result.output

    def test_restricted_with_several_chromosomes(self):
        """Restricted walks on several chromosomes should exit with status 1."""
        result = runner.invoke(app, ["simulate", "--model", "restricted", "--sizes", "5,5"])
        assert result.exit_code == 1

    def test_unparsable_list(self):
        """Non-numeric lists should be rejected."""
        result = runner.invoke(app, ["simulate", "--sizes", "a,b"])
        assert result.exit_code != 0


class TestSummarizeCommand:
    """Tests for the summarize command."""

    def test_summary(self, tmp_path):
        """Should print the escape points and write the summary CSV."""
        samples = tmp_path / "samples.csv"
        samples.write_text(expected_csv(n=40, p_values=[0.5], reps=3, checkpoints=[0.25, 2.0]))
        out = tmp_path / "summary.csv"
        result = runner.invoke(app, ["summarize", str(samples), "--out", str(out)])
        assert result.exit_code == 0, result.output
        assert "Escape points" in result.output
        lines = out.read_text().splitlines()
        assert lines[0].startswith("model,p,c,n,replicates")
        assert len(lines) == 3

    def test_missing_file(self, tmp_path):
        """A missing input should exit with status 1."""
        result = runner.invoke(app, ["summarize", str(tmp_path / "none.csv")])
        assert result.exit_code == 1

    def test_malformed_file(self, tmp_path):
        """A CSV without the sample columns should exit with status 1."""
        bad = tmp_path / "bad.csv"
        bad.write_text("a,b\n1,2\n")
        result = runner.invoke(app, ["summarize", str(bad)])
        assert result.exit_code == 1


class TestGammaTableCommand:
    """Tests for the gamma-table command."""

    def test_values(self):
        """Should print one CSV row per requested c."""
        result = runner.invoke(app, ["gamma-table", "--values", "0.25,1"])
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert "c,gamma,bound" in lines
        assert "0.25,0.25,0" in lines
        assert any(line.startswith("1,0.838") for line in lines)

    def test_default_grid(self):
        """The default grid should run from 0.05 to 2."""
        result = runner.invoke(app, ["gamma-table"])
        assert result.exit_code == 0
        rows = [line for line in result.output.splitlines() if CSV_ROW.match(line)]
        assert len(rows) == 40
        assert rows[0].startswith("0.05,") and rows[-1].startswith("2,")

    def test_rejects_non_positive(self):
        """c <= 0 should exit with status 1."""
        result = runner.invoke(app, ["gamma-table", "--values", "0"])
        assert result.exit_code == 1


class TestErCompareCommand:
    """Tests for the er-compare command."""

    def test_small_run(self):
        """Should print the three means and per-run gaps."""
        result = runner.invoke(
            app, ["er-compare", "--n", "200", "--k", "2", "--c", "0.3", "--reps", "3", "--per-run"]
        )
        assert result.exit_code == 0, result.output
        assert "Erdős–Rényi" in result.output
        assert "walk - ER per replicate" in result.output

    def test_rejects_bad_sizes(self):
        """More chromosomes than genes and zero reps should exit with status 1."""
        assert runner.invoke(app, ["er-compare", "--n", "2", "--k", "3"]).exit_code == 1
        assert runner.invoke(app, ["er-compare", "--reps", "0"]).exit_code == 1


class TestOracleCheckCommand:
    """Tests for the oracle-check command."""

    def test_small_spaces_pass(self):
        """Every check up to n=2 should pass."""
        result = runner.invoke(app, ["oracle-check", "--max-n", "2"])
        assert result.exit_code == 0, result.output
        assert "All 6 checks passed" in result.output

    def test_default_run_passes_with_circle_detours(self):
        """The default run up to n=3 should pass and report the four two-circle detours."""
        result = runner.invoke(app, ["oracle-check"])
        assert result.exit_code == 0, result.output
        assert "All 9 checks passed" in result.output
        assert "4 U_tilde/U_tilde pair(s)" in result.output
        assert "Restricted pairs by state" in result.output

    def test_too_large(self):
        """n above the oracle limit should exit with status 1."""
        result = runner.invoke(app, ["oracle-check", "--max-n", "5", "--k", "1", "--no-restricted"])
        assert result.exit_code == 1
