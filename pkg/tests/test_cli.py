"""Tests for the arcalg command line."""

import json
import os

import pytest

from arcalg.cli import EXIT_CAP, EXIT_OK, EXIT_USAGE, build_module, build_parser, main
from arcalg.combinatorics import Weight
from arcalg.exceptions import ValidationError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestParser:
    """Tests for build_parser()."""

    def test_command_required(self):
        """Calling without a subcommand is a usage error."""
        with pytest.raises(SystemExit) as exc:
            build_parser().parse_args([])

        assert exc.value.code == 2

    def test_common_options_on_every_command(self):
        """Box and format flags are accepted after any subcommand."""
        args = build_parser().parse_args(["cartan", "--m", "1", "--n", "2", "--format", "csv"])

        assert (args.m, args.n, args.format) == (1, 2, "csv")


class TestCombinatoricsCommands:
    """weights, cup, circ and kl."""

    def test_weights(self, capsys):
        """Λ_{1,1} lists two weights."""
        code, out, _ = run(capsys, "weights", "--m", "1", "--n", "1")

        assert code == EXIT_OK
        assert [line.split()[0] for line in out.splitlines()] == ["v^", "^v"]

    def test_regular_weights_as_json(self, capsys):
        """--regular keeps v^ only."""
        code, out, _ = run(capsys, "weights", "--m", "1", "--n", "1", "--regular", "--format", "json")

        assert code == EXIT_OK
        assert [row["weight"] for row in json.loads(out)] == ["v^"]

    def test_weights_as_csv(self, capsys):
        """CSV output starts with a header row."""
        code, out, _ = run(capsys, "weights", "--m", "1", "--n", "2", "--format", "csv")

        assert code == EXIT_OK
        assert out.splitlines()[0] == "weight,partition,regular"
        assert len(out.splitlines()) == 4

    def test_cup_as_json(self, capsys):
        """The cup diagram of v^ is one cup."""
        code, out, _ = run(capsys, "cup", "--weight", "v^", "--format", "json")

        assert code == EXIT_OK
        assert json.loads(out) == {"weight": "v^", "cups": [[1, 2]], "rays": []}

    def test_circ(self, capsys):
        """circ prints λ and λ°."""
        code, out, _ = run(capsys, "circ", "--weight", "v^v")

        assert code == EXIT_OK
        assert out.startswith("v^v -> vv^")

    def test_kl_check(self, capsys):
        """The inverse identity holds on Λ_{2,2}."""
        code, out, _ = run(capsys, "kl", "--m", "2", "--n", "2", "--check")

        assert code == EXIT_OK
        assert out.strip() == "inverse identity: PASS"

    def test_kl_inverse_json(self, capsys):
        """The p matrix of Λ_{1,1} as coefficient lists."""
        code, out, _ = run(capsys, "kl", "--m", "1", "--n", "1", "--inverse", "--format", "json")

        assert code == EXIT_OK
        assert json.loads(out)["matrix"] == [[[1], [0, 1]], [[], [1]]]

    def test_cartan(self, capsys):
        """The Cartan matrix of K^1_1 as JSON."""
        code, out, _ = run(capsys, "cartan", "--m", "1", "--n", "1", "--format", "json")

        assert code == EXIT_OK
        assert json.loads(out)["matrix"] == [[2, 1], [1, 1]]


class TestAlgebraCommands:
    """multiply, module, hom and ext."""

    def test_multiply_compact(self, capsys):
        """The two degree one diagrams of K^1_1 compose to the circle."""
        code, out, _ = run(capsys, "multiply", "--left", "v^|^v|^v", "--right", "^v|^v|v^")

        assert code == EXIT_OK
        assert out.strip() == "1*(v^|^v|v^)"

    def test_multiply_json_diagram(self, capsys):
        """Diagrams can also be given as JSON objects."""
        left = json.dumps({"bottom": "v^", "middle": "v^", "top": "v^"})

        code, out, _ = run(capsys, "multiply", "--left", left, "--right", "v^|v^|v^")

        assert code == EXIT_OK
        assert "v^|v^|v^" in out

    def test_module_report(self, capsys):
        """module prints the radical layers of P(v^)."""
        code, out, _ = run(capsys, "module", "--kind", "projective", "--weight", "v^", "--format", "json")

        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["dim"] == 3
        assert payload["delta_multiplicities"] == {"v^": 1, "^v": 1}

    def test_cell_module_lives_over_h(self, capsys):
        """cell modules are fΔ(λ) and carry no Δ-multiplicities."""
        code, out, _ = run(capsys, "module", "--kind", "cell", "--weight", "^v", "--format", "json")

        assert code == EXIT_OK
        assert json.loads(out)["delta_multiplicities"] is None

    def test_hom(self, capsys):
        """dim Hom(Δ(v^), Δ(^v)) = 1."""
        code, out, _ = run(
            capsys, "hom", "--left", "standard:v^", "--right", "standard:^v", "--format", "json"
        )

        assert code == EXIT_OK
        assert json.loads(out)["hom"] == 1

    def test_ext(self, capsys):
        """Ext^*(L(^v), L(v^)) up to degree 2."""
        code, out, _ = run(
            capsys,
            "ext",
            "--left",
            "simple:^v",
            "--right",
            "simple:v^",
            "--degree",
            "2",
            "--format",
            "json",
        )

        assert code == EXIT_OK
        assert json.loads(out)["ext"] == [0, 1, 0]

    def test_build_module_unknown_kind(self):
        """Kinds outside MODULE_KINDS are rejected."""
        with pytest.raises(ValidationError, match="Unknown module kind"):
            build_module("injective", Weight("v^"))


class TestVerify:
    """The verify command."""

    def test_suite_passes(self, capsys):
        """The combinatorics suite passes on Λ_{1,2}."""
        code, out, _ = run(capsys, "verify", "--suite", "combinatorics", "--m", "1", "--n", "2", "--workers", "1")

        assert code == EXIT_OK
        assert "PASS" in out

    def test_json_file(self, capsys, tmp_path):
        """--json writes every report to a file."""
        path = tmp_path / "reports.json"

        code, _, _ = run(
            capsys,
            "verify",
            "--suite",
            "algebra",
            "--m",
            "1",
            "--n",
            "1",
            "--workers",
            "1",
            "--json",
            str(path),
        )

        reports = json.loads(path.read_text())
        assert code == EXIT_OK
        assert {r["check"] for r in reports} >= {"associativity", "unit"}

    def test_overrides_do_not_leak(self, capsys):
        """Flags only hold for the duration of the command."""
        run(capsys, "weights", "--m", "1", "--n", "1", "--format", "json", "--char", "3")

        assert "ARCALG_FORMAT" not in os.environ
        assert "ARCALG_CHARACTERISTIC" not in os.environ


class TestExitCodes:
    """Errors map onto exit codes."""

    def test_missing_box(self, capsys):
        """--n is required for box commands."""
        code, _, err = run(capsys, "weights", "--m", "1")

        assert code == EXIT_USAGE
        assert "needs both --m and --n" in err

    def test_bad_weight(self, capsys):
        """Unknown symbols are a usage error."""
        code, _, err = run(capsys, "cup", "--weight", "vx^")

        assert code == EXIT_USAGE
        assert err.startswith("arcalg: error:")

    def test_bad_characteristic(self, capsys):
        """Composite characteristics are rejected up front."""
        code, _, _ = run(capsys, "weights", "--m", "1", "--n", "1", "--char", "4")

        assert code == EXIT_USAGE

    def test_cap(self, capsys, monkeypatch):
        """A cap hit exits with 3 and names the setting."""
        monkeypatch.setenv("ARCALG_ENUMERATION_CAP", "1")

        code, _, err = run(capsys, "weights", "--m", "1", "--n", "1")

        assert code == EXIT_CAP
        assert "ARCALG_ENUMERATION_CAP" in err

    def test_capped_suite(self, capsys, monkeypatch):
        """A suite with capped checks and no failures exits with 3."""
        monkeypatch.setenv("ARCALG_ENUMERATION_CAP", "1")

        code, _, _ = run(capsys, "verify", "--suite", "combinatorics", "--m", "2", "--n", "2", "--workers", "1")

        assert code == EXIT_CAP
