# test_pascalize.py
#
# Copyright 2025 thecodenomad
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Tests for the command-line entry point."""

import json
import logging

import pytest

from bratteli.backend.errors import DomainError, HorizonError
from bratteli.cli import RunConfig, build_parser, config_from_args, main
from bratteli.constants import ENV_LOG_LEVEL, ENV_OUTPUT_DIR, ENV_SEED, OutputFormat
from bratteli.settings import BratteliSettings


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """No BRATTELI_* variables leak in, and the toolkit logger is reset afterwards."""
    for name in (ENV_LOG_LEVEL, ENV_OUTPUT_DIR, ENV_SEED):
        monkeypatch.delenv(name, raising=False)
    yield
    logger = logging.getLogger("bratteli")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    logger.setLevel(logging.NOTSET)


def run_cli(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


class TestConfig:
    def test_horizon_defaults_to_max_level(self):
        """estimate without --horizon runs to --max-level."""
        args = build_parser().parse_args(["estimate", "--max-level", "6", "--vertex", "[1]"])
        config = config_from_args(args, BratteliSettings({}))
        assert config.horizon == 6
        assert config.max_level == 6
        assert config.seed == BratteliSettings.DEFAULT_SEED

    def test_max_level_follows_horizon(self):
        """decay without --max-level builds to --horizon."""
        args = build_parser().parse_args(["decay", "--horizon", "10", "--vertex", "[2, []]"])
        config = config_from_args(args, BratteliSettings({}))
        assert config.max_level == 10

    def test_seed_from_environment(self):
        """BRATTELI_SEED fills in a missing --seed."""
        args = build_parser().parse_args(["dims"])
        assert config_from_args(args, BratteliSettings({ENV_SEED: "5"})).seed == 5

    def test_horizon_beyond_max_level(self):
        """Estimates cannot run past the built graph."""
        config = RunConfig("estimate", "young", 4, horizon=6)
        with pytest.raises(HorizonError):
            config.validate()

    def test_dot_only_for_graphs(self):
        """DOT output is refused for tables."""
        config = RunConfig("dims", "young", 4, output_format=OutputFormat.DOT)
        with pytest.raises(DomainError, match="--format dot"):
            config.validate()

    def test_sequence_parsing(self):
        """Commas and spaces both separate ratios."""
        args = build_parser().parse_args(["ratios", "--sequence", "1,2 3"])
        assert args.sequence == (1, 2, 3)


class TestSubcommands:
    def test_graph_json_root_only(self, capsys):
        """Level 0 holds the empty partition alone."""
        status, out, _ = run_cli(capsys, "graph", "--max-level", "0", "--format", "json")
        assert status == 0
        assert json.loads(out) == {"edges": [], "family": "young", "levels": [[[]]]}

    def test_graph_tsv(self, capsys):
        """One row per vertex with its upper neighbors."""
        status, out, _ = run_cli(capsys, "graph", "--max-level", "2")
        assert status == 0
        lines = out.splitlines()
        assert lines[:3] == ["# family young", "# valid true", "level\tlabel\tup"]
        assert "1\t[1]\t[2] [1,1]" in lines

    def test_pascalize_dot(self, capsys):
        """The pascalized graph exports to DOT."""
        status, out, _ = run_cli(capsys, "pascalize", "--max-level", "3", "--format", "dot")
        assert status == 0
        assert out.startswith('digraph "pascalized_young" {')

    def test_graph_dot_level_range(self, capsys):
        """--from-level and --to-level restrict the DOT drawing."""
        status, out, _ = run_cli(
            capsys,
            "graph",
            "--max-level",
            "4",
            "--format",
            "dot",
            "--from-level",
            "2",
            "--to-level",
            "3",
        )
        assert status == 0
        assert "v2_0" in out
        assert "v3_0" in out
        assert "v0_0" not in out
        assert "v4_0" not in out

    def test_dims(self, capsys):
        """Path counts on the pascalized chain are Catalan numbers at even levels."""
        status, out, _ = run_cli(capsys, "dims", "--family", "chain", "--pascalized", "--max-level", "6")
        assert status == 0
        assert "6\t[6,0]\t5" in out.splitlines()

    def test_mtable(self, capsys):
        """M(4, 0) = 3 and M(4, 2) = 6 on the Young graph."""
        status, out, _ = run_cli(capsys, "mtable", "--max-level", "4")
        assert status == 0
        lines = out.splitlines()
        assert "# homogeneous true" in lines
        assert "4\t0\t3" in lines
        assert "4\t2\t6" in lines

    def test_algebra_dims(self, capsys):
        """Level 3 of the Brauer tower: 15 in total, 6 in the quotient."""
        status, out, _ = run_cli(capsys, "algebra-dims", "--max-level", "3")
        assert status == 0
        assert "# algebra Brauer algebra" in out
        assert "# quotient C[S_n]" in out
        assert "# a_formula a_l = l" in out
        assert out.splitlines()[-5] == "level\tdimension\tquotient\texpected"
        assert "3\t15\t6\t15" in out.splitlines()

    def test_ratios_chain(self, capsys):
        """m_n on the chain approaches 1/4 from above."""
        status, out, _ = run_cli(capsys, "ratios", "--family", "chain", "--horizon", "50")
        assert status == 0
        lines = out.splitlines()
        assert "# verdict positive_limit" in lines
        n, exact, decimal = lines[-1].split("\t")
        assert (n, exact) == ("50", "26/101")
        assert abs(float(decimal) - 0.25) < 0.01

    def test_ratios_custom_sequence_warns(self, capsys):
        """A user sequence gives a heuristic verdict."""
        status, out, err = run_cli(
            capsys, "ratios", "--sequence", "1 2 3 4 5 6 7 8 9 10", "--horizon", "4"
        )
        assert status == 0
        assert "# heuristic true" in out
        assert "inferred from" in err

    def test_multiplicativity(self, capsys):
        """The walled pascalization factors through M."""
        status, out, _ = run_cli(
            capsys, "multiplicativity", "--family", "walled-young", "--max-level", "6"
        )
        assert status == 0
        assert "# ok true" in out

    def test_estimate_along_given_path(self, capsys):
        """Values along a supplied path are exact."""
        path = json.dumps([[], [1], [2], [3], [4]])
        status, out, _ = run_cli(
            capsys, "estimate", "--vertex", "[2]", "--path", path, "--max-level", "4", "--horizon", "4"
        )
        assert status == 0
        lines = out.splitlines()
        assert lines[0] == "# target [2]"
        assert lines[-1] == "4\t1/1\t1"

    def test_estimate_is_deterministic(self, capsys):
        """Equal arguments and seed give identical bytes."""
        argv = ["estimate", "--vertex", "[1,1]", "--max-level", "8", "--samples", "5", "--seed", "3"]
        first = run_cli(capsys, *argv)
        second = run_cli(capsys, *argv)
        assert first == second
        assert first[1].count("\n") == 5 + 4

    def test_decay(self, capsys):
        """(2, ()) on the pascalized Young graph decays."""
        status, out, _ = run_cli(
            capsys, "decay", "--vertex", "[2, []]", "--horizon", "8", "--format", "json"
        )
        assert status == 0
        document = json.loads(out)
        assert document["sound"] and document["strictly_decreasing"]
        assert [b["num"] for b in document["bounds"]] == [1, 1, 1]
        assert [b["den"] for b in document["bounds"]] == [3, 5, 7]

    def test_harmonic(self, capsys):
        """The Plancherel assignment is central, and lifts to the Brauer graph."""
        assert run_cli(capsys, "harmonic", "--max-level", "5")[0] == 0
        status, out, _ = run_cli(capsys, "harmonic", "--max-level", "5", "--pascalized")
        assert status == 0
        assert "# harmonic true" in out

    def test_harmonic_refused_on_chain(self, capsys):
        """Bounded ratios refuse the concentration check."""
        status, _, err = run_cli(
            capsys, "harmonic", "--family", "chain", "--pascalized", "--max-level", "4"
        )
        assert status == 7
        last = err.splitlines()[-1]
        assert last.startswith("error: off-diagonal cylinders of the chain pascalization")

    def test_k0(self, capsys):
        """Young through 4: five infinitesimal vertices and a matching quotient."""
        status, out, _ = run_cli(capsys, "k0", "--max-level", "4", "--format", "json")
        assert status == 0
        document = json.loads(out)
        assert document["quotient_ok"] is True
        assert len(document["infinitesimal"]) == 5

    def test_k0_chain_undetermined(self, capsys):
        """The chain has no verdict on its infinitesimal vertices."""
        status, out, _ = run_cli(capsys, "k0", "--family", "chain", "--max-level", "4", "--matrices")
        assert status == 0
        assert "# quotient_ok undetermined" in out
        assert "pascalized:0->1\t[1,1]" in out

    def test_output_file(self, capsys, monkeypatch, tmp_path):
        """--output lands in BRATTELI_OUTPUT_DIR."""
        monkeypatch.setenv(ENV_OUTPUT_DIR, str(tmp_path))
        status, out, _ = run_cli(capsys, "graph", "--max-level", "2", "--output", "young.tsv")
        assert status == 0
        assert out == ""
        assert (tmp_path / "young.tsv").read_text().startswith("# family young")


class TestExitCodes:
    def test_unknown_family(self, capsys):
        """Unknown families exit 5."""
        status, _, err = run_cli(capsys, "dims", "--family", "hecke")
        assert status == 5
        assert "unknown family 'hecke'" in err

    def test_bad_vertex(self, capsys):
        """Unknown vertices exit 3."""
        status, _, _ = run_cli(capsys, "estimate", "--vertex", "[7]", "--max-level", "4")
        assert status == 3

    def test_missing_vertex(self, capsys):
        """estimate needs a target."""
        status, _, err = run_cli(capsys, "estimate", "--max-level", "4")
        assert status == 3
        assert "needs --vertex" in err

    def test_horizon(self, capsys):
        """Horizons beyond the built levels exit 4."""
        status, _, _ = run_cli(
            capsys, "estimate", "--vertex", "[1]", "--max-level", "4", "--horizon", "9"
        )
        assert status == 4

    def test_usage_error(self, capsys):
        """argparse rejects unknown subcommands with status 2."""
        with pytest.raises(SystemExit) as excinfo:
            main(["nonsense"])
        assert excinfo.value.code == 2

    def test_negative_max_level(self, capsys):
        """A negative --max-level is out of domain, not silently clamped to 0."""
        status, _, err = run_cli(capsys, "graph", "--max-level", "-3")
        assert status == 6
        assert "got -3" in err

    def test_max_level_above_range(self, capsys):
        """A --max-level past the settings range is refused instead of capped."""
        status, _, err = run_cli(
            capsys, "estimate", "--vertex", "[1]", "--max-level", "250", "--horizon", "220"
        )
        assert status == 6
        assert "--max-level must lie in 0..200, got 250" in err

    def test_dot_level_range_outside_graph(self, capsys):
        """A DOT range past the built levels exits 4."""
        status, _, _ = run_cli(
            capsys,
            "graph",
            "--max-level",
            "3",
            "--format",
            "dot",
            "--from-level",
            "2",
            "--to-level",
            "5",
        )
        assert status == 4
