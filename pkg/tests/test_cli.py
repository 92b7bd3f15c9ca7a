"""
Tests for the rhneat-bench command line.
"""

import logging

import pytest
import yaml

from rhneat.bench import EpisodeResult, RawResultWriter
from rhneat.bench.cli import build_parser, main, resolve_agent
from rhneat.types import AgentKind, LogLevel


@pytest.fixture(autouse=True)
def reset_decision_logger():
    yield
    decisions = logging.getLogger("rhneat.decisions")
    for handler in list(decisions.handlers):
        decisions.removeHandler(handler)
        handler.close()
    decisions.setLevel(logging.NOTSET)
    decisions.propagate = True


@pytest.mark.unit
class TestParser:
    def test_ablate_options(self):
        args = build_parser().parse_args(
            ["--log-level", "debug", "ablate", "--group", "abl", "--levels", "0,2", "--games", "race"]
        )
        assert args.log_level is LogLevel.DEBUG
        assert args.levels == [0, 2]
        assert args.games == ["race"]
        assert not args.dry_run

    def test_subcommand_is_required(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args([])

    def test_resolve_agent(self):
        assert resolve_agent("rhneat+sp").rhneat.speciation
        assert resolve_agent("mcts").kind is AgentKind.MCTS
        with pytest.raises(ValueError):
            resolve_agent("alphazero")


@pytest.mark.unit
class TestCommands:
    def test_ablate_dry_run_prints_yaml(self, capsys):
        argv = ["ablate", "--group", "baselines", "--games", "race", "--repetitions", "2", "--dry-run"]
        assert main(argv) == 0
        data = yaml.safe_load(capsys.readouterr().out)
        assert data["name"] == "ablation-baselines"
        assert data["games"] == ["race"]
        assert data["repetitions"] == 2
        assert [a["id"] for a in data["agents"]] == ["rhneat+sp+cp", "rhea", "mcts"]

    def test_play(self, capsys):
        code = main(["play", "--game", "corridor", "--level", "1", "--agent", "mcts", "--ascii"])
        out = capsys.readouterr().out
        assert code == 0
        assert "tick 0: action" in out
        assert "A     O" in out
        assert out.strip().splitlines()[-1].startswith("mcts on corridor/1: win")

    def test_unknown_agent_exits_with_error(self):
        assert main(["play", "--game", "corridor", "--agent", "alphazero"]) == 2

    def test_summarize(self, tmp_path, capsys):
        raw = tmp_path / "episodes.csv"
        writer = RawResultWriter(raw)
        for rep, win in enumerate([True, False, True, True]):
            writer.append(EpisodeResult("race", 0, rep, "rhea", rep, win, float(win), 20, 900))
        assert main(["summarize", "--raw", str(raw), "--format", "csv"]) == 0
        assert (tmp_path / "summary.csv").exists()
        assert not (tmp_path / "summary.md").exists()
        assert "| rhea | race | 4 | 0.7500 |" in capsys.readouterr().out

    def test_summarize_empty(self, tmp_path):
        assert main(["summarize", "--raw", str(tmp_path / "missing.csv")]) == 1

    def test_run(self, tmp_path, capsys):
        config = tmp_path / "exp.yaml"
        config.write_text(
            yaml.safe_dump(
                {
                    "name": "tiny",
                    "games": ["corridor"],
                    "levels": [1],
                    "repetitions": 2,
                    "agents": [{"id": "random", "kind": "random"}],
                }
            )
        )
        assert main(["run", "--config", str(config), "--out", str(tmp_path / "out")]) == 0
        assert (tmp_path / "out" / "episodes.csv").read_text().count("\n") == 3
        assert "| random | corridor | 2 |" in capsys.readouterr().out

    def test_invalid_config_file(self, tmp_path):
        config = tmp_path / "bad.yaml"
        config.write_text("agents: []\n")
        assert main(["run", "--config", str(config)]) == 2

    def test_decision_log(self, tmp_path):
        log = tmp_path / "decisions.log"
        code = main(
            [
                "--decision-log",
                str(log),
                "play",
                "--game",
                "corridor",
                "--level",
                "1",
                "--agent",
                "rhneat+sp+cp",
                "--budget",
                "300",
            ]
        )
        assert code == 0
        for handler in logging.getLogger("rhneat.decisions").handlers:
            handler.flush()
        lines = log.read_text().splitlines()
        assert lines
        assert lines[0].startswith("agent=rhneat+sp+cp tick=0 action=")
        assert all(int(line.split("generations=")[1].split()[0]) >= 2 for line in lines)
