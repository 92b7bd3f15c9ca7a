"""
Command line entry point: ``rhneat-bench``.

Subcommands:
    run        run an experiment described by a YAML file
    ablate     run (or print with --dry-run) the built-in ablation grid
    summarize  rebuild summary tables from a raw results file
    play       play one verbose episode
"""

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from ..exceptions import RhneatException
from ..games import GAMES, SUITE, get_game, render_ascii
from ..types import AgentKind, LogLevel
from .config import ABLATION_GROUPS, AgentSpec, ExperimentConfig, ablation_agents, ablation_grid
from .runner import read_raw, resolve_output_dir, run_episode, run_experiment
from .stats import summarize
from .tables import emit_tables, to_markdown

logger = logging.getLogger(__name__)

_LEVELS = {
    LogLevel.DEBUG: logging.DEBUG,
    LogLevel.INFO: logging.INFO,
    LogLevel.WARN: logging.WARNING,
    LogLevel.ERROR: logging.ERROR,
}


def configure_logging(level: LogLevel = LogLevel.INFO, decision_log: Path | None = None) -> None:
    logging.basicConfig(
        level=_LEVELS[level],
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    decisions = logging.getLogger("rhneat.decisions")
    if decision_log is None:
        # per-decision lines are only wanted when routed to a file
        decisions.setLevel(logging.WARNING)
        return
    handler = logging.FileHandler(decision_log, mode="w")
    handler.setFormatter(logging.Formatter("%(message)s"))
    decisions.addHandler(handler)
    decisions.setLevel(logging.INFO)
    decisions.propagate = False


def _csv_list(cast):
    def parse(text: str) -> list:
        return [cast(item) for item in text.split(",") if item]

    return parse


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rhneat-bench", description="rhNEAT benchmark harness")
    parser.add_argument(
        "--log-level", type=LogLevel, choices=list(LogLevel), default=LogLevel.INFO, metavar="LEVEL"
    )
    parser.add_argument("--decision-log", type=Path, default=None, help="write per-decision lines here")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run an experiment config")
    run.add_argument("--config", type=Path, required=True)
    run.add_argument("--jobs", type=int, default=1)
    run.add_argument("--out", type=Path, default=None)
    run.add_argument("--no-resume", action="store_true", help="discard an existing raw results file")

    ablate = sub.add_parser("ablate", help="run the ablation grid")
    ablate.add_argument("--group", choices=ABLATION_GROUPS, default="all")
    ablate.add_argument("--jobs", type=int, default=1)
    ablate.add_argument("--out", type=Path, default=None)
    ablate.add_argument("--repetitions", type=int, default=20)
    ablate.add_argument("--levels", type=_csv_list(int), default=None, help="e.g. 0,1,2")
    ablate.add_argument("--games", type=_csv_list(str), default=None, help="e.g. race,trap")
    ablate.add_argument("--seed", type=int, default=0)
    ablate.add_argument("--dry-run", action="store_true", help="print the grid as YAML and exit")

    summ = sub.add_parser("summarize", help="summarise a raw results file")
    summ.add_argument("--raw", type=Path, required=True)
    summ.add_argument("--out", type=Path, default=None)
    summ.add_argument("--format", choices=("csv", "markdown"), action="append", dest="formats")

    play = sub.add_parser("play", help="play one episode verbosely")
    play.add_argument("--game", choices=sorted(GAMES), required=True)
    play.add_argument("--level", type=int, default=0)
    play.add_argument("--agent", default="rhneat+sp+cp", help="agent kind or ablation agent id")
    play.add_argument("--seed", type=int, default=0)
    play.add_argument("--budget", type=int, default=1000)
    play.add_argument("--ascii", action="store_true", help="dump the grid every frame")
    return parser


def resolve_agent(name: str) -> AgentSpec:
    for spec in ablation_agents():
        if spec.id == name:
            return spec
    return AgentSpec(id=name, kind=AgentKind(name))


def _cmd_run(args: argparse.Namespace) -> int:
    cfg = ExperimentConfig.from_yaml(args.config)
    report = run_experiment(cfg, jobs=args.jobs, out=args.out, resume=not args.no_resume)
    print(to_markdown(report.rows), end="")
    return 0


def _cmd_ablate(args: argparse.Namespace) -> int:
    cfg = ablation_grid(
        args.group,
        games=args.games or list(SUITE),
        levels=args.levels,
        repetitions=args.repetitions,
        base_seed=args.seed,
    )
    if args.dry_run:
        print(cfg.to_yaml(), end="")
        return 0
    report = run_experiment(cfg, jobs=args.jobs, out=args.out)
    print(to_markdown(report.rows), end="")
    return 0


def _cmd_summarize(args: argparse.Namespace) -> int:
    rows = summarize(read_raw(args.raw))
    if not rows:
        logger.error(f"No episodes in {args.raw}")
        return 1
    out = args.out or args.raw.parent
    emit_tables(rows, out, formats=args.formats or ("csv", "markdown"))
    print(to_markdown(rows), end="")
    return 0


def _cmd_play(args: argparse.Namespace) -> int:
    spec = resolve_agent(args.agent)
    get_game(args.game)

    def show(state, action) -> None:
        if args.ascii:
            print(render_ascii(state))
        print(f"tick {state.tick}: action {action}")

    result = run_episode(spec, args.game, args.level, args.seed, budget=args.budget, on_frame=show)
    outcome = "win" if result.win else "loss"
    print(f"{result.agent} on {result.game}/{result.level}: {outcome}, score {result.score:g}, "
          f"{result.ticks} ticks, {result.fm_calls} FM calls")
    if result.error:
        print(f"error: {result.error}")
    return 0


COMMANDS = {
    "run": _cmd_run,
    "ablate": _cmd_ablate,
    "summarize": _cmd_summarize,
    "play": _cmd_play,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level, args.decision_log)
    try:
        return COMMANDS[args.command](args)
    except (RhneatException, ValueError) as e:
        logger.error(str(e))
        return 2


__all__ = ["build_parser", "configure_logging", "main", "resolve_agent", "resolve_output_dir"]
