"""
Episode runner and experiment driver.

Episodes are independent work items. They run on a joblib worker pool and
their results are appended, one line each, to the raw results file by the
parent process only.
"""

import logging
import os
import time
from collections.abc import Callable, Iterable
from dataclasses import asdict, dataclass, fields
from pathlib import Path

import numpy as np
import pandas as pd
from joblib import Parallel, delayed

from ..agents import BudgetMeter, MeteredModel
from ..games import get_game
from ..games.base import SEED_BOUND, GameState
from ..types import DEFAULT_BUDGET, Status
from .config import AgentSpec, EpisodeKey, ExperimentConfig, episode_seed
from .stats import SummaryRow, summarize
from .tables import emit_tables

logger = logging.getLogger(__name__)

OUTPUT_DIR_ENV = "RHNEAT_OUTPUT_DIR"
DEFAULT_OUTPUT_DIR = "results"


@dataclass(frozen=True)
class EpisodeResult:
    game: str
    level: int
    repetition: int
    agent: str
    seed: int
    win: bool
    score: float
    ticks: int
    fm_calls: int
    wall_time: float | None = None
    error: str = ""

    @property
    def key(self) -> EpisodeKey:
        return EpisodeKey(self.agent, self.game, self.level, self.repetition)


RAW_COLUMNS = [f.name for f in fields(EpisodeResult)]


def run_episode(
    spec: AgentSpec,
    game_id: str,
    level: int,
    seed: int,
    repetition: int = 0,
    budget: int = DEFAULT_BUDGET,
    record_wall_time: bool = False,
    on_frame: Callable[[GameState, int], None] | None = None,
) -> EpisodeResult:
    """
    Play one episode to the end.

    Every frame the agent gets a fresh meter of ``budget`` calls. The real
    game is advanced with an environment seed drawn per tick, so planners
    cannot replay the real stochastic outcome through their copies. Agent
    exceptions end the episode as a loss with the error recorded.
    """
    game = get_game(game_id)
    level_seed, agent_seed, env_seed = np.random.SeedSequence(seed).generate_state(3)
    env_rng = np.random.default_rng(int(env_seed))
    state = game.load_level(level, seed=int(level_seed))
    agent = spec.build(seed=int(agent_seed))

    fm_calls = 0
    error = ""
    started = time.perf_counter()
    try:
        while not state.is_terminal:
            meter = BudgetMeter(budget)
            action = agent.act(state, MeteredModel(game, meter))
            fm_calls += meter.used
            if on_frame is not None:
                on_frame(state, action)
            state = game.advance(state.with_rng_seed(int(env_rng.integers(SEED_BOUND))), action)
    except Exception as e:
        error = f"{type(e).__name__}: {e}"
        logger.error(f"Episode {spec.id}/{game_id}/{level}/{repetition} failed at tick {state.tick}: {error}")

    elapsed = time.perf_counter() - started
    return EpisodeResult(
        game=game_id,
        level=level,
        repetition=repetition,
        agent=spec.id,
        seed=seed,
        win=not error and state.status is Status.WIN,
        score=float(state.score),
        ticks=state.tick,
        fm_calls=fm_calls,
        wall_time=round(elapsed, 6) if record_wall_time else None,
        error=error,
    )


def _run_key(cfg: ExperimentConfig, key: EpisodeKey) -> EpisodeResult:
    return run_episode(
        cfg.agent(key.agent),
        key.game,
        key.level,
        episode_seed(cfg.base_seed, key.game, key.level, key.repetition),
        repetition=key.repetition,
        budget=cfg.budget,
        record_wall_time=cfg.record_wall_time,
    )


# --- raw results file ---


def read_raw(path: Path | str) -> list[EpisodeResult]:
    path = Path(path)
    if not path.exists() or path.stat().st_size == 0:
        return []
    df = pd.read_csv(
        path,
        keep_default_na=False,
        float_precision="round_trip",
        dtype={"agent": str, "game": str, "error": str},
    )
    results = []
    for row in df.to_dict("records"):
        wall = row["wall_time"]
        results.append(
            EpisodeResult(
                game=row["game"],
                level=int(row["level"]),
                repetition=int(row["repetition"]),
                agent=row["agent"],
                seed=int(row["seed"]),
                win=str(row["win"]) == "True",
                score=float(row["score"]),
                ticks=int(row["ticks"]),
                fm_calls=int(row["fm_calls"]),
                wall_time=None if wall == "" else float(wall),
                error=row["error"],
            )
        )
    return results


class RawResultWriter:
    """Append-only writer for the raw results file; one line per episode"""

    def __init__(self, path: Path | str):
        self.path = Path(path)
        self.path.parent.mkdir(parents=True, exist_ok=True)

    def append(self, result: EpisodeResult) -> None:
        header = not self.path.exists() or self.path.stat().st_size == 0
        pd.DataFrame([asdict(result)], columns=RAW_COLUMNS).to_csv(
            self.path, mode="a", header=header, index=False, lineterminator="\n"
        )


@dataclass
class ExperimentReport:
    raw_path: Path
    rows: list[SummaryRow]
    tables: dict[str, Path]
    executed: int
    skipped: int


def resolve_output_dir(cfg: ExperimentConfig, out: Path | str | None = None) -> Path:
    if out is not None:
        return Path(out)
    if cfg.output_dir is not None:
        return cfg.output_dir
    return Path(os.environ.get(OUTPUT_DIR_ENV, DEFAULT_OUTPUT_DIR))


def _execute(cfg: ExperimentConfig, pending: list[EpisodeKey], jobs: int) -> Iterable[EpisodeResult]:
    if jobs == 1:
        return (_run_key(cfg, key) for key in pending)
    return Parallel(n_jobs=jobs, return_as="generator")(delayed(_run_key)(cfg, key) for key in pending)


def run_experiment(
    cfg: ExperimentConfig,
    jobs: int = 1,
    out: Path | str | None = None,
    resume: bool = True,
) -> ExperimentReport:
    """
    Run every episode of ``cfg`` not already in the raw file, then summarise.

    Results are written in episode order regardless of the worker count, so
    reruns of one config produce identical raw files.
    """
    out_dir = resolve_output_dir(cfg, out)
    raw_path = out_dir / cfg.raw_file
    if not resume and raw_path.exists():
        raw_path.unlink()

    wanted = list(cfg.episodes())
    done = {r.key for r in read_raw(raw_path)}
    pending = [k for k in wanted if k not in done]
    logger.info(
        f"Experiment {cfg.name}: {len(wanted)} episodes, {len(wanted) - len(pending)} already done, "
        f"{jobs} job(s)"
    )

    writer = RawResultWriter(raw_path)
    for i, result in enumerate(_execute(cfg, pending, jobs), start=1):
        writer.append(result)
        if i % 50 == 0 or i == len(pending):
            logger.info(f"Experiment {cfg.name}: {i}/{len(pending)} episodes written")

    keys = set(wanted)
    results = [r for r in read_raw(raw_path) if r.key in keys]
    rows = summarize(results, agent_order=[a.id for a in cfg.agents])
    tables = emit_tables(rows, out_dir, formats=cfg.formats) if rows else {}
    return ExperimentReport(
        raw_path=raw_path,
        rows=rows,
        tables=tables,
        executed=len(pending),
        skipped=len(wanted) - len(pending),
    )
