"""
Summary statistics over episode results.

Per (agent, game) rows use the binomial standard error for the win rate and
the sample standard error for the score. Each agent also gets two aggregate
rows: ``ALL:episodes`` pools every episode, ``ALL:games`` averages the
per-game means and reports the standard error across games.
"""

import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np
import pandas as pd

if TYPE_CHECKING:
    from .runner import EpisodeResult

ALL_EPISODES = "ALL:episodes"
ALL_GAMES = "ALL:games"

SUMMARY_COLUMNS = ["agent", "game", "n", "win_rate", "win_se", "mean_score", "score_se"]


@dataclass(frozen=True)
class SummaryRow:
    agent: str
    game: str
    n: int
    win_rate: float
    win_se: float
    mean_score: float
    score_se: float


def binomial_se(p: float, n: int) -> float:
    return math.sqrt(p * (1.0 - p) / n) if n > 0 else 0.0


def sample_se(values: Sequence[float] | np.ndarray) -> float:
    """Sample standard deviation (ddof=1) over sqrt(n); 0 for fewer than two values"""
    arr = np.asarray(values, dtype=float)
    if arr.size < 2:
        return 0.0
    return float(arr.std(ddof=1) / math.sqrt(arr.size))


def _row(agent: str, game: str, wins: np.ndarray, scores: np.ndarray) -> SummaryRow:
    n = int(wins.size)
    p = float(wins.mean())
    return SummaryRow(
        agent=agent,
        game=game,
        n=n,
        win_rate=p,
        win_se=binomial_se(p, n),
        mean_score=float(scores.mean()),
        score_se=sample_se(scores),
    )


def results_frame(results: Sequence["EpisodeResult"]) -> pd.DataFrame:
    return pd.DataFrame(
        {
            "agent": [r.agent for r in results],
            "game": [r.game for r in results],
            "win": [float(r.win) for r in results],
            "score": [r.score for r in results],
        }
    )


def summarize(
    results: Sequence["EpisodeResult"], agent_order: Sequence[str] | None = None
) -> list[SummaryRow]:
    """Per-game rows then the two aggregate rows, for every agent"""
    if not results:
        return []
    df = results_frame(results)
    agents = list(agent_order) if agent_order else list(dict.fromkeys(df["agent"]))
    rows: list[SummaryRow] = []
    for agent in agents:
        sub = df[df["agent"] == agent]
        if sub.empty:
            continue
        per_game = []
        for game, g in sub.groupby("game", sort=False):
            row = _row(agent, str(game), g["win"].to_numpy(), g["score"].to_numpy())
            per_game.append(row)
        rows.extend(per_game)
        rows.append(_row(agent, ALL_EPISODES, sub["win"].to_numpy(), sub["score"].to_numpy()))

        game_wins = np.array([r.win_rate for r in per_game])
        game_scores = np.array([r.mean_score for r in per_game])
        rows.append(
            SummaryRow(
                agent=agent,
                game=ALL_GAMES,
                n=len(per_game),
                win_rate=float(game_wins.mean()),
                win_se=sample_se(game_wins),
                mean_score=float(game_scores.mean()),
                score_se=sample_se(game_scores),
            )
        )
    return rows
