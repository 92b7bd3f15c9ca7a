"""
Benchmark harness: experiment configs, the episode runner and summary tables.
"""

from .config import (
    ABLATION_GROUPS,
    AgentSpec,
    EpisodeKey,
    ExperimentConfig,
    MctsSettings,
    RheaSettings,
    RhneatSettings,
    ablation_agents,
    ablation_grid,
    episode_seed,
)
from .runner import (
    EpisodeResult,
    ExperimentReport,
    RawResultWriter,
    read_raw,
    resolve_output_dir,
    run_episode,
    run_experiment,
)
from .stats import ALL_EPISODES, ALL_GAMES, SummaryRow, binomial_se, sample_se, summarize
from .tables import emit_tables, read_summary_csv, to_csv, to_markdown

__all__ = [
    "ABLATION_GROUPS",
    "ALL_EPISODES",
    "ALL_GAMES",
    "AgentSpec",
    "EpisodeKey",
    "EpisodeResult",
    "ExperimentConfig",
    "ExperimentReport",
    "MctsSettings",
    "RawResultWriter",
    "RheaSettings",
    "RhneatSettings",
    "SummaryRow",
    "ablation_agents",
    "ablation_grid",
    "binomial_se",
    "emit_tables",
    "episode_seed",
    "read_raw",
    "read_summary_csv",
    "resolve_output_dir",
    "run_episode",
    "run_experiment",
    "sample_se",
    "summarize",
    "to_csv",
    "to_markdown",
]
