"""
Experiment configuration.

Experiments are declared in YAML and validated into pydantic models. Agent
settings are flat mappings mirroring the planner dataclasses; any field left
out keeps its published default.
"""

import hashlib
import math
from collections.abc import Iterator
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Literal

import numpy as np
import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from ..agents import create_agent
from ..exceptions import ConfigurationError
from ..games import GAMES, LEVEL_COUNT, SUITE
from ..interfaces import Agent
from ..types import (
    DEFAULT_BUDGET,
    Activation,
    AgentKind,
    DistanceMetric,
    FitnessMode,
    MctsConfig,
    NeatParams,
    RewardMode,
    RheaConfig,
    RhneatConfig,
)

ABLATION_GROUPS = ("abl", "reward", "fitness", "baselines", "all")


class RhneatSettings(BaseModel):
    model_config = ConfigDict(extra="forbid")

    population_size: int = Field(10, ge=2)
    rollout_length: int = Field(15, ge=1)
    speciation: bool = True
    population_carrying: bool = True
    reward_mode: RewardMode = RewardMode.LAST
    gamma: float = Field(0.9, gt=0.0, le=1.0)
    fitness_mode: FitnessMode = FitnessMode.DIRECT
    alpha: float = Field(0.2, gt=0.0, le=1.0)
    activation: Activation = Activation.TANH
    use_bias: bool = False
    distance_metric: DistanceMetric = DistanceMetric.EUCLIDEAN
    blended_crossover: bool = False
    compatibility_threshold: float = Field(4.0, gt=0.0)
    discard_rate: float = Field(0.2, gt=0.0, lt=1.0)
    c1: float = 1.0
    c2: float = 1.0
    c3: float = 1.0
    mu_link: float = Field(0.5, ge=0.0, le=1.0)
    mu_node: float = Field(0.3, ge=0.0, le=1.0)
    mu_weight_shift: float = Field(0.5, ge=0.0, le=1.0)
    mu_weight_random: float = Field(0.6, ge=0.0, le=1.0)
    mu_toggle: float = Field(0.05, ge=0.0, le=1.0)
    weight_shift: float = Field(0.4, ge=0.0)
    weight_random: float = Field(1.0, ge=0.0)

    def to_config(self) -> RhneatConfig:
        neat = NeatParams(
            c1=self.c1,
            c2=self.c2,
            c3=self.c3,
            compatibility_threshold=self.compatibility_threshold,
            mu_link=self.mu_link,
            mu_node=self.mu_node,
            mu_weight_shift=self.mu_weight_shift,
            mu_weight_random=self.mu_weight_random,
            mu_toggle=self.mu_toggle,
            weight_shift=self.weight_shift,
            weight_random=self.weight_random,
            population_size=self.population_size,
            discard_rate=self.discard_rate,
            blended_crossover=self.blended_crossover,
        )
        return RhneatConfig(
            neat=neat,
            rollout_length=self.rollout_length,
            speciation=self.speciation,
            population_carrying=self.population_carrying,
            reward_mode=self.reward_mode,
            gamma=self.gamma,
            fitness_mode=self.fitness_mode,
            alpha=self.alpha,
            activation=self.activation,
            use_bias=self.use_bias,
            distance_metric=self.distance_metric,
        )


class RheaSettings(BaseModel):
    model_config = ConfigDict(extra="forbid")

    population_size: int = Field(10, ge=2)
    individual_length: int = Field(15, ge=1)
    tournament_size: int = Field(2, ge=1)
    elitism: int = Field(1, ge=0)
    mutation_rate: float | None = Field(None, ge=0.0, le=1.0)

    def to_config(self) -> RheaConfig:
        return RheaConfig(**self.model_dump())


class MctsSettings(BaseModel):
    model_config = ConfigDict(extra="forbid")

    exploration: float = Field(math.sqrt(2), ge=0.0)
    rollout_depth: int = Field(15, ge=1)

    def to_config(self) -> MctsConfig:
        return MctsConfig(**self.model_dump())


class AgentSpec(BaseModel):
    """One named agent with its settings and the ablation groups it belongs to"""

    model_config = ConfigDict(extra="forbid")

    id: str = Field(min_length=1)
    kind: AgentKind
    groups: list[str] = Field(default_factory=list)
    rhneat: RhneatSettings = Field(default_factory=RhneatSettings)
    rhea: RheaSettings = Field(default_factory=RheaSettings)
    mcts: MctsSettings = Field(default_factory=MctsSettings)

    @field_validator("id")
    @classmethod
    def _no_commas(cls, v: str) -> str:
        if "," in v or "\n" in v:
            raise ValueError("agent id may not contain commas or newlines")
        return v

    def build(self, seed: int | None = None) -> Agent:
        return create_agent(
            self.kind,
            seed=seed,
            name=self.id,
            rhneat=self.rhneat.to_config(),
            rhea=self.rhea.to_config(),
            mcts=self.mcts.to_config(),
        )


@dataclass(frozen=True, order=True)
class EpisodeKey:
    agent: str
    game: str
    level: int
    repetition: int


class ExperimentConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: str = "experiment"
    games: list[str] = Field(default_factory=lambda: list(SUITE), min_length=1)
    levels: list[int] = Field(default_factory=lambda: list(range(LEVEL_COUNT)), min_length=1)
    repetitions: int = Field(20, ge=1)
    agents: list[AgentSpec] = Field(min_length=1)
    base_seed: int = Field(0, ge=0)
    budget: int = Field(DEFAULT_BUDGET, ge=0)
    output_dir: Path | None = None
    raw_file: str = "episodes.csv"
    record_wall_time: bool = False
    formats: list[Literal["csv", "markdown"]] = Field(default_factory=lambda: ["csv", "markdown"])

    @field_validator("games")
    @classmethod
    def _known_games(cls, games: list[str]) -> list[str]:
        unknown = [g for g in games if g not in GAMES]
        if unknown:
            raise ValueError(f"unknown games: {unknown}")
        return games

    @field_validator("levels")
    @classmethod
    def _level_range(cls, levels: list[int]) -> list[int]:
        bad = [k for k in levels if not 0 <= k < LEVEL_COUNT]
        if bad:
            raise ValueError(f"levels outside [0, {LEVEL_COUNT}): {bad}")
        return levels

    @model_validator(mode="after")
    def _unique_agents(self) -> "ExperimentConfig":
        ids = [a.id for a in self.agents]
        if len(set(ids)) != len(ids):
            raise ValueError(f"duplicate agent ids: {ids}")
        return self

    def agent(self, agent_id: str) -> AgentSpec:
        for spec in self.agents:
            if spec.id == agent_id:
                return spec
        raise ConfigurationError(f"No agent {agent_id!r} in experiment", details={"agent": agent_id})

    def episodes(self) -> Iterator[EpisodeKey]:
        """Every episode of the experiment, ordered by agent, game, level, repetition"""
        for spec in self.agents:
            for game in self.games:
                for level in self.levels:
                    for rep in range(self.repetitions):
                        yield EpisodeKey(spec.id, game, level, rep)

    @property
    def episode_count(self) -> int:
        return len(self.agents) * len(self.games) * len(self.levels) * self.repetitions

    @classmethod
    def from_mapping(cls, data: Any) -> "ExperimentConfig":
        if not isinstance(data, dict):
            raise ConfigurationError("Experiment config must be a mapping")
        try:
            return cls.model_validate(data)
        except ValidationError as e:
            raise ConfigurationError(
                "Invalid experiment config", details={"errors": e.errors(include_url=False)}
            )

    @classmethod
    def from_yaml(cls, path: Path | str) -> "ExperimentConfig":
        data = yaml.safe_load(Path(path).read_text())
        return cls.from_mapping(data)

    def to_yaml(self) -> str:
        data = self.model_dump(mode="json", exclude_none=True)
        return yaml.safe_dump(data, sort_keys=False)


def episode_seed(base_seed: int, game: str, level: int, repetition: int) -> int:
    """
    Seed of one episode; a pure function of its coordinates.

    The agent is not part of the seed so every agent faces the same draws.
    """
    game_key = int.from_bytes(hashlib.sha256(game.encode()).digest()[:8], "little")
    state = np.random.SeedSequence([base_seed, game_key, level, repetition]).generate_state(1, np.uint64)
    return int(state[0]) >> 1


# --- ablation grid ---


def _rhneat(agent_id: str, groups: list[str], **settings: Any) -> AgentSpec:
    return AgentSpec(id=agent_id, kind=AgentKind.RHNEAT, groups=groups, rhneat=RhneatSettings(**settings))


def ablation_agents() -> list[AgentSpec]:
    """The four component ablations, the reward and fitness variants and the baselines"""
    best = {"speciation": True, "population_carrying": True}
    return [
        _rhneat("rhneat", ["abl"], speciation=False, population_carrying=False),
        _rhneat("rhneat+sp", ["abl"], speciation=True, population_carrying=False),
        _rhneat("rhneat+cp", ["abl"], speciation=False, population_carrying=True),
        _rhneat("rhneat+sp+cp", ["abl", "reward", "fitness", "baselines"], **best),
        _rhneat("rhneat-acc", ["reward"], reward_mode=RewardMode.ACC, **best),
        _rhneat("rhneat-accdisc", ["reward"], reward_mode=RewardMode.ACCDISC, gamma=0.9, **best),
        _rhneat("rhneat-avg", ["fitness"], fitness_mode=FitnessMode.AVG, **best),
        _rhneat("rhneat-lr", ["fitness"], fitness_mode=FitnessMode.LR, alpha=0.2, **best),
        AgentSpec(id="rhea", kind=AgentKind.RHEA, groups=["baselines"]),
        AgentSpec(id="mcts", kind=AgentKind.MCTS, groups=["baselines"]),
    ]


def ablation_grid(
    group: str = "all",
    games: list[str] | None = None,
    levels: list[int] | None = None,
    repetitions: int = 20,
    base_seed: int = 0,
) -> ExperimentConfig:
    if group not in ABLATION_GROUPS:
        raise ConfigurationError(f"Unknown ablation group {group!r}", details={"known": list(ABLATION_GROUPS)})
    agents = [a for a in ablation_agents() if group == "all" or group in a.groups]
    return ExperimentConfig(
        name=f"ablation-{group}",
        games=list(games or SUITE),
        levels=list(levels if levels is not None else range(LEVEL_COUNT)),
        repetitions=repetitions,
        agents=agents,
        base_seed=base_seed,
    )
