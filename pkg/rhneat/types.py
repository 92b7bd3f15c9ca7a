"""
Type definitions for rhneat

Shared enums, error codes and the parameter dataclasses of the planners.
Defaults are the published rhNEAT settings.
"""

import math
from dataclasses import dataclass, field
from enum import Enum, IntEnum


class LogLevel(str, Enum):
    """Log levels for rhneat tools"""

    DEBUG = "debug"
    INFO = "info"
    WARN = "warn"
    ERROR = "error"


class Status(str, Enum):
    """Game status as seen by agents"""

    ONGOING = "ongoing"
    WIN = "win"
    LOSS = "loss"


class Category(str, Enum):
    """Sprite categories observable by agents, in feature order"""

    NPC = "npc"
    IMMOVABLE = "immovable"
    MOVABLE = "movable"
    RESOURCE = "resource"
    PORTAL = "portal"
    FROM_AVATAR = "from_avatar"


CATEGORY_ORDER: tuple[Category, ...] = tuple(Category)


class Action(IntEnum):
    """Action vocabulary; each game exposes an ordered subset"""

    LEFT = 0
    RIGHT = 1
    UP = 2
    DOWN = 3
    NIL = 4
    USE = 5


class NodeKind(str, Enum):
    INPUT = "input"
    OUTPUT = "output"
    HIDDEN = "hidden"


class AgentKind(str, Enum):
    """Planner families available to the harness"""

    RHNEAT = "rhneat"
    RHEA = "rhea"
    MCTS = "mcts"
    RANDOM = "random"


class RewardMode(str, Enum):
    """How a rollout's state evaluations become one reward"""

    LAST = "last"
    ACC = "acc"
    ACCDISC = "accdisc"


class FitnessMode(str, Enum):
    """How successive rewards of one individual combine into its fitness"""

    DIRECT = "direct"
    AVG = "avg"
    LR = "lr"


class Activation(str, Enum):
    TANH = "tanh"
    SIGMOID = "sigmoid"


class DistanceMetric(str, Enum):
    EUCLIDEAN = "euclidean"
    MANHATTAN = "manhattan"


# Type aliases
FeatureVector = tuple[float, ...]

# Heuristic values for terminal states
WIN_VALUE = 1e6
LOSS_VALUE = -1e6

# Published budget and horizon
DEFAULT_BUDGET = 1000
DEFAULT_ROLLOUT_LENGTH = 15
DEFAULT_POPULATION = 10

# Error codes (module-level constants)
ERR_INVALID_GENOME = "ERR_INVALID_GENOME"
ERR_CYCLE = "ERR_CYCLE"
ERR_UNKNOWN_GAME = "ERR_UNKNOWN_GAME"
ERR_UNKNOWN_LEVEL = "ERR_UNKNOWN_LEVEL"
ERR_INVALID_ACTION = "ERR_INVALID_ACTION"
ERR_LEVEL_FORMAT = "ERR_LEVEL_FORMAT"
ERR_SCHEMA_CHANGED = "ERR_SCHEMA_CHANGED"
ERR_BUDGET_EXHAUSTED = "ERR_BUDGET_EXHAUSTED"
ERR_MISCONFIGURED = "ERR_MISCONFIGURED"
ERR_INPUT_SIZE = "ERR_INPUT_SIZE"


def _require(condition: bool, message: str, **details: object) -> None:
    if not condition:
        from .exceptions import ConfigurationError

        raise ConfigurationError(message, details=dict(details))


@dataclass(frozen=True)
class NeatParams:
    """NEAT parameters (distance, speciation, mutation, truncation)"""

    c1: float = 1.0
    c2: float = 1.0
    c3: float = 1.0
    compatibility_threshold: float = 4.0
    mu_link: float = 0.5
    mu_node: float = 0.3
    mu_weight_shift: float = 0.5
    mu_weight_random: float = 0.6
    mu_toggle: float = 0.05
    weight_shift: float = 0.4
    weight_random: float = 1.0
    population_size: int = DEFAULT_POPULATION
    discard_rate: float = 0.2
    blended_crossover: bool = False

    def __post_init__(self) -> None:
        """Validate parameters after initialization"""
        for name in ("mu_link", "mu_node", "mu_weight_shift", "mu_weight_random", "mu_toggle"):
            value = getattr(self, name)
            _require(0.0 <= value <= 1.0, f"{name} must be a probability", **{name: value})
        # zero strength is accepted as the degenerate range
        _require(self.weight_shift >= 0.0, "weight_shift must be non-negative")
        _require(self.weight_random >= 0.0, "weight_random must be non-negative")
        _require(0.0 < self.discard_rate < 1.0, "discard_rate must lie in (0, 1)")
        _require(self.population_size >= 2, "population_size must be at least 2")
        _require(self.compatibility_threshold > 0.0, "compatibility_threshold must be positive")
        _require(min(self.c1, self.c2, self.c3) >= 0.0, "distance coefficients must be >= 0")


@dataclass(frozen=True)
class RhneatConfig:
    """Configuration of the rolling horizon NEAT planner"""

    neat: NeatParams = field(default_factory=NeatParams)
    rollout_length: int = DEFAULT_ROLLOUT_LENGTH
    speciation: bool = True
    population_carrying: bool = True
    reward_mode: RewardMode = RewardMode.LAST
    gamma: float = 0.9
    fitness_mode: FitnessMode = FitnessMode.DIRECT
    alpha: float = 0.2
    activation: Activation = Activation.TANH
    use_bias: bool = False
    distance_metric: DistanceMetric = DistanceMetric.EUCLIDEAN

    def __post_init__(self) -> None:
        """Validate configuration after initialization"""
        _require(self.rollout_length >= 1, "rollout_length must be at least 1")
        _require(0.0 < self.gamma <= 1.0, "gamma must lie in (0, 1]", gamma=self.gamma)
        _require(0.0 < self.alpha <= 1.0, "alpha must lie in (0, 1]", alpha=self.alpha)

    @property
    def generation_cost(self) -> int:
        """FM calls needed to fund one full evaluation pass"""
        return self.neat.population_size * self.rollout_length


@dataclass(frozen=True)
class RheaConfig:
    """Configuration of the rolling horizon evolutionary baseline"""

    population_size: int = DEFAULT_POPULATION
    individual_length: int = DEFAULT_ROLLOUT_LENGTH
    tournament_size: int = 2
    elitism: int = 1
    mutation_rate: float | None = None

    def __post_init__(self) -> None:
        _require(self.population_size >= 2, "population_size must be at least 2")
        _require(self.individual_length >= 1, "individual_length must be at least 1")
        _require(1 <= self.tournament_size <= self.population_size, "bad tournament_size")
        _require(0 <= self.elitism < self.population_size, "elitism must be below population_size")
        if self.mutation_rate is not None:
            _require(0.0 <= self.mutation_rate <= 1.0, "mutation_rate must be a probability")

    @property
    def gene_mutation_rate(self) -> float:
        """Per-gene mutation probability, 1/length unless set"""
        if self.mutation_rate is None:
            return 1.0 / self.individual_length
        return self.mutation_rate


@dataclass(frozen=True)
class MctsConfig:
    """Configuration of the UCT baseline"""

    exploration: float = math.sqrt(2)
    rollout_depth: int = DEFAULT_ROLLOUT_LENGTH
    epsilon: float = 1e-6

    def __post_init__(self) -> None:
        _require(self.exploration >= 0.0, "exploration must be non-negative")
        _require(self.rollout_depth >= 1, "rollout_depth must be at least 1")

