"""
Network rollouts, reward aggregation and fitness assignment.
"""

from dataclasses import dataclass

from ..features import FeatureSchema, extract
from ..games.base import GameState, evaluate_state
from ..phenotype import Network, activate, select_action
from ..types import DistanceMetric, FitnessMode, RewardMode
from .budget import MeteredModel


@dataclass(frozen=True)
class RolloutResult:
    evaluations: tuple[float, ...]
    steps: int
    terminal: bool
    truncated: bool = False
    final_state: GameState | None = None


@dataclass(frozen=True)
class IndividualStats:
    fitness: float = 0.0
    evaluations: int = 0


def rollout(
    net: Network,
    state: GameState,
    length: int,
    schema: FeatureSchema,
    model: MeteredModel,
    use_bias: bool = False,
    metric: DistanceMetric = DistanceMetric.EUCLIDEAN,
) -> RolloutResult:
    """
    Play the network's own actions forward from ``state``.

    Stops after ``length`` steps, at a terminal state, or when the meter runs
    dry (``truncated``). Records the heuristic value of every visited state.
    """
    evaluations: list[float] = []
    current = state
    truncated = False
    n_actions = model.action_count
    while len(evaluations) < length and not current.is_terminal:
        if model.meter.exhausted:
            truncated = True
            break
        inputs = extract(current, schema, strict=False, metric=metric)
        if use_bias:
            inputs = inputs + (1.0,)
        action = select_action(activate(net, inputs), n_actions)
        current = model.advance(current, action)
        evaluations.append(evaluate_state(current))
    return RolloutResult(
        evaluations=tuple(evaluations),
        steps=len(evaluations),
        terminal=current.is_terminal,
        truncated=truncated,
        final_state=current,
    )


def reward(result: RolloutResult, mode: RewardMode, gamma: float = 0.9) -> float:
    if not result.evaluations:
        raise ValueError("Cannot compute the reward of an empty rollout")
    if mode is RewardMode.LAST:
        return result.evaluations[-1]
    # acc and accdisc share one summation order so gamma=1 reproduces acc exactly
    discount = 1.0 if mode is RewardMode.ACC else gamma
    total = 0.0
    factor = 1.0
    for value in result.evaluations:
        total += factor * value
        factor *= discount
    return total


def assign_fitness(
    stats: IndividualStats, value: float, mode: FitnessMode, alpha: float = 0.2
) -> IndividualStats:
    n = stats.evaluations + 1
    if mode is FitnessMode.DIRECT:
        fitness = value
    elif mode is FitnessMode.AVG:
        # incremental mean keeps repeated identical values exact
        fitness = stats.fitness + (value - stats.fitness) / n if stats.evaluations else value
    else:
        fitness = stats.fitness + alpha * (value - stats.fitness)
    return IndividualStats(fitness=fitness, evaluations=n)
