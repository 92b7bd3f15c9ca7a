"""
Protocol interfaces for rhneat.

Games, metered views of games and agents are plugged together through
these protocols, so the planners never depend on a concrete game class.
"""

from typing import TYPE_CHECKING, Any, Callable, Protocol, runtime_checkable

if TYPE_CHECKING:
    from .games.base import GameState
    from .neat.genome import Genome


@runtime_checkable
class ForwardModel(Protocol):
    """
    Stepwise simulator an agent plans with.

    ``advance`` never mutates its input and returns a terminal state
    unchanged. ``copy`` yields an independent state.
    """

    @property
    def action_count(self) -> int: ...

    def copy(self, state: "GameState") -> "GameState": ...

    def advance(self, state: "GameState", action: int) -> "GameState": ...


@runtime_checkable
class BudgetedModel(ForwardModel, Protocol):
    """Forward model whose advance calls are charged to a meter"""

    @property
    def remaining(self) -> int: ...


@runtime_checkable
class Agent(Protocol):
    """
    Decision-making agent.

    ``act`` is called once per real game tick with the current state and a
    budgeted forward model; it returns an action index in
    [0, model.action_count).
    """

    name: str

    def act(self, state: "GameState", model: BudgetedModel) -> int: ...


# Callback types
EvaluateCallback = Callable[["Genome"], None]


def validate_forward_model_implementation(model: Any) -> bool:
    """
    Validate that an object conforms to ForwardModel.

    Example:
        >>> from rhneat.games import get_game
        >>> assert validate_forward_model_implementation(get_game("collect"))
    """
    return isinstance(model, ForwardModel)


def validate_agent_implementation(agent: Any) -> bool:
    """Validate that an object conforms to Agent."""
    return isinstance(agent, Agent)


__all__ = [
    "Agent",
    "BudgetedModel",
    "EvaluateCallback",
    "ForwardModel",
    "validate_agent_implementation",
    "validate_forward_model_implementation",
]
