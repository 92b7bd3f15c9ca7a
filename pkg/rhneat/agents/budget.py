"""
Forward-model call budget.
"""

from ..exceptions import BudgetExhaustedError, ConfigurationError
from ..games.base import GameState, GridGame
from ..types import DEFAULT_BUDGET


class BudgetMeter:
    """Counts forward-model calls for one decision; never overdraws."""

    def __init__(self, limit: int = DEFAULT_BUDGET):
        if limit < 0:
            raise ConfigurationError("Budget limit must be non-negative", details={"limit": limit})
        self.limit = limit
        self.used = 0

    @property
    def remaining(self) -> int:
        return self.limit - self.used

    @property
    def exhausted(self) -> bool:
        return self.used >= self.limit

    def can_afford(self, calls: int) -> bool:
        return self.remaining >= calls

    def spend(self, calls: int = 1) -> None:
        if self.used + calls > self.limit:
            raise BudgetExhaustedError(self.limit)
        self.used += calls

    def __repr__(self) -> str:
        return f"BudgetMeter(used={self.used}, limit={self.limit})"


class MeteredModel:
    """A game whose advance calls are charged to a meter"""

    def __init__(self, game: GridGame, meter: BudgetMeter):
        self.game = game
        self.meter = meter

    @property
    def action_count(self) -> int:
        return self.game.action_count

    @property
    def remaining(self) -> int:
        return self.meter.remaining

    def copy(self, state: GameState) -> GameState:
        return self.game.copy(state)

    def advance(self, state: GameState, action: int) -> GameState:
        self.meter.spend()
        return self.game.advance(state, action)


def create_metered_model(game: GridGame, limit: int = DEFAULT_BUDGET) -> MeteredModel:
    return MeteredModel(game, BudgetMeter(limit))
