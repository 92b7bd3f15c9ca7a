import numpy as np

from ..games.base import GameState
from .budget import MeteredModel


class RandomAgent:
    """Uniformly random legal actions; spends no budget"""

    def __init__(self, seed: int | None = None, name: str = "random"):
        self.rng = np.random.default_rng(seed)
        self.name = name

    def act(self, state: GameState, model: MeteredModel) -> int:
        return int(self.rng.integers(model.action_count))
