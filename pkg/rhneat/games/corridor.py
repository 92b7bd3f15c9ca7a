"""
Corridor: one-row toy game with the goal inside the planning horizon.

Legend: ``G`` goal (Portal). Actions LEFT, RIGHT, NIL. Reaching the goal
scores +1 and wins.
"""

from dataclasses import replace

import numpy as np

from ..types import Action, Category, Status
from .base import GameState, GameTraits, GridGame


class CorridorGame(GridGame):
    game_id = "corridor"
    traits = GameTraits(
        actions=(Action.LEFT, Action.RIGHT, Action.NIL),
        declared=frozenset({Category.PORTAL}),
        tick_cap=100,
    )
    legend = {"G": (Category.PORTAL, "goal")}

    def _step(self, state: GameState, action: Action, rng: np.random.Generator | None) -> GameState:
        avatar = self.move_avatar(state, action)
        nxt = replace(state, avatar=avatar)
        if any(g.position == avatar.position for g in state.live(Category.PORTAL)):
            return self.finish(replace(nxt, score=state.score + 1.0), Status.WIN)
        return nxt
