"""
Race: a single sparse reward.

Legend: ``G`` goal (Portal), ``r`` racer (NPC), ``F`` racer finish mark.
The racer moves right one cell every ``racer_period`` ticks on its own
lane. Reaching the goal first scores +1 and wins; the racer reaching its
finish first is a loss. Level parameter: ``; racer_period=<n>``.
"""

from dataclasses import replace

import numpy as np

from ..types import Action, Category, Status
from .base import GameState, GameTraits, GridGame

DEFAULT_RACER_PERIOD = 2


class RaceGame(GridGame):
    game_id = "race"
    traits = GameTraits(
        actions=(Action.LEFT, Action.RIGHT, Action.UP, Action.DOWN, Action.NIL),
        declared=frozenset({Category.NPC, Category.PORTAL}),
    )
    legend = {
        "G": (Category.PORTAL, "goal"),
        "r": (Category.NPC, "racer"),
        "F": "finish",
    }

    def _step(self, state: GameState, action: Action, rng: np.random.Generator | None) -> GameState:
        avatar = self.move_avatar(state, action)
        nxt = replace(state, avatar=avatar)
        if any(g.position == avatar.position for g in state.live(Category.PORTAL)):
            return self.finish(replace(nxt, score=state.score + 1.0), Status.WIN)

        period = state.level.param("racer_period", DEFAULT_RACER_PERIOD)
        if state.tick % period:
            return nxt

        finish = set(state.level.marked("finish"))
        sprites = list(state.sprites)
        lost = False
        for i, s in enumerate(sprites):
            if s.kind != "racer" or not s.alive:
                continue
            if state.level.open_cell(s.x + 1, s.y):
                s = sprites[i] = s.moved_to(s.x + 1, s.y)
            lost = lost or s.position in finish
        nxt = replace(nxt, sprites=tuple(sprites))
        return self.finish(nxt, Status.LOSS) if lost else nxt
