"""
Collect: dense rewards.

Legend: ``b`` butterfly (Movable, random walk), ``f`` flower (Resource).
Touching a butterfly scores +2, a flower +1. The game is won once every
butterfly is caught and lost at the tick cap.
"""

from dataclasses import replace

import numpy as np

from ..types import Action, Category, Status
from .base import DELTAS, GameState, GameTraits, GridGame

WALK_PROBABILITY = 0.5
BUTTERFLY_SCORE = 2.0
FLOWER_SCORE = 1.0

_DIRECTIONS = (Action.LEFT, Action.RIGHT, Action.UP, Action.DOWN)


class CollectGame(GridGame):
    game_id = "collect"
    traits = GameTraits(
        actions=(Action.LEFT, Action.RIGHT, Action.UP, Action.DOWN, Action.NIL),
        declared=frozenset({Category.MOVABLE, Category.RESOURCE}),
        stochastic=True,
    )
    legend = {
        "b": (Category.MOVABLE, "butterfly"),
        "f": (Category.RESOURCE, "flower"),
    }

    def _step(self, state: GameState, action: Action, rng: np.random.Generator | None) -> GameState:
        assert rng is not None
        avatar = self.move_avatar(state, action)
        score = state.score
        sprites = list(state.sprites)

        def catch(i: int) -> None:
            nonlocal score
            s = sprites[i]
            score += BUTTERFLY_SCORE if s.kind == "butterfly" else FLOWER_SCORE
            sprites[i] = replace(s, alive=False)

        for i, s in enumerate(sprites):
            if s.alive and s.position == avatar.position:
                catch(i)

        occupied = {s.position for s in sprites if s.alive and s.kind == "butterfly"}
        for i, s in enumerate(sprites):
            # draws are taken for every sprite slot so the stream is position independent
            walk, direction = rng.random(), int(rng.integers(len(_DIRECTIONS)))
            if not s.alive or s.kind != "butterfly" or walk >= WALK_PROBABILITY:
                continue
            dx, dy = DELTAS[_DIRECTIONS[direction]]
            target = (s.x + dx, s.y + dy)
            if not state.level.open_cell(*target) or target in occupied:
                continue
            occupied.discard(s.position)
            occupied.add(target)
            sprites[i] = s.moved_to(*target)
            if target == avatar.position:
                catch(i)
                occupied.discard(target)

        nxt = replace(state, avatar=avatar, sprites=tuple(sprites), score=score)
        if not nxt.live(kind="butterfly"):
            nxt = self.finish(nxt, Status.WIN)
        return nxt
