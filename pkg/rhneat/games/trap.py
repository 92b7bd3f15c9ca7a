"""
Trap: a deceptive reward landscape.

Legend: ``g`` gem (Resource, +1, counted in r1), ``m`` block (Movable),
``O`` exit (Portal), ``i`` rock (Immovable), ``h`` hazard spawn mark,
``t`` trigger mark.

Picking up a gem or stepping on a trigger releases hazards (NPC) at every
spawn mark. Released hazards chase the avatar every other tick and any
contact is a loss. Pushing the block onto the exit scores +5 and wins.
"""

from dataclasses import replace

import numpy as np

from ..types import Action, Category, Status
from .base import DELTAS, GameState, GameTraits, GridGame, SpriteObservation, step_toward

GEM_SCORE = 1.0
EXIT_SCORE = 5.0
HAZARD_PERIOD = 2


class TrapGame(GridGame):
    game_id = "trap"
    traits = GameTraits(
        actions=(Action.LEFT, Action.RIGHT, Action.UP, Action.DOWN, Action.NIL),
        declared=frozenset({Category.RESOURCE, Category.MOVABLE, Category.PORTAL, Category.IMMOVABLE}),
        resource_count=1,
    )
    legend = {
        "g": (Category.RESOURCE, "gem"),
        "m": (Category.MOVABLE, "block"),
        "O": (Category.PORTAL, "exit"),
        "i": (Category.IMMOVABLE, "rock"),
        "h": "hazard",
        "t": "trigger",
    }

    def _solid(self, state: GameState, sprites: list[SpriteObservation]) -> set[tuple[int, int]]:
        return {s.position for s in sprites if s.alive and s.kind in ("rock", "block", "gem")}

    def _push(
        self, state: GameState, action: Action, sprites: list[SpriteObservation]
    ) -> tuple[int, int]:
        """Move the avatar, pushing a block one cell if the cell behind it is free"""
        avatar = state.avatar
        delta = DELTAS.get(action)
        if delta is None:
            return avatar.position
        target = (avatar.x + delta[0], avatar.y + delta[1])
        if not state.level.open_cell(*target):
            return avatar.position
        for i, s in enumerate(sprites):
            if not s.alive or s.position != target:
                continue
            if s.kind == "rock":
                return avatar.position
            if s.kind == "block":
                behind = (target[0] + delta[0], target[1] + delta[1])
                blocked = self._solid(state, sprites) | {
                    h.position for h in sprites if h.alive and h.kind == "hazard"
                }
                if not state.level.open_cell(*behind) or behind in blocked:
                    return avatar.position
                sprites[i] = s.moved_to(*behind)
        return target

    def _release(self, state: GameState, sprites: list[SpriteObservation]) -> None:
        base = max((s.sid for s in sprites), default=-1) + 1
        for k, (x, y) in enumerate(state.level.marked("hazard")):
            sprites.append(SpriteObservation(Category.NPC, x, y, "hazard", True, base + k))

    def _step(self, state: GameState, action: Action, rng: np.random.Generator | None) -> GameState:
        sprites = list(state.sprites)
        x, y = self._push(state, action, sprites)
        avatar = state.avatar
        delta = DELTAS.get(action)
        if delta is not None:
            avatar = replace(avatar, orientation=delta)
        avatar = replace(avatar, x=x, y=y)
        score = state.score
        released = state.counter("released")

        for i, s in enumerate(sprites):
            if s.alive and s.kind == "gem" and s.position == avatar.position:
                sprites[i] = replace(s, alive=False)
                score += GEM_SCORE
                avatar = avatar.with_resource(0, 1)
                if not released:
                    self._release(state, sprites)
                    released = 1
        if not released and avatar.position in state.level.marked("trigger"):
            self._release(state, sprites)
            released = 1

        exits = {s.position for s in sprites if s.alive and s.kind == "exit"}
        nxt = replace(state, avatar=avatar, sprites=tuple(sprites), score=score)
        nxt = nxt.with_counters(released=released)
        if any(s.alive and s.kind == "block" and s.position in exits for s in sprites):
            return self.finish(replace(nxt, score=score + EXIT_SCORE), Status.WIN)

        hazards = [i for i, s in enumerate(sprites) if s.alive and s.kind == "hazard"]
        if any(sprites[i].position == avatar.position for i in hazards):
            return self.finish(nxt, Status.LOSS)
        if hazards and state.tick % HAZARD_PERIOD == 0:
            solid = self._solid(state, sprites) | {s.position for s in sprites if s.alive and s.kind == "exit"}
            for i in hazards:
                h = sprites[i]
                others = {sprites[j].position for j in hazards if j != i}

                def passable(cell: tuple[int, int]) -> bool:
                    return state.level.open_cell(*cell) and cell not in solid and cell not in others

                sprites[i] = h.moved_to(*step_toward(h.position, avatar.position, passable))
            nxt = replace(nxt, sprites=tuple(sprites))
            if any(sprites[i].position == avatar.position for i in hazards):
                return self.finish(nxt, Status.LOSS)
        return nxt
