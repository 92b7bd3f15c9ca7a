"""
Shoot: avatar-produced sprites.

Legend: ``a`` alien spawn mark. Aliens (NPC) appear at tick 10, sweep
sideways every ``alien_period`` ticks and step down when the formation
touches a wall. USE fires a missile (FromAvatar) when none is in flight;
missiles climb one cell per tick. Each hit scores +1. Destroying every
alien wins; an alien reaching the avatar's row is a loss.
"""

from dataclasses import replace

import numpy as np

from ..types import Action, Category, Status
from .base import GameState, GameTraits, GridGame, SpriteObservation

SPAWN_TICK = 10
DEFAULT_ALIEN_PERIOD = 2


class ShootGame(GridGame):
    game_id = "shoot"
    traits = GameTraits(
        actions=(Action.LEFT, Action.RIGHT, Action.NIL, Action.USE),
        declared=frozenset({Category.FROM_AVATAR}),
        faces_movement=False,
    )
    legend = {"a": "alien"}
    initial_orientation = (0, -1)

    def _spawn(self, state: GameState, sprites: list[SpriteObservation]) -> None:
        base = max((s.sid for s in sprites), default=-1) + 1
        for k, (x, y) in enumerate(state.level.marked("alien")):
            sprites.append(SpriteObservation(Category.NPC, x, y, "alien", True, base + k))

    @staticmethod
    def _hits(sprites: list[SpriteObservation]) -> int:
        hits = 0
        for i, m in enumerate(sprites):
            if not (m.alive and m.kind == "missile"):
                continue
            for j, a in enumerate(sprites):
                if a.alive and a.kind == "alien" and a.position == m.position:
                    sprites[i] = replace(m, alive=False)
                    sprites[j] = replace(a, alive=False)
                    hits += 1
                    break
        return hits

    def _step(self, state: GameState, action: Action, rng: np.random.Generator | None) -> GameState:
        level = state.level
        avatar = self.move_avatar(state, action)
        # dead missiles are dropped so the sprite tuple does not grow without bound
        sprites = [s for s in state.sprites if s.alive or s.kind != "missile"]

        for i, s in enumerate(sprites):
            if s.alive and s.kind == "missile":
                if level.open_cell(s.x, s.y - 1):
                    sprites[i] = s.moved_to(s.x, s.y - 1)
                else:
                    sprites[i] = replace(s, alive=False)
        in_flight = any(s.alive and s.kind == "missile" for s in sprites)
        if action is Action.USE and not in_flight and level.open_cell(avatar.x, avatar.y - 1):
            sid = max((s.sid for s in sprites), default=-1) + 1
            sprites.append(
                SpriteObservation(Category.FROM_AVATAR, avatar.x, avatar.y - 1, "missile", True, sid)
            )
        hits = self._hits(sprites)

        spawned = state.counter("spawned")
        direction = state.counter("direction", 1)
        if not spawned and state.tick >= SPAWN_TICK:
            self._spawn(state, sprites)
            spawned = 1
        elif spawned and state.tick % level.param("alien_period", DEFAULT_ALIEN_PERIOD) == 0:
            aliens = [i for i, s in enumerate(sprites) if s.alive and s.kind == "alien"]
            if any(not level.open_cell(sprites[i].x + direction, sprites[i].y) for i in aliens):
                direction = -direction
                for i in aliens:
                    sprites[i] = sprites[i].moved_to(sprites[i].x, sprites[i].y + 1)
            else:
                for i in aliens:
                    sprites[i] = sprites[i].moved_to(sprites[i].x + direction, sprites[i].y)
            hits += self._hits(sprites)

        nxt = replace(state, avatar=avatar, sprites=tuple(sprites), score=state.score + hits)
        nxt = nxt.with_counters(spawned=spawned, direction=direction)
        aliens_left = nxt.live(kind="alien")
        if any(a.y >= avatar.y for a in aliens_left):
            return self.finish(nxt, Status.LOSS)
        if spawned and not aliens_left:
            return self.finish(nxt, Status.WIN)
        return nxt
