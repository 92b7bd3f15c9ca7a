"""
Survive: health points and chasing enemies.

Legend: ``z`` zombie (NPC), ``H`` health pack (Resource), ``i`` grave
(Immovable), ``p`` extra pack spawn mark.

Zombies step toward the avatar with probability 0.5 and wander otherwise;
each one sharing the avatar's cell costs 2 hp. A pack restores 3 hp, scores
+1 and respawns at the next spawn cell. Surviving to the tick cap wins.
"""

from dataclasses import replace

import numpy as np

from ..types import Action, Category, Status
from .base import DELTAS, GameState, GameTraits, GridGame, step_toward

MAX_HP = 10
ZOMBIE_DAMAGE = 2
PACK_HEAL = 3
PACK_SCORE = 1.0
CHASE_PROBABILITY = 0.5

_DIRECTIONS = (Action.LEFT, Action.RIGHT, Action.UP, Action.DOWN)


class SurviveGame(GridGame):
    game_id = "survive"
    traits = GameTraits(
        actions=(Action.LEFT, Action.RIGHT, Action.UP, Action.DOWN, Action.NIL),
        declared=frozenset({Category.NPC, Category.RESOURCE, Category.IMMOVABLE}),
        has_hp=True,
        max_hp=MAX_HP,
        stochastic=True,
        cap_status=Status.WIN,
    )
    legend = {
        "z": (Category.NPC, "zombie"),
        "H": (Category.RESOURCE, "health"),
        "i": (Category.IMMOVABLE, "grave"),
        "p": "spawn",
    }

    def on_load(self, state: GameState) -> GameState:
        # packs respawn over the cells they started on, then the spawn marks
        packs = tuple(s.position for s in state.sprites if s.kind == "health")
        level = replace(state.level, marks={**state.level.marks, "pack": packs})
        return replace(state, level=level)

    @staticmethod
    def spawn_cells(state: GameState) -> list[tuple[int, int]]:
        return list(state.level.marked("pack")) + list(state.level.marked("spawn"))

    def _step(self, state: GameState, action: Action, rng: np.random.Generator | None) -> GameState:
        assert rng is not None
        graves = {s.position for s in state.sprites if s.kind == "grave"}
        avatar = self.move_avatar(state, action, blocked=graves)
        sprites = list(state.sprites)
        score = state.score
        cursor = state.counter("spawn_cursor")

        for i, s in enumerate(sprites):
            if not (s.alive and s.kind == "health" and s.position == avatar.position):
                continue
            avatar = replace(avatar, hp=min(avatar.max_hp, avatar.hp + PACK_HEAL))
            score += PACK_SCORE
            cells = self.spawn_cells(state)
            taken = {p.position for p in sprites if p.alive and p.kind == "health"}
            for _ in range(len(cells)):
                cursor = (cursor + 1) % len(cells)
                cell = cells[cursor]
                if cell != avatar.position and cell not in taken:
                    sprites[i] = s.moved_to(*cell)
                    break
            else:
                sprites[i] = replace(s, alive=False)

        zombies = [i for i, s in enumerate(sprites) if s.alive and s.kind == "zombie"]
        for i in zombies:
            chase, direction = rng.random(), int(rng.integers(len(_DIRECTIONS)))
            z = sprites[i]
            others = {sprites[j].position for j in zombies if j != i}

            def passable(cell: tuple[int, int]) -> bool:
                return state.level.open_cell(*cell) and cell not in graves and cell not in others

            if chase < CHASE_PROBABILITY:
                target = step_toward(z.position, avatar.position, passable)
            else:
                dx, dy = DELTAS[_DIRECTIONS[direction]]
                target = (z.x + dx, z.y + dy)
                if not passable(target):
                    target = z.position
            sprites[i] = z.moved_to(*target)

        contacts = sum(1 for i in zombies if sprites[i].position == avatar.position)
        if contacts:
            avatar = replace(avatar, hp=max(0, avatar.hp - ZOMBIE_DAMAGE * contacts))

        nxt = replace(state, avatar=avatar, sprites=tuple(sprites), score=score)
        nxt = nxt.with_counters(spawn_cursor=cursor)
        if avatar.hp <= 0:
            return self.finish(nxt, Status.LOSS)
        return nxt
