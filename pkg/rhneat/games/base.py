"""
Grid game foundation.

States are frozen values; a game is a stateless rule table that maps a
state and an action to a new state. Stochastic games keep an integer seed in
the state and draw every random number of one tick from a generator built
from it, so equal states always advance identically.
"""

import logging
from abc import ABC, abstractmethod
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field, replace
from importlib import resources
from typing import ClassVar

import numpy as np

from ..exceptions import GameError, InvalidActionError
from ..types import (
    ERR_LEVEL_FORMAT,
    ERR_UNKNOWN_LEVEL,
    LOSS_VALUE,
    WIN_VALUE,
    Action,
    Category,
    Status,
)

logger = logging.getLogger(__name__)

TICK_CAP = 500
LEVEL_COUNT = 5
RESOURCE_CAP = 20
SEED_BOUND = 2**63 - 1

WALL = "#"
AVATAR = "A"
EMPTY = (".", " ")

DELTAS: dict[Action, tuple[int, int]] = {
    Action.LEFT: (-1, 0),
    Action.RIGHT: (1, 0),
    Action.UP: (0, -1),
    Action.DOWN: (0, 1),
}

Cell = tuple[int, int]


@dataclass(frozen=True, slots=True)
class SpriteObservation:
    category: Category
    x: int
    y: int
    kind: str = ""
    alive: bool = True
    sid: int = 0

    @property
    def position(self) -> Cell:
        return (self.x, self.y)

    def moved_to(self, x: int, y: int) -> "SpriteObservation":
        return replace(self, x=x, y=y)


@dataclass(frozen=True, slots=True)
class AvatarState:
    x: int
    y: int
    orientation: tuple[int, int] = (1, 0)
    hp: int = 0
    max_hp: int = 0
    resources: tuple[int, int, int] = (0, 0, 0)
    action_count: int = 5

    @property
    def position(self) -> Cell:
        return (self.x, self.y)

    def with_resource(self, i: int, delta: int) -> "AvatarState":
        values = list(self.resources)
        values[i] = max(0, min(RESOURCE_CAP, values[i] + delta))
        return replace(self, resources=tuple(values))  # type: ignore[arg-type]


@dataclass(frozen=True)
class GameTraits:
    """Static facts about a game that agents may rely on"""

    actions: tuple[Action, ...]
    declared: frozenset[Category]
    has_hp: bool = False
    max_hp: int = 0
    resource_count: int = 0
    stochastic: bool = False
    tick_cap: int = TICK_CAP
    cap_status: Status = Status.LOSS
    faces_movement: bool = True

    @property
    def action_count(self) -> int:
        return len(self.actions)


@dataclass(frozen=True)
class Level:
    game_id: str
    index: int
    width: int
    height: int
    walls: frozenset[Cell]
    traits: GameTraits
    marks: Mapping[str, tuple[Cell, ...]] = field(default_factory=dict)
    params: Mapping[str, int] = field(default_factory=dict)

    def in_bounds(self, x: int, y: int) -> bool:
        return 0 <= x < self.width and 0 <= y < self.height

    def open_cell(self, x: int, y: int) -> bool:
        return self.in_bounds(x, y) and (x, y) not in self.walls

    def param(self, name: str, default: int) -> int:
        return self.params.get(name, default)

    def marked(self, name: str) -> tuple[Cell, ...]:
        return self.marks.get(name, ())


@dataclass(frozen=True)
class GameState:
    game_id: str
    level: Level
    tick: int
    score: float
    status: Status
    avatar: AvatarState
    sprites: tuple[SpriteObservation, ...]
    rng_seed: int = 0
    counters: Mapping[str, int] = field(default_factory=dict)

    @property
    def width(self) -> int:
        return self.level.width

    @property
    def height(self) -> int:
        return self.level.height

    @property
    def traits(self) -> GameTraits:
        return self.level.traits

    @property
    def is_terminal(self) -> bool:
        return self.status is not Status.ONGOING

    def counter(self, name: str, default: int = 0) -> int:
        return self.counters.get(name, default)

    def with_counters(self, **values: int) -> "GameState":
        merged = dict(self.counters)
        merged.update(values)
        return replace(self, counters=merged)

    def with_rng_seed(self, seed: int) -> "GameState":
        return replace(self, rng_seed=seed)

    def live(self, category: Category | None = None, kind: str | None = None) -> list[SpriteObservation]:
        return [
            s
            for s in self.sprites
            if s.alive
            and (category is None or s.category is category)
            and (kind is None or s.kind == kind)
        ]

    def categories_present(self) -> frozenset[Category]:
        return frozenset(s.category for s in self.sprites if s.alive)


def evaluate_state(state: GameState) -> float:
    """Heuristic value: +1e6 on a win, -1e6 on a loss, the score otherwise."""
    if state.status is Status.WIN:
        return WIN_VALUE
    if state.status is Status.LOSS:
        return LOSS_VALUE
    return float(state.score)


def step_toward(src: Cell, dst: Cell, passable) -> Cell:
    """Greedy one-cell step reducing the larger axis gap first"""
    dx, dy = dst[0] - src[0], dst[1] - src[1]
    sx = (dx > 0) - (dx < 0)
    sy = (dy > 0) - (dy < 0)
    options = [(sx, 0), (0, sy)] if abs(dx) >= abs(dy) else [(0, sy), (sx, 0)]
    for ox, oy in options:
        if (ox, oy) == (0, 0):
            continue
        target = (src[0] + ox, src[1] + oy)
        if passable(target):
            return target
    return src


class GridGame(ABC):
    """
    Base rule table.

    Subclasses set ``game_id``, ``traits`` and ``legend`` and implement
    ``_step``. The legend maps a level character to either
    ``(Category, kind)`` for a sprite or a string naming a mark cell.
    """

    game_id: ClassVar[str]
    traits: ClassVar[GameTraits]
    legend: ClassVar[Mapping[str, tuple[Category, str] | str]]
    initial_orientation: ClassVar[tuple[int, int]] = (1, 0)

    @property
    def action_count(self) -> int:
        return self.traits.action_count

    @property
    def max_hp(self) -> int:
        return self.traits.max_hp

    # --- level loading ---

    def level_text(self, index: int) -> str:
        if not 0 <= index < LEVEL_COUNT:
            raise GameError(
                f"Level {index} outside [0, {LEVEL_COUNT})",
                code=ERR_UNKNOWN_LEVEL,
                details={"game": self.game_id, "level": index},
            )
        path = resources.files("rhneat.games") / "levels" / f"{self.game_id}_{index}.txt"
        try:
            return path.read_text(encoding="ascii")
        except FileNotFoundError:
            raise GameError(
                f"No level file for {self.game_id} level {index}",
                code=ERR_UNKNOWN_LEVEL,
                details={"game": self.game_id, "level": index},
            )

    def parse_level(self, text: str, index: int = 0) -> tuple[Level, AvatarState, list[SpriteObservation]]:
        params: dict[str, int] = {}
        rows: list[str] = []
        for raw in text.splitlines():
            if raw.startswith(";"):
                for item in raw[1:].split():
                    key, _, value = item.partition("=")
                    try:
                        params[key] = int(value)
                    except ValueError:
                        raise GameError(
                            f"Bad level parameter {item!r}",
                            code=ERR_LEVEL_FORMAT,
                            details={"game": self.game_id, "level": index},
                        )
            elif raw.strip():
                rows.append(raw.rstrip("\n"))
        if not rows:
            raise GameError("Empty level", code=ERR_LEVEL_FORMAT, details={"game": self.game_id})

        width, height = max(len(r) for r in rows), len(rows)
        walls: set[Cell] = set()
        marks: dict[str, list[Cell]] = {}
        sprites: list[SpriteObservation] = []
        avatar_cell: Cell | None = None
        for y, row in enumerate(rows):
            for x, ch in enumerate(row.ljust(width)):
                if ch == WALL:
                    walls.add((x, y))
                elif ch == AVATAR:
                    if avatar_cell is not None:
                        raise GameError("Level has two avatars", code=ERR_LEVEL_FORMAT)
                    avatar_cell = (x, y)
                elif ch in EMPTY:
                    continue
                elif ch in self.legend:
                    entry = self.legend[ch]
                    if isinstance(entry, str):
                        marks.setdefault(entry, []).append((x, y))
                    else:
                        category, kind = entry
                        sprites.append(SpriteObservation(category, x, y, kind, True, len(sprites)))
                else:
                    raise GameError(
                        f"Unknown level character {ch!r} at ({x}, {y})",
                        code=ERR_LEVEL_FORMAT,
                        details={"game": self.game_id, "level": index},
                    )
        if avatar_cell is None:
            raise GameError("Level has no avatar", code=ERR_LEVEL_FORMAT, details={"game": self.game_id})

        level = Level(
            game_id=self.game_id,
            index=index,
            width=width,
            height=height,
            walls=frozenset(walls),
            traits=self.traits,
            marks={k: tuple(v) for k, v in marks.items()},
            params=params,
        )
        avatar = AvatarState(
            x=avatar_cell[0],
            y=avatar_cell[1],
            orientation=self.initial_orientation,
            hp=self.traits.max_hp,
            max_hp=self.traits.max_hp,
            action_count=self.traits.action_count,
        )
        return level, avatar, sprites

    def load_level(self, index: int, seed: int = 0) -> GameState:
        return self.state_from_text(self.level_text(index), index, seed)

    def state_from_text(self, text: str, index: int = 0, seed: int = 0) -> GameState:
        """Initial state of an ad-hoc level written in the level file format"""
        level, avatar, sprites = self.parse_level(text, index)
        state = GameState(
            game_id=self.game_id,
            level=level,
            tick=0,
            score=0.0,
            status=Status.ONGOING,
            avatar=avatar,
            sprites=tuple(sprites),
            rng_seed=int(seed) % SEED_BOUND,
        )
        logger.debug(f"Loaded {self.game_id} level {index} ({level.width}x{level.height})")
        return self.on_load(state)

    def on_load(self, state: GameState) -> GameState:
        return state

    # --- forward model ---

    def copy(self, state: GameState) -> GameState:
        # states are immutable; a shallow replace is an independent value
        return replace(state)

    def advance(self, state: GameState, action: int) -> GameState:
        if not 0 <= action < self.action_count:
            raise InvalidActionError(action, self.action_count)
        if state.is_terminal:
            return state

        rng = np.random.default_rng(state.rng_seed) if self.traits.stochastic else None
        nxt = self._step(replace(state, tick=state.tick + 1), self.traits.actions[action], rng)
        if rng is not None:
            nxt = replace(nxt, rng_seed=int(rng.integers(SEED_BOUND)))
        if nxt.status is Status.ONGOING and nxt.tick >= self.traits.tick_cap:
            nxt = replace(nxt, status=self.traits.cap_status)
        return nxt

    @abstractmethod
    def _step(self, state: GameState, action: Action, rng: np.random.Generator | None) -> GameState:
        """Apply one tick of rules; ``state.tick`` is already incremented."""

    # --- helpers shared by the rule tables ---

    def move_avatar(
        self, state: GameState, action: Action, blocked: Iterable[Cell] = ()
    ) -> AvatarState:
        avatar = state.avatar
        delta = DELTAS.get(action)
        if delta is None:
            return avatar
        if self.traits.faces_movement:
            avatar = replace(avatar, orientation=delta)
        x, y = avatar.x + delta[0], avatar.y + delta[1]
        if state.level.open_cell(x, y) and (x, y) not in set(blocked):
            avatar = replace(avatar, x=x, y=y)
        return avatar

    @staticmethod
    def finish(state: GameState, status: Status) -> GameState:
        return replace(state, status=status)


def render_ascii(state: GameState) -> str:
    """Debug dump of a state: grid rows followed by a status line"""
    grid = [[" "] * state.width for _ in range(state.height)]
    for x, y in state.level.walls:
        grid[y][x] = WALL
    glyphs = {
        Category.NPC: "n",
        Category.IMMOVABLE: "i",
        Category.MOVABLE: "m",
        Category.RESOURCE: "r",
        Category.PORTAL: "O",
        Category.FROM_AVATAR: "|",
    }
    for s in state.sprites:
        if s.alive:
            grid[s.y][s.x] = glyphs[s.category]
    grid[state.avatar.y][state.avatar.x] = AVATAR
    lines = ["".join(row) for row in grid]
    info = f"tick={state.tick} score={state.score:g} status={state.status.value}"
    if state.traits.has_hp:
        info += f" hp={state.avatar.hp}/{state.avatar.max_hp}"
    if state.traits.resource_count:
        info += " res=" + ",".join(str(r) for r in state.avatar.resources[: state.traits.resource_count])
    lines.append(info)
    return "\n".join(lines)
