"""
Game suite and forward-model foundation.
"""

from ..exceptions import GameError
from ..types import ERR_UNKNOWN_GAME
from .base import (
    LEVEL_COUNT,
    TICK_CAP,
    AvatarState,
    GameState,
    GameTraits,
    GridGame,
    Level,
    SpriteObservation,
    evaluate_state,
    render_ascii,
)
from .collect import CollectGame
from .corridor import CorridorGame
from .race import RaceGame
from .shoot import ShootGame
from .survive import SurviveGame
from .trap import TrapGame

GAMES: dict[str, type[GridGame]] = {
    cls.game_id: cls
    for cls in (CollectGame, RaceGame, TrapGame, SurviveGame, ShootGame, CorridorGame)
}

# the benchmark suite; the corridor is a sanity toy only
SUITE: tuple[str, ...] = ("collect", "race", "trap", "survive", "shoot")


def get_game(game_id: str) -> GridGame:
    try:
        return GAMES[game_id]()
    except KeyError:
        raise GameError(
            f"Unknown game {game_id!r}",
            code=ERR_UNKNOWN_GAME,
            details={"game": game_id, "known": sorted(GAMES)},
        )


def load_level(game_id: str, level: int, seed: int = 0) -> GameState:
    return get_game(game_id).load_level(level, seed)


__all__ = [
    "GAMES",
    "LEVEL_COUNT",
    "SUITE",
    "TICK_CAP",
    "AvatarState",
    "CollectGame",
    "CorridorGame",
    "GameState",
    "GameTraits",
    "GridGame",
    "Level",
    "RaceGame",
    "ShootGame",
    "SpriteObservation",
    "SurviveGame",
    "TrapGame",
    "evaluate_state",
    "get_game",
    "load_level",
    "render_ascii",
]
