"""
Network input features.

The feature vector lists, in order: avatar x and y (normalised by the grid
extents), avatar orientation x and y, hp / max hp when the game has hp, each
present resource / 20, and for every present sprite category the distance
and orientation to its closest live instance.
"""

import math
from dataclasses import dataclass

from .exceptions import SchemaChangedError
from .games.base import RESOURCE_CAP, GameState, SpriteObservation
from .types import CATEGORY_ORDER, Category, DistanceMetric, FeatureVector

MAX_RESOURCES = 3

# slots for a category with no live instance inside a rollout
ABSENT_DISTANCE = 1.0
ABSENT_ORIENTATION = 0.0


@dataclass(frozen=True)
class FeatureSchema:
    """Which optional features a state exposes; equality drives reinitialisation"""

    has_hp: bool
    resources: tuple[bool, bool, bool]
    categories: tuple[bool, ...]

    @property
    def input_count(self) -> int:
        return 4 + int(self.has_hp) + sum(self.resources) + 2 * sum(self.categories)

    @property
    def present_categories(self) -> tuple[Category, ...]:
        return tuple(c for c, flag in zip(CATEGORY_ORDER, self.categories) if flag)


def schema_of(state: GameState) -> FeatureSchema:
    """Declared categories plus those with a live sprite"""
    traits = state.traits
    present = traits.declared | state.categories_present()
    count = min(traits.resource_count, MAX_RESOURCES)
    return FeatureSchema(
        has_hp=traits.has_hp,
        resources=tuple(i < count for i in range(MAX_RESOURCES)),  # type: ignore[arg-type]
        categories=tuple(c in present for c in CATEGORY_ORDER),
    )


def max_distance(state: GameState, metric: DistanceMetric = DistanceMetric.EUCLIDEAN) -> float:
    if metric is DistanceMetric.MANHATTAN:
        return float(state.width + state.height)
    return math.hypot(state.width, state.height)


def distance(
    ax: int, ay: int, bx: int, by: int, metric: DistanceMetric = DistanceMetric.EUCLIDEAN
) -> float:
    if metric is DistanceMetric.MANHATTAN:
        return float(abs(ax - bx) + abs(ay - by))
    return math.hypot(ax - bx, ay - by)


def orientation_value(facing: tuple[float, float], dx: float, dy: float) -> float:
    """
    Signed angle between the facing vector and (dx, dy), divided by pi.

    0 is straight ahead, +0.5 a right angle to the right (y grows
    downward), and exactly behind is +1.
    """
    if dx == 0 and dy == 0:
        return 0.0
    fx, fy = facing
    cross = fx * dy - fy * dx
    dot = fx * dx + fy * dy
    o = math.atan2(cross, dot) / math.pi
    return 1.0 if o <= -1.0 else o


def closest(
    state: GameState, category: Category, metric: DistanceMetric = DistanceMetric.EUCLIDEAN
) -> tuple[float, SpriteObservation] | None:
    ax, ay = state.avatar.x, state.avatar.y
    best: tuple[float, SpriteObservation] | None = None
    for s in state.sprites:
        if not s.alive or s.category is not category:
            continue
        d = distance(ax, ay, s.x, s.y, metric)
        if best is None or d < best[0]:
            best = (d, s)
    return best


def extract(
    state: GameState,
    schema: FeatureSchema,
    strict: bool = True,
    metric: DistanceMetric = DistanceMetric.EUCLIDEAN,
) -> FeatureVector:
    """
    Feature vector of ``state`` laid out by ``schema``.

    With ``strict`` a schema that no longer matches the state raises
    SchemaChangedError. Rollouts pass ``strict=False`` so the width stays
    fixed: categories missing from the state get the absent sentinel and
    categories the schema does not know are ignored.
    """
    if strict:
        actual = schema_of(state)
        if actual != schema:
            raise SchemaChangedError(schema, actual)

    avatar = state.avatar
    values = [
        avatar.x / (state.width - 1) if state.width > 1 else 0.0,
        avatar.y / (state.height - 1) if state.height > 1 else 0.0,
        float(avatar.orientation[0]),
        float(avatar.orientation[1]),
    ]
    if schema.has_hp:
        values.append(avatar.hp / avatar.max_hp if avatar.max_hp else 0.0)
    for i, flag in enumerate(schema.resources):
        if flag:
            values.append(min(max(avatar.resources[i] / RESOURCE_CAP, 0.0), 1.0))

    limit = max_distance(state, metric)
    for category in schema.present_categories:
        found = closest(state, category, metric)
        if found is None:
            values.extend((ABSENT_DISTANCE, ABSENT_ORIENTATION))
            continue
        d, sprite = found
        values.append(min(d / limit, 1.0))
        values.append(orientation_value(avatar.orientation, sprite.x - avatar.x, sprite.y - avatar.y))
    return tuple(values)
