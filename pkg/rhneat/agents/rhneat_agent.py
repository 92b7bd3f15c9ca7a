"""
Rolling horizon NEAT agent.

Every real frame the agent evolves a population of network genomes for as
many generations as the forward-model budget funds. Each genome is scored
by letting its network play ``rollout_length`` steps from the current
state. The fittest network then picks the action from the current state's
features. With population carrying the population survives into the next
frame; a change of feature schema always starts afresh.
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from ..features import FeatureSchema, extract, schema_of
from ..games.base import GameState
from ..neat import InnovationRegistry, Species, evolve_generation, fitness_rank, initial_population
from ..neat.genome import Genome
from ..phenotype import activate, build_network, select_action
from ..types import RhneatConfig
from .budget import MeteredModel
from .rollout import IndividualStats, assign_fitness, reward, rollout

logger = logging.getLogger(__name__)
decision_logger = logging.getLogger("rhneat.decisions")


@dataclass
class RhneatMemory:
    """State carried between frames of one episode"""

    population: list[Genome] | None = None
    species: list[Species] = field(default_factory=list)
    registry: InnovationRegistry | None = None
    schema: FeatureSchema | None = None
    stats: dict[int, IndividualStats] = field(default_factory=dict)


@dataclass(frozen=True)
class DecisionInfo:
    tick: int
    action: int
    generations: int
    best_fitness: float
    species_count: int
    fm_calls: int
    reinitialised: bool
    fallback: bool = False


class RhneatAgent:
    def __init__(self, config: RhneatConfig | None = None, seed: int | None = None, name: str = "rhneat"):
        self.config = config or RhneatConfig()
        self.rng = np.random.default_rng(seed)
        self.name = name
        self.memory = RhneatMemory()
        self.last_decision: DecisionInfo | None = None

    def input_count(self, schema: FeatureSchema) -> int:
        return schema.input_count + int(self.config.use_bias)

    def _reinitialise(self, schema: FeatureSchema, n_actions: int) -> None:
        registry = InnovationRegistry.for_shape(self.input_count(schema), n_actions)
        self.memory = RhneatMemory(
            population=initial_population(
                self.input_count(schema), n_actions, registry, self.config.neat.population_size
            ),
            registry=registry,
            schema=schema,
        )

    def _evaluator(self, state: GameState, model: MeteredModel):
        cfg = self.config
        schema = self.memory.schema
        assert schema is not None

        def evaluate(g: Genome) -> None:
            net = build_network(g, cfg.activation)
            result = rollout(
                net, state, cfg.rollout_length, schema, model, cfg.use_bias, cfg.distance_metric
            )
            if not result.evaluations:
                return
            stats = assign_fitness(
                self.memory.stats.get(g.index, IndividualStats()),
                reward(result, cfg.reward_mode, cfg.gamma),
                cfg.fitness_mode,
                cfg.alpha,
            )
            self.memory.stats[g.index] = stats
            g.fitness = stats.fitness

        return evaluate

    def _best(self) -> Genome:
        population = self.memory.population or []
        evaluated = [g for g in population if g.index in self.memory.stats]
        return min(evaluated or population, key=fitness_rank)

    def act(self, state: GameState, model: MeteredModel) -> int:
        n_actions = model.action_count
        if n_actions == 1:
            return 0
        if model.meter.remaining == 0:
            action = int(self.rng.integers(n_actions))
            logger.warning(f"{self.name}: no forward-model budget at tick {state.tick}, random action {action}")
            self.last_decision = DecisionInfo(state.tick, action, 0, 0.0, 0, 0, False, fallback=True)
            return action

        cfg = self.config
        schema = schema_of(state)
        reinitialise = (
            self.memory.population is None
            or schema != self.memory.schema
            or not cfg.population_carrying
        )
        if reinitialise:
            if self.memory.schema is not None and schema != self.memory.schema:
                logger.info(f"{self.name}: feature schema changed at tick {state.tick}, reinitialising")
            self._reinitialise(schema, n_actions)

        memory = self.memory
        assert memory.population is not None and memory.registry is not None
        evaluate = self._evaluator(state, model)
        calls_before = model.meter.used
        generations = 0
        while model.meter.can_afford(cfg.generation_cost):
            memory.population, memory.species = evolve_generation(
                memory.population,
                memory.species,
                cfg.neat,
                memory.registry,
                self.rng,
                evaluate,
                speciation=cfg.speciation,
            )
            generations += 1
        live = {g.index for g in memory.population}
        memory.stats = {i: s for i, s in memory.stats.items() if i in live}

        best = self._best()
        features = extract(state, schema, metric=cfg.distance_metric)
        if cfg.use_bias:
            features = features + (1.0,)
        action = select_action(activate(build_network(best, cfg.activation), features), n_actions)

        info = DecisionInfo(
            tick=state.tick,
            action=action,
            generations=generations,
            best_fitness=best.fitness,
            species_count=len(memory.species),
            fm_calls=model.meter.used - calls_before,
            reinitialised=reinitialise,
        )
        self.last_decision = info
        decision_logger.info(
            f"agent={self.name} tick={info.tick} action={action} generations={generations} "
            f"best_fitness={info.best_fitness:g} species={info.species_count} "
            f"fm_calls={info.fm_calls} reinit={reinitialise}"
        )
        return action
