"""
Rolling horizon evolutionary algorithm baseline.

Individuals are fixed-length action sequences scored by the heuristic value
of the state their sequence reaches. The population is rebuilt every frame.
"""

import logging

import numpy as np

from ..games.base import GameState, evaluate_state
from ..types import RheaConfig
from .budget import MeteredModel

logger = logging.getLogger(__name__)


class RheaAgent:
    def __init__(self, config: RheaConfig | None = None, seed: int | None = None, name: str = "rhea"):
        self.config = config or RheaConfig()
        self.rng = np.random.default_rng(seed)
        self.name = name
        self.generations = 0

    def evaluate(self, sequence: np.ndarray, state: GameState, model: MeteredModel) -> float:
        current = state
        for action in sequence:
            if current.is_terminal:
                break
            current = model.advance(current, int(action))
        return evaluate_state(current)

    def _tournament(self, fitness: np.ndarray) -> int:
        entrants = self.rng.choice(len(fitness), size=self.config.tournament_size, replace=False)
        # highest fitness wins, lower index on ties
        return int(min(entrants, key=lambda i: (-fitness[i], i)))

    def breed(self, population: np.ndarray, fitness: np.ndarray, n_actions: int) -> np.ndarray:
        cfg = self.config
        order = sorted(range(len(population)), key=lambda i: (-fitness[i], i))
        children = [population[i].copy() for i in order[: cfg.elitism]]
        while len(children) < cfg.population_size:
            a = population[self._tournament(fitness)]
            b = population[self._tournament(fitness)]
            mask = self.rng.random(cfg.individual_length) < 0.5
            child = np.where(mask, a, b)
            mutate = self.rng.random(cfg.individual_length) < cfg.gene_mutation_rate
            child = np.where(mutate, self.rng.integers(n_actions, size=cfg.individual_length), child)
            children.append(child)
        return np.stack(children)

    def act(self, state: GameState, model: MeteredModel) -> int:
        n_actions = model.action_count
        if n_actions == 1:
            return 0
        if model.meter.remaining == 0:
            action = int(self.rng.integers(n_actions))
            logger.warning(f"{self.name}: no forward-model budget at tick {state.tick}, random action {action}")
            return action

        cfg = self.config
        population = self.rng.integers(n_actions, size=(cfg.population_size, cfg.individual_length))
        fitness = np.full(cfg.population_size, -np.inf)
        cost = cfg.population_size * cfg.individual_length
        self.generations = 0
        while model.meter.can_afford(cost):
            if self.generations:
                population = self.breed(population, fitness, n_actions)
            fitness = np.array([self.evaluate(ind, state, model) for ind in population])
            self.generations += 1

        best = int(np.argmax(fitness))
        logger.debug(f"{self.name}: {self.generations} generations, best fitness {fitness[best]:g}")
        return int(population[best][0])
