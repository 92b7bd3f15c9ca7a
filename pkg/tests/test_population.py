"""
Tests for one NEAT generation.
"""

import numpy as np
import pytest

from rhneat.neat import (
    InnovationRegistry,
    Species,
    discard_count,
    evolve_generation,
    initial_population,
)
from rhneat.neat.population import _allocate_offspring
from rhneat.types import NeatParams
from tests.genomes import genome_with


def fitness_by_index(values):
    def evaluate(g):
        g.fitness = values.get(g.index, 0.0)

    return evaluate


@pytest.mark.unit
class TestDiscardCount:
    @pytest.mark.parametrize(
        "size,expected",
        [(10, 2), (3, 1), (5, 1), (6, 2), (2, 1), (1, 0)],
    )
    def test_ceiling_with_one_survivor(self, size, expected):
        assert discard_count(size, 0.2) == expected


@pytest.mark.unit
class TestInitialPopulation:
    def test_fresh_genomes_with_distinct_indices(self):
        reg = InnovationRegistry.for_shape(4, 3)
        population = initial_population(4, 3, reg, 10)
        assert [g.index for g in population] == list(range(10))
        assert all(not g.connections and len(g.nodes) == 7 for g in population)


@pytest.mark.unit
class TestEvolveGeneration:
    @pytest.fixture
    def setup(self):
        reg = InnovationRegistry.for_shape(2, 1)
        population = initial_population(2, 1, reg, 10)
        return reg, population

    def test_one_species_discards_two(self, setup, params, rng):
        reg, population = setup
        evaluate = fitness_by_index({g.index: float(g.index) for g in population})
        nxt, species = evolve_generation(population, [], params, reg, rng, evaluate)
        assert len(nxt) == 10
        assert len(species) == 1
        kept = {g.index for g in nxt} & set(range(10))
        assert kept == set(range(2, 10))
        assert sum(1 for g in nxt if g.index >= 10) == 2

    def test_lowest_fitness_are_the_ones_removed(self, setup, params):
        reg, population = setup
        rng = np.random.default_rng(99)
        values = {0: 5.0, 1: -3.0, 2: 7.0, 3: 1.0, 4: -8.0, 5: 2.0, 6: 9.0, 7: 0.5, 8: 4.0, 9: 3.0}
        nxt, _ = evolve_generation(population, [], params, reg, rng, fitness_by_index(values))
        survivors = {g.index for g in nxt if g.index < 10}
        assert set(range(10)) - survivors == {1, 4}

    def test_without_speciation_uses_one_group(self, setup, params, rng):
        reg, population = setup
        nxt, species = evolve_generation(
            population, [], params, reg, rng, fitness_by_index({}), speciation=False
        )
        assert len(nxt) == 10
        assert [s.id for s in species] == [0]

    def test_ties_keep_the_older_genomes(self, setup, params, rng):
        reg, population = setup
        nxt, _ = evolve_generation(population, [], params, reg, rng, fitness_by_index({}))
        assert {g.index for g in nxt if g.index < 10} == set(range(8))

    def test_singleton_species_are_removed_and_slots_refilled(self, params, rng):
        reg = InnovationRegistry.for_shape(1, 1)
        reg.link_innovation(0, 1)
        near = [genome_with(1, 1, [(0, 1, 0.0)], index=i) for i in range(4)]
        loner = genome_with(1, 1, [(0, 1, 50.0)], index=4)
        for _ in range(5):
            reg.next_genome_index()
        population = near + [loner]
        nxt, species = evolve_generation(
            population, [], params, reg, rng, fitness_by_index({4: 100.0})
        )
        assert len(nxt) == 5
        assert 4 not in {g.index for g in nxt}
        assert len(species) == 1

    def test_all_singletons_are_pooled_and_truncated(self, rng):
        params = NeatParams(compatibility_threshold=0.1)
        reg = InnovationRegistry.for_shape(1, 1)
        reg.link_innovation(0, 1)
        population = [genome_with(1, 1, [(0, 1, 10.0 * i)], index=i) for i in range(4)]
        for _ in range(4):
            reg.next_genome_index()
        nxt, species = evolve_generation(
            population, [], params, reg, rng, fitness_by_index({i: float(i) for i in range(4)})
        )
        assert len(nxt) == 4
        assert len(species) == 1
        assert {g.index for g in nxt if g.index < 4} == {1, 2, 3}
        assert [g.index for g in nxt if g.index >= 4] == [4]

    def test_species_carry_over(self, setup, params, rng):
        reg, population = setup
        first, species = evolve_generation(population, [], params, reg, rng, fitness_by_index({}))
        second, species2 = evolve_generation(first, species, params, reg, rng, fitness_by_index({}))
        assert len(second) == 10
        assert {s.id for s in species2} >= {species[0].id}

    def test_evaluate_called_once_per_genome(self, setup, params, rng, mocker):
        reg, population = setup
        evaluate = mocker.Mock(side_effect=fitness_by_index({}))
        evolve_generation(population, [], params, reg, rng, evaluate)
        assert evaluate.call_count == 10


@pytest.mark.unit
class TestOffspringAllocation:
    def test_freed_slots_go_to_best_species_first(self):
        a = genome_with(1, 1, [], fitness=1.0, index=0)
        b = genome_with(1, 1, [], fitness=5.0, index=1)
        sp_a = Species(1, a, members=[a, a.copy(), a.copy()])
        sp_b = Species(2, b, members=[b, b.copy(), b.copy()])
        quotas = _allocate_offspring([(sp_a, [a, a]), (sp_b, [b, b])], total=5)
        # own discards 1 + 1, three freed slots round-robin starting with species b
        assert quotas == [2, 3]
