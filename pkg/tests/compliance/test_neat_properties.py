"""
Randomised property checks of mutation, crossover, distance and activation.
"""

import math

import numpy as np
import pytest

from rhneat.neat import (
    InnovationRegistry,
    compatibility_distance,
    crossover,
    discard_count,
    evolve_generation,
    genome_from_text,
    genome_to_text,
    mutate,
)
from rhneat.neat import population as population_module
from rhneat.phenotype import activate, build_network
from rhneat.types import Activation, NeatParams, NodeKind
from tests.genomes import GROWTH_PARAMS, grown_genome

TRIALS = 1000
# mutation chains restart from a fresh genome after this many steps
CHAIN_LENGTH = 50


def assert_well_formed(g):
    assert sorted(g.input_ids) == list(range(g.input_count))
    assert list(g.output_ids) == list(range(g.input_count, g.input_count + g.output_count))
    for nid in list(g.input_ids) + list(g.output_ids):
        assert nid in g.nodes
    pairs = set()
    for innovation, c in g.connections.items():
        assert c.innovation == innovation
        assert c.in_node in g.nodes and c.out_node in g.nodes
        assert g.nodes[c.in_node].kind is not NodeKind.OUTPUT
        assert g.nodes[c.out_node].kind is not NodeKind.INPUT
        assert (c.in_node, c.out_node) not in pairs
        pairs.add((c.in_node, c.out_node))
    assert g.is_acyclic()


@pytest.mark.unit
class TestStructuralProperties:
    """Genomes stay well formed under long random mutation and crossover chains"""

    @pytest.fixture(autouse=True)
    def setup(self):
        self.rng = np.random.default_rng(2024)
        self.reg = InnovationRegistry.for_shape(4, 3)

    def test_mutation_chains(self):
        g = grown_genome(self.rng, self.reg, 4, 3, steps=0)
        for trial in range(TRIALS):
            if trial % CHAIN_LENGTH == 0:
                g = grown_genome(self.rng, self.reg, 4, 3, steps=0)
            child = mutate(g, self.reg, GROWTH_PARAMS, self.rng)
            assert_well_formed(child)
            assert set(g.connections) <= set(child.connections)
            g = child

    def test_crossover_of_relatives(self):
        population = [grown_genome(self.rng, self.reg, 4, 3, steps=6) for _ in range(20)]
        for trial in range(TRIALS):
            i, j = self.rng.choice(len(population), size=2, replace=False)
            a, b = population[i], population[j]
            a.fitness, b.fitness = float(self.rng.integers(3)), float(self.rng.integers(3))
            fitter, other = (a, b) if a.fitness >= b.fitness else (b, a)
            child = crossover(fitter, other, self.rng, blended=bool(trial % 2))
            assert_well_formed(child)
            assert set(child.connections) <= set(fitter.connections) | set(other.connections)
            if fitter.fitness != other.fitness:
                assert set(child.connections) <= set(fitter.connections)
            population[int(self.rng.integers(len(population)))] = mutate(
                child, self.reg, GROWTH_PARAMS, self.rng
            )

    def test_innovations_are_shared_across_genomes(self):
        population = [grown_genome(self.rng, self.reg, 4, 3, steps=25) for _ in range(40)]
        seen: dict[tuple[int, int], int] = {}
        for g in population:
            for c in g.connections.values():
                assert seen.setdefault((c.in_node, c.out_node), c.innovation) == c.innovation

    def test_text_round_trip_after_growth(self):
        for _ in range(50):
            g = grown_genome(self.rng, self.reg, 4, 3, steps=20)
            back = genome_from_text(genome_to_text(g))
            assert back.structurally_equal(g)


def distance_oracle(a, b, params: NeatParams) -> float:
    """Straight from the definitions, without shared code paths"""
    ia, ib = set(a.connections), set(b.connections)
    max_a = max(ia, default=0)
    max_b = max(ib, default=0)
    matching = ia & ib
    unmatched = (ia | ib) - matching
    excess = sum(1 for i in unmatched if (i in ia and i > max_b) or (i in ib and i > max_a))
    disjoint = len(unmatched) - excess
    size = max(len(ia), len(ib))
    n = size if size >= 20 else 1
    diffs = [abs(a.connections[i].weight - b.connections[i].weight) for i in matching]
    w = sum(diffs) / len(diffs) if diffs else 0.0
    return params.c1 * excess / n + params.c2 * disjoint / n + params.c3 * w


@pytest.mark.unit
class TestDistanceOracle:
    @pytest.mark.parametrize("coefficients", [(1.0, 1.0, 1.0), (2.0, 0.5, 3.0), (0.0, 1.0, 0.25)])
    def test_matches_oracle(self, coefficients):
        rng = np.random.default_rng(17)
        reg = InnovationRegistry.for_shape(5, 2)
        params = NeatParams(c1=coefficients[0], c2=coefficients[1], c3=coefficients[2])
        genomes = [grown_genome(rng, reg, 5, 2, steps=int(rng.integers(0, 40))) for _ in range(60)]
        for _ in range(TRIALS):
            i, j = rng.integers(len(genomes), size=2)
            a, b = genomes[i], genomes[j]
            assert abs(compatibility_distance(a, b, params) - distance_oracle(a, b, params)) <= 1e-12

    def test_symmetric_and_zero_on_self(self):
        rng = np.random.default_rng(3)
        reg = InnovationRegistry.for_shape(3, 3)
        params = NeatParams()
        for _ in range(100):
            a = grown_genome(rng, reg, 3, 3, steps=15)
            b = grown_genome(rng, reg, 3, 3, steps=15)
            assert compatibility_distance(a, a, params) == 0.0
            forward, backward = compatibility_distance(a, b, params), compatibility_distance(b, a, params)
            assert forward == pytest.approx(backward)


def activation_oracle(g, inputs, sigma):
    """Evaluate each output by recursion over enabled incoming connections"""

    def value(nid):
        if g.nodes[nid].kind is NodeKind.INPUT:
            return float(inputs[nid])
        total = 0.0
        for c in g.genes():
            if c.enabled and c.out_node == nid:
                total += c.weight * value(c.in_node)
        return sigma(total)

    return [value(o) for o in g.output_ids]


def sigmoid(x):
    return 1.0 / (1.0 + math.exp(-x))


@pytest.mark.unit
class TestActivationOracle:
    @pytest.mark.parametrize(
        "activation,sigma", [(Activation.TANH, math.tanh), (Activation.SIGMOID, sigmoid)]
    )
    def test_matches_recursive_evaluation(self, activation, sigma):
        rng = np.random.default_rng(99)
        reg = InnovationRegistry.for_shape(4, 3)
        checked = 0
        while checked < 500:
            g = grown_genome(rng, reg, 4, 3, steps=int(rng.integers(1, 25)))
            if len(g.nodes) > 15:
                continue
            net = build_network(g, activation)
            for _ in range(3):
                x = rng.uniform(-1.0, 1.0, size=4)
                expected = activation_oracle(g, x, sigma)
                got = activate(net, x)
                assert all(abs(e - v) <= 1e-9 for e, v in zip(expected, got))
            checked += 1


@pytest.mark.unit
class TestPopulationConservation:
    """Every generation has exactly P members, whatever speciation and truncation do"""

    def test_random_generations_keep_the_population_size(self, mocker):
        rng = np.random.default_rng(31)
        speciate_spy = mocker.spy(population_module, "speciate")
        pooled_runs = 0
        dissolved_runs = 0
        for _ in range(TRIALS):
            size = int(rng.integers(2, 13))
            params = NeatParams(
                population_size=size,
                discard_rate=float(rng.uniform(0.05, 0.95)),
                compatibility_threshold=float(rng.uniform(0.05, 4.0)),
            )
            reg = InnovationRegistry.for_shape(3, 2)
            population = [grown_genome(rng, reg, 3, 2, steps=int(rng.integers(0, 8))) for _ in range(size)]
            for g in population:
                g.index = reg.next_genome_index()
            fitness = {g.index: float(rng.normal()) for g in population}

            def evaluate(g):
                g.fitness = fitness.setdefault(g.index, float(rng.normal()))

            nxt, species = evolve_generation(population, [], params, reg, rng, evaluate)

            assert len(nxt) == size
            assert len({g.index for g in nxt}) == size
            assert sum(len(s.members) for s in species) == size
            assert {id(g) for s in species for g in s.members} == {id(g) for g in nxt}

            groups = speciate_spy.spy_return
            kept = [len(s.members) - discard_count(len(s.members), params.discard_rate) for s in groups]
            if all(k < 2 for k in kept):
                pooled_runs += 1
                assert len(species) == 1
            elif any(k < 2 for k in kept):
                dissolved_runs += 1
                assert len(species) == sum(1 for k in kept if k >= 2)

        assert pooled_runs > 0
        assert dissolved_runs > 0

    def test_carried_species_across_generations(self):
        rng = np.random.default_rng(8)
        params = NeatParams(population_size=10, compatibility_threshold=1.0)
        reg = InnovationRegistry.for_shape(3, 2)
        population = population_module.initial_population(3, 2, reg, 10)
        species = []
        for _ in range(100):
            population, species = evolve_generation(
                population, species, params, reg, rng, lambda g: setattr(g, "fitness", float(rng.normal()))
            )
            assert len(population) == 10
            assert sum(len(s.members) for s in species) == 10
