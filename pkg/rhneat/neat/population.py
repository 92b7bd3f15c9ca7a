"""
One NEAT generation: evaluate, speciate, truncate, refill.
"""

import logging
import math
from collections.abc import Sequence

import numpy as np

from ..interfaces import EvaluateCallback
from ..types import NeatParams
from .crossover import crossover
from .genome import Genome, new_genome
from .innovation import InnovationRegistry
from .mutation import mutate
from .species import Species, fitness_rank, speciate

logger = logging.getLogger(__name__)


def initial_population(
    input_count: int, output_count: int, reg: InnovationRegistry, size: int
) -> list[Genome]:
    """Fresh genomes with no connections"""
    return [new_genome(input_count, output_count, index=reg.next_genome_index()) for _ in range(size)]


def discard_count(size: int, rate: float) -> int:
    """Members discarded from a species of ``size``; one is always kept"""
    return min(math.ceil(rate * size), size - 1)


def _allocate_offspring(
    survivors: list[tuple[Species, list[Genome]]], total: int
) -> list[int]:
    # each species refills its own discards first, freed slots go round-robin by best fitness
    quotas = [len(sp.members) - len(kept) for sp, kept in survivors]
    extra = total - sum(quotas)
    by_best = sorted(range(len(survivors)), key=lambda i: fitness_rank(survivors[i][1][0]))
    for k in range(max(extra, 0)):
        quotas[by_best[k % len(by_best)]] += 1
    return quotas


def evolve_generation(
    population: Sequence[Genome],
    species: Sequence[Species],
    params: NeatParams,
    reg: InnovationRegistry,
    rng: np.random.Generator,
    evaluate: EvaluateCallback,
    speciation: bool = True,
) -> tuple[list[Genome], list[Species]]:
    """
    Run one generation and return the next population and its species.

    ``evaluate`` must set ``fitness`` on each genome. Within each species the
    lowest ``ceil(R * size)`` members are discarded; species left with at most
    one survivor are removed, unless that would remove every species, in
    which case the whole population is truncated as one species. The freed
    slots are refilled by crossover of
    two survivors of the same species followed by mutation, so the
    population size is conserved.
    """
    for g in population:
        evaluate(g)

    if speciation:
        groups = speciate(population, species, params, rng)
    else:
        groups = [Species(id=0, representative=population[0], members=list(population))]

    ranked: list[tuple[Species, list[Genome]]] = []
    for sp in groups:
        members = sorted(sp.members, key=fitness_rank)
        kept = members[: len(members) - discard_count(len(members), params.discard_rate)]
        ranked.append((sp, kept))

    survivors = [(sp, kept) for sp, kept in ranked if len(kept) >= 2]
    if not survivors:
        pooled = sorted((g for sp in groups for g in sp.members), key=fitness_rank)
        kept = pooled[: len(pooled) - discard_count(len(pooled), params.discard_rate)]
        anchor = min(groups, key=lambda s: s.id)
        pool_species = Species(id=anchor.id, representative=anchor.representative, members=pooled)
        survivors = [(pool_species, kept)]
        logger.debug("No species kept two survivors; truncating the pooled population instead")

    kept_total = sum(len(kept) for _, kept in survivors)
    quotas = _allocate_offspring(survivors, len(population) - kept_total)

    next_population: list[Genome] = []
    next_species: list[Species] = []
    for (sp, kept), quota in zip(survivors, quotas):
        offspring = []
        for _ in range(quota):
            i, j = rng.choice(len(kept), size=2, replace=len(kept) < 2)
            first, second = sorted((kept[int(i)], kept[int(j)]), key=fitness_rank)
            child = crossover(
                first, second, rng, blended=params.blended_crossover, index=reg.next_genome_index()
            )
            offspring.append(mutate(child, reg, params, rng))
        members = kept + offspring
        next_population.extend(members)
        next_species.append(Species(id=sp.id, representative=sp.representative, members=members))

    return next_population, next_species
