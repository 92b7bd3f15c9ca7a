"""
Compatibility distance and speciation.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from ..types import NeatParams
from .genome import Genome

logger = logging.getLogger(__name__)

# below this many connections the excess/disjoint counts are not normalised
NORMALISATION_THRESHOLD = 20


@dataclass
class Species:
    id: int
    representative: Genome
    members: list[Genome] = field(default_factory=list)

    def best(self) -> Genome:
        return min(self.members, key=fitness_rank)

    @property
    def best_fitness(self) -> float:
        return self.best().fitness


def fitness_rank(g: Genome) -> tuple[float, int]:
    """Sort key: fitness descending, then creation index ascending"""
    return (-g.fitness, g.index)


def compatibility_distance(a: Genome, b: Genome, params: NeatParams) -> float:
    """
    Linear combination of excess genes, disjoint genes and the mean weight
    difference of matching genes.
    """
    ca, cb = a.connections, b.connections
    larger = max(len(ca), len(cb))
    n = larger if larger >= NORMALISATION_THRESHOLD else 1

    max_a, max_b = a.max_innovation(), b.max_innovation()
    excess = disjoint = 0
    weight_diff = 0.0
    matching = 0
    for innovation in ca.keys() | cb.keys():
        ga, gb = ca.get(innovation), cb.get(innovation)
        if ga is not None and gb is not None:
            matching += 1
            weight_diff += abs(ga.weight - gb.weight)
        elif innovation > (max_b if ga is not None else max_a):
            excess += 1
        else:
            disjoint += 1

    mean_diff = weight_diff / matching if matching else 0.0
    return params.c1 * excess / n + params.c2 * disjoint / n + params.c3 * mean_diff


def speciate(
    population: Sequence[Genome],
    previous_species: Sequence[Species],
    params: NeatParams,
    rng: np.random.Generator,
) -> list[Species]:
    """
    Assign every genome to the first species (by id) whose representative is
    closer than the compatibility threshold, founding new species otherwise.

    Representatives are re-sampled uniformly from each previous species'
    members. Species that end up empty are dropped.
    """
    species: list[Species] = []
    for old in sorted(previous_species, key=lambda s: s.id):
        if old.members:
            rep = old.members[int(rng.integers(len(old.members)))]
        else:
            rep = old.representative
        species.append(Species(id=old.id, representative=rep))

    next_id = max((s.id for s in species), default=0) + 1
    for g in population:
        for s in species:
            if compatibility_distance(g, s.representative, params) < params.compatibility_threshold:
                s.members.append(g)
                break
        else:
            species.append(Species(id=next_id, representative=g, members=[g]))
            next_id += 1

    live = [s for s in species if s.members]
    logger.debug(f"Speciated {len(population)} genomes into {len(live)} species")
    return live
