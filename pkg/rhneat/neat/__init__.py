"""
NEAT machinery: genomes, innovations, mutation, crossover and speciation.
"""

from .crossover import crossover
from .genome import ConnectionGene, Genome, NodeGene, genome_from_text, genome_to_text, new_genome
from .innovation import InnovationRegistry
from .mutation import (
    mutate,
    mutate_add_link,
    mutate_add_node,
    mutate_toggle_link,
    mutate_weight_random,
    mutate_weight_shift,
    mutate_with_report,
)
from .population import discard_count, evolve_generation, initial_population
from .species import Species, compatibility_distance, fitness_rank, speciate

__all__ = [
    "ConnectionGene",
    "Genome",
    "InnovationRegistry",
    "NodeGene",
    "Species",
    "compatibility_distance",
    "crossover",
    "discard_count",
    "evolve_generation",
    "fitness_rank",
    "genome_from_text",
    "genome_to_text",
    "initial_population",
    "mutate",
    "mutate_add_link",
    "mutate_add_node",
    "mutate_toggle_link",
    "mutate_weight_random",
    "mutate_weight_shift",
    "mutate_with_report",
    "new_genome",
    "speciate",
]
