"""
Innovation-aligned crossover.
"""

import numpy as np

from ..exceptions import GenomeError
from ..types import NodeKind
from .genome import ConnectionGene, Genome, NodeGene


def crossover(
    fitter: Genome,
    other: Genome,
    rng: np.random.Generator,
    blended: bool = False,
    index: int = 0,
) -> Genome:
    """
    Recombine two parents with genes lined up by innovation number.

    Matching genes come from either parent uniformly (or carry the averaged
    weight when ``blended``). Unmatched genes come from ``fitter`` only,
    unless both parents have equal fitness, in which case they come from
    both. A gene whose enablement would close a cycle is inherited disabled.
    """
    if (fitter.input_count, fitter.output_count) != (other.input_count, other.output_count):
        raise GenomeError(
            "Parents have different input/output counts",
            details={
                "fitter": [fitter.input_count, fitter.output_count],
                "other": [other.input_count, other.output_count],
            },
        )

    equal = fitter.fitness == other.fitness
    child = Genome(
        input_count=fitter.input_count,
        output_count=fitter.output_count,
        nodes={n.id: n for n in fitter.nodes.values() if n.kind is not NodeKind.HIDDEN},
        index=index,
    )
    adj: dict[int, list[int]] = {nid: [] for nid in child.nodes}

    for innovation in sorted(fitter.connections.keys() | other.connections.keys()):
        a = fitter.connections.get(innovation)
        b = other.connections.get(innovation)
        if a is not None and b is not None:
            gene = a if rng.random() < 0.5 else b
            if blended:
                gene = gene.with_weight((a.weight + b.weight) / 2.0)
        elif a is not None:
            gene = a
        elif b is not None and equal:
            gene = b
        else:
            continue

        for nid in (gene.in_node, gene.out_node):
            if nid not in child.nodes:
                child.nodes[nid] = NodeGene(nid, NodeKind.HIDDEN)
                adj[nid] = []
        if gene.enabled and child.creates_cycle(gene.in_node, gene.out_node, adj):
            gene = ConnectionGene(gene.in_node, gene.out_node, gene.weight, False, gene.innovation)
        child.add_connection(gene)
        if gene.enabled:
            adj[gene.in_node].append(gene.out_node)

    return child
