"""
Structural and weight mutations.

Every operator returns a new genome when it changes something and the very
same genome object when it is a no-op, so callers can test ``result is g``.
"""

import logging

import numpy as np

from ..types import NeatParams, NodeKind
from .genome import ConnectionGene, Genome, NodeGene
from .innovation import InnovationRegistry

logger = logging.getLogger(__name__)

ADD_LINK = "add_link"
ADD_NODE = "add_node"
WEIGHT_SHIFT = "weight_shift"
WEIGHT_RANDOM = "weight_random"
TOGGLE_LINK = "toggle_link"

OPERATOR_ORDER = (ADD_LINK, ADD_NODE, WEIGHT_SHIFT, WEIGHT_RANDOM, TOGGLE_LINK)


# Attempts at drawing a legal (source, target) pair before add-link gives up.
MAX_LINK_ATTEMPTS = 32


def _sample_link(g: Genome, rng: np.random.Generator) -> tuple[int, int] | None:
    sources = sorted(n.id for n in g.nodes.values() if n.kind is not NodeKind.OUTPUT)
    targets = sorted(n.id for n in g.nodes.values() if n.kind is not NodeKind.INPUT)
    existing = {(c.in_node, c.out_node) for c in g.connections.values()}
    if len(existing) >= len(sources) * len(targets):
        return None
    adj = g.adjacency()
    for _ in range(MAX_LINK_ATTEMPTS):
        a = sources[int(rng.integers(len(sources)))]
        b = targets[int(rng.integers(len(targets)))]
        if a != b and (a, b) not in existing and not g.creates_cycle(a, b, adj):
            return a, b
    return None


def mutate_add_link(
    g: Genome,
    reg: InnovationRegistry,
    rng: np.random.Generator,
    weight_range: float = 1.0,
) -> Genome:
    """
    Add one enabled link between a random legal pair.

    Pairs are drawn uniformly for at most ``MAX_LINK_ATTEMPTS`` tries;
    existing and cycle-closing pairs are rejected. Returns ``g`` itself when
    no pair was found.
    """
    pair = _sample_link(g, rng)
    if pair is None:
        logger.debug(f"add-link found no legal pair in genome {g.index}")
        return g
    a, b = pair
    child = g.copy()
    child.add_connection(
        ConnectionGene(
            in_node=a,
            out_node=b,
            weight=float(rng.uniform(-weight_range, weight_range)),
            enabled=True,
            innovation=reg.link_innovation(a, b),
        )
    )
    return child


def mutate_add_node(g: Genome, reg: InnovationRegistry, rng: np.random.Generator) -> Genome:
    # a connection whose split node already exists here was split before and re-enabled
    splittable = [
        c
        for c in g.genes()
        if c.enabled and reg.split_table.get(c.innovation) not in g.nodes
    ]
    if not splittable:
        return g
    old = splittable[int(rng.integers(len(splittable)))]
    middle = reg.split_node(old.innovation)
    child = g.copy()
    child.connections[old.innovation] = old.toggled()
    child.nodes[middle] = NodeGene(middle, NodeKind.HIDDEN)
    child.add_connection(
        ConnectionGene(old.in_node, middle, 1.0, True, reg.link_innovation(old.in_node, middle))
    )
    child.add_connection(
        ConnectionGene(middle, old.out_node, old.weight, True, reg.link_innovation(middle, old.out_node))
    )
    return child


def mutate_weight_shift(g: Genome, rng: np.random.Generator, strength: float = 0.4) -> Genome:
    if not g.connections:
        return g
    innovations = g.innovations()
    target = g.connections[innovations[int(rng.integers(len(innovations)))]]
    child = g.copy()
    child.connections[target.innovation] = target.with_weight(
        target.weight + float(rng.uniform(-strength, strength))
    )
    return child


def mutate_weight_random(g: Genome, rng: np.random.Generator, strength: float = 1.0) -> Genome:
    if not g.connections:
        return g
    innovations = g.innovations()
    target = g.connections[innovations[int(rng.integers(len(innovations)))]]
    child = g.copy()
    child.connections[target.innovation] = target.with_weight(float(rng.uniform(-strength, strength)))
    return child


def mutate_toggle_link(
    g: Genome, rng: np.random.Generator, choice: int | None = None
) -> Genome:
    """
    Flip the enabled flag of one connection.

    ``choice`` forces the innovation to toggle. Re-enabling a connection that
    would close a cycle is a no-op.
    """
    if not g.connections:
        return g
    if choice is None:
        innovations = g.innovations()
        choice = innovations[int(rng.integers(len(innovations)))]
    target = g.connections.get(choice)
    if target is None:
        return g
    if not target.enabled and g.creates_cycle(target.in_node, target.out_node):
        return g
    child = g.copy()
    child.connections[choice] = target.toggled()
    return child


def mutate_with_report(
    g: Genome,
    reg: InnovationRegistry,
    params: NeatParams,
    rng: np.random.Generator,
) -> tuple[Genome, tuple[str, ...]]:
    """
    Apply each operator independently with its probability.

    Five uniforms are always drawn so the random stream does not depend on
    which operators fire. Returns the mutated genome and the names of the
    operators that fired, in application order.
    """
    draws = rng.random(len(OPERATOR_ORDER))
    probabilities = (
        params.mu_link,
        params.mu_node,
        params.mu_weight_shift,
        params.mu_weight_random,
        params.mu_toggle,
    )
    fired: list[str] = []
    for name, draw, p in zip(OPERATOR_ORDER, draws, probabilities):
        if draw >= p:
            continue
        fired.append(name)
        if name == ADD_LINK:
            g = mutate_add_link(g, reg, rng, params.weight_random)
        elif name == ADD_NODE:
            g = mutate_add_node(g, reg, rng)
        elif name == WEIGHT_SHIFT:
            g = mutate_weight_shift(g, rng, params.weight_shift)
        elif name == WEIGHT_RANDOM:
            g = mutate_weight_random(g, rng, params.weight_random)
        else:
            g = mutate_toggle_link(g, rng)
    return g, tuple(fired)


def mutate(
    g: Genome, reg: InnovationRegistry, params: NeatParams, rng: np.random.Generator
) -> Genome:
    return mutate_with_report(g, reg, params, rng)[0]
