"""
Feed-forward phenotype of a genome.

A Network is compiled once per genome into a slot-indexed evaluation plan;
activation is plain float arithmetic in topological order.
"""

import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .exceptions import InputSizeError
from .neat.genome import Genome
from .types import Activation, NodeKind


def _sigmoid(x: float) -> float:
    if x >= 0.0:
        return 1.0 / (1.0 + math.exp(-x))
    e = math.exp(x)
    return e / (1.0 + e)


_ACTIVATIONS = {
    Activation.TANH: math.tanh,
    Activation.SIGMOID: _sigmoid,
}


@dataclass(frozen=True)
class Network:
    """
    Compiled network.

    ``order`` is the topological node order; ``plan`` lists, for every
    non-input node in that order, its slot and the (source slot, weight)
    pairs of its enabled incoming connections.
    """

    input_count: int
    output_count: int
    order: tuple[int, ...]
    plan: tuple[tuple[int, tuple[tuple[int, float], ...]], ...]
    output_slots: tuple[int, ...]
    activation: Activation = Activation.TANH

    @property
    def size(self) -> int:
        return len(self.order)


def build_network(g: Genome, activation: Activation = Activation.TANH) -> Network:
    """Compile a genome; raises CycleError if enabled connections form a cycle."""
    order = g.topological_order()
    slot = {nid: i for i, nid in enumerate(order)}
    incoming: dict[int, list[tuple[int, float]]] = {nid: [] for nid in order}
    for c in g.genes():
        if c.enabled:
            incoming[c.out_node].append((slot[c.in_node], c.weight))

    plan = tuple(
        (slot[nid], tuple(incoming[nid]))
        for nid in order
        if g.nodes[nid].kind is not NodeKind.INPUT
    )
    return Network(
        input_count=g.input_count,
        output_count=g.output_count,
        order=tuple(order),
        plan=plan,
        output_slots=tuple(slot[o] for o in g.output_ids),
        activation=activation,
    )


def activate(net: Network, inputs: Sequence[float]) -> tuple[float, ...]:
    if len(inputs) != net.input_count:
        raise InputSizeError(net.input_count, len(inputs))
    sigma = _ACTIVATIONS[net.activation]
    values = [0.0] * net.size
    # input node ids are 0..input_count-1 and sit wherever Kahn placed them
    for nid, slot in zip(net.order, range(net.size)):
        if nid < net.input_count:
            values[slot] = float(inputs[nid])
    for slot, sources in net.plan:
        total = 0.0
        for src, weight in sources:
            total += weight * values[src]
        values[slot] = sigma(total)
    return tuple(values[s] for s in net.output_slots)


def select_action(outputs: Sequence[float], n_actions: int) -> int:
    """Index of the largest output; ties go to the lowest index."""
    if n_actions < 1 or len(outputs) == 0:
        raise InputSizeError(max(n_actions, 1), len(outputs))
    if len(outputs) != n_actions:
        raise InputSizeError(n_actions, len(outputs))
    if n_actions == 1:
        return 0
    return int(np.argmax(outputs))
