"""
Genome representation for NEAT

A genome is a set of node genes plus connection genes keyed by innovation
number. Fresh genomes hold only their input and output nodes. Connection
genes are immutable values, so copying a genome only copies two dicts.
"""

import heapq
import logging
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field, replace

from ..exceptions import CycleError, GenomeError
from ..types import NodeKind

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class NodeGene:
    id: int
    kind: NodeKind


@dataclass(frozen=True, slots=True)
class ConnectionGene:
    in_node: int
    out_node: int
    weight: float
    enabled: bool
    innovation: int

    def with_weight(self, weight: float) -> "ConnectionGene":
        return replace(self, weight=weight)

    def toggled(self) -> "ConnectionGene":
        return replace(self, enabled=not self.enabled)


@dataclass
class Genome:
    """
    NEAT genome.

    Node ids 0..input_count-1 are inputs and the next output_count ids are
    outputs; hidden node ids come from the innovation registry. ``index`` is
    the creation index used for stable tie-breaking.
    """

    input_count: int
    output_count: int
    nodes: dict[int, NodeGene]
    connections: dict[int, ConnectionGene] = field(default_factory=dict)
    fitness: float = 0.0
    index: int = 0

    # --- structure queries ---

    @property
    def input_ids(self) -> range:
        return range(self.input_count)

    @property
    def output_ids(self) -> range:
        return range(self.input_count, self.input_count + self.output_count)

    @property
    def hidden_ids(self) -> list[int]:
        return sorted(n.id for n in self.nodes.values() if n.kind is NodeKind.HIDDEN)

    def genes(self) -> list[ConnectionGene]:
        """Connection genes ordered by innovation number"""
        return [self.connections[i] for i in sorted(self.connections)]

    def innovations(self) -> list[int]:
        return sorted(self.connections)

    def max_innovation(self) -> int:
        return max(self.connections, default=0)

    def enabled_connections(self) -> Iterator[ConnectionGene]:
        return (c for c in self.connections.values() if c.enabled)

    def has_link(self, in_node: int, out_node: int) -> bool:
        return any(c.in_node == in_node and c.out_node == out_node for c in self.connections.values())

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {nid: [] for nid in self.nodes}
        for c in self.enabled_connections():
            adj[c.in_node].append(c.out_node)
        return adj

    def creates_cycle(
        self, in_node: int, out_node: int, adj: Mapping[int, list[int]] | None = None
    ) -> bool:
        """
        Whether an enabled in_node -> out_node link would close a cycle.

        Pass a prebuilt ``adj`` (as from ``adjacency``) when checking many links
        against the same genome.
        """
        if in_node == out_node:
            return True
        if adj is None:
            adj = self.adjacency()
        stack = [out_node]
        visited: set[int] = set()
        while stack:
            v = stack.pop()
            if v == in_node:
                return True
            if v in visited:
                continue
            visited.add(v)
            stack.extend(adj.get(v, ()))
        return False

    def topological_order(self) -> list[int]:
        """Kahn order over enabled connections; ready nodes taken by lowest id"""
        indegree = {nid: 0 for nid in self.nodes}
        adj = self.adjacency()
        for targets in adj.values():
            for t in targets:
                indegree[t] += 1
        ready = [nid for nid, d in indegree.items() if d == 0]
        heapq.heapify(ready)
        order: list[int] = []
        while ready:
            nid = heapq.heappop(ready)
            order.append(nid)
            for t in adj[nid]:
                indegree[t] -= 1
                if indegree[t] == 0:
                    heapq.heappush(ready, t)
        if len(order) != len(self.nodes):
            raise CycleError(details={"genome": self.index})
        return order

    def is_acyclic(self) -> bool:
        try:
            self.topological_order()
        except CycleError:
            return False
        return True

    # --- copying ---

    def copy(self, index: int | None = None) -> "Genome":
        return Genome(
            input_count=self.input_count,
            output_count=self.output_count,
            nodes=dict(self.nodes),
            connections=dict(self.connections),
            fitness=self.fitness,
            index=self.index if index is None else index,
        )

    def add_connection(self, gene: ConnectionGene) -> None:
        if gene.in_node not in self.nodes or gene.out_node not in self.nodes:
            raise GenomeError(
                "Connection endpoints must reference existing nodes",
                details={"in": gene.in_node, "out": gene.out_node},
            )
        self.connections[gene.innovation] = gene

    def structurally_equal(self, other: "Genome") -> bool:
        return (
            self.input_count == other.input_count
            and self.output_count == other.output_count
            and self.nodes == other.nodes
            and self.connections == other.connections
        )


def new_genome(input_count: int, output_count: int, index: int = 0) -> Genome:
    """Create a genome with only input and output nodes and no connections."""
    if input_count < 1 or output_count < 1:
        raise GenomeError(
            "Genomes need at least one input and one output",
            details={"inputCount": input_count, "outputCount": output_count},
        )
    nodes = {i: NodeGene(i, NodeKind.INPUT) for i in range(input_count)}
    for o in range(input_count, input_count + output_count):
        nodes[o] = NodeGene(o, NodeKind.OUTPUT)
    return Genome(input_count=input_count, output_count=output_count, nodes=nodes, index=index)


# --- text format ---


def genome_to_text(g: Genome) -> str:
    """One node or connection per line, nodes by id, connections by innovation"""
    lines = [f"node {n.id} {n.kind.value}" for n in sorted(g.nodes.values(), key=lambda n: n.id)]
    lines.extend(
        f"conn {c.in_node} {c.out_node} {c.weight!r} {str(c.enabled).lower()} {c.innovation}"
        for c in g.genes()
    )
    return "\n".join(lines) + "\n"


def genome_from_text(text: str | Iterable[str], index: int = 0) -> Genome:
    lines = text.splitlines() if isinstance(text, str) else list(text)
    nodes: dict[int, NodeGene] = {}
    conns: list[ConnectionGene] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if parts[0] == "node" and len(parts) == 3:
                nid = int(parts[1])
                nodes[nid] = NodeGene(nid, NodeKind(parts[2]))
            elif parts[0] == "conn" and len(parts) == 6:
                if parts[4] not in ("true", "false"):
                    raise ValueError(parts[4])
                conns.append(
                    ConnectionGene(
                        in_node=int(parts[1]),
                        out_node=int(parts[2]),
                        weight=float(parts[3]),
                        enabled=parts[4] == "true",
                        innovation=int(parts[5]),
                    )
                )
            else:
                raise ValueError(parts[0])
        except (ValueError, IndexError) as e:
            raise GenomeError(
                f"Malformed genome line {lineno}: {raw!r}", details={"line": lineno, "error": str(e)}
            )

    input_count = sum(1 for n in nodes.values() if n.kind is NodeKind.INPUT)
    output_count = sum(1 for n in nodes.values() if n.kind is NodeKind.OUTPUT)
    g = new_genome(input_count, output_count, index=index)
    if any(g.nodes.get(nid) != node for nid, node in nodes.items() if node.kind is not NodeKind.HIDDEN):
        raise GenomeError("Input and output node ids must be contiguous from zero")
    g.nodes.update(nodes)
    for c in conns:
        g.add_connection(c)
    if not g.is_acyclic():
        raise CycleError(details={"source": "text"})
    return g
