"""
Innovation bookkeeping shared by every genome of one evolution run.
"""

from .genome import Genome


class InnovationRegistry:
    """
    Global innovation numbers, split-node ids and genome creation indices.

    A (from, to) pair always maps to the same innovation number, and
    splitting the same connection anywhere yields the same middle node.
    """

    def __init__(self, first_node_id: int, first_innovation: int = 1):
        self._next_innovation = first_innovation
        self._next_node_id = first_node_id
        self._next_genome_index = 0
        self.link_table: dict[tuple[int, int], int] = {}
        self.split_table: dict[int, int] = {}

    @classmethod
    def for_genome(cls, g: Genome) -> "InnovationRegistry":
        return cls(first_node_id=g.input_count + g.output_count)

    @classmethod
    def for_shape(cls, input_count: int, output_count: int) -> "InnovationRegistry":
        return cls(first_node_id=input_count + output_count)

    @property
    def next_innovation(self) -> int:
        return self._next_innovation

    @property
    def next_node_id(self) -> int:
        return self._next_node_id

    def link_innovation(self, in_node: int, out_node: int) -> int:
        key = (in_node, out_node)
        if key not in self.link_table:
            self.link_table[key] = self._next_innovation
            self._next_innovation += 1
        return self.link_table[key]

    def split_node(self, innovation: int) -> int:
        if innovation not in self.split_table:
            self.split_table[innovation] = self._next_node_id
            self._next_node_id += 1
        return self.split_table[innovation]

    def next_genome_index(self) -> int:
        index = self._next_genome_index
        self._next_genome_index += 1
        return index
