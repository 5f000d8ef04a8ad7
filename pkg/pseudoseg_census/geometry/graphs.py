"""
Labelled graphs, the currency of every census.
"""

from dataclasses import dataclass
from functools import cached_property

import networkx as nx
import numpy as np

from ..exceptions import CensusError


@dataclass(frozen=True)
class LabelledGraph:
    """
    Symmetric irreflexive adjacency over labelled vertices.

    Attributes:
        labels (tuple): Vertex labels, sorted.
        edges (frozenset): Edges as (a, b) tuples with a < b.
    """

    labels: tuple
    edges: frozenset

    def __post_init__(self):
        labels = tuple(sorted(str(label) for label in self.labels))
        if len(set(labels)) != len(labels):
            raise CensusError("Duplicate vertex label")
        known = set(labels)
        edges = set()
        for a, b in self.edges:
            a, b = str(a), str(b)
            if a == b:
                raise CensusError(f"Self-loop on {a}")
            if a not in known or b not in known:
                raise CensusError(f"Edge ({a}, {b}) uses an unknown vertex")
            edges.add((a, b) if a < b else (b, a))
        object.__setattr__(self, 'labels', labels)
        object.__setattr__(self, 'edges', frozenset(edges))

    @property
    def order(self):
        return len(self.labels)

    def has_edge(self, a, b):
        return ((a, b) if a < b else (b, a)) in self.edges

    def neighbors(self, label):
        return sorted(
            b if a == label else a for a, b in self.edges if label in (a, b)
        )

    def degree(self, label):
        return len(self.neighbors(label))

    def canonical_encoding(self):
        """
        Adjacency bits of the upper triangle, in sorted label order, packed
        into bytes. Two graphs on the same labels are equal iff their
        encodings are equal.

        Returns:
            bytes: Packed encoding (prefixed by the vertex count).
        """
        position = {label: i for i, label in enumerate(self.labels)}
        n = len(self.labels)
        bits = np.zeros(n * (n - 1) // 2, dtype=np.uint8)
        for a, b in self.edges:
            i, j = position[a], position[b]
            # row-major index of (i, j), i < j, in the strict upper triangle
            bits[i * n - i * (i + 1) // 2 + (j - i - 1)] = 1
        return n.to_bytes(4, 'big') + np.packbits(bits).tobytes()

    @cached_property
    def _nx(self):
        graph = nx.Graph()
        graph.add_nodes_from(self.labels)
        graph.add_edges_from(self.edges)
        return graph

    def clique_number(self):
        if not self.labels:
            return 0
        return max(len(clique) for clique in nx.find_cliques(self._nx))

    def is_bipartite(self, side=None):
        """
        Check bipartiteness, optionally against a prescribed side.

        Args:
            side (iterable, optional): Labels that must form one side.

        Returns:
            bool: True when the graph is bipartite (with `side` independent and
            every edge leaving it, when given).
        """
        if side is None:
            return nx.is_bipartite(self._nx)
        side = set(side)
        return all((a in side) != (b in side) for a, b in self.edges)

    def to_dict(self):
        return {
            'vertices': list(self.labels),
            'edges': [list(edge) for edge in sorted(self.edges)],
        }

