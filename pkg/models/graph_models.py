# src/models/graph_models.py
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from utils.exceptions import GraphValidationError, NotATreeError, DisconnectedGraphError

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph on the dense vertex set 0..order-1.

    Edges are stored as sorted (u, v) pairs with u < v, in lexicographic order,
    so two graphs with the same labeled edge set compare equal and hash equal.
    Adjacency lists are derived from the edges and are always sorted.
    """
    order: int
    edges: Tuple[Edge, ...]
    adjacency: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.order < 1:
            raise GraphValidationError(f"order must be >= 1, got {self.order}")

        seen = set()
        normalized = []
        for u, v in self.edges:
            if u == v:
                raise GraphValidationError(f"self-loop at vertex {u}")
            if not (0 <= u < self.order and 0 <= v < self.order):
                raise GraphValidationError(f"edge ({u}, {v}) out of range for order {self.order}")
            pair = (min(u, v), max(u, v))
            if pair in seen:
                raise GraphValidationError(f"duplicate edge {pair}")
            seen.add(pair)
            normalized.append(pair)
        normalized.sort()

        neighbors: List[List[int]] = [[] for _ in range(self.order)]
        for u, v in normalized:
            neighbors[u].append(v)
            neighbors[v].append(u)

        object.__setattr__(self, "edges", tuple(normalized))
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(nb)) for nb in neighbors))

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Sequence[int]]) -> "Graph":
        return cls(order, tuple((int(u), int(v)) for u, v in edges))

    @property
    def size(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(nb) for nb in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def components(self) -> List[List[int]]:
        """Connected components, each sorted, listed by smallest vertex"""
        seen = [False] * self.order
        result = []
        for start in range(self.order):
            if seen[start]:
                continue
            seen[start] = True
            queue = deque([start])
            comp = []
            while queue:
                w = queue.popleft()
                comp.append(w)
                for nb in self.adjacency[w]:
                    if not seen[nb]:
                        seen[nb] = True
                        queue.append(nb)
            result.append(sorted(comp))
        return result

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def is_tree(self) -> bool:
        return self.size == self.order - 1 and self.is_connected()

    def require_connected(self) -> None:
        comps = self.components()
        if len(comps) > 1:
            raise DisconnectedGraphError(comps[0][0], comps[1][0])

    def require_tree(self) -> None:
        if not self.is_tree():
            raise NotATreeError(
                f"expected a tree, got a graph with {self.order} vertices, {self.size} edges"
                f" and {len(self.components())} component(s)"
            )

    def relabel(self, permutation: Sequence[int]) -> "Graph":
        """Graph with vertex v renamed to permutation[v]"""
        if sorted(permutation) != list(range(self.order)):
            raise GraphValidationError("relabeling must be a permutation of 0..n-1")
        return Graph.from_edges(self.order, ((permutation[u], permutation[v]) for u, v in self.edges))

    def edge_list_text(self) -> str:
        """Edge-list document: header `n m`, then one `u v` line per edge in lexicographic order"""
        lines = [f"{self.order} {self.size}"]
        lines.extend(f"{u} {v}" for u, v in self.edges)
        return "\n".join(lines) + "\n"


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """Exact all-pairs shortest path lengths, an int64 array that is never written after construction"""
    values: np.ndarray

    @property
    def order(self) -> int:
        return int(self.values.shape[0])

    def __getitem__(self, index):
        return self.values[index]


@dataclass(frozen=True, eq=False)
class TransmissionVector:
    values: np.ndarray   # Tr(v) for each vertex
    tr_max: int
    tr_min: int

    def __getitem__(self, v: int) -> int:
        return int(self.values[v])


@dataclass(frozen=True, eq=False)
class QMatrix:
    """Distance signless Laplacian Tr(G) + D(G), exact integer entries"""
    values: np.ndarray

    @property
    def order(self) -> int:
        return int(self.values.shape[0])


@dataclass(frozen=True)
class GraphStats:
    degrees: Tuple[int, ...]
    pendant_vertices: Tuple[int, ...]
    diameter: int
    branching_vertices: int       # vertices of degree at least three
    wiener_index: int

    @property
    def pendant_count(self) -> int:
        return len(self.pendant_vertices)
