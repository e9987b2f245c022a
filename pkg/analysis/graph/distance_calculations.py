# src/analysis/graph/distance_calculations.py

from collections import deque
from typing import List

import numpy as np

from models.graph_models import Graph, DistanceMatrix, TransmissionVector, QMatrix, GraphStats
from utils.exceptions import DisconnectedGraphError



class DistanceCalculator:
    """

    Exact integer distance data of connected graphs.

    Everything here stays in integer arithmetic; floating point only enters in the spectral analysis.

    """

    @staticmethod
    def all_pairs_distances(g: Graph) -> DistanceMatrix:
        """
        Unweighted shortest path lengths by a breadth-first search from every vertex.

        Args:
            g: Connected graph

        Returns:
            DistanceMatrix with int64 entries, marked read-only

        Raises:
            DisconnectedGraphError: naming a vertex of the first component and
                the smallest vertex the search from it could not reach
        """
        n = g.order
        dist = np.full((n, n), -1, dtype=np.int64)
        for source in range(n):
            row = dist[source]
            row[source] = 0
            queue = deque([source])
            while queue:
                w = queue.popleft()
                for nb in g.adjacency[w]:
                    if row[nb] < 0:
                        row[nb] = row[w] + 1
                        queue.append(nb)
            if source == 0 and (unreached := np.flatnonzero(row < 0)).size:
                raise DisconnectedGraphError(0, int(unreached[0]))
        dist.setflags(write=False)
        return DistanceMatrix(dist)




    @staticmethod
    def transmissions(d: DistanceMatrix) -> TransmissionVector:
        """
        Transmission Tr(v), the sum of distances from v to every other vertex.

        Args:
            d: Distance matrix

        Returns:
            TransmissionVector with cached Tr_max and Tr_min
        """
        tr = d.values.sum(axis=1)
        tr.setflags(write=False)
        return TransmissionVector(values=tr, tr_max=int(tr.max()), tr_min=int(tr.min()))




    @staticmethod
    def q_matrix(g: Graph) -> QMatrix:
        """
        Distance signless Laplacian Q_D(G) = Tr(G) + D(G).

        Args:
            g: Connected graph

        Returns:
            QMatrix with exact integer entries
        """
        d = DistanceCalculator.all_pairs_distances(g)
        tr = DistanceCalculator.transmissions(d)
        q = d.values.copy()
        np.fill_diagonal(q, tr.values)
        q.setflags(write=False)
        return QMatrix(q)




    @staticmethod
    def graph_stats(g: Graph) -> GraphStats:
        """
        Degree-based and distance-based statistics.

        Returns:
            GraphStats containing:
                - degrees: degree of every vertex
                - pendant_vertices: vertices of degree one
                - diameter: largest distance
                - branching_vertices: number of vertices of degree at least three
                - wiener_index: sum of d(u, v) over unordered pairs
        """
        d = DistanceCalculator.all_pairs_distances(g)
        degrees = g.degrees()
        return GraphStats(
            degrees=degrees,
            pendant_vertices=tuple(v for v, deg in enumerate(degrees) if deg == 1),
            diameter=int(d.values.max()),
            branching_vertices=sum(1 for deg in degrees if deg >= 3),
            wiener_index=int(d.values.sum()) // 2,
        )




    @staticmethod
    def tree_distance_by_walk(g: Graph, u: int, v: int) -> int:
        """
        Length of the unique u-v path in a tree, found by walking parent pointers.

        Independent of the breadth-first computation, used to cross-check it.
        """
        g.require_tree()
        parent: List[int] = [-1] * g.order
        depth: List[int] = [0] * g.order
        stack = [0]
        visited = [False] * g.order
        visited[0] = True
        while stack:
            w = stack.pop()
            for nb in g.adjacency[w]:
                if not visited[nb]:
                    visited[nb] = True
                    parent[nb] = w
                    depth[nb] = depth[w] + 1
                    stack.append(nb)

        steps = 0
        a, b = u, v
        while a != b:
            if depth[a] >= depth[b]:
                a = parent[a]
            else:
                b = parent[b]
            steps += 1
        return steps
