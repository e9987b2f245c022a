# src/analysis/transforms/graft_transforms.py

from collections import deque
from itertools import combinations, product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from models.graph_models import Graph
from models.tree_models import BranchDecomposition, PendantPath
from utils.exceptions import TransformError



class GraftTransforms:
    """

    Graph rewrites with a monotone effect on rho_Q:
    - C-transformation: contract a cut edge uv into u and attach a new pendant edge at u
    - branch move: move the group G3 of branches at a cut vertex v0 over to a vertex u of G2
    - pendant path shift: move the last vertex of a pendant path of length p to the
      end of a pendant path of length q >= p at the same vertex

    All rewrites preserve the order and, on trees, tree-ness.

    """

    @staticmethod
    def is_cut_edge(g: Graph, u: int, v: int) -> bool:
        """True if removing edge uv disconnects u from v"""
        if not g.has_edge(u, v):
            raise TransformError(f"({u}, {v}) is not an edge")
        seen = {u}
        queue = deque([u])
        while queue:
            w = queue.popleft()
            for nb in g.adjacency[w]:
                if (w, nb) in ((u, v), (v, u)) or nb in seen:
                    continue
                if nb == v:
                    return False
                seen.add(nb)
                queue.append(nb)
        return True




    @staticmethod
    def c_transform(g: Graph, u: int, v: int) -> Tuple[Graph, Dict[int, int]]:
        """
        C-transformation G_uv.

        v is merged into u (neighbors of v are rewired to u) and a new pendant vertex
        is attached to u. Labels: the merged vertex keeps u's label, labels above v
        move down by one, and the new pendant vertex is n-1.

        Args:
            g: Connected graph
            u, v: Endpoints of a cut edge

        Returns:
            Tuple of (G_uv, old->new label map); v maps to the new label of u

        Raises:
            TransformError: uv is not an edge or not a cut edge
        """
        if not GraftTransforms.is_cut_edge(g, u, v):
            raise TransformError(f"({u}, {v}) is not a cut edge")

        n = g.order
        relabel = {w: (w if w < v else w - 1) for w in range(n) if w != v}
        relabel[v] = relabel[u]

        edges = []
        for a, b in g.edges:
            if {a, b} == {u, v}:
                continue
            edges.append((relabel[a], relabel[b]))
        edges.append((relabel[u], n - 1))
        return Graph.from_edges(n, edges), relabel


    @staticmethod
    def eligible_c_transform_edges(g: Graph) -> List[Tuple[int, int]]:
        """
        Ordered pairs (u, v) where uv is a non-pendant cut edge and u also carries a pendant edge uz.
        """
        pairs = []
        for a, b in g.edges:
            for u, v in ((a, b), (b, a)):
                if g.degree(u) < 2 or g.degree(v) < 2:
                    continue
                if not any(g.degree(z) == 1 for z in g.adjacency[u] if z != v):
                    continue
                if GraftTransforms.is_cut_edge(g, u, v):
                    pairs.append((u, v))
        return pairs




    @staticmethod
    def branch_decomposition(g: Graph, v0: int,
                             grouping: Optional[Sequence[Sequence[int]]] = None) -> BranchDecomposition:
        """
        Components of G - v0, grouped into G1, G2, G3.

        Args:
            g: Connected graph
            v0: Cut vertex
            grouping: Three lists of branch indices partitioning all branches;
                defaults to G1 = branch 0, G2 = branch 1, G3 = the rest when v0
                has at least three branches, and to no grouping otherwise

        Raises:
            TransformError: v0 is not a cut vertex, or the grouping is not a
                partition into three nonempty groups
        """
        g.require_connected()
        rest = [w for w in range(g.order) if w != v0]
        seen = set()
        branches = []
        for start in rest:
            if start in seen:
                continue
            comp = {start}
            queue = deque([start])
            while queue:
                w = queue.popleft()
                for nb in g.adjacency[w]:
                    if nb != v0 and nb not in comp:
                        comp.add(nb)
                        queue.append(nb)
            seen |= comp
            branches.append(frozenset(comp))

        if len(branches) < 2:
            raise TransformError(f"vertex {v0} is not a cut vertex")
        if grouping is None:
            if len(branches) < 3:
                # two branches: nothing to group, usable for inspection only
                return BranchDecomposition(v0=v0, branches=tuple(branches), grouping=None)
            grouping = ([0], [1], list(range(2, len(branches))))
        groups = tuple(tuple(sorted(int(b) for b in group)) for group in grouping)
        flat = sorted(b for group in groups for b in group)
        if len(groups) != 3 or any(not group for group in groups) or flat != list(range(len(branches))):
            raise TransformError(f"grouping {grouping} is not a partition of branches 0..{len(branches) - 1} "
                                 f"into three nonempty groups")
        return BranchDecomposition(v0=v0, branches=tuple(branches), grouping=groups)


    @staticmethod
    def _require_grouping(dec: BranchDecomposition) -> None:
        if dec.grouping is None:
            raise TransformError(f"decomposition at {dec.v0} has fewer than three branches and no grouping")


    @staticmethod
    def branch_groupings(branch_count: int) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]]:
        """Every ordered assignment of branches to three nonempty groups (G1, G2, G3)"""
        for labels in product(range(3), repeat=branch_count):
            groups = tuple(tuple(b for b in range(branch_count) if labels[b] == k) for k in range(3))
            if all(groups):
                yield groups




    @staticmethod
    def move_branch(g: Graph, dec: BranchDecomposition, u: int) -> Graph:
        """
        Move G3 from v0 to u: every edge v0-w with w in G3 becomes u-w.

        Raises:
            TransformError: u is v0 or not a vertex of G2
        """
        GraftTransforms._require_grouping(dec)
        if u == dec.v0:
            raise TransformError("target vertex must differ from v0")
        g2 = dec.group_vertices(1)
        if u not in g2:
            raise TransformError(f"vertex {u} is not in G2 {list(g2)}")

        g3 = set(dec.group_vertices(2))
        edges = []
        for a, b in g.edges:
            if a == dec.v0 and b in g3:
                edges.append((u, b))
            elif b == dec.v0 and a in g3:
                edges.append((a, u))
            else:
                edges.append((a, b))
        return Graph.from_edges(g.order, edges)




    @staticmethod
    def lemma31_sums(dec: BranchDecomposition, x: Sequence[float]) -> Tuple[float, float]:
        """
        The two double sums of the branch-move condition:
            sum over i in V(G3) minus v0, j in V(G1) of (x_i + x_j)^2
            sum over i in V(G3) minus v0, j in V(G2) of (x_i + x_j)^2
        V(G1) and V(G2) include v0.
        """
        x = np.asarray(x, dtype=np.float64)
        g3 = np.array(dec.group_vertices(2))
        sums = []
        for group in (0, 1):
            members = np.array(dec.group_vertices(group, include_v0=True))
            sums.append(float(np.sum((x[g3][:, None] + x[members][None, :]) ** 2)))
        return sums[0], sums[1]


    @staticmethod
    def lemma31_condition(g: Graph, dec: BranchDecomposition, x: Sequence[float],
                          rel_slack: float = 1e-12) -> bool:
        """
        True iff the G1 double sum is >= the G2 double sum, computed from the
        Perron vector x of g. Sums equal up to rel_slack count as equal, since
        symmetric decompositions give equal sums only up to rounding.

        Raises:
            TransformError: len(x) differs from the order of g
        """
        if len(x) != g.order:
            raise TransformError(f"vector length {len(x)} does not match graph order {g.order}")
        GraftTransforms._require_grouping(dec)
        s1, s2 = GraftTransforms.lemma31_sums(dec, x)
        return s1 >= s2 - rel_slack * max(s1, s2)




    @staticmethod
    def pendant_paths(g: Graph, u: int) -> List[PendantPath]:
        """
        Pendant paths at u: for each neighbor w, walk away from u through degree-2
        vertices; the walk is a pendant path if it ends at a leaf.
        """
        paths = []
        for w in g.adjacency[u]:
            prev, cur = u, w
            walk = [w]
            while g.degree(cur) == 2:
                nxt = next(nb for nb in g.adjacency[cur] if nb != prev)
                if nxt == u:
                    break
                walk.append(nxt)
                prev, cur = cur, nxt
            if g.degree(cur) == 1:
                paths.append(PendantPath(anchor=u, vertices=tuple(walk)))
        return paths


    @staticmethod
    def eligible_path_shifts(g: Graph) -> List[Tuple[int, PendantPath, PendantPath]]:
        """
        Every (u, p-path, q-path) with two distinct pendant paths at u, p <= q, and at
        least two vertices outside the two paths.
        """
        configs = []
        for u in range(g.order):
            for first, second in combinations(GraftTransforms.pendant_paths(g, u), 2):
                if g.order - first.length - second.length < 2:
                    continue
                short, long_ = (first, second) if first.length <= second.length else (second, first)
                configs.append((u, short, long_))
        return configs


    @staticmethod
    def pendant_path_shift(g: Graph, u: int, path_p: PendantPath, path_q: PendantPath) -> Graph:
        """
        G_{p-1,q+1}: detach the leaf end of the p-path and attach it to the leaf end of the q-path.

        Raises:
            TransformError: a path is not pendant at u, the paths overlap, p = 0,
                p > q, or fewer than two vertices lie outside the paths
        """
        known = {path.vertices for path in GraftTransforms.pendant_paths(g, u)}
        for path in (path_p, path_q):
            if path.anchor != u or path.vertices not in known:
                raise TransformError(f"{list(path.vertices)} is not a pendant path at vertex {u}")
        if set(path_p.vertices) & set(path_q.vertices):
            raise TransformError("pendant paths must be disjoint")
        if path_p.length < 1:
            raise TransformError("p must be >= 1")
        if path_p.length > path_q.length:
            raise TransformError(f"need q >= p, got p={path_p.length}, q={path_q.length}")
        if g.order - path_p.length - path_q.length < 2:
            raise TransformError("the base graph outside the two paths needs at least two vertices")

        moved = path_p.vertices[-1]
        before = path_p.vertices[-2] if path_p.length >= 2 else u
        edges = [e for e in g.edges if set(e) != {before, moved}]
        edges.append((path_q.vertices[-1], moved))
        return Graph.from_edges(g.order, edges)
