# src/analysis/trees/tree_enumeration.py

import heapq
import logging
from functools import lru_cache
from itertools import product
from typing import Iterator, List, Tuple

from models.graph_models import Graph
from models.settings import SpectraSettings
from utils.exceptions import EnumerationCapError, GraphFormatError

logger = logging.getLogger(__name__)



class TreeEnumerator:
    """
    Unlabeled trees: canonical codes, exhaustive generation and a Prüfer counting oracle.

    Canonical code (byte-exact, so fixtures transfer):
    - the rooted encoding of v is "(" + the encodings of its children, sorted
      ascending by plain string comparison and concatenated, + ")"
    - a tree with a single centroid c is encoded as the rooted encoding of c
    - a tree with two centroids c1, c2 (necessarily adjacent) is encoded by
      cutting the edge c1c2, taking A = encoding of c1 in its half and B =
      encoding of c2 in its half, and writing "[" + min(A + B, B + A) + "]"

    The code has 2n characters (2n + 2 for bicentroidal trees).

    """

    DEFAULT_CAP = SpectraSettings().enumeration_cap
    PRUFER_CAP = SpectraSettings().prufer_cap


    @staticmethod
    def canonical_code(g: Graph) -> str:
        """
        Isomorphism-invariant code of a tree.

        Raises:
            NotATreeError: g is not a tree
        """
        g.require_tree()
        n = g.order
        if n == 1:
            return "()"

        centroids = TreeEnumerator._centroids(g)
        if len(centroids) == 1:
            return TreeEnumerator._rooted_code(g, centroids[0], blocked=-1)
        c1, c2 = centroids
        a = TreeEnumerator._rooted_code(g, c1, blocked=c2)
        b = TreeEnumerator._rooted_code(g, c2, blocked=c1)
        return "[" + min(a + b, b + a) + "]"


    @staticmethod
    def _centroids(g: Graph) -> List[int]:
        n = g.order
        parent = [-1] * n
        order = [0]
        seen = [False] * n
        seen[0] = True
        for w in order:
            for nb in g.adjacency[w]:
                if not seen[nb]:
                    seen[nb] = True
                    parent[nb] = w
                    order.append(nb)

        size = [1] * n
        heaviest = [0] * n
        for w in reversed(order):
            p = parent[w]
            if p >= 0:
                size[p] += size[w]
                heaviest[p] = max(heaviest[p], size[w])
        weights = [max(heaviest[v], n - size[v]) for v in range(n)]
        best = min(weights)
        return [v for v in range(n) if weights[v] == best]


    @staticmethod
    def _rooted_code(g: Graph, root: int, blocked: int) -> str:
        """AHU encoding of the subtree at root, never crossing into `blocked`"""
        parent = {root: blocked}
        order = [root]
        for w in order:
            for nb in g.adjacency[w]:
                if nb != parent[w] and nb != blocked:
                    parent[nb] = w
                    order.append(nb)

        child_codes = {w: [] for w in order}
        code = {}
        for w in reversed(order):
            code[w] = "(" + "".join(sorted(child_codes[w])) + ")"
            if w != root:
                child_codes[parent[w]].append(code[w])
        return code[root]




    @staticmethod
    def graph_from_code(code: str) -> Graph:
        """
        Decode a canonical code into a tree, labeling vertices in preorder of the
        encoding (for bicentroidal codes the first half is labeled first and its
        root joined to the root of the second half).

        Raises:
            GraphFormatError: the code is not a well-formed encoding
        """
        text = code[1:-1] if code.startswith("[") and code.endswith("]") else code
        edges: List[Tuple[int, int]] = []
        stack: List[int] = []
        roots: List[int] = []
        label = 0
        for ch in text:
            if ch == "(":
                if stack:
                    edges.append((stack[-1], label))
                else:
                    roots.append(label)
                stack.append(label)
                label += 1
            elif ch == ")":
                if not stack:
                    raise GraphFormatError(f"unbalanced canonical code {code!r}")
                stack.pop()
            else:
                raise GraphFormatError(f"unexpected character {ch!r} in canonical code {code!r}")
        expected_roots = 2 if code.startswith("[") else 1
        if stack or len(roots) != expected_roots:
            raise GraphFormatError(f"malformed canonical code {code!r}")
        if expected_roots == 2:
            edges.append((roots[0], roots[1]))
        return Graph.from_edges(label, edges)




    @staticmethod
    def enumerate_trees(n: int, cap: int = DEFAULT_CAP) -> Iterator[Graph]:
        """
        One tree per isomorphism class of order n, in ascending canonical code order.

        Each emitted tree is graph_from_code(code), so labels are reproducible.

        Raises:
            EnumerationCapError: n < 1 or n > cap
        """
        for code in TreeEnumerator.tree_codes(n, cap):
            yield TreeEnumerator.graph_from_code(code)


    @staticmethod
    def tree_codes(n: int, cap: int = DEFAULT_CAP) -> Tuple[str, ...]:
        if not 1 <= n <= cap:
            raise EnumerationCapError(f"order {n} outside the enumeration range 1..{cap}")
        return _codes_of_order(n)




    @staticmethod
    def prufer_count_oracle(n: int, cap: int = PRUFER_CAP) -> int:
        """
        Number of unlabeled trees of order n, counted by decoding every Prüfer
        sequence and deduplicating canonical codes. Costs n^(n-2) decodings.

        Raises:
            EnumerationCapError: n < 1 or n > cap
        """
        if not 1 <= n <= cap:
            raise EnumerationCapError(f"Prüfer oracle supports orders 1..{cap}, got {n}")
        if n <= 2:
            return 1
        codes = set()
        for sequence in product(range(n), repeat=n - 2):
            codes.add(TreeEnumerator.canonical_code(prufer_to_tree(sequence, n)))
        return len(codes)


def prufer_to_tree(sequence, n: int) -> Graph:
    """Labeled tree of a Prüfer sequence over 0..n-1 (smallest-leaf decoding)"""
    degree = [1] * n
    for v in sequence:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in sequence:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.from_edges(n, edges)


@lru_cache(maxsize=None)
def _codes_of_order(n: int) -> Tuple[str, ...]:
    """Sorted codes of order n, grown from order n-1 by attaching a leaf anywhere and deduplicating"""
    if n == 1:
        return ("()",)
    codes = set()
    for code in _codes_of_order(n - 1):
        base = TreeEnumerator.graph_from_code(code)
        for v in range(base.order):
            grown = Graph(n, base.edges + ((v, n - 1),))
            codes.add(TreeEnumerator.canonical_code(grown))
    logger.info("enumerated %d trees of order %d", len(codes), n)
    return tuple(sorted(codes))
