# src/analysis/trees/tree_families.py

from typing import Dict, List, Sequence, Tuple

from models.graph_models import Graph
from models.tree_models import FamilySpec
from utils.exceptions import FamilyConstraintError



class TreeFamilies:
    """

    Deterministic constructors for the named tree families.

    Every constructor documents its labeling so that fixtures and reports are
    reproducible. Parameter validation is strict: a violated constraint raises
    FamilyConstraintError carrying the inequality as text.

    """

    @staticmethod
    def _require(condition: bool, family: str, constraint: str) -> None:
        if not condition:
            raise FamilyConstraintError(family, constraint)


    @staticmethod
    def make_path(n: int) -> Graph:
        """Path 0-1-...-(n-1)"""
        TreeFamilies._require(n >= 1, "Path", "n >= 1")
        return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


    @staticmethod
    def make_star(n: int) -> Graph:
        """Star K_{1,n-1} with center 0"""
        TreeFamilies._require(n >= 2, "Star", "n >= 2")
        return Graph.from_edges(n, ((0, i) for i in range(1, n)))




    @staticmethod
    def make_B(n: int, n0: int, parts: Sequence[int]) -> Graph:
        """
        B(n; n0, n1, ..., nr): the star S_{1,r} with n0 pendant edges at the center
        and n_i pendant edges at the i-th arm.

        Labels: center 0, arms 1..r, then the n0 center pendants, then the
        pendants of arm 1, arm 2, ... consecutively.

        Args:
            n: Order
            n0: Extra pendant edges at the center (>= 0)
            parts: n1 <= n2 <= ... <= nr, each >= 1

        Raises:
            FamilyConstraintError: r >= 1, n0 >= 0, 1 <= n1 <= ... <= nr or
                n0 + n1 + ... + nr = n - r - 1 violated
        """
        parts = list(parts)
        r = len(parts)
        TreeFamilies._require(r >= 1, "B", "r >= 1")
        TreeFamilies._require(n0 >= 0, "B", "n0 >= 0")
        TreeFamilies._require(parts[0] >= 1 and parts == sorted(parts), "B", "1 <= n1 <= ... <= nr")
        TreeFamilies._require(n0 + sum(parts) == n - r - 1, "B", "n0 + n1 + ... + nr = n - r - 1")

        edges: List[Tuple[int, int]] = [(0, arm) for arm in range(1, r + 1)]
        nxt = r + 1
        for _ in range(n0):
            edges.append((0, nxt))
            nxt += 1
        for arm, count in enumerate(parts, start=1):
            for _ in range(count):
                edges.append((arm, nxt))
                nxt += 1
        return Graph.from_edges(n, edges)




    @staticmethod
    def make_S(n: int, legs: Sequence[int]) -> Graph:
        """
        S(n; n1, ..., nr): r paths of n_i vertices, each joined by an edge to the center.

        Labels: center 0, then leg 1 as 1..n1 (1 adjacent to the center), leg 2 next, and so on.

        Raises:
            FamilyConstraintError: r >= 1, 1 <= n1 <= ... <= nr or n1 + ... + nr = n - 1 violated
        """
        legs = list(legs)
        TreeFamilies._require(len(legs) >= 1, "S", "r >= 1")
        TreeFamilies._require(legs[0] >= 1 and legs == sorted(legs), "S", "1 <= n1 <= ... <= nr")
        TreeFamilies._require(sum(legs) == n - 1, "S", "n1 + ... + nr = n - 1")

        edges = []
        nxt = 1
        for length in legs:
            edges.append((0, nxt))
            for offset in range(length - 1):
                edges.append((nxt + offset, nxt + offset + 1))
            nxt += length
        return Graph.from_edges(n, edges)




    @staticmethod
    def make_T(n: int, k: int, t1: int, t2: int) -> Graph:
        """
        Double broom T(n, k; t1, t2): path 0..l-1 (l = n - k) with t1 pendant edges at 0
        and t2 pendant edges at l-1.

        Labels: path first, then the t1 pendants of vertex 0, then the t2 pendants of vertex l-1.

        Raises:
            FamilyConstraintError: t1 >= 1, t2 >= 1, t1 + t2 = k or l = n - k >= 2 violated
        """
        TreeFamilies._require(t1 >= 1, "T", "t1 >= 1")
        TreeFamilies._require(t2 >= 1, "T", "t2 >= 1")
        TreeFamilies._require(t1 + t2 == k, "T", "t1 + t2 = k")
        length = n - k
        TreeFamilies._require(length >= 2, "T", "l = n - k >= 2")

        edges = [(i, i + 1) for i in range(length - 1)]
        nxt = length
        for _ in range(t1):
            edges.append((0, nxt))
            nxt += 1
        for _ in range(t2):
            edges.append((length - 1, nxt))
            nxt += 1
        return Graph.from_edges(n, edges)




    @staticmethod
    def make_P(n: int, i: int, j: int) -> Graph:
        """
        P(n; i, j): the path v1..v_{n-3} with a pendant edge at v_i and a pendant
        path of length 2 at v_j.

        Labels: v_t is t-1 (0..n-4), the pendant vertex at v_i is n-3, and the
        pendant path at v_j is (j-1)-(n-2)-(n-1).

        Raises:
            FamilyConstraintError: n >= 8, 2 <= i <= n-4, 2 <= j <= n-4 or i != j violated
        """
        TreeFamilies._require(n >= 8, "P", "n >= 8")
        TreeFamilies._require(2 <= i <= n - 4, "P", "2 <= i <= n - 4")
        TreeFamilies._require(2 <= j <= n - 4, "P", "2 <= j <= n - 4")
        TreeFamilies._require(i != j, "P", "i != j")

        spine = n - 3
        edges = [(t, t + 1) for t in range(spine - 1)]
        edges.append((i - 1, n - 3))
        edges.append((j - 1, n - 2))
        edges.append((n - 2, n - 1))
        return Graph.from_edges(n, edges)




    @staticmethod
    def build(spec: FamilySpec) -> Graph:
        """Construct the tree a FamilySpec describes"""
        if spec.tag == FamilySpec.PATH:
            return TreeFamilies.make_path(spec.n)
        if spec.tag == FamilySpec.STAR:
            return TreeFamilies.make_star(spec.n)
        if spec.tag == FamilySpec.BROOM:
            return TreeFamilies.make_B(spec.n, spec.get("n0", 0), spec.get("parts", ()))
        if spec.tag == FamilySpec.SPIDER:
            return TreeFamilies.make_S(spec.n, spec.get("legs", ()))
        if spec.tag == FamilySpec.DOUBLE_BROOM:
            t1, t2 = spec.get("t1"), spec.get("t2")
            return TreeFamilies.make_T(spec.n, spec.get("k", t1 + t2), t1, t2)
        if spec.tag == FamilySpec.PATH_GRAFT:
            return TreeFamilies.make_P(spec.n, spec.get("i"), spec.get("j"))
        raise FamilyConstraintError(spec.tag, f"family tag in {', '.join(FamilySpec.TAGS)}")


# parameters each family tag requires, and which of them are lists
FAMILY_PARAMETERS: Dict[str, Tuple[Tuple[str, ...], Tuple[str, ...]]] = {
    FamilySpec.PATH: ((), ()),
    FamilySpec.STAR: ((), ()),
    FamilySpec.BROOM: (("n0", "parts"), ("parts",)),
    FamilySpec.SPIDER: (("legs",), ("legs",)),
    FamilySpec.DOUBLE_BROOM: (("t1", "t2"), ()),
    FamilySpec.PATH_GRAFT: (("i", "j"), ()),
}


def parse_family_spec(text: str) -> FamilySpec:
    """
    Parse the family mini-syntax into a FamilySpec.

    Examples:
        B:n=10,n0=3,parts=1,1,1
        S:n=8,legs=2,2,3
        T:n=9,t1=2,t2=2        (k defaults to t1 + t2)
        P:n=10,i=2,j=5
        Path:n=5 / Star:n=4

    Raises:
        FamilyConstraintError: unknown tag, unknown or missing parameter, non-integer value
    """
    tag, sep, body = text.strip().partition(":")
    if not sep or tag not in FAMILY_PARAMETERS:
        raise FamilyConstraintError(tag or text, f"family tag in {', '.join(FamilySpec.TAGS)}")
    required, list_keys = FAMILY_PARAMETERS[tag]
    allowed = set(required) | {"n"} | ({"k"} if tag == FamilySpec.DOUBLE_BROOM else set())

    values: Dict[str, List[int]] = {}
    current = None
    for token in (t.strip() for t in body.split(",")):
        if not token:
            continue
        key, eq, raw = token.partition("=")
        if eq:
            key = key.strip()
            if key not in allowed:
                raise FamilyConstraintError(tag, f"parameter {key!r} not in {sorted(allowed)}")
            current = key
            values[current] = []
        else:
            # bare integers continue the previous list parameter (parts=1,1,1)
            raw = key
            if current not in list_keys:
                raise FamilyConstraintError(tag, f"value {raw!r} is not attached to a list parameter")
        try:
            values[current].append(int(raw))
        except ValueError:
            raise FamilyConstraintError(tag, f"{current} must be an integer, got {raw!r}")

    for key in ("n",) + required:
        if key not in values:
            raise FamilyConstraintError(tag, f"parameter {key} is required")
    for key, items in values.items():
        if key not in list_keys and len(items) != 1:
            raise FamilyConstraintError(tag, f"parameter {key} takes a single integer")

    params = tuple(
        (key, tuple(values[key]) if key in list_keys else values[key][0])
        for key in required + (("k",) if "k" in values else ())
    )
    return FamilySpec(tag=tag, n=values["n"][0], params=params)
