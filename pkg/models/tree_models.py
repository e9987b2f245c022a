# src/models/tree_models.py
from dataclasses import dataclass
from typing import ClassVar, Dict, FrozenSet, Optional, Tuple


@dataclass(frozen=True)
class FamilySpec:
    """
    A named tree family with its integer parameters.

    Tags and their parameters:
    - Path: n
    - Star: n
    - B: n, n0, parts (n1 <= ... <= nr)
    - S: n, legs (n1 <= ... <= nr)
    - T: n, k, t1, t2
    - P: n, i, j
    """

    PATH: ClassVar[str] = "Path"
    STAR: ClassVar[str] = "Star"
    BROOM: ClassVar[str] = "B"
    SPIDER: ClassVar[str] = "S"
    DOUBLE_BROOM: ClassVar[str] = "T"
    PATH_GRAFT: ClassVar[str] = "P"

    TAGS: ClassVar[Tuple[str, ...]] = ("Path", "Star", "B", "S", "T", "P")

    tag: str
    n: int
    params: Tuple[Tuple[str, object], ...] = ()

    def get(self, name: str, default=None):
        return dict(self.params).get(name, default)

    def __str__(self) -> str:
        rendered = [f"n={self.n}"]
        for key, value in self.params:
            if isinstance(value, tuple):
                value = ",".join(str(v) for v in value)
            rendered.append(f"{key}={value}")
        return f"{self.tag}:" + ",".join(rendered)


@dataclass(frozen=True)
class ClassMembership:
    """Which of the extremal classes a tree belongs to"""
    non_caterpillar: bool                       # member of 𝔗(n)
    non_starlike: bool                          # member of ℜ(n)
    pendant_count: int                          # k such that the tree is in 𝔅(n, k)
    double_broom: bool                          # member of 𝔇(n, k)
    broom_ends: Optional[Tuple[int, int]] = None  # realized (t1, t2) when double_broom, t1 <= t2


@dataclass(frozen=True)
class BranchDecomposition:
    """
    Components of G - v0 grouped into G1, G2, G3.

    `branches` lists the vertex sets of the components (v0 excluded), ordered by
    smallest vertex. `grouping` holds three tuples of branch indices, or None
    when v0 has only two branches.
    """
    v0: int
    branches: Tuple[FrozenSet[int], ...]
    grouping: Optional[Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]]

    def group_vertices(self, group: int, include_v0: bool = False) -> Tuple[int, ...]:
        """Sorted vertices of G1/G2/G3 (group = 0, 1, 2)"""
        vertices = set().union(*(self.branches[b] for b in self.grouping[group]))
        if include_v0:
            vertices.add(self.v0)
        return tuple(sorted(vertices))


@dataclass(frozen=True)
class PendantPath:
    """
    Pendant path hanging at `anchor`: vertices[0] is adjacent to the anchor,
    vertices[-1] is a leaf, and every vertex in between has degree two.
    """
    anchor: int
    vertices: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class ClassFilter:
    """
    Conjunction of class constraints on trees of a fixed order.

    Text forms: `all`, `non-caterpillar` (𝔗), `non-starlike` (ℜ),
    `intersection` (𝔗 ∩ ℜ), `pendants=k` (𝔅(n,k)), and `+`-joined
    combinations such as `intersection+pendants=4`.
    """
    non_caterpillar: bool = False
    non_starlike: bool = False
    pendants: Optional[int] = None

    KEYWORDS: ClassVar[Dict[str, Tuple[bool, bool]]] = {
        "all": (False, False),
        "non-caterpillar": (True, False),
        "non-starlike": (False, True),
        "intersection": (True, True),
    }

    @property
    def label(self) -> str:
        parts = []
        if self.non_caterpillar:
            parts.append("T(n)")
        if self.non_starlike:
            parts.append("R(n)")
        if self.pendants is not None:
            parts.append(f"B(n,{self.pendants})")
        return "&".join(parts) if parts else "all trees"

    def accepts(self, membership: ClassMembership) -> bool:
        if self.non_caterpillar and not membership.non_caterpillar:
            return False
        if self.non_starlike and not membership.non_starlike:
            return False
        if self.pendants is not None and membership.pendant_count != self.pendants:
            return False
        return True
