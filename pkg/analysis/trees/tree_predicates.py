# src/analysis/trees/tree_predicates.py

from typing import List, Optional, Tuple

from models.graph_models import Graph
from models.tree_models import ClassFilter, ClassMembership
from utils.exceptions import ConfigError



class TreePredicates:
    """
    Structural class predicates on trees.

    Conventions: trees with n <= 3 and stars are caterpillars (deleting the
    leaves leaves at most one vertex, which counts as a path), and the path
    P_n is the double broom T(n, 2; 1, 1) for n >= 4.
    """

    @staticmethod
    def pendant_count(g: Graph) -> int:
        return sum(1 for deg in g.degrees() if deg == 1)


    @staticmethod
    def is_starlike(g: Graph) -> bool:
        """At most one vertex of degree >= 3"""
        g.require_tree()
        return sum(1 for deg in g.degrees() if deg >= 3) <= 1


    @staticmethod
    def is_caterpillar(g: Graph) -> bool:
        """Deleting every pendant vertex leaves a path (possibly empty or a single vertex)"""
        g.require_tree()
        spine = TreePredicates._non_leaves(g)
        if len(spine) <= 1:
            return True
        # the non-leaves of a tree induce a subtree, a path iff no vertex has three spine neighbors
        spine_set = set(spine)
        return all(sum(1 for nb in g.adjacency[v] if nb in spine_set) <= 2 for v in spine)


    @staticmethod
    def double_broom_parameters(g: Graph) -> Optional[Tuple[int, int]]:
        """
        Realized (t1, t2), t1 <= t2, when g is a double broom T(n, k; t1, t2), else None.

        The vertices of degree >= 2 must induce a path of at least two vertices whose
        interior vertices have degree exactly 2 in g; the leaves then all hang at the
        two ends of that path.
        """
        g.require_tree()
        spine = TreePredicates._non_leaves(g)
        if len(spine) < 2:
            return None
        spine_set = set(spine)
        ends = [v for v in spine if sum(1 for nb in g.adjacency[v] if nb in spine_set) == 1]
        if len(ends) != 2:
            return None
        for v in spine:
            if v not in ends and g.degree(v) != 2:
                return None
        if not TreePredicates.is_caterpillar(g):
            return None
        t1, t2 = sorted(g.degree(v) - 1 for v in ends)
        return t1, t2


    @staticmethod
    def is_double_broom(g: Graph) -> bool:
        return TreePredicates.double_broom_parameters(g) is not None


    @staticmethod
    def class_membership(g: Graph) -> ClassMembership:
        """
        Flags for 𝔗(n) (non-caterpillar), ℜ(n) (non-starlike), the k of 𝔅(n, k)
        and membership of 𝔇(n, k).
        """
        g.require_tree()
        ends = TreePredicates.double_broom_parameters(g)
        return ClassMembership(
            non_caterpillar=not TreePredicates.is_caterpillar(g),
            non_starlike=not TreePredicates.is_starlike(g),
            pendant_count=TreePredicates.pendant_count(g),
            double_broom=ends is not None,
            broom_ends=ends,
        )


    @staticmethod
    def _non_leaves(g: Graph) -> List[int]:
        return [v for v in range(g.order) if g.degree(v) >= 2]


def parse_class_filter(text: str) -> ClassFilter:
    """
    Parse a class filter such as `non-caterpillar`, `pendants=4` or `intersection+pendants=4`.

    Raises:
        ConfigError: unknown keyword or malformed pendant count
    """
    non_caterpillar = non_starlike = False
    pendants = None
    for token in (t.strip() for t in text.split("+")):
        if token.startswith("pendants="):
            try:
                pendants = int(token.split("=", 1)[1])
            except ValueError:
                raise ConfigError(f"bad pendant count in filter {text!r}")
        elif token in ClassFilter.KEYWORDS:
            caterpillar_flag, starlike_flag = ClassFilter.KEYWORDS[token]
            non_caterpillar |= caterpillar_flag
            non_starlike |= starlike_flag
        else:
            raise ConfigError(
                f"unknown class filter {token!r}, expected one of {sorted(ClassFilter.KEYWORDS)} or pendants=k"
            )
    return ClassFilter(non_caterpillar=non_caterpillar, non_starlike=non_starlike, pendants=pendants)
