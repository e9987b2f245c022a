# src/api/extremal_verify.py

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, ClassVar, Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from analysis.graph.distance_calculations import DistanceCalculator
from analysis.spectral.spectral_analysis import SpectralAnalyzer
from analysis.transforms.graft_transforms import GraftTransforms
from analysis.trees.tree_enumeration import TreeEnumerator
from analysis.trees.tree_families import TreeFamilies
from analysis.trees.tree_predicates import TreePredicates
from models.graph_models import Graph
from models.settings import SpectraSettings
from models.spectral_models import Comparison, SpectralResult
from models.tree_models import BranchDecomposition, ClassFilter, ClassMembership
from models.verification_models import (
    ClaimOutcome, ExtremalQuery, ExtremalResult, Status, VerificationReport
)
from services.spectrum_cache import SpectrumCache, use_spectrum_cache
from utils.exceptions import VerificationRangeError

logger = logging.getLogger(__name__)


NON_CATERPILLAR = ClassFilter(non_caterpillar=True)
NON_STARLIKE = ClassFilter(non_starlike=True)
INTERSECTION = ClassFilter(non_caterpillar=True, non_starlike=True)
INTERSECTION_FOUR_PENDANTS = ClassFilter(non_caterpillar=True, non_starlike=True, pendants=4)

FAMILY_INEQUALITY_NOTE = (
    "comparison graphs reconstructed from the lemma's use in the extremal proofs: "
    "2.2 is checked against B(n;n-7,1,1,1), 2.4 against B(n;n-8,1,1,2)"
)


class MonotoneCheck(NamedTuple):
    """One strict inequality rho(larger) > rho(smaller) that a lemma predicts"""
    comparison: str
    margin: float
    witness: Dict[str, Any]


def family_hypothesis_holds(lemma: str, n0: int, parts: Sequence[int]) -> bool:
    """
    Hypothesis of the broom inequalities on B(n; n0, n1, n2, n3).

    2.2 needs max(n1, n2, n3) > 1, 2.4 needs n1 + n2 + n3 > 4. Both need
    n0 >= 0 and 1 <= n1 <= n2 <= n3.
    """
    parts = list(parts)
    if n0 < 0 or len(parts) != 3 or parts[0] < 1 or parts != sorted(parts):
        return False
    if lemma == "2.2":
        return max(parts) > 1
    if lemma == "2.4":
        return sum(parts) > 4
    raise VerificationRangeError(f"no broom inequality for claim {lemma!r}")


def broom_parameters(n: int) -> Iterable[Tuple[int, Tuple[int, int, int]]]:
    """Every (n0, (n1, n2, n3)) with n0 >= 0, 1 <= n1 <= n2 <= n3 and n0 + n1 + n2 + n3 = n - 4"""
    total = n - 4
    for n0 in range(total - 2):
        rest = total - n0
        for n1 in range(1, rest // 3 + 1):
            for n2 in range(n1, (rest - n1) // 2 + 1):
                yield n0, (n1, n2, rest - n1 - n2)



@dataclass
class TheoremVerifier:
    """
    Main interface for checking the extremal theorems and the lemma sweeps.

    Spectral radii are computed once per canonical code, always on the tree
    decoded from that code, so every report is independent of scheduling,
    of `jobs` and of cache state.
    """
    settings: SpectraSettings = field(default_factory=SpectraSettings)

    # claim id -> (smallest meaningful order, default range)
    CLAIMS: ClassVar[Dict[str, Tuple[int, Tuple[int, int]]]] = {
        "2.1": (2, (4, 9)),
        "2.2": (8, (8, 13)),
        "2.3": (2, (3, 12)),
        "2.4": (9, (9, 13)),
        "2.5": (7, (7, 13)),
        "2.6": (8, (8, 13)),
        "3.1": (2, (4, 8)),
        "3.2": (2, (4, 9)),
        "3.3": (6, (7, 13)),
        "3.4": (7, (7, 13)),
        "3.5": (8, (8, 13)),
        "3.6": (8, (8, 13)),
    }
    THEOREMS: ClassVar[Tuple[str, ...]] = ("2.5", "2.6", "3.3", "3.4", "3.5", "3.6")
    MODES: ClassVar[Tuple[str, ...]] = ("exhaustive", "sampled")
    QF_MAX_ORDER: ClassVar[int] = 8
    QF_TOLERANCE: ClassVar[float] = 1e-10


    def __post_init__(self):
        self._spectra: Dict[str, SpectralResult] = {}
        self._memberships: Dict[str, ClassMembership] = {}
        if self.settings.cache_enabled:
            cache = SpectrumCache()
            cache.configure(self.settings.cache_path)
            cache.enable()
        else:
            SpectrumCache().disable()




    def spectrum_of_code(self, code: str) -> SpectralResult:
        """rho_Q and Perron vector of graph_from_code(code), memoized per code"""
        result = self._spectra.get(code)
        if result is None:
            result = self._compute_spectrum(code)
            self._spectra[code] = result
        return result


    @use_spectrum_cache
    def _compute_spectrum(self, code: str) -> SpectralResult:
        return SpectralAnalyzer.spectral_radius(
            TreeEnumerator.graph_from_code(code), self.settings.tol, self.settings.max_iterations
        )


    def rho_of(self, g: Graph) -> float:
        return self.spectrum_of_code(TreeEnumerator.canonical_code(g)).rho


    def membership_of_code(self, code: str) -> ClassMembership:
        membership = self._memberships.get(code)
        if membership is None:
            membership = TreePredicates.class_membership(TreeEnumerator.graph_from_code(code))
            self._memberships[code] = membership
        return membership


    def _map(self, func: Callable, items: Sequence) -> List:
        """Ordered map, on a thread pool when jobs > 1"""
        if self.settings.jobs <= 1 or len(items) <= 1:
            return [func(item) for item in items]
        with ThreadPoolExecutor(max_workers=self.settings.jobs) as pool:
            return list(pool.map(func, items))


    def _codes(self, n: int) -> Tuple[str, ...]:
        return TreeEnumerator.tree_codes(n, self.settings.enumeration_cap)




    def find_extremal(self, query: ExtremalQuery) -> ExtremalResult:
        """
        Arg-extremum of rho_Q over a class of trees of order n.

        Members are scanned in canonical code order; among exactly equal values the
        first code wins. Every other member within the tie tolerance of the winner
        is listed in `ties`.

        Raises:
            EnumerationCapError: n outside 1..enumeration_cap
        """
        members = [c for c in self._codes(query.n)
                   if query.class_filter.accepts(self.membership_of_code(c))]
        result = ExtremalResult(query=query, class_size=len(members))
        if not members:
            return result

        rhos = [r.rho for r in self._map(self.spectrum_of_code, members)]
        sign = 1.0 if query.direction == "max" else -1.0
        best = 0
        for idx in range(1, len(members)):
            if sign * rhos[idx] > sign * rhos[best]:
                best = idx

        result.code = members[best]
        result.graph = TreeEnumerator.graph_from_code(result.code)
        result.rho = rhos[best]
        others = [rhos[i] for i in range(len(members)) if i != best]
        if others:
            runner_up = max(others) if query.direction == "max" else min(others)
            result.margin = abs(result.rho - runner_up)
        result.ties = [
            members[i] for i in range(len(members))
            if i != best and SpectralAnalyzer.compare_rho(rhos[i], result.rho,
                                                          self.settings.tie_tolerance) == Comparison.TIED
        ]
        logger.debug("extremal %s over %s at n=%d: %s (rho=%.12g)",
                     query.direction, query.class_filter.label, query.n, result.code, result.rho)
        return result




    def verify(self, claim: str, n_min: Optional[int] = None, n_max: Optional[int] = None,
               mode: str = "exhaustive") -> VerificationReport:
        """
        Run one claim by id.

        Raises:
            VerificationRangeError: unknown claim, unknown mode or invalid range
        """
        if claim in self.THEOREMS:
            return self.verify_theorem(claim, n_min, n_max)
        if claim == "2.1":
            return self.verify_lemma_2_1(n_min, n_max)
        if claim in ("2.2", "2.4"):
            return self.verify_family_inequality(claim, n_min, n_max)
        if claim == "2.3":
            return self.invariant_sweep(n_min, n_max)
        if claim == "3.1":
            return self.verify_lemma_3_1(n_min, n_max, mode)
        if claim == "3.2":
            return self.verify_lemma_3_2(n_min, n_max)
        raise VerificationRangeError(f"unknown claim {claim!r}, expected one of {sorted(self.CLAIMS)}")


    def _check_range(self, claim: str, n_min: Optional[int], n_max: Optional[int]) -> Tuple[int, int]:
        if claim not in self.CLAIMS:
            raise VerificationRangeError(f"unknown claim {claim!r}, expected one of {sorted(self.CLAIMS)}")
        min_order, (default_min, default_max) = self.CLAIMS[claim]
        lo = default_min if n_min is None else n_min
        hi = default_max if n_max is None else n_max
        if lo < min_order:
            raise VerificationRangeError(f"claim {claim} needs n >= {min_order}, got n_min={lo}")
        if lo > hi:
            raise VerificationRangeError(f"empty range n={lo}..{hi}")
        if hi > self.settings.enumeration_cap:
            raise VerificationRangeError(
                f"n_max={hi} exceeds the enumeration cap {self.settings.enumeration_cap}")
        return lo, hi


    def _run(self, claim: str, n_min: Optional[int], n_max: Optional[int],
             per_order: Callable[[int], ClaimOutcome], note: str = "") -> VerificationReport:
        lo, hi = self._check_range(claim, n_min, n_max)
        report = VerificationReport(claim=claim, n_range=(lo, hi), note=note)
        start = time.perf_counter()
        for n in range(lo, hi + 1):
            t0 = time.perf_counter()
            outcome = per_order(n)
            outcome.elapsed_ms = (time.perf_counter() - t0) * 1000.0
            logger.info("claim %s, n=%d: %s (%d in class)", claim, n, outcome.status, outcome.class_size)
            report.outcomes.append(outcome)
        report.elapsed_ms = (time.perf_counter() - start) * 1000.0
        return report




    def verify_theorem(self, claim: str, n_min: Optional[int] = None,
                       n_max: Optional[int] = None) -> VerificationReport:
        """
        Check an extremal theorem at every order of the range.

        - 2.5: min over non-caterpillar trees is B(n; n-7, 1, 1, 1)
        - 2.6: min over non-caterpillar non-starlike trees is B(n; n-8, 1, 1, 2)
        - 3.3: max over non-starlike trees is a double broom
        - 3.4: max over non-caterpillar trees is S(n; 2, 2, n-5)
        - 3.5: max over non-caterpillar non-starlike trees with four pendants is the
          rho-larger of P(n; 2, 3) and P(n; 2, n-5)
        - 3.6: the same candidates over non-caterpillar non-starlike trees

        Raises:
            VerificationRangeError: claim not a theorem id or range invalid
        """
        if claim not in self.THEOREMS:
            raise VerificationRangeError(f"{claim!r} is not one of the theorems {list(self.THEOREMS)}")
        return self._run(claim, n_min, n_max, lambda n: self._theorem_outcome(claim, n))


    def _theorem_outcome(self, claim: str, n: int) -> ClaimOutcome:
        if claim == "2.5":
            query = ExtremalQuery(n, NON_CATERPILLAR, "min")
            candidates = [TreeFamilies.make_B(n, n - 7, [1, 1, 1])]
        elif claim == "2.6":
            query = ExtremalQuery(n, INTERSECTION, "min")
            candidates = [TreeFamilies.make_B(n, n - 8, [1, 1, 2])]
        elif claim == "3.4":
            query = ExtremalQuery(n, NON_CATERPILLAR, "max")
            candidates = [TreeFamilies.make_S(n, [2, 2, n - 5])]
        elif claim == "3.3":
            query = ExtremalQuery(n, NON_STARLIKE, "max")
            candidates = []
        else:
            query = ExtremalQuery(n, INTERSECTION_FOUR_PENDANTS if claim == "3.5" else INTERSECTION, "max")
            candidates = [TreeFamilies.make_P(n, 2, 3), TreeFamilies.make_P(n, 2, n - 5)]

        extremal = self.find_extremal(query)
        outcome = ClaimOutcome(n=n, class_size=extremal.class_size, status=Status.VACUOUS)
        if extremal.vacuous:
            return outcome

        outcome.extremal_code = extremal.code
        outcome.rho_extremal = extremal.rho
        outcome.margin = extremal.margin
        outcome.ties = list(extremal.ties)
        stats = DistanceCalculator.graph_stats(extremal.graph)
        outcome.details = {
            "class": query.class_filter.label,
            "direction": query.direction,
            "diameter": stats.diameter,
            "branching_vertices": stats.branching_vertices,
            "pendant_count": stats.pendant_count,
        }

        if claim == "3.3":
            ends = TreePredicates.double_broom_parameters(extremal.graph)
            outcome.details["broom_ends"] = list(ends) if ends else None
            holds = ends is not None and stats.branching_vertices <= 2
        else:
            expected_code, tied_candidates = self._expected_code(candidates, outcome)
            outcome.expected_code = expected_code
            holds = extremal.code == expected_code
            if tied_candidates and extremal.code in tied_candidates:
                outcome.status = Status.TIED
                return outcome
            if not holds and expected_code in extremal.ties:
                outcome.status = Status.TIED
                return outcome

        if not holds:
            outcome.status = Status.COUNTEREXAMPLE
            outcome.details["edge_list"] = extremal.graph.edge_list_text()
        elif extremal.ties:
            outcome.status = Status.TIED
        else:
            outcome.status = Status.VERIFIED
        return outcome


    def _expected_code(self, candidates: List[Graph], outcome: ClaimOutcome) -> Tuple[str, List[str]]:
        """
        Canonical code of the rho-largest candidate, plus the candidate codes when
        two distinct candidates are tied (the theorem then names no unique graph).
        """
        codes = [TreeEnumerator.canonical_code(g) for g in candidates]
        spectra = [self.spectrum_of_code(c).rho for c in codes]
        if len(codes) == 1:
            outcome.details["rho_expected"] = spectra[0]
            return codes[0], []

        outcome.details["candidates"] = {c: r for c, r in zip(codes, spectra)}
        if codes[0] == codes[1]:
            return codes[0], []
        verdict = SpectralAnalyzer.compare_rho(spectra[0], spectra[1], self.settings.tie_tolerance)
        if verdict == Comparison.TIED:
            return min(codes), sorted(codes)
        return (codes[0] if verdict == Comparison.GREATER else codes[1]), []




    def _fold_checks(self, n: int, class_size: int, checks: List[MonotoneCheck],
                     details: Optional[Dict[str, Any]] = None) -> ClaimOutcome:
        """
        Outcome of a batch of predicted strict inequalities: any reversed inequality is a
        counterexample, otherwise any tie is inconclusive; no checks at all is vacuous.
        """
        outcome = ClaimOutcome(n=n, class_size=class_size, status=Status.VACUOUS, details=details or {})
        outcome.details["checks"] = len(checks)
        if not checks:
            return outcome

        outcome.margin = min(c.margin for c in checks)
        failure = next((c for c in checks if c.comparison == Comparison.LESS), None)
        tie = next((c for c in checks if c.comparison == Comparison.TIED), None)
        if failure is not None:
            outcome.status = Status.COUNTEREXAMPLE
            outcome.extremal_code = failure.witness.get("code")
            outcome.details["witness"] = failure.witness
        elif tie is not None:
            outcome.status = Status.TIED
            outcome.ties = [c.witness.get("code") for c in checks if c.comparison == Comparison.TIED]
            outcome.details["witness"] = tie.witness
        else:
            outcome.status = Status.VERIFIED
        return outcome


    def _check(self, larger: float, smaller: float, witness: Dict[str, Any]) -> MonotoneCheck:
        verdict = SpectralAnalyzer.compare_rho(larger, smaller, self.settings.tie_tolerance)
        return MonotoneCheck(comparison=verdict, margin=larger - smaller, witness=witness)




    def verify_lemma_2_1(self, n_min: Optional[int] = None, n_max: Optional[int] = None) -> VerificationReport:
        """
        For every tree and every non-pendant cut edge uv with a pendant edge at u,
        rho_Q strictly decreases under the C-transformation.
        """
        def per_tree(code: str) -> List[MonotoneCheck]:
            g = TreeEnumerator.graph_from_code(code)
            rho = self.spectrum_of_code(code).rho
            checks = []
            for u, v in GraftTransforms.eligible_c_transform_edges(g):
                h, _ = GraftTransforms.c_transform(g, u, v)
                after = self.rho_of(h)
                checks.append(self._check(rho, after, {
                    "code": code, "edge_list": g.edge_list_text(), "u": u, "v": v,
                    "rho_before": rho, "rho_after": after,
                }))
            return checks

        def per_order(n: int) -> ClaimOutcome:
            codes = self._codes(n)
            checks = [c for batch in self._map(per_tree, codes) for c in batch]
            return self._fold_checks(n, len(codes), checks)

        return self._run("2.1", n_min, n_max, per_order)




    def verify_family_inequality(self, lemma: str, n_min: Optional[int] = None,
                                 n_max: Optional[int] = None) -> VerificationReport:
        """
        Broom inequalities: every B(n; n0, n1, n2, n3) meeting the hypothesis has a
        strictly larger rho_Q than the reference broom (B(n; n-7, 1, 1, 1) for 2.2,
        B(n; n-8, 1, 1, 2) for 2.4).

        Raises:
            VerificationRangeError: lemma not 2.2 or 2.4, or range invalid
        """
        if lemma not in ("2.2", "2.4"):
            raise VerificationRangeError(f"no broom inequality for claim {lemma!r}")

        def per_order(n: int) -> ClaimOutcome:
            reference = (TreeFamilies.make_B(n, n - 7, [1, 1, 1]) if lemma == "2.2"
                         else TreeFamilies.make_B(n, n - 8, [1, 1, 2]))
            reference_code = TreeEnumerator.canonical_code(reference)
            reference_rho = self.spectrum_of_code(reference_code).rho
            params = [(n0, parts) for n0, parts in broom_parameters(n)
                      if family_hypothesis_holds(lemma, n0, parts)]

            def check(param: Tuple[int, Tuple[int, int, int]]) -> MonotoneCheck:
                n0, parts = param
                g = TreeFamilies.make_B(n, n0, parts)
                code = TreeEnumerator.canonical_code(g)
                rho = self.spectrum_of_code(code).rho
                return self._check(rho, reference_rho, {
                    "code": code, "edge_list": g.edge_list_text(), "n0": n0, "parts": list(parts),
                    "rho": rho, "rho_reference": reference_rho,
                })

            outcome = self._fold_checks(n, len(params), self._map(check, params))
            outcome.expected_code = reference_code
            outcome.details["rho_reference"] = reference_rho
            return outcome

        return self._run(lemma, n_min, n_max, per_order, note=FAMILY_INEQUALITY_NOTE)




    def verify_lemma_3_1(self, n_min: Optional[int] = None, n_max: Optional[int] = None,
                         mode: str = "exhaustive") -> VerificationReport:
        """
        Branch move: whenever the double-sum condition holds on the Perron vector of a
        tree, moving G3 from v0 to any vertex of G2 strictly increases rho_Q.
        Configurations where the condition fails are counted, not checked.

        Args:
            mode: "exhaustive" tries every cut vertex with three or more branches, every
                ordered 3-grouping and every target; "sampled" draws up to
                settings.samples of those configurations per tree, seeded by
                (seed, n, tree index)

        Raises:
            VerificationRangeError: unknown mode or range invalid
        """
        if mode not in self.MODES:
            raise VerificationRangeError(f"unknown mode {mode!r}, expected one of {list(self.MODES)}")

        def configurations(g: Graph) -> List[Tuple[BranchDecomposition, int]]:
            configs = []
            for v0 in range(g.order):
                if g.degree(v0) < 3:
                    continue
                base = GraftTransforms.branch_decomposition(g, v0)
                for grouping in GraftTransforms.branch_groupings(len(base.branches)):
                    dec = BranchDecomposition(v0=v0, branches=base.branches, grouping=grouping)
                    configs.extend((dec, u) for u in dec.group_vertices(1))
            return configs

        def per_tree(item: Tuple[int, int, str]) -> Tuple[List[MonotoneCheck], int]:
            n, index, code = item
            g = TreeEnumerator.graph_from_code(code)
            spectrum = self.spectrum_of_code(code)
            configs = configurations(g)
            if mode == "sampled" and len(configs) > self.settings.samples:
                rng = np.random.default_rng([self.settings.seed, n, index])
                picked = np.sort(rng.choice(len(configs), size=self.settings.samples, replace=False))
                configs = [configs[int(i)] for i in picked]

            checks, condition_false = [], 0
            for dec, u in configs:
                if not GraftTransforms.lemma31_condition(g, dec, spectrum.perron):
                    condition_false += 1
                    continue
                after = self.rho_of(GraftTransforms.move_branch(g, dec, u))
                checks.append(self._check(after, spectrum.rho, {
                    "code": code, "edge_list": g.edge_list_text(), "v0": dec.v0,
                    "grouping": [list(group) for group in dec.grouping], "u": u,
                    "rho_before": spectrum.rho, "rho_after": after,
                }))
            return checks, condition_false

        def per_order(n: int) -> ClaimOutcome:
            codes = self._codes(n)
            results = self._map(per_tree, [(n, i, c) for i, c in enumerate(codes)])
            checks = [c for batch, _ in results for c in batch]
            condition_false = sum(skipped for _, skipped in results)
            return self._fold_checks(n, len(codes), checks, {
                "mode": mode,
                "condition_true": len(checks),
                "condition_false": condition_false,
            })

        return self._run("3.1", n_min, n_max, per_order)




    def verify_lemma_3_2(self, n_min: Optional[int] = None, n_max: Optional[int] = None) -> VerificationReport:
        """
        Pendant path shift: for two pendant paths of lengths q >= p >= 1 at one vertex
        (with at least two vertices outside them), G_{p-1,q+1} has a strictly larger rho_Q.
        """
        def per_tree(code: str) -> List[MonotoneCheck]:
            g = TreeEnumerator.graph_from_code(code)
            rho = self.spectrum_of_code(code).rho
            checks = []
            for u, short, long_ in GraftTransforms.eligible_path_shifts(g):
                after = self.rho_of(GraftTransforms.pendant_path_shift(g, u, short, long_))
                checks.append(self._check(after, rho, {
                    "code": code, "edge_list": g.edge_list_text(), "u": u,
                    "p_path": list(short.vertices), "q_path": list(long_.vertices),
                    "rho_before": rho, "rho_after": after,
                }))
            return checks

        def per_order(n: int) -> ClaimOutcome:
            codes = self._codes(n)
            checks = [c for batch in self._map(per_tree, codes) for c in batch]
            return self._fold_checks(n, len(codes), checks)

        return self._run("3.2", n_min, n_max, per_order)




    def invariant_sweep(self, n_min: Optional[int] = None, n_max: Optional[int] = None) -> VerificationReport:
        """
        Per-tree invariants of rho_Q:
        - rho > Tr_max
        - 2 Tr_min <= rho <= 2 Tr_max
        - rho >= 4W/n
        - smallest oracle eigenvalue > 0 for n >= 3
        - x^T Q x equals the pairwise quadratic form on settings.qf_vectors random
          vectors (n <= 8), vectors seeded by (seed, n, tree index)
        """
        def per_tree(item: Tuple[int, int, str]) -> Tuple[List[str], Dict[str, float]]:
            n, index, code = item
            g = TreeEnumerator.graph_from_code(code)
            rho = self.spectrum_of_code(code).rho
            q = DistanceCalculator.q_matrix(g)
            tr = DistanceCalculator.transmissions(DistanceCalculator.all_pairs_distances(g))
            slack = self.settings.tol * rho
            failed = []
            if not rho > tr.tr_max:
                failed.append("rho > Tr_max")
            if not 2 * tr.tr_min - slack <= rho <= 2 * tr.tr_max + slack:
                failed.append("2 Tr_min <= rho <= 2 Tr_max")
            if rho < SpectralAnalyzer.rayleigh_lower_bound(g) - slack:
                failed.append("rho >= 4W/n")

            facts = {"gap_over_tr_max": rho - tr.tr_max}
            if n >= 3:
                smallest = SpectralAnalyzer.full_spectrum_oracle(
                    q, self.settings.oracle_tolerance, self.settings.oracle_max_sweeps)[0]
                facts["min_eigenvalue"] = smallest
                if not smallest > 0:
                    failed.append("Q positive definite")
            if n <= self.QF_MAX_ORDER:
                rng = np.random.default_rng([self.settings.seed, n, index])
                matrix = q.values.astype(np.float64)
                for _ in range(self.settings.qf_vectors):
                    x = rng.standard_normal(n)
                    direct = float(x @ matrix @ x)
                    pairwise = SpectralAnalyzer.quadratic_form(g, x)
                    if abs(direct - pairwise) > self.QF_TOLERANCE * max(1.0, abs(direct)):
                        failed.append("quadratic form identity")
                        break
            return failed, facts

        def per_order(n: int) -> ClaimOutcome:
            codes = self._codes(n)
            results = self._map(per_tree, [(n, i, c) for i, c in enumerate(codes)])
            outcome = ClaimOutcome(n=n, class_size=len(codes), status=Status.VERIFIED)
            outcome.margin = min(facts["gap_over_tr_max"] for _, facts in results)
            eigenvalues = [facts["min_eigenvalue"] for _, facts in results if "min_eigenvalue" in facts]
            outcome.details = {
                "min_gap_over_tr_max": outcome.margin,
                "min_eigenvalue": min(eigenvalues) if eigenvalues else None,
                "quadratic_form_checked": n <= self.QF_MAX_ORDER,
            }
            for code, (failed, _) in zip(codes, results):
                if failed:
                    outcome.status = Status.COUNTEREXAMPLE
                    outcome.extremal_code = code
                    outcome.details["failed"] = failed
                    outcome.details["edge_list"] = TreeEnumerator.graph_from_code(code).edge_list_text()
                    break
            return outcome

        return self._run("2.3", n_min, n_max, per_order)



@dataclass
class ClaimBatchVerification:
    """
    Runs several claims, each over its default range clipped to [n_min, n_max].

    Claims whose clipped range is empty are skipped.
    """
    verifier: TheoremVerifier
    claims: Sequence[str] = tuple(TheoremVerifier.CLAIMS)
    reports: List[VerificationReport] = field(default_factory=list)


    def run(self, n_min: Optional[int] = None, n_max: Optional[int] = None,
            mode: str = "exhaustive") -> List[VerificationReport]:
        for claim in self.claims:
            min_order, (lo, hi) = TheoremVerifier.CLAIMS[claim]
            if n_min is not None:
                lo = max(n_min, min_order)
            if n_max is not None:
                hi = min(hi, n_max)
            hi = min(hi, self.verifier.settings.enumeration_cap)
            if lo > hi:
                logger.info("claim %s skipped: empty range %d..%d", claim, lo, hi)
                continue
            self.reports.append(self.verifier.verify(claim, lo, hi, mode))
        return self.reports


    @property
    def status(self) -> str:
        return Status.combine([r.status for r in self.reports])


    def to_dict(self) -> Dict[str, Any]:
        return {
            "claim": "all",
            "status": self.status,
            "reports": [r.to_dict() for r in self.reports],
        }
