# src/analysis/spectral/spectral_analysis.py

import logging
from typing import List, Sequence, Tuple

import numpy as np

from analysis.graph.distance_calculations import DistanceCalculator
from models.graph_models import Graph, QMatrix
from models.settings import SpectraSettings
from models.spectral_models import SpectralResult, Comparison
from utils.exceptions import OracleConvergenceError, GraphValidationError

logger = logging.getLogger(__name__)

_DEFAULTS = SpectraSettings()



class SpectralAnalyzer:
    """
    Spectral radius rho_Q(G) of the distance signless Laplacian and its Perron vector.

    The primary path is power iteration on the exact integer Q started from the
    all-ones vector. A cyclic Jacobi rotation solver, sharing no code with the
    power iteration, serves as the oracle and as the fallback when the
    iteration cap is hit.

    """

    # single source: SpectraSettings
    DEFAULT_TOL = _DEFAULTS.tol
    DEFAULT_MAX_ITERATIONS = _DEFAULTS.max_iterations
    DEFAULT_TIE_TOLERANCE = _DEFAULTS.tie_tolerance
    ORACLE_TOLERANCE = _DEFAULTS.oracle_tolerance
    ORACLE_MAX_SWEEPS = _DEFAULTS.oracle_max_sweeps
    # past this, theta squared overflows; tan of the rotation angle is then 1/(2 theta)
    LARGE_THETA = 1e150


    @staticmethod
    def spectral_radius(g: Graph, tol: float = DEFAULT_TOL,
                        max_iterations: int = DEFAULT_MAX_ITERATIONS) -> SpectralResult:
        """
        Largest eigenvalue of Q_D(G) with its positive unit Perron vector.

        Iterates x <- Qx / |Qx| from the normalized all-ones vector and stops once
        max|Qx - rho x| <= tol * rho, rho being the Rayleigh quotient. The
        all-ones start is strictly positive, so it is never orthogonal to the
        Perron vector.

        Args:
            g: Connected graph
            tol: Relative residual tolerance (> 0)
            max_iterations: Cap before falling back to the oracle

        Returns:
            SpectralResult tagged method="power", or method="oracle" after a fallback

        Raises:
            DisconnectedGraphError: g is not connected
        """
        if tol <= 0:
            raise ValueError(f"tol must be positive, got {tol}")

        q = DistanceCalculator.q_matrix(g)
        n = q.order
        if n == 1:
            # Q is the 1x1 zero matrix
            return SpectralResult(rho=0.0, perron=np.ones(1), residual=0.0, iterations=0, method="power")

        a = q.values.astype(np.float64)
        x = np.full(n, 1.0 / np.sqrt(n))
        for iteration in range(1, max_iterations + 1):
            y = a @ x
            rho = float(x @ y)
            residual = float(np.max(np.abs(y - rho * x)))
            if residual <= tol * rho:
                logger.debug("power iteration converged in %d steps (n=%d, rho=%.12g)", iteration, n, rho)
                return SpectralResult(rho=rho, perron=x, residual=residual, iterations=iteration, method="power")
            x = y / np.linalg.norm(y)

        logger.warning("power iteration hit the cap of %d iterations on n=%d, falling back to the oracle",
                       max_iterations, n)
        values, vectors = SpectralAnalyzer._jacobi(a, SpectralAnalyzer.ORACLE_TOLERANCE,
                                                   SpectralAnalyzer.ORACLE_MAX_SWEEPS)
        top = int(np.argmax(values))
        x = np.abs(vectors[:, top])
        x /= np.linalg.norm(x)
        rho = float(values[top])
        residual = float(np.max(np.abs(a @ x - rho * x)))
        return SpectralResult(rho=rho, perron=x, residual=residual, iterations=max_iterations, method="oracle")




    @staticmethod
    def full_spectrum_oracle(q: QMatrix, tol: float = ORACLE_TOLERANCE,
                             max_sweeps: int = ORACLE_MAX_SWEEPS) -> List[float]:
        """
        All eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted ascending.

        Args:
            q: Symmetric matrix
            tol: Stop once the off-diagonal Frobenius norm is <= tol * |Q|_F
            max_sweeps: Sweep cap

        Returns:
            List of n eigenvalues in ascending order

        Raises:
            OracleConvergenceError: off-diagonal norm still above target after max_sweeps
        """
        a = np.asarray(q.values, dtype=np.float64)
        if not np.array_equal(a, a.T):
            raise GraphValidationError("oracle requires a symmetric matrix")
        values, _ = SpectralAnalyzer._jacobi(a, tol, max_sweeps)
        return sorted(float(v) for v in values)




    @staticmethod
    def _jacobi(matrix: np.ndarray, tol: float, max_sweeps: int) -> Tuple[np.ndarray, np.ndarray]:
        """Cyclic Jacobi sweeps; returns (eigenvalues, eigenvectors as columns)"""
        a = np.array(matrix, dtype=np.float64)
        n = a.shape[0]
        v = np.eye(n)
        scale = float(np.linalg.norm(a)) or 1.0

        def off_norm() -> float:
            # summed directly, a difference of the full and diagonal sums cancels near sqrt(eps)
            return float(np.sqrt(2.0 * np.sum(np.triu(a, 1) ** 2)))

        for sweep in range(max_sweeps):
            off = off_norm()
            if off <= tol * scale:
                return np.diag(a).copy(), v
            for p in range(n - 1):
                for r in range(p + 1, n):
                    apr = a[p, r]
                    if apr == 0.0:
                        continue
                    theta = (a[r, r] - a[p, p]) / (2.0 * apr)
                    if abs(theta) > SpectralAnalyzer.LARGE_THETA:
                        t = 1.0 / (2.0 * theta)
                    else:
                        t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                    c = 1.0 / np.sqrt(t * t + 1.0)
                    s = t * c
                    # A <- J^T A J, rotating columns then rows p and r
                    col_p = a[:, p].copy()
                    col_r = a[:, r].copy()
                    a[:, p] = c * col_p - s * col_r
                    a[:, r] = s * col_p + c * col_r
                    row_p = a[p, :].copy()
                    row_r = a[r, :].copy()
                    a[p, :] = c * row_p - s * row_r
                    a[r, :] = s * row_p + c * row_r
                    a[p, r] = a[r, p] = 0.0
                    vec_p = v[:, p].copy()
                    vec_r = v[:, r].copy()
                    v[:, p] = c * vec_p - s * vec_r
                    v[:, r] = s * vec_p + c * vec_r

        off = off_norm()
        if off <= tol * scale:
            return np.diag(a).copy(), v
        raise OracleConvergenceError(off, max_sweeps)




    @staticmethod
    def quadratic_form(g: Graph, x: Sequence[float]) -> float:
        """
        x^T Q x written as a sum over unordered pairs: sum d(u,v) (x(u) + x(v))^2.

        Raises:
            GraphValidationError: len(x) differs from the order of g
        """
        x = SpectralAnalyzer._as_vector(g, x)
        d = DistanceCalculator.all_pairs_distances(g).values
        iu, ju = np.triu_indices(g.order, k=1)
        return float(np.sum(d[iu, ju] * (x[iu] + x[ju]) ** 2))




    @staticmethod
    def eigen_equation_residual(g: Graph, rho: float, x: Sequence[float]) -> float:
        """
        max_v |sum_u d(u,v) (x(u) + x(v)) - rho x(v)| / |x|_inf

        Zero exactly when (rho, x) is an eigenpair of Q_D(G).
        """
        x = SpectralAnalyzer._as_vector(g, x)
        d = DistanceCalculator.all_pairs_distances(g).values
        lhs = d @ x + d.sum(axis=1) * x
        scale = float(np.max(np.abs(x)))
        if scale == 0.0:
            raise GraphValidationError("eigen-equation residual needs a nonzero vector")
        return float(np.max(np.abs(lhs - rho * x))) / scale




    @staticmethod
    def rayleigh_lower_bound(g: Graph) -> float:
        """4W/n, the quadratic form at the all-ones vector divided by n"""
        stats = DistanceCalculator.graph_stats(g)
        return 4.0 * stats.wiener_index / g.order




    @staticmethod
    def compare_rho(rho_a: float, rho_b: float, tie_tolerance: float = DEFAULT_TIE_TOLERANCE) -> str:
        """
        Compare two spectral radii. Differences within tie_tolerance * max(rho) are tied,
        never ordered.

        Returns:
            Comparison.GREATER if rho_a > rho_b, Comparison.LESS if rho_a < rho_b, else Comparison.TIED
        """
        if abs(rho_a - rho_b) <= tie_tolerance * max(abs(rho_a), abs(rho_b)):
            return Comparison.TIED
        return Comparison.GREATER if rho_a > rho_b else Comparison.LESS




    @staticmethod
    def _as_vector(g: Graph, x: Sequence[float]) -> np.ndarray:
        vec = np.asarray(x, dtype=np.float64).reshape(-1)
        if vec.shape[0] != g.order:
            raise GraphValidationError(f"vector length {vec.shape[0]} does not match graph order {g.order}")
        return vec

