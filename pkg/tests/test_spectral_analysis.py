import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from analysis.graph.distance_calculations import DistanceCalculator
from analysis.spectral.spectral_analysis import SpectralAnalyzer
from analysis.trees.tree_enumeration import TreeEnumerator, prufer_to_tree
from models.graph_models import Graph, QMatrix
from models.settings import SpectraSettings
from models.spectral_models import Comparison
from utils.exceptions import DisconnectedGraphError, GraphValidationError

ABS_TOLERANCE = 1e-10

K2 = Graph.from_edges(2, [(0, 1)])
K3 = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
P3 = Graph.from_edges(3, [(0, 1), (1, 2)])
P4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
K13 = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])


@pytest.mark.parametrize("graph, expected", [
    (K2, 2.0),
    (K3, 4.0),
    (P3, (7 + math.sqrt(17)) / 2),
    (K13, 6 + 2 * math.sqrt(3)),
    (P4, 7 + math.sqrt(13)),
])
def test_closed_form_spectral_radius(graph, expected):
    result = SpectralAnalyzer.spectral_radius(graph)
    assert result.rho == pytest.approx(expected, abs=ABS_TOLERANCE)
    assert result.method == "power"


def test_perron_vector_is_positive_unit():
    result = SpectralAnalyzer.spectral_radius(K13)
    assert np.all(result.perron > 0)
    assert np.linalg.norm(result.perron) == pytest.approx(1.0)
    # leaves share one value by symmetry
    assert result.perron[1] == pytest.approx(result.perron[2])
    assert SpectralAnalyzer.eigen_equation_residual(K13, result.rho, result.perron) < 1e-9


def test_single_vertex_has_zero_radius():
    result = SpectralAnalyzer.spectral_radius(Graph(1, ()))
    assert result.rho == 0.0
    assert result.perron.tolist() == [1.0]


def test_disconnected_graph_rejected():
    with pytest.raises(DisconnectedGraphError):
        SpectralAnalyzer.spectral_radius(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_non_positive_tolerance_rejected():
    with pytest.raises(ValueError):
        SpectralAnalyzer.spectral_radius(P4, tol=0.0)


def test_iteration_cap_falls_back_to_oracle():
    result = SpectralAnalyzer.spectral_radius(P4, max_iterations=1)
    assert result.method == "oracle"
    assert result.rho == pytest.approx(7 + math.sqrt(13), abs=ABS_TOLERANCE)
    assert np.all(result.perron > 0)




def test_oracle_spectrum_of_k3():
    spectrum = SpectralAnalyzer.full_spectrum_oracle(DistanceCalculator.q_matrix(K3))
    assert spectrum == pytest.approx([1.0, 1.0, 4.0], abs=ABS_TOLERANCE)


def test_oracle_rejects_asymmetric_matrix():
    with pytest.raises(GraphValidationError):
        SpectralAnalyzer.full_spectrum_oracle(QMatrix(np.array([[0, 1], [2, 0]])))


def test_oracle_spectrum_of_p5():
    p5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    q = DistanceCalculator.q_matrix(p5)
    spectrum = SpectralAnalyzer.full_spectrum_oracle(q)
    assert sum(spectrum) == pytest.approx(float(np.trace(q.values)), rel=1e-12)
    assert spectrum[-1] == pytest.approx(SpectralAnalyzer.spectral_radius(p5).rho, rel=1e-10)


def test_oracle_with_negligible_coupling():
    # theta = 5e159, whose square overflows a double
    tiny = QMatrix(np.array([[1.0, 1e-160], [1e-160, 2.0]]))
    spectrum = SpectralAnalyzer.full_spectrum_oracle(tiny, tol=0.0, max_sweeps=2)
    assert np.all(np.isfinite(spectrum))
    assert spectrum == pytest.approx([1.0, 2.0], abs=ABS_TOLERANCE)


@pytest.mark.parametrize("n", [
    *range(2, 10),
    *(pytest.param(n, marks=pytest.mark.slow) for n in range(10, 13)),
])
def test_oracle_converges_on_every_tree(n):
    for g in TreeEnumerator.enumerate_trees(n):
        q = DistanceCalculator.q_matrix(g)
        spectrum = SpectralAnalyzer.full_spectrum_oracle(q)
        assert sum(spectrum) == pytest.approx(float(np.trace(q.values)), rel=1e-10)


@pytest.mark.parametrize("n", range(2, 9))
def test_power_iteration_agrees_with_oracle(n):
    for g in TreeEnumerator.enumerate_trees(n):
        rho = SpectralAnalyzer.spectral_radius(g).rho
        spectrum = SpectralAnalyzer.full_spectrum_oracle(DistanceCalculator.q_matrix(g))
        assert abs(rho - spectrum[-1]) <= 1e-9 * rho
        if n >= 3:
            assert spectrum[0] > 0


@pytest.mark.slow
def test_power_iteration_agrees_with_oracle_order_nine():
    for g in TreeEnumerator.enumerate_trees(9):
        rho = SpectralAnalyzer.spectral_radius(g).rho
        oracle = SpectralAnalyzer.full_spectrum_oracle(DistanceCalculator.q_matrix(g))[-1]
        assert abs(rho - oracle) <= 1e-9 * rho




@settings(max_examples=50, deadline=None)
@given(arrays(np.float64, (6,), elements=st.floats(min_value=-10.0, max_value=10.0)))
def test_quadratic_form_identity(x):
    tree = prufer_to_tree([1, 1, 2, 3], 6)
    q = DistanceCalculator.q_matrix(tree).values.astype(np.float64)
    direct = float(x @ q @ x)
    assert SpectralAnalyzer.quadratic_form(tree, x) == pytest.approx(direct, rel=1e-10, abs=1e-9)


def test_quadratic_form_length_mismatch():
    with pytest.raises(GraphValidationError):
        SpectralAnalyzer.quadratic_form(P4, [1.0, 2.0])


def test_rayleigh_lower_bound():
    # W(P3) = 4
    assert SpectralAnalyzer.rayleigh_lower_bound(P3) == pytest.approx(16 / 3)
    assert SpectralAnalyzer.spectral_radius(P3).rho >= 16 / 3


@pytest.mark.parametrize("graph, rho, x, expected", [
    (K2, 2.0, [1.0, 1.0], 0.0),
    (K3, 4.0, [1.0, 1.0, 1.0], 0.0),
    # Q(K3) maps the all-ones vector to four times itself
    (K3, 3.0, [1.0, 1.0, 1.0], 1.0),
    (K3, 4.0, [2.0, 2.0, 2.0], 0.0),
])
def test_eigen_equation_residual(graph, rho, x, expected):
    assert SpectralAnalyzer.eigen_equation_residual(graph, rho, x) == pytest.approx(expected, abs=ABS_TOLERANCE)


def test_eigen_equation_residual_needs_nonzero_vector():
    with pytest.raises(GraphValidationError):
        SpectralAnalyzer.eigen_equation_residual(K2, 2.0, [0.0, 0.0])


def test_defaults_come_from_settings():
    defaults = SpectraSettings()
    assert SpectralAnalyzer.DEFAULT_TOL == defaults.tol
    assert SpectralAnalyzer.DEFAULT_MAX_ITERATIONS == defaults.max_iterations
    assert SpectralAnalyzer.DEFAULT_TIE_TOLERANCE == defaults.tie_tolerance
    assert SpectralAnalyzer.ORACLE_TOLERANCE == defaults.oracle_tolerance
    assert SpectralAnalyzer.ORACLE_MAX_SWEEPS == defaults.oracle_max_sweeps
    assert TreeEnumerator.DEFAULT_CAP == defaults.enumeration_cap
    assert TreeEnumerator.PRUFER_CAP == defaults.prufer_cap


@pytest.mark.parametrize("a, b, expected", [
    (3.0, 2.0, Comparison.GREATER),
    (2.0, 3.0, Comparison.LESS),
    (2.0, 2.0 + 1e-12, Comparison.TIED),
    (10.0, 10.0 + 2e-8, Comparison.LESS),
])
def test_compare_rho(a, b, expected):
    assert SpectralAnalyzer.compare_rho(a, b) == expected


def test_relabeling_keeps_radius():
    g = prufer_to_tree([0, 0, 3, 3, 5], 7)
    rho = SpectralAnalyzer.spectral_radius(g).rho
    relabeled = g.relabel([6, 5, 4, 3, 2, 1, 0])
    assert SpectralAnalyzer.spectral_radius(relabeled).rho == pytest.approx(rho, rel=1e-12)
