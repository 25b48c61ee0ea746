"""Covariance representation and resource functionals, including frozen worked examples.

The two-mode state reached by the symmetric-decay model at g = 0.5,
kappa_a = kappa_c = 1 (elements 2/3 on the diagonal, -1/3 on the squeezing
cross terms) is used throughout: its partial-transpose spectrum {1/3, 1} and
entanglement ln(3/2) are exact.
"""

import numpy as np
import pytest

from mochain.chain import EffectiveModel
from mochain.dynamics import analytic_effective_cm, build_effective_drift_diffusion, steady_state
from mochain.errors import NumericError, UnphysicalStateError
from mochain.gaussian import (
    CovarianceMatrix,
    ModePartition,
    Regime,
    ResourceReport,
    gaussian_steering,
    is_physical,
    local_phase_rotate,
    log_negativity,
    monogamy_residuals,
    partial_transpose,
    resource_report,
    symplectic_eigenvalues,
    symplectic_form,
    two_mode_min_pt_eigenvalue,
)
from mochain.verify import random_physical_cm, two_mode_squeeze_symplectic

MO = ModePartition({0}, {1})


def symmetric_steady_cm() -> CovarianceMatrix:
    return steady_state(build_effective_drift_diffusion(EffectiveModel(0.5, 1.0, 1.0)))


class TestCovarianceMatrix:
    def test_constructor_symmetrizes(self):
        raw = np.eye(4) / 2
        raw[0, 3] = 1e-13
        v = CovarianceMatrix(raw)
        assert np.array_equal(v.data, v.data.T)
        assert v.data[0, 3] == v.data[3, 0] == 5e-14

    def test_rejects_bad_shapes_and_values(self):
        with pytest.raises(ValueError):
            CovarianceMatrix(np.eye(3))
        with pytest.raises(ValueError):
            CovarianceMatrix(np.full((4, 4), np.nan))

    def test_vacuum_and_reduction(self):
        v = CovarianceMatrix.vacuum(3)
        assert v.modes == 3
        sub = v.reduced([0, 2])
        assert sub.modes == 2
        assert np.array_equal(sub.data, np.eye(4) / 2)

    def test_data_is_read_only(self):
        v = CovarianceMatrix.vacuum(2)
        with pytest.raises(ValueError):
            v.data[0, 0] = 3.0


class TestSymplecticEigenvalues:
    def test_vacuum(self):
        assert np.allclose(symplectic_eigenvalues(CovarianceMatrix.vacuum(2)), [0.5, 0.5])

    def test_thermal_product(self):
        v = CovarianceMatrix(np.diag([1.0, 1.0, 2.0, 2.0]))
        assert np.allclose(symplectic_eigenvalues(v), [1.0, 2.0], atol=1e-12)

    def test_squeezing_preserves_spectrum(self):
        s = two_mode_squeeze_symplectic(0.7)
        omega = symplectic_form(2)
        assert np.allclose(s @ omega @ s.T, omega, atol=1e-12)
        v = CovarianceMatrix(s @ np.diag([0.8, 0.8, 1.7, 1.7]) @ s.T)
        assert np.allclose(symplectic_eigenvalues(v), [0.8, 1.7], atol=1e-12)

    def test_steady_cm_spectrum_before_and_after_transpose(self):
        v = symmetric_steady_cm()
        # the bare spectrum is doubly degenerate at 1/sqrt(3), not {1/3, 1}
        assert np.allclose(symplectic_eigenvalues(v), [3**-0.5, 3**-0.5], atol=1e-10)
        flipped = symplectic_eigenvalues(partial_transpose(v, {0}))
        assert np.allclose(flipped, [1.0 / 3.0, 1.0], atol=1e-10)

    def test_closed_form_oracle(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            state, _ = random_physical_cm(rng)
            eta = symplectic_eigenvalues(partial_transpose(state, {0}))[0]
            assert abs(eta - two_mode_min_pt_eigenvalue(state)) < 1e-10

    def test_nonfinite_rejected(self):
        v = CovarianceMatrix.vacuum(2)
        bad = v.data.copy()
        bad[0, 0] = np.inf
        with pytest.raises(ValueError):
            CovarianceMatrix(bad)


class TestPartialTranspose:
    def test_vacuum_invariant(self):
        v = CovarianceMatrix.vacuum(2)
        assert np.array_equal(partial_transpose(v, {0}).data, v.data)

    def test_involution_is_exact(self):
        rng = np.random.default_rng(11)
        state, _ = random_physical_cm(rng)
        assert np.array_equal(partial_transpose(partial_transpose(state, {1}), {1}).data,
                              state.data)

    def test_validates_mode_set(self):
        v = CovarianceMatrix.vacuum(2)
        with pytest.raises(ValueError):
            partial_transpose(v, set())
        with pytest.raises(IndexError):
            partial_transpose(v, {5})


class TestLogNegativity:
    def test_product_state_unentangled(self):
        v = CovarianceMatrix(np.diag([0.7, 0.7, 1.1, 1.1]))
        assert log_negativity(v, MO) == 0.0

    def test_symmetric_steady_value(self):
        assert abs(log_negativity(symmetric_steady_cm(), MO) - np.log(1.5)) < 1e-12

    def test_late_time_unsteady_value(self):
        # frozen from two independent routes (closed-form CM + RK4 trajectory,
        # both through the PT-eigenvalue functional); the stationary formula
        # gives 0.786988, approached to 2e-4 only by t = 3 tau
        from mochain.dynamics import characteristic_time

        m = EffectiveModel(1.0, 0.5, 1.0)
        tau = characteristic_time(m)
        e_2tau = log_negativity(analytic_effective_cm(m, 2 * tau), MO)
        assert abs(e_2tau - 0.7882735556584425) < 1e-9
        e_3tau = log_negativity(analytic_effective_cm(m, 3 * tau), MO)
        assert abs(e_3tau - 0.786988) < 2e-4

    def test_two_mode_closed_form_agreement(self):
        rng = np.random.default_rng(13)
        for _ in range(100):
            state, _ = random_physical_cm(rng)
            eta = two_mode_min_pt_eigenvalue(state)
            expected = max(0.0, -np.log(2 * eta))
            assert abs(log_negativity(state, MO) - expected) < 1e-10

    def test_one_vs_rest_and_reduction(self):
        v = CovarianceMatrix(np.kron(np.eye(3), np.eye(2)) * 0.5)
        assert log_negativity(v, ModePartition({0}, {1, 2})) == 0.0
        assert log_negativity(v, ModePartition({0}, {2})) == 0.0

    def test_rejects_unphysical_and_bad_partitions(self):
        with pytest.raises(UnphysicalStateError):
            log_negativity(CovarianceMatrix(np.eye(4) * 0.1), MO)
        v = CovarianceMatrix.vacuum(2)
        with pytest.raises(ValueError):
            log_negativity(v, ModePartition({0, 1}, {0}))  # overlapping sides
        with pytest.raises(ValueError):
            log_negativity(v, ModePartition({0}, {1, 2}))  # references extra modes


class TestGaussianSteering:
    def test_no_cross_correlations_means_no_steering(self):
        v = CovarianceMatrix(np.diag([0.9, 0.9, 1.3, 1.3]))
        raw, clamped = gaussian_steering(v, {0}, {1})
        assert raw < 0 and clamped == 0.0

    def test_symmetric_decay_has_zero_raw_steering(self):
        raw, _ = gaussian_steering(symmetric_steady_cm(), {0}, {1})
        assert abs(raw) < 1e-12

    def test_asymmetric_steady_value(self):
        v = steady_state(build_effective_drift_diffusion(EffectiveModel(0.5, 0.5, 1.0)))
        raw, clamped = gaussian_steering(v, {0}, {1})
        assert abs(raw - np.log(1.3125 / 1.1875)) < 1e-10
        assert clamped == raw

    def test_schur_route_matches_determinant_route(self):
        rng = np.random.default_rng(17)
        for _ in range(100):
            state, _ = random_physical_cm(rng)
            v_a = state.data[:2, :2]
            det_route = 0.5 * np.log(np.linalg.det(v_a) / (4 * np.linalg.det(state.data)))
            raw, _ = gaussian_steering(state, {0}, {1})
            assert abs(raw - det_route) < 1e-10

    def test_multimode_steered_set(self):
        v = CovarianceMatrix(np.eye(6) * 0.5)
        raw, clamped = gaussian_steering(v, {0}, {1, 2})
        assert clamped == 0.0

    def test_multimode_steerer_rejected(self):
        v = CovarianceMatrix(np.eye(6) * 0.5)
        with pytest.raises(ValueError):
            gaussian_steering(v, {0, 1}, {2})

    def test_unphysical_rejected(self):
        with pytest.raises(UnphysicalStateError):
            gaussian_steering(CovarianceMatrix(np.eye(4) * 0.2), {0}, {1})


class TestMonogamy:
    def test_product_vacuum_residuals_vanish(self):
        v = CovarianceMatrix(np.eye(6) * 0.5)
        ent, steer = monogamy_residuals(v, 0)
        assert ent == 0.0 and steer == 0.0

    def test_needs_three_modes(self):
        with pytest.raises(ValueError):
            monogamy_residuals(CovarianceMatrix.vacuum(2), 0)

    def test_focus_index_validated(self):
        with pytest.raises(IndexError):
            monogamy_residuals(CovarianceMatrix.vacuum(3), 5)


class TestLocalPhaseRotate:
    def test_zero_angle_identity(self):
        v = symmetric_steady_cm()
        assert np.allclose(local_phase_rotate(v, 0, 0.0).data, v.data, atol=0)

    def test_full_turn_returns(self):
        v = symmetric_steady_cm()
        assert np.allclose(local_phase_rotate(v, 1, 2 * np.pi).data, v.data, atol=1e-12)

    def test_resource_invariance(self):
        rng = np.random.default_rng(19)
        for _ in range(25):
            state, _ = random_physical_cm(rng)
            angle = rng.uniform(0, 2 * np.pi)
            mode = int(rng.integers(0, 2))
            rotated = local_phase_rotate(state, mode, angle)
            assert abs(log_negativity(rotated, MO) - log_negativity(state, MO)) < 1e-10
            assert np.allclose(symplectic_eigenvalues(rotated),
                               symplectic_eigenvalues(state), atol=1e-10)


class TestResourceReport:
    def test_clamping_and_regime(self):
        report = ResourceReport(entanglement=0.3, steering_ac_raw=-0.2, steering_ca_raw=0.1)
        assert report.steering_ac == 0.0
        assert report.steering_ca == 0.1
        assert report.regime is Regime.NOT_APPLICABLE

    def test_builder_on_two_mode_state(self):
        report = resource_report(symmetric_steady_cm(), regime=Regime.STEADY)
        assert abs(report.entanglement - np.log(1.5)) < 1e-12
        assert report.monogamy_ent_residual is None

    def test_builder_on_three_mode_state(self):
        report = resource_report(CovarianceMatrix(np.eye(6) * 0.5))
        assert report.monogamy_ent_residual == 0.0
        assert report.entanglement == 0.0

    def test_two_mode_dominance(self):
        # states with positive raw steering carry strictly more entanglement
        for g, ka, kc in ((0.5, 0.5, 1.0), (0.8, 0.6, 1.2)):
            v = steady_state(build_effective_drift_diffusion(EffectiveModel(g, ka, kc)))
            report = resource_report(v)
            assert report.entanglement > max(report.steering_ac, report.steering_ca)


def test_is_physical():
    assert is_physical(CovarianceMatrix.vacuum(2))
    assert not is_physical(CovarianceMatrix(np.eye(4) * 0.3))
