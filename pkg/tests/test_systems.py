"""Platform builders: chain mappings, specialized couplings, full drift matrices."""

import math

import numpy as np
import pytest

from mochain.chain import effective_coupling, reduce
from mochain.dynamics import lyapunov_rk4, steady_state
from mochain.gaussian import CovarianceMatrix, ModePartition, log_negativity
from mochain.systems import (
    CommParams,
    EomParams,
    comm_full_drift_diffusion,
    comm_to_chain,
    eom_full_drift_diffusion,
    eom_to_chain,
)

FIG3_EOM = EomParams(omega_b=1.0, delta_a=5.0, g_a=0.12, g_c=0.12,
                     kappa_a=5e-4, kappa_c=1e-3, kappa_b=1e-6)
FIG4_COMM = CommParams(omega_b=1.0, delta_a=3.0, g_a=0.12, g_m=0.1, g_c=0.12,
                       kappa_a=1e-4, kappa_c=2e-4, kappa_m=1e-3, kappa_b=1e-6)


class TestEomMapping:
    def test_specialized_coupling_identity(self):
        rng = np.random.default_rng(31)
        for _ in range(300):
            p = EomParams(
                omega_b=float(rng.uniform(0.5, 2.0)),
                delta_a=float(rng.uniform(2.5, 8.0)),
                g_a=float(rng.uniform(0.01, 0.3)),
                g_c=float(rng.uniform(0.01, 0.3)),
                kappa_a=1e-3, kappa_c=1e-3, kappa_b=1e-6,
            )
            expected = 2.0 * p.g_a * p.g_c * p.omega_b / (p.delta_a**2 - p.omega_b**2)
            g = effective_coupling(eom_to_chain(p))
            assert abs(g - expected) < 1e-12 * abs(expected)

    def test_reference_parameters(self):
        model = reduce(eom_to_chain(FIG3_EOM))
        assert abs(model.g_eff - 0.0012) < 1e-15
        assert model.kappa_a == 5e-4 and model.kappa_c == 1e-3

    def test_zero_coupling(self):
        p = EomParams(omega_b=1.0, delta_a=5.0, g_a=0.0, g_c=0.12,
                      kappa_a=1e-3, kappa_c=1e-3, kappa_b=1e-6)
        assert reduce(eom_to_chain(p)).g_eff == 0.0

    def test_matched_optical_detuning(self):
        chain = eom_to_chain(FIG3_EOM)
        assert abs(chain.delta_c - (-5.0024)) < 5e-6

    def test_mechanical_bath_carried_over(self):
        chain = eom_to_chain(FIG3_EOM)
        assert chain.kappa_mid == (1e-6,)
        assert chain.n_mid == (10.0,)


class TestCommMapping:
    def test_specialized_coupling_identity(self):
        rng = np.random.default_rng(37)
        for _ in range(300):
            p = CommParams(
                omega_b=float(rng.uniform(0.5, 2.0)),
                delta_a=float(rng.uniform(2.5, 8.0)),
                delta_m=float(rng.uniform(0.5, 1.8)),
                g_a=float(rng.uniform(0.01, 0.3)),
                g_m=float(rng.uniform(0.01, 0.3)),
                g_c=float(rng.uniform(0.01, 0.3)),
                kappa_a=1e-4, kappa_m=1e-3, kappa_b=1e-6, kappa_c=2e-4,
            )
            expected = (2.0 * p.g_a * p.g_m * p.g_c * p.omega_b
                        / ((p.delta_m - p.delta_a) * (p.omega_b**2 - p.delta_a**2)))
            g = effective_coupling(comm_to_chain(p))
            assert abs(g - expected) < 1e-12 * abs(expected)

    def test_reference_parameters(self):
        assert abs(reduce(comm_to_chain(FIG4_COMM)).g_eff - 1.8e-4) < 1e-18

    def test_zero_magnomechanical_coupling(self):
        p = CommParams(omega_b=1.0, delta_a=3.0, g_a=0.12, g_m=0.0, g_c=0.12,
                       kappa_a=1e-4, kappa_m=1e-3, kappa_b=1e-6, kappa_c=2e-4)
        assert reduce(comm_to_chain(p)).g_eff == 0.0

    def test_magnon_detuning_defaults_to_mechanical_frequency(self):
        assert FIG4_COMM.delta_m == FIG4_COMM.omega_b
        explicit = CommParams(omega_b=1.0, delta_a=3.0, g_a=0.12, g_m=0.1, g_c=0.12,
                              kappa_a=1e-4, kappa_m=1e-3, kappa_b=1e-6, kappa_c=2e-4,
                              delta_m=1.4)
        assert explicit.delta_m == 1.4


class TestEomDriftDiffusion:
    def test_printed_entries(self):
        dd = eom_full_drift_diffusion(FIG3_EOM)
        a = dd.a
        assert a[0, 1] == FIG3_EOM.delta_a
        assert a[1, 0] == -FIG3_EOM.delta_a
        assert a[1, 4] == -2 * FIG3_EOM.g_a
        assert a[3, 4] == -2 * FIG3_EOM.g_c
        assert a[5, 0] == -2 * FIG3_EOM.g_a
        assert a[5, 2] == -2 * FIG3_EOM.g_c
        assert a[4, 5] == FIG3_EOM.omega_b
        assert a[5, 4] == -FIG3_EOM.omega_b
        assert abs(np.trace(a) + 2 * (5e-4 + 1e-3 + 1e-6)) < 1e-15

    def test_thermal_diffusion(self):
        dd = eom_full_drift_diffusion(FIG3_EOM)
        assert dd.d[0, 0] == 5e-4
        assert dd.d[4, 4] == 1e-6 * 21.0  # ten phonons

    def test_decoupled_steady_state(self):
        p = EomParams(omega_b=1.0, delta_a=5.0, g_a=0.0, g_c=0.0,
                      kappa_a=1e-3, kappa_c=1e-3, kappa_b=1e-4, n_b=2.0)
        v = steady_state(eom_full_drift_diffusion(p)).data
        expected = np.diag([0.5, 0.5, 0.5, 0.5, 2.5, 2.5])
        assert np.max(np.abs(v - expected)) < 1e-10


class TestCommDriftDiffusion:
    def test_printed_entries(self):
        dd = comm_full_drift_diffusion(FIG4_COMM)
        a = dd.a
        assert a[0, 5] == FIG4_COMM.g_a
        assert a[1, 4] == -FIG4_COMM.g_a
        assert a[4, 1] == FIG4_COMM.g_a
        assert a[5, 0] == -FIG4_COMM.g_a
        assert a[3, 6] == -2 * FIG4_COMM.g_c
        assert a[7, 2] == -2 * FIG4_COMM.g_c
        assert a[5, 6] == -2 * FIG4_COMM.g_m
        assert a[7, 4] == -2 * FIG4_COMM.g_m
        assert a[4, 5] == FIG4_COMM.delta_m
        assert a[6, 7] == FIG4_COMM.omega_b
        assert abs(np.trace(a) + 2 * (1e-4 + 2e-4 + 1e-3 + 1e-6)) < 1e-15

    def test_decoupled_microwave_stays_vacuum(self):
        p = CommParams(omega_b=1.0, delta_a=3.0, g_a=0.0, g_m=0.1, g_c=0.12,
                       kappa_a=1e-4, kappa_m=1e-3, kappa_b=1e-6, kappa_c=2e-4)
        dd = comm_full_drift_diffusion(p)
        traj = lyapunov_rk4(dd, CovarianceMatrix.vacuum(4), [0.0, 50.0])
        final = traj.states[-1]
        assert np.max(np.abs(final.reduced([0]).data - np.eye(2) / 2)) < 1e-8
        assert log_negativity(final, ModePartition({0}, {1})) == 0.0


def test_parameter_validation():
    with pytest.raises(ValueError):
        EomParams(omega_b=0.0, delta_a=5.0, g_a=0.1, g_c=0.1,
                  kappa_a=1e-3, kappa_c=1e-3, kappa_b=1e-6)
    with pytest.raises(ValueError):
        CommParams(omega_b=1.0, delta_a=3.0, g_a=0.1, g_m=0.1, g_c=0.1,
                   kappa_a=0.0, kappa_m=1e-3, kappa_b=1e-6, kappa_c=2e-4)
    with pytest.raises(ValueError):
        EomParams(omega_b=1.0, delta_a=5.0, g_a=0.1, g_c=0.1,
                  kappa_a=1e-3, kappa_c=1e-3, kappa_b=1e-6, n_b=-1.0)
