"""Stationary resource formulas, steering regions, boundary limits."""

import math

import numpy as np
import pytest

from mochain.chain import EffectiveModel, classify_regime
from mochain.gaussian import Regime
from mochain.stationary import (
    SteeringRegion,
    boundary_limits,
    stationary_entanglement,
    stationary_steering,
    steering_region,
)


class TestStationaryEntanglement:
    def test_zero_coupling(self):
        assert stationary_entanglement(EffectiveModel(0.0, 1.0, 1.0)) == 0.0

    def test_symmetric_steady_value(self):
        # chi = 2, ln(0.75/0.5) = ln 1.5
        e = stationary_entanglement(EffectiveModel(0.5, 1.0, 1.0))
        assert abs(e - math.log(1.5)) < 1e-12

    def test_unsteady_value(self):
        e = stationary_entanglement(EffectiveModel(1.0, 0.5, 1.0))
        omega = math.sqrt(4.25)
        chi_tilde = omega * 1.5 + 0.25
        assert abs(e - math.log(1.0 + 4.0 / chi_tilde)) < 1e-14
        assert abs(e - 0.78698) < 1e-5

    def test_increases_with_coupling(self):
        values = [stationary_entanglement(EffectiveModel(g, 0.5, 1.0))
                  for g in np.linspace(0.05, 1.8, 40)]
        assert all(b >= a - 1e-12 for a, b in zip(values, values[1:]))


class TestStationarySteering:
    def test_symmetric_decay_zero(self):
        assert stationary_steering(EffectiveModel(0.3, 1.0, 1.0), "ac") == 0.0

    def test_steady_value(self):
        raw = stationary_steering(EffectiveModel(0.5, 0.5, 1.0), "ac")
        assert abs(raw - math.log(1.3125 / 1.1875)) < 1e-14
        assert abs(raw - 0.10008) < 1e-5

    def test_unsteady_value(self):
        m = EffectiveModel(1.0, 0.5, 1.0)
        raw = stationary_steering(m, "ac")
        omega = math.sqrt(4.25)
        expected = math.log((omega - 0.5 + 1.0) / (2 * omega)) + stationary_entanglement(m)
        assert abs(raw - expected) < 1e-14
        assert abs(raw - 0.31099) < 1e-5

    def test_reverse_direction_swaps_rates(self):
        m = EffectiveModel(0.5, 0.5, 1.0)
        swapped = EffectiveModel(0.5, 1.0, 0.5)
        assert stationary_steering(m, "ca") == stationary_steering(swapped, "ac")

    def test_direction_validated(self):
        with pytest.raises(ValueError):
            stationary_steering(EffectiveModel(0.5, 1.0, 1.0), "cc")

    def test_suppressed_direction_negative(self):
        assert stationary_steering(EffectiveModel(0.5, 0.5, 1.0), "ca") < 0.0


class TestSteeringRegion:
    def test_steady_one_way_towards_lossier_mode(self):
        assert steering_region(EffectiveModel(0.5, 0.5, 1.0)) is SteeringRegion.ONE_WAY_A_TO_C
        assert steering_region(EffectiveModel(0.5, 1.0, 0.5)) is SteeringRegion.ONE_WAY_C_TO_A

    def test_two_way_needs_strong_coupling(self):
        assert steering_region(EffectiveModel(2.0, 1.0, 1.0)) is SteeringRegion.TWO_WAY

    def test_zero_coupling_none(self):
        assert steering_region(EffectiveModel(0.0, 1.0, 1.0)) is SteeringRegion.NONE

    def test_symmetric_steady_none(self):
        assert steering_region(EffectiveModel(0.5, 1.0, 1.0)) is SteeringRegion.NONE

    def test_two_way_only_outside_steady_regime(self):
        rng = np.random.default_rng(23)
        for _ in range(500):
            ka, kc = rng.uniform(0.1, 2.0, size=2)
            g = rng.uniform(0.0, 2.5)
            m = EffectiveModel(float(g), float(ka), float(kc))
            if steering_region(m) is SteeringRegion.TWO_WAY:
                assert classify_regime(m) is not Regime.STEADY

    def test_matches_raw_signs(self):
        rng = np.random.default_rng(29)
        for _ in range(500):
            ka, kc = rng.uniform(0.1, 2.0, size=2)
            g = rng.uniform(0.05, 2.5)
            m = EffectiveModel(float(g), float(ka), float(kc))
            if classify_regime(m) is Regime.CRITICAL:
                continue
            ac = stationary_steering(m, "ac") > 0
            ca = stationary_steering(m, "ca") > 0
            region = steering_region(m)
            assert (region in (SteeringRegion.ONE_WAY_A_TO_C, SteeringRegion.TWO_WAY)) == ac
            assert (region in (SteeringRegion.ONE_WAY_C_TO_A, SteeringRegion.TWO_WAY)) == ca


class TestBoundaryLimits:
    def test_symmetric_rates(self):
        e_lim, s_ac_lim, s_ca_lim = boundary_limits(1.0, 1.0)
        assert abs(e_lim - math.log(2.0)) < 1e-15
        assert s_ac_lim == 0.0 and s_ca_lim == 0.0

    def test_asymmetric_value(self):
        e_lim, _, _ = boundary_limits(0.5, 1.0)
        assert abs(e_lim - math.log(1.8)) < 1e-15

    def test_branches_meet_at_boundary(self):
        for ka, kc in ((1.0, 1.0), (0.5, 1.0), (1.7, 0.4)):
            e_lim, s_ac_lim, s_ca_lim = boundary_limits(ka, kc)
            for side in (1.0 - 1e-9, 1.0 + 1e-9):
                m = EffectiveModel(math.sqrt(side * ka * kc), ka, kc)
                assert abs(stationary_entanglement(m) - e_lim) < 1e-6
                assert abs(stationary_steering(m, "ac") - s_ac_lim) < 1e-6
                assert abs(stationary_steering(m, "ca") - s_ca_lim) < 1e-6

    def test_rates_validated(self):
        with pytest.raises(ValueError):
            boundary_limits(0.0, 1.0)

    def test_critical_model_dispatches_to_divergent_branch(self):
        ka, kc = 0.5, 1.0
        m = EffectiveModel(math.sqrt(ka * kc), ka, kc)
        assert classify_regime(m) is Regime.CRITICAL
        e_lim = boundary_limits(ka, kc)[0]
        assert abs(stationary_entanglement(m) - e_lim) < 1e-9
