"""Self-verification: every library-level invariant as one reproducible suite.

Each check pins a tolerance and reports its worst measured residual; the suite
uses fixed seeds, so repeated runs print identical reports. The heavier
full-system checks run on shortened horizons here to keep the suite within a
few minutes; the acceptance tests exercise the full-length versions.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .chain import ChainParams, EffectiveModel, classify_regime, effective_coupling, energy_shift
from .chain import reduce as reduce_chain
from .config import RunConfig, SweepAxis
from .dynamics import (
    analytic_effective_cm,
    auto_step,
    build_effective_drift_diffusion,
    characteristic_time,
    lyapunov_rk4,
    squeeze_variances,
    steady_state,
)
from .gaussian import (
    CovarianceMatrix,
    ModePartition,
    Regime,
    gaussian_steering,
    local_phase_rotate,
    log_negativity,
    monogamy_residuals,
    partial_transpose,
    symplectic_eigenvalues,
    two_mode_min_pt_eigenvalue,
)
from .stationary import (
    SteeringRegion,
    boundary_limits,
    stationary_entanglement,
    stationary_steering,
    steering_region,
)
from .sweep import Table, parse_csv, render, run_compare, run_region
from .systems import CommParams, EomParams, comm_full_drift_diffusion, eom_full_drift_diffusion

SEED = 20250613
_MO = ModePartition({0}, {1})

EOM_FIG3 = dict(omega_b=1.0, delta_a=5.0, g_a=0.12, g_c=0.12,
                kappa_a=5e-4, kappa_c=1e-3, kappa_b=1e-6, n_b=10.0)
COMM_FIG4 = dict(omega_b=1.0, delta_a=3.0, g_a=0.12, g_m=0.1, g_c=0.12,
                 kappa_a=1e-4, kappa_c=2e-4, kappa_m=1e-3, kappa_b=1e-6, n_b=10.0)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    worst: float
    tolerance: float
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name}: worst={self.worst:.3e} tol={self.tolerance:.1e}"
        return f"{text} ({self.detail})" if self.detail else text


def two_mode_squeeze_symplectic(r: float) -> np.ndarray:
    """Symplectic two-mode squeezer: correlates (X_a, X_c) and anti-correlates (Y_a, Y_c)."""
    ch, sh = np.cosh(r), np.sinh(r)
    return np.array(
        [
            [ch, 0.0, sh, 0.0],
            [0.0, ch, 0.0, -sh],
            [sh, 0.0, ch, 0.0],
            [0.0, -sh, 0.0, ch],
        ]
    )


def random_physical_cm(rng: np.random.Generator) -> tuple[CovarianceMatrix, np.ndarray]:
    """Random physical two-mode state with a known symplectic spectrum.

    Built as local rotations and a two-mode squeezer acting on a thermal
    state, so the spectrum is the thermal occupations by construction.
    """
    nu = np.sort(0.5 + rng.uniform(0.0, 2.0, size=2))
    v = np.diag([nu[0], nu[0], nu[1], nu[1]])
    s = two_mode_squeeze_symplectic(rng.uniform(0.0, 1.2))
    v = s @ v @ s.T
    state = CovarianceMatrix(v)
    for mode in (0, 1):
        state = local_phase_rotate(state, mode, rng.uniform(0.0, 2.0 * np.pi))
    return state, nu


def _effective_grid() -> list[EffectiveModel]:
    """Parameter sets spanning both regimes with moderate covariance growth."""
    models = []
    for ka, kc in ((1.0, 1.0), (0.5, 1.0), (1.0, 0.4), (0.7, 1.3)):
        for ratio in (0.1, 0.5, 0.9, 1.5, 3.0, 4.0):
            g = np.sqrt(ratio * ka * kc)
            models.append(EffectiveModel(g, ka, kc))
    return models


def check_symplectic_oracle(n_samples: int = 1000) -> CheckResult:
    """General eigenvalue route vs the two-mode determinant closed form."""
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for _ in range(n_samples):
        state, nu = random_physical_cm(rng)
        spectrum = symplectic_eigenvalues(state)
        worst = max(worst, float(np.max(np.abs(spectrum - nu))))
        eta_general = symplectic_eigenvalues(partial_transpose(state, {0}))[0]
        eta_closed = two_mode_min_pt_eigenvalue(state)
        worst = max(worst, abs(eta_general - eta_closed))
    return CheckResult("symplectic-eigenvalues-vs-closed-form", worst < 1e-10, worst, 1e-10,
                       f"{n_samples} random states, construction spectrum included")


def check_pt_involution(n_samples: int = 200) -> CheckResult:
    rng = np.random.default_rng(SEED + 1)
    worst = 0.0
    for _ in range(n_samples):
        state, _ = random_physical_cm(rng)
        twice = partial_transpose(partial_transpose(state, {1}), {1})
        worst = max(worst, float(np.max(np.abs(twice.data - state.data))))
    return CheckResult("partial-transpose-involution", worst == 0.0, worst, 0.0,
                       "bit-exact double application")


def check_rotation_invariance(n_samples: int = 100) -> CheckResult:
    rng = np.random.default_rng(SEED + 2)
    worst = 0.0
    for _ in range(n_samples):
        state, _ = random_physical_cm(rng)
        e0 = log_negativity(state, _MO)
        s0 = gaussian_steering(state, {0}, {1})[0]
        rotated = local_phase_rotate(state, int(rng.integers(0, 2)), rng.uniform(0, 2 * np.pi))
        worst = max(worst, abs(log_negativity(rotated, _MO) - e0))
        worst = max(worst, abs(gaussian_steering(rotated, {0}, {1})[0] - s0))
    return CheckResult("resources-invariant-under-phase-rotation", worst < 1e-10, worst, 1e-10)


def check_analytic_vs_rk4() -> CheckResult:
    """Closed-form covariance against RK4 on every element, both regimes.

    Covariance elements grow a few orders of magnitude by 2 tau in the
    unsteady sets, so hitting 1e-8 absolutely needs ~4000 substeps over the
    window (still well under the runtime budget; effective trajectories span
    only tens of time units).
    """
    worst = 0.0
    count = 0
    for m in _effective_grid():
        if classify_regime(m) is Regime.CRITICAL:
            continue
        count += 1
        dd = build_effective_drift_diffusion(m)
        tau = characteristic_time(m)
        grid = np.linspace(0.0, 2.0 * tau, 9)
        h = min(auto_step(dd.a), 2.0 * tau / 4000.0)
        traj = lyapunov_rk4(dd, CovarianceMatrix.vacuum(2), grid, h=h)
        for t, state in zip(traj.times, traj.states):
            exact = analytic_effective_cm(m, float(t))
            worst = max(worst, float(np.max(np.abs(exact.data - state.data))))
    return CheckResult("analytic-cm-vs-rk4", worst < 1e-8, worst, 1e-8,
                       f"{count} parameter sets, t in [0, 2 tau]")


def check_rk4_convergence() -> CheckResult:
    """Halving the step shrinks the error by ~2^4."""
    m = EffectiveModel(0.9, 0.7, 1.0)
    dd = build_effective_drift_diffusion(m)
    grid = np.array([0.0, 2.0])

    def max_err(h: float) -> float:
        traj = lyapunov_rk4(dd, CovarianceMatrix.vacuum(2), grid, h=h)
        exact = analytic_effective_cm(m, 2.0)
        return float(np.max(np.abs(traj.states[-1].data - exact.data)))

    ratio = max_err(0.08) / max_err(0.04)
    return CheckResult("rk4-fourth-order-convergence", 14.0 <= ratio <= 18.0, ratio, 16.0,
                       "error ratio on halving h, target 16 +- 2")


def check_physicality_under_evolution() -> CheckResult:
    worst = 1.0
    for m in (EffectiveModel(0.5, 1.0, 1.0), EffectiveModel(1.0, 0.5, 1.0),
              EffectiveModel(0.8, 1.0, 0.6, n_a=0.5, n_c=1.0)):
        dd = build_effective_drift_diffusion(m)
        tau = characteristic_time(m)
        traj = lyapunov_rk4(dd, CovarianceMatrix.vacuum(2), np.linspace(0, 2 * tau, 15))
        for state in traj.states:
            worst = min(worst, float(symplectic_eigenvalues(state)[0]))
    return CheckResult("physicality-under-evolution", worst >= 0.5 - 1e-9, worst, 0.5 - 1e-9,
                       "min symplectic eigenvalue along trajectories")


def check_steering_bounded_by_entanglement() -> CheckResult:
    """Wherever raw steering is positive the entanglement strictly exceeds it."""
    margin = np.inf
    points = 0
    for m in _effective_grid():
        if classify_regime(m) is Regime.CRITICAL:
            continue
        states = []
        if classify_regime(m) is Regime.STEADY:
            states.append(steady_state(build_effective_drift_diffusion(m)))
        else:
            tau = characteristic_time(m)
            states += [analytic_effective_cm(m, t) for t in (0.5 * tau, tau, 2.0 * tau)]
        for state in states:
            e = log_negativity(state, _MO)
            for direction in (({0}, {1}), ({1}, {0})):
                raw, clamped = gaussian_steering(state, *direction)
                if raw > 0:
                    points += 1
                    margin = min(margin, e - clamped)
    return CheckResult("steering-strictly-below-entanglement", margin > 0.0, margin, 0.0,
                       f"{points} sampled states with positive raw steering")


def check_chain_specializations(n_draws: int = 10_000) -> CheckResult:
    """Chain coupling formula vs the two platform specializations."""
    rng = np.random.default_rng(SEED + 3)
    worst = 0.0
    for _ in range(n_draws):
        wb = rng.uniform(0.5, 2.0)
        da = rng.uniform(2.5, 8.0)
        ga, gc = rng.uniform(0.01, 0.3, size=2)
        chain = ChainParams(
            n=1, delta_a=da, delta_c=-da, omegas=(wb,),
            g_a=np.sqrt(2) * ga, g_c=np.sqrt(2) * gc, g_mid=(),
            theta=np.pi / 4, phi=np.pi / 4,
            kappa_a=1e-3, kappa_c=1e-3, kappa_mid=(1e-6,),
        )
        expected = 2.0 * ga * gc * wb / (da * da - wb * wb)
        worst = max(worst, abs(effective_coupling(chain) - expected) / abs(expected))

        dm = rng.uniform(0.5, 1.6)
        gm = rng.uniform(0.01, 0.3)
        chain2 = ChainParams(
            n=2, delta_a=da, delta_c=-da, omegas=(dm, wb),
            g_a=ga, g_c=np.sqrt(2) * gc, g_mid=(gm,),
            theta=0.0, phi=np.pi / 4,
            kappa_a=1e-3, kappa_c=1e-3, kappa_mid=(1e-6, 1e-6),
        )
        expected2 = 2.0 * ga * gm * gc * wb / ((dm - da) * (wb * wb - da * da))
        worst = max(worst, abs(effective_coupling(chain2) - expected2) / abs(expected2))
    return CheckResult("chain-platform-specializations", worst < 1e-12, worst, 1e-12,
                       f"{n_draws} random draws per platform")


def check_coupling_sign_irrelevant() -> CheckResult:
    """theta -> theta + pi flips g_eff; resources and dynamics are unaffected."""
    chain = ChainParams(
        n=1, delta_a=5.0, delta_c=-5.0, omegas=(1.0,),
        g_a=0.17, g_c=0.17, g_mid=(), theta=np.pi / 4, phi=np.pi / 4,
        kappa_a=5e-4, kappa_c=1e-3, kappa_mid=(1e-6,),
    )
    flipped = ChainParams(
        n=1, delta_a=5.0, delta_c=-5.0, omegas=(1.0,),
        g_a=0.17, g_c=0.17, g_mid=(), theta=np.pi / 4 + np.pi, phi=np.pi / 4,
        kappa_a=5e-4, kappa_c=1e-3, kappa_mid=(1e-6,),
    )
    g1, g2 = effective_coupling(chain), effective_coupling(flipped)
    worst = abs(g1 + g2)
    m1, m2 = reduce_chain(chain), reduce_chain(flipped)
    worst = max(worst, abs(stationary_entanglement(m1) - stationary_entanglement(m2)))
    worst = max(worst, abs(stationary_steering(m1, "ac") - stationary_steering(m2, "ac")))
    tau = characteristic_time(m1)
    e1 = log_negativity(analytic_effective_cm(m1, tau), _MO)
    e2 = log_negativity(analytic_effective_cm(m2, tau), _MO)
    worst = max(worst, abs(e1 - e2))
    return CheckResult("coupling-sign-independence", worst < 1e-12, worst, 1e-12,
                       "g_eff odd under theta -> theta + pi, resources even")


def check_energy_shift_middle_modes() -> CheckResult:
    base = ChainParams(
        n=2, delta_a=3.0, delta_c=-3.0, omegas=(1.0, 1.0),
        g_a=0.12, g_c=0.17, g_mid=(0.1,), theta=0.0, phi=np.pi / 4,
        kappa_a=1e-4, kappa_c=2e-4, kappa_mid=(1e-3, 1e-6),
    )
    padded = ChainParams(
        n=4, delta_a=3.0, delta_c=-3.0, omegas=(1.0, 0.7, 1.3, 1.0),
        g_a=0.12, g_c=0.17, g_mid=(0.0, 0.0, 0.0), theta=0.0, phi=np.pi / 4,
        kappa_a=1e-4, kappa_c=2e-4, kappa_mid=(1e-3, 1e-3, 1e-3, 1e-6),
    )
    worst = abs(energy_shift(base) - energy_shift(padded))
    return CheckResult("energy-shift-endpoint-only", worst < 1e-15, worst, 1e-15,
                       "zero-coupling middle modes leave the shift unchanged")


def check_steady_state_residual() -> CheckResult:
    worst = 0.0
    systems = [build_effective_drift_diffusion(EffectiveModel(0.5, 1.0, 1.0)),
               build_effective_drift_diffusion(EffectiveModel(0.3, 0.8, 1.2, n_a=1.0)),
               eom_full_drift_diffusion(EomParams(**EOM_FIG3))]
    for dd in systems:
        try:
            v = steady_state(dd)
        except Exception:
            continue
        worst = max(worst, float(np.max(np.abs(dd.a @ v.data + v.data @ dd.a.T + dd.d))))
    return CheckResult("steady-state-residual", worst < 1e-10, worst, 1e-10)


def check_zeta_vs_squeezed_variance() -> CheckResult:
    """In the growing regime the entanglement kernel approaches twice dX past tau."""
    worst = 0.0
    for m in (EffectiveModel(np.sqrt(2.0), 0.5, 1.0), EffectiveModel(2.0, 1.0, 1.0),
              EffectiveModel(1.5, 0.5, 1.0)):
        tau = characteristic_time(m)
        for t in (tau, 1.5 * tau, 2.0 * tau):
            eta = symplectic_eigenvalues(
                partial_transpose(analytic_effective_cm(m, t), {0}))[0]
            zeta = 2.0 * float(eta)
            dx = squeeze_variances(m, t)[0]
            worst = max(worst, abs(zeta - 2.0 * dx) / zeta)
    return CheckResult("zeta-approaches-2dX", worst < 0.01, worst, 0.01,
                       "relative gap for t >= tau, unsteady models")


def check_stationary_dual_route() -> CheckResult:
    """Closed forms vs functionals on the steady state / late-time covariance.

    Unsteady models are sampled at g^2/(ka kc) >= 4: the exact functionals
    carry a transient decaying only like the inverse of the growing
    quadrature, which stays above 1e-3 at 2 tau for weaker couplings (at
    g^2/(ka kc) = 2 it is still ~1.3e-3 for the entanglement and ~1e-2 for
    the suppressed steering direction).
    """
    worst = 0.0
    models = [EffectiveModel(np.sqrt(r * ka * kc), ka, kc)
              for ka, kc in ((1.0, 1.0), (0.5, 1.0), (1.2, 0.7))
              for r in (0.2, 0.6, 4.0, 6.0)]
    for m in models:
        e_closed = stationary_entanglement(m)
        s_ac_closed = stationary_steering(m, "ac")
        s_ca_closed = stationary_steering(m, "ca")
        if classify_regime(m) is Regime.STEADY:
            state = steady_state(build_effective_drift_diffusion(m))
        else:
            state = analytic_effective_cm(m, 2.0 * characteristic_time(m))
        worst = max(worst, abs(log_negativity(state, _MO) - max(0.0, e_closed)))
        worst = max(worst, abs(gaussian_steering(state, {0}, {1})[0] - s_ac_closed))
        worst = max(worst, abs(gaussian_steering(state, {1}, {0})[0] - s_ca_closed))
    return CheckResult("stationary-dual-route", worst < 1e-3, worst, 1e-3,
                       f"{len(models)} models, both regimes")


def check_monotonicity_in_coupling() -> CheckResult:
    """E and positive raw steerings never decrease along a g^2 grid."""
    worst_drop = 0.0
    for ka, kc in ((0.5, 1.0), (1.0, 1.0), (1.3, 0.6)):
        gs = np.sqrt(np.linspace(1e-4, 4.0 * ka * kc, 100))
        e_prev = s_ac_prev = s_ca_prev = -np.inf
        for g in gs:
            m = EffectiveModel(float(g), ka, kc)
            e = stationary_entanglement(m)
            s_ac = stationary_steering(m, "ac")
            s_ca = stationary_steering(m, "ca")
            worst_drop = max(worst_drop, e_prev - e)
            if s_ac > 0 and s_ac_prev > 0:
                worst_drop = max(worst_drop, s_ac_prev - s_ac)
            if s_ca > 0 and s_ca_prev > 0:
                worst_drop = max(worst_drop, s_ca_prev - s_ca)
            e_prev, s_ac_prev, s_ca_prev = e, s_ac, s_ca
    return CheckResult("stationary-monotonicity-in-g2", worst_drop < 1e-12, worst_drop, 1e-12,
                       "100-point grids, three decay-rate pairs")


def check_boundary_continuity() -> CheckResult:
    worst = 0.0
    for ka, kc in ((1.0, 1.0), (0.5, 1.0), (1.4, 0.7)):
        e_lim, s_ac_lim, s_ca_lim = boundary_limits(ka, kc)
        for side in (1.0 - 1e-9, 1.0 + 1e-9):
            m = EffectiveModel(np.sqrt(side * ka * kc), ka, kc)
            worst = max(worst, abs(stationary_entanglement(m) - e_lim))
            worst = max(worst, abs(stationary_steering(m, "ac") - s_ac_lim))
            worst = max(worst, abs(stationary_steering(m, "ca") - s_ca_lim))
    sym = abs(boundary_limits(1.0, 1.0)[0] - np.log(2.0))
    worst_sym = sym
    passed = worst < 1e-6 and worst_sym < 1e-12
    return CheckResult("boundary-continuity", passed, worst, 1e-6,
                       f"both branches at (1 +- 1e-9) ka kc; ln 2 check at {sym:.1e}")


def check_region_vs_sign_pattern() -> CheckResult:
    """Steering region labels equal the raw-sign pattern across a dense grid."""
    mismatches = 0
    total = 0
    for ka in np.linspace(0.2, 2.0, 16):
        for kc in np.linspace(0.2, 2.0, 16):
            for ratio in (0.3, 0.8, 1.5, 3.0, 6.0):
                m = EffectiveModel(float(np.sqrt(ratio * ka * kc)), float(ka), float(kc))
                if classify_regime(m) is Regime.CRITICAL:
                    continue
                total += 1
                ac = stationary_steering(m, "ac") > 0
                ca = stationary_steering(m, "ca") > 0
                expected = {
                    (True, True): SteeringRegion.TWO_WAY,
                    (True, False): SteeringRegion.ONE_WAY_A_TO_C,
                    (False, True): SteeringRegion.ONE_WAY_C_TO_A,
                    (False, False): SteeringRegion.NONE,
                }[(ac, ca)]
                if steering_region(m) is not expected:
                    mismatches += 1
    return CheckResult("steering-region-vs-raw-signs", mismatches == 0, float(mismatches), 0.0,
                       f"{total} grid cells")


def check_monogamy_on_trajectories() -> CheckResult:
    """Residuals non-negative along shortened full-system trajectories."""
    worst = np.inf
    for dd, modes in ((eom_full_drift_diffusion(EomParams(**EOM_FIG3)), 3),
                      (comm_full_drift_diffusion(CommParams(**COMM_FIG4)), 4)):
        rate = float(np.max(np.abs(np.real(np.linalg.eigvals(dd.a)))))
        horizon = 0.5 / rate if rate > 0 else 1.0
        grid = np.linspace(0.0, horizon, 7)
        traj = lyapunov_rk4(dd, CovarianceMatrix.vacuum(modes), grid)
        for state in traj.states[1:]:
            ent_res, steer_res = monogamy_residuals(state, 0)
            worst = min(worst, ent_res, steer_res)
    return CheckResult("monogamy-residuals-nonnegative", worst >= -1e-9, worst, -1e-9,
                       "shortened horizons; acceptance runs full length")


def check_full_vs_effective() -> CheckResult:
    """Platform dynamics reproduce the closed forms where the reduction is valid."""
    cfg = RunConfig(
        system="eom",
        parameters=dict(EOM_FIG3),
        sweep=(SweepAxis(name="g_a", minimum=0.08, maximum=0.16, points=3),),
    )
    table = run_compare(cfg)
    worst = 0.0
    for row in table.rows:
        record = dict(zip(table.columns, row))
        if not record["validity_pass"]:
            continue
        worst = max(worst, record["rel_dev_E_tau"])
        if record["S_ac"] > 0:
            worst = max(worst, record["rel_dev_S_ac_tau"])
    return CheckResult("full-vs-effective-agreement", worst <= 0.10, worst, 0.10,
                       "3-point sweep; acceptance runs the full range")


def check_csv_round_trip() -> CheckResult:
    rng = np.random.default_rng(SEED + 4)
    values = rng.standard_normal(40) * 10.0 ** rng.integers(-12, 12, size=40)
    table = Table(columns=("x", "y"), rows=tuple(
        (float(a), float(b)) for a, b in values.reshape(20, 2)))
    back = parse_csv(render(table, "csv"))
    exact = all(a == b for ra, rb in zip(table.rows, back.rows) for a, b in zip(ra, rb))
    return CheckResult("csv-round-trip", exact, 0.0 if exact else 1.0, 0.0,
                       "emit/parse equality on 17-digit floats")


def check_grid_determinism() -> CheckResult:
    cfg = RunConfig(
        system="effective",
        parameters={"g_eff": 1.0, "kappa_a": 1.0, "kappa_c": 1.0},
        sweep=(SweepAxis("kappa_a", 0.4, 2.0, 6), SweepAxis("kappa_c", 0.4, 2.0, 6)),
    )
    serial = render(run_region(cfg, threads=1))
    threaded = render(run_region(cfg, threads=4))
    same = serial == threaded
    return CheckResult("grid-scheduling-determinism", same, 0.0 if same else 1.0, 0.0,
                       "region map identical with 1 and 4 workers")


ALL_CHECKS: tuple[tuple[str, Callable[[], CheckResult]], ...] = (
    ("symplectic-eigenvalues-vs-closed-form", check_symplectic_oracle),
    ("partial-transpose-involution", check_pt_involution),
    ("resources-invariant-under-phase-rotation", check_rotation_invariance),
    ("analytic-cm-vs-rk4", check_analytic_vs_rk4),
    ("rk4-fourth-order-convergence", check_rk4_convergence),
    ("physicality-under-evolution", check_physicality_under_evolution),
    ("steering-strictly-below-entanglement", check_steering_bounded_by_entanglement),
    ("chain-platform-specializations", check_chain_specializations),
    ("coupling-sign-independence", check_coupling_sign_irrelevant),
    ("energy-shift-endpoint-only", check_energy_shift_middle_modes),
    ("steady-state-residual", check_steady_state_residual),
    ("zeta-approaches-2dX", check_zeta_vs_squeezed_variance),
    ("stationary-dual-route", check_stationary_dual_route),
    ("stationary-monotonicity-in-g2", check_monotonicity_in_coupling),
    ("boundary-continuity", check_boundary_continuity),
    ("steering-region-vs-raw-signs", check_region_vs_sign_pattern),
    ("monogamy-residuals-nonnegative", check_monogamy_on_trajectories),
    ("full-vs-effective-agreement", check_full_vs_effective),
    ("csv-round-trip", check_csv_round_trip),
    ("grid-scheduling-determinism", check_grid_determinism),
)


def run_verify(names: tuple[str, ...] | None = None) -> list[CheckResult]:
    """Run the (optionally filtered) verification suite and return all results."""
    selected = ALL_CHECKS if names is None else tuple(
        (name, fn) for name, fn in ALL_CHECKS if name in names)
    results = []
    for _, fn in selected:
        results.append(fn())
    return results


def main_report(results: list[CheckResult], elapsed: float) -> str:
    lines = [result.line() for result in results]
    n_failed = sum(1 for r in results if not r.passed)
    lines.append(f"{len(results) - n_failed}/{len(results)} checks passed "
                 f"in {elapsed:.1f} s")
    return "\n".join(lines)


def run_and_format(names: tuple[str, ...] | None = None) -> tuple[str, int]:
    start = time.time()
    results = run_verify(names)
    report = main_report(results, time.time() - start)
    return report, 0 if all(r.passed for r in results) else 1
