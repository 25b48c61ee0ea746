"""Stationary resource values of the effective model and their parameter regions.

The long-time entanglement and steering of the effective two-mode model have
piecewise closed forms: one branch where the drift is stable and the
covariance converges, one where the covariance diverges but the resource
measures still converge. Both branches meet continuously at
g_eff^2 = kappa_a kappa_c; the boundary itself dispatches to the divergent
branch, whose formulas stay finite there.
"""

from __future__ import annotations

import math
from enum import Enum

from .chain import EffectiveModel, classify_regime
from .gaussian import Regime


class SteeringRegion(Enum):
    """Which steering directions survive in the long-time limit."""

    NONE = "None"
    ONE_WAY_A_TO_C = "OneWayAtoC"
    ONE_WAY_C_TO_A = "OneWayCtoA"
    TWO_WAY = "TwoWay"


def _omega(g: float, ka: float, kc: float) -> float:
    return math.hypot(2.0 * g, ka - kc)


def stationary_entanglement(m: EffectiveModel) -> float:
    """Long-time entanglement between the two effective modes.

    Stable regime:   ln[(ka kc - g^2) / (ka kc - g^2 chi)],
                     chi = sqrt{1 + 4 ka kc (ka kc - g^2)/[g^2 (ka+kc)^2]}
    Divergent regime: ln[1 + 4 g^2 / chi~],
                     chi~ = Omega (ka+kc) + (ka-kc)^2

    Continuous and monotonically increasing in g^2; zero coupling gives zero.
    """
    g2 = m.g_eff**2
    if g2 == 0.0:
        return 0.0
    ka, kc = m.kappa_a, m.kappa_c
    product = ka * kc
    if classify_regime(m) is Regime.STEADY:
        chi = math.sqrt(1.0 + 4.0 * product * (product - g2) / (g2 * (ka + kc) ** 2))
        return math.log((product - g2) / (product - g2 * chi))
    chi_tilde = _omega(m.g_eff, ka, kc) * (ka + kc) + (ka - kc) ** 2
    return math.log1p(4.0 * g2 / chi_tilde)


def stationary_steering(m: EffectiveModel, direction: str = "ac") -> float:
    """Long-time raw steering quantity, 'ac' (a steers c) or 'ca'.

    Stable regime:    ln{[g^2 (kc^2 - ka^2) + Xi] / [g^2 (ka-kc)^2 + Xi]},
                      Xi = ka kc (ka+kc)^2
    Divergent regime: ln[(Omega - ka + kc)/(2 Omega)] + E_stationary

    The 'ca' direction interchanges the two decay rates. Values are returned
    unclamped: the sign decides which directions are present, and negative
    values carry meaning for the region classification.
    """
    if direction == "ac":
        ka, kc = m.kappa_a, m.kappa_c
    elif direction == "ca":
        ka, kc = m.kappa_c, m.kappa_a
    else:
        raise ValueError(f"direction must be 'ac' or 'ca', got {direction!r}")
    g2 = m.g_eff**2
    if classify_regime(m) is Regime.STEADY:
        xi = ka * kc * (ka + kc) ** 2
        return math.log((g2 * (kc * kc - ka * ka) + xi) / (g2 * (ka - kc) ** 2 + xi))
    omega = _omega(m.g_eff, ka, kc)
    return math.log((omega - ka + kc) / (2.0 * omega)) + stationary_entanglement(m)


def steering_region(m: EffectiveModel) -> SteeringRegion:
    """Classify which stationary steering directions are positive.

    Stable regime: one-way towards the lossier mode (none at equal decays).
    Divergent regime: direction a->c present iff g^2 + ka kc > 2 ka^2 and
    c->a iff g^2 + ka kc > 2 kc^2; both at once is the two-way region, which
    is unreachable in the stable regime. The classification matches the sign
    pattern of the raw stationary values.
    """
    if m.g_eff == 0.0:
        return SteeringRegion.NONE
    ka, kc = m.kappa_a, m.kappa_c
    if classify_regime(m) is Regime.STEADY:
        if ka < kc:
            return SteeringRegion.ONE_WAY_A_TO_C
        if ka > kc:
            return SteeringRegion.ONE_WAY_C_TO_A
        return SteeringRegion.NONE
    lhs = m.g_eff**2 + ka * kc
    a_to_c = lhs > 2.0 * ka * ka
    c_to_a = lhs > 2.0 * kc * kc
    if a_to_c and c_to_a:
        return SteeringRegion.TWO_WAY
    if a_to_c:
        return SteeringRegion.ONE_WAY_A_TO_C
    if c_to_a:
        return SteeringRegion.ONE_WAY_C_TO_A
    return SteeringRegion.NONE


def boundary_limits(kappa_a: float, kappa_c: float) -> tuple[float, float, float]:
    """Stationary resource values at the stability boundary g^2 -> ka kc.

    E  -> ln[(ka+kc)^2 / (ka^2+kc^2)]          (upper bound of the stable branch)
    S_ac -> ln[(ka kc + kc^2)/(ka^2+kc^2)],  S_ca -> ln[(ka^2 + ka kc)/(ka^2+kc^2)]
    """
    if kappa_a <= 0 or kappa_c <= 0:
        raise ValueError("decay rates must be positive")
    ka2, kc2 = kappa_a**2, kappa_c**2
    product = kappa_a * kappa_c
    e_lim = math.log((kappa_a + kappa_c) ** 2 / (ka2 + kc2))
    s_ac_lim = math.log((product + kc2) / (ka2 + kc2))
    s_ca_lim = math.log((ka2 + product) / (ka2 + kc2))
    return e_lim, s_ac_lim, s_ca_lim
