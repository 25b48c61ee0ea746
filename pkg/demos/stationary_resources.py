"""Stationary resource control: coupling scans and the regime/steering map.

First part scans the relative coupling g/kappa_a at kappa_c = 2 kappa_a = 1:
entanglement dominates both steering directions everywhere, all three grow
monotonically with the coupling, and the divergent regime (right of the
boundary at g^2 = kappa_a kappa_c) keeps producing stronger stationary
resources than the stable one, up to the printed boundary limits.

Second part rasterizes the (kappa_a, kappa_c) plane at fixed coupling into a
coarse character map of the steering regions, the text rendition of the
regional diagrams:   .  no steering   >  a steers c   <  c steers a
                     2  two-way       (uppercase marks the stable regime)

Run:  python3 demos/stationary_resources.py
"""

import numpy as np

from mochain import (
    EffectiveModel,
    SteeringRegion,
    boundary_limits,
    classify_regime,
    stationary_entanglement,
    stationary_steering,
    steering_region,
)
from mochain.gaussian import Regime

# --- coupling scan at kappa_c = 2 kappa_a = 1 --------------------------------
ka, kc = 0.5, 1.0
print(f"kappa_a = {ka}, kappa_c = {kc}  (boundary at g = {np.sqrt(ka * kc):.4f})")
print(f"{'g/ka':>6} {'regime':>10} {'E':>8} {'S_ac':>8} {'S_ca':>8} {'region':>14}")
for g_over_ka in (0.2, 0.6, 1.0, 1.4, np.sqrt(2.0), 2.0, 2.4, 3.0, 4.0):
    m = EffectiveModel(g_over_ka * ka, ka, kc)
    print(f"{g_over_ka:6.2f} {classify_regime(m).value:>10} "
          f"{stationary_entanglement(m):8.4f} "
          f"{stationary_steering(m, 'ac'):8.4f} "
          f"{stationary_steering(m, 'ca'):8.4f} "
          f"{steering_region(m).value:>14}")

e_lim, s_ac_lim, s_ca_lim = boundary_limits(ka, kc)
print(f"stable-branch suprema (g^2 -> ka kc):  E = {e_lim:.4f}  "
      f"S_ac = {s_ac_lim:.4f}  S_ca = {s_ca_lim:.4f}")

# --- character map of the regional diagram ------------------------------------
GLYPH = {
    SteeringRegion.NONE: ".",
    SteeringRegion.ONE_WAY_A_TO_C: ">",
    SteeringRegion.ONE_WAY_C_TO_A: "<",
    SteeringRegion.TWO_WAY: "2",
}
g_fixed = 1.0
kappas = np.linspace(0.3, 2.5, 23)
print(f"\nsteering regions over (kappa_a down, kappa_c across) at g = {g_fixed}")
print("    " + "".join(f"{k:5.1f}" if i % 5 == 0 else "     "
                       for i, k in enumerate(kappas)))
for ka_value in kappas:
    row = []
    for kc_value in kappas:
        m = EffectiveModel(g_fixed, float(ka_value), float(kc_value))
        glyph = GLYPH[steering_region(m)]
        if classify_regime(m) is Regime.STEADY:
            glyph = glyph.upper() if glyph.isalpha() else {"." : ":", ">": "}", "<": "{"}[glyph]
        row.append(glyph)
    print(f"{ka_value:4.1f} " + " ".join(row))
print("(stable-regime cells shown as : } {  divergent as . > < 2)")
