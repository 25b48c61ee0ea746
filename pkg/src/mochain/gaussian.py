"""Covariance-matrix representation of Gaussian states and the resource functionals.

A state of M bosonic modes is held as the real symmetric 2M x 2M matrix of
symmetrized quadrature second moments, with mode k occupying rows/columns
(2k, 2k+1) as (X_k, Y_k), X = (o + o^dag)/sqrt(2), Y = (o - o^dag)/(i sqrt(2)).
In this convention the vacuum is I/2 and a state is physical when every
symplectic eigenvalue is >= 1/2.

On top of that single representation the module provides logarithmic
negativity, directional Gaussian steering (Schur-complement form), monogamy
residuals, and local phase rotations. All functions are pure; no routine
mutates its input.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

import numpy as np
from numpy.typing import NDArray

from .errors import NumericError, UnphysicalStateError

PHYSICALITY_TOL = 1e-9
PAIRING_RTOL = 1e-9
PAIRING_ATOL = 1e-12


def symplectic_form(n_modes: int) -> NDArray[np.float64]:
    """Block-diagonal symplectic form Omega = oplus_n [[0, 1], [-1, 0]]."""
    omega = np.zeros((2 * n_modes, 2 * n_modes))
    for k in range(n_modes):
        omega[2 * k, 2 * k + 1] = 1.0
        omega[2 * k + 1, 2 * k] = -1.0
    return omega


@dataclass(frozen=True)
class CovarianceMatrix:
    """Symmetric quadrature covariance matrix of an M-mode Gaussian state.

    The constructor symmetrizes its input as (v + v^T)/2 (integration roundoff
    accumulates asymmetry at the 1e-13 level) and rejects non-finite entries
    and odd dimensions. Physicality is *not* enforced here: partial transposes
    of entangled states are legitimately unphysical.
    """

    data: NDArray[np.float64]

    def __post_init__(self) -> None:
        arr = np.asarray(self.data, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] % 2:
            raise ValueError(f"covariance matrix must be 2M x 2M, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("covariance matrix has non-finite entries")
        sym = (arr + arr.T) / 2.0
        sym.flags.writeable = False
        object.__setattr__(self, "data", sym)

    @property
    def modes(self) -> int:
        return self.data.shape[0] // 2

    @classmethod
    def vacuum(cls, n_modes: int) -> "CovarianceMatrix":
        return cls(np.eye(2 * n_modes) / 2.0)

    def reduced(self, modes: Sequence[int]) -> "CovarianceMatrix":
        """Sub-state on the given modes, in the order listed."""
        idx = _quadrature_indices(modes, self.modes)
        return CovarianceMatrix(self.data[np.ix_(idx, idx)])

    def block(self, row_mode: int, col_mode: int) -> NDArray[np.float64]:
        """The 2x2 block coupling two modes (or one mode's own block)."""
        r, c = 2 * row_mode, 2 * col_mode
        return self.data[r : r + 2, c : c + 2].copy()


@dataclass(frozen=True)
class ModePartition:
    """Disjoint bipartition (left | right) of a subset of the modes."""

    left: frozenset[int]
    right: frozenset[int]

    def __init__(self, left: Iterable[int], right: Iterable[int]) -> None:
        object.__setattr__(self, "left", frozenset(int(m) for m in left))
        object.__setattr__(self, "right", frozenset(int(m) for m in right))
        if not self.left or not self.right:
            raise ValueError("both sides of a partition must be non-empty")
        if self.left & self.right:
            raise ValueError(f"partition sides overlap: {sorted(self.left & self.right)}")


class Regime(Enum):
    """Dynamical classification of the effective two-mode model."""

    STEADY = "Steady"
    CRITICAL = "Critical"
    UNSTEADY = "Unsteady"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class ResourceReport:
    """Entanglement, steering, and monogamy diagnostics at one evaluation point.

    Raw steering values are preserved because their sign carries the
    directionality information; the clamped fields apply max(0, .).
    Monogamy residuals are None for states with fewer than three modes.
    """

    entanglement: float
    steering_ac_raw: float
    steering_ca_raw: float
    steering_ac: float = field(init=False)
    steering_ca: float = field(init=False)
    regime: Regime = Regime.NOT_APPLICABLE
    monogamy_ent_residual: float | None = None
    monogamy_steer_residual: float | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "steering_ac", max(0.0, self.steering_ac_raw))
        object.__setattr__(self, "steering_ca", max(0.0, self.steering_ca_raw))


def _quadrature_indices(modes: Sequence[int], n_modes: int) -> list[int]:
    idx: list[int] = []
    for m in modes:
        if not 0 <= m < n_modes:
            raise IndexError(f"mode index {m} out of range for {n_modes} modes")
        idx.extend((2 * m, 2 * m + 1))
    return idx


def symplectic_eigenvalues(v: CovarianceMatrix) -> NDArray[np.float64]:
    """Symplectic spectrum {nu_k} of a covariance matrix, ascending.

    Computed as the absolute values of the eigenvalues of Omega v, which for
    any symmetric v come in +/- pairs; the pairs are deduplicated to M values.
    Works unchanged for partial transposes (still symmetric positive definite).
    """
    arr = v.data
    if not np.all(np.isfinite(arr)):
        raise ValueError("covariance matrix has non-finite entries")
    m = v.modes
    eigs = np.linalg.eigvals(symplectic_form(m) @ arr)
    magnitudes = np.sort(np.abs(eigs))
    lo, hi = magnitudes[0::2], magnitudes[1::2]
    residual = float(np.max(np.abs(hi - lo) / np.maximum(PAIRING_ATOL / PAIRING_RTOL, hi)))
    if residual > PAIRING_RTOL:
        raise NumericError(
            f"symplectic eigenvalue pairing failed, relative residual {residual:.3e}"
        )
    return (lo + hi) / 2.0


def is_physical(v: CovarianceMatrix, tol: float = PHYSICALITY_TOL) -> bool:
    """Whether every symplectic eigenvalue is >= 1/2 - tol."""
    return bool(symplectic_eigenvalues(v)[0] >= 0.5 - tol)


def _require_physical(v: CovarianceMatrix) -> None:
    nu_min = symplectic_eigenvalues(v)[0]
    if nu_min < 0.5 - PHYSICALITY_TOL:
        raise UnphysicalStateError(
            f"state violates the uncertainty bound: min symplectic eigenvalue {nu_min:.12g}"
        )


def partial_transpose(v: CovarianceMatrix, flipped: Iterable[int]) -> CovarianceMatrix:
    """P v P with P negating the Y quadrature of each flipped mode (an involution)."""
    modes = sorted(set(int(m) for m in flipped))
    if not modes:
        raise ValueError("partial transpose needs a non-empty mode set")
    signs = np.ones(2 * v.modes)
    for m in modes:
        if not 0 <= m < v.modes:
            raise IndexError(f"mode index {m} out of range for {v.modes} modes")
        signs[2 * m + 1] = -1.0
    return CovarianceMatrix(v.data * np.outer(signs, signs))


def two_mode_min_pt_eigenvalue(v: CovarianceMatrix) -> float:
    """Minimum symplectic eigenvalue of the partial transpose, two-mode closed form.

    eta^- = sqrt(Gamma - sqrt(Gamma^2 - 4 det v)) / sqrt(2) with
    Gamma = det v_a + det v_c - 2 det v_ac. Kept as an independent oracle for
    the general eigenvalue route; computes determinants only.
    """
    if v.modes != 2:
        raise ValueError("closed form applies to two-mode states only")
    det_a = float(np.linalg.det(v.block(0, 0)))
    det_c = float(np.linalg.det(v.block(1, 1)))
    det_ac = float(np.linalg.det(v.block(0, 1)))
    det_v = float(np.linalg.det(v.data))
    gamma = det_a + det_c - 2.0 * det_ac
    disc = max(gamma * gamma - 4.0 * det_v, 0.0)
    return float(np.sqrt(max(gamma - np.sqrt(disc), 0.0) / 2.0))


def log_negativity(v: CovarianceMatrix, partition: ModePartition) -> float:
    """Logarithmic negativity max[0, -ln(2 eta^-)] across the given bipartition.

    The left side must be a single mode (only 1-vs-1 and 1-vs-rest splits are
    supported); modes outside the partition are traced out first.
    """
    if len(partition.left) != 1:
        raise ValueError("left side of the partition must be a single mode")
    _require_physical(v)
    all_modes = sorted(partition.left | partition.right)
    if len(all_modes) < v.modes:
        order = {m: i for i, m in enumerate(all_modes)}
        v = v.reduced(all_modes)
        left = {order[m] for m in partition.left}
    elif len(all_modes) > v.modes:
        raise ValueError("partition covers all modes on one side or references extra modes")
    else:
        left = set(partition.left)
    eta_min = float(symplectic_eigenvalues(partial_transpose(v, left))[0])
    return max(0.0, -float(np.log(2.0 * eta_min)))


def gaussian_steering(
    v: CovarianceMatrix, steerer: Iterable[int], steered: Iterable[int]
) -> tuple[float, float]:
    """Directional Gaussian steering steerer -> steered, (raw, clamped).

    raw = -ln(2 mu) where mu is the minimum symplectic eigenvalue of the Schur
    complement of the steerer block, nu = v_B - v_aB^T v_a^{-1} v_aB. For a
    single steered mode this reduces to the determinant-ratio form
    ln[det v_a / (4 det v)]/2. The steerer must be a single mode; modes outside
    steerer + steered are traced out first.
    """
    steerer_set = sorted(set(int(m) for m in steerer))
    steered_set = sorted(set(int(m) for m in steered))
    if len(steerer_set) != 1:
        raise ValueError("multi-mode steerers are not supported")
    if not steered_set or set(steerer_set) & set(steered_set):
        raise ValueError("steered set must be non-empty and disjoint from the steerer")
    _require_physical(v)
    sub = v.reduced(steerer_set + steered_set)
    n_b = len(steered_set)
    v_a = sub.data[:2, :2]
    v_ab = sub.data[:2, 2:]
    v_b = sub.data[2:, 2:]
    cond = float(np.linalg.cond(v_a))
    if not np.isfinite(cond) or cond > 1e12:
        raise NumericError(f"steerer block is numerically singular (condition number {cond:.3e})")
    schur = v_b - v_ab.T @ np.linalg.solve(v_a, v_ab)
    mu = float(symplectic_eigenvalues(CovarianceMatrix(schur))[0])
    raw = -float(np.log(2.0 * mu))
    return raw, max(0.0, raw)


def monogamy_residuals(v: CovarianceMatrix, focus: int) -> tuple[float, float]:
    """Residuals of the squared-entanglement and steering monogamy inequalities.

    ent residual:   E^2(focus | rest) - sum_j E^2(focus, j)
    steer residual: S(focus -> rest)  - sum_j S(focus -> j)   (clamped values)

    Both are >= 0 (up to numerical noise) for every physical state.
    """
    m = v.modes
    if m < 3:
        raise ValueError("monogamy residuals need at least three modes")
    if not 0 <= focus < m:
        raise IndexError(f"mode index {focus} out of range for {m} modes")
    rest = [j for j in range(m) if j != focus]
    e_global = log_negativity(v, ModePartition({focus}, rest))
    s_global = gaussian_steering(v, {focus}, rest)[1]
    ent_residual = e_global**2
    steer_residual = s_global
    for j in rest:
        ent_residual -= log_negativity(v, ModePartition({focus}, {j})) ** 2
        steer_residual -= gaussian_steering(v, {focus}, {j})[1]
    return float(ent_residual), float(steer_residual)


def local_phase_rotate(v: CovarianceMatrix, mode: int, angle: float) -> CovarianceMatrix:
    """Conjugate one mode's quadratures by a rotation; all resource values are invariant."""
    if not 0 <= mode < v.modes:
        raise IndexError(f"mode index {mode} out of range for {v.modes} modes")
    g = np.eye(2 * v.modes)
    c, s = np.cos(angle), np.sin(angle)
    g[2 * mode : 2 * mode + 2, 2 * mode : 2 * mode + 2] = [[c, s], [-s, c]]
    return CovarianceMatrix(g @ v.data @ g.T)


def resource_report(
    v: CovarianceMatrix,
    mode_a: int = 0,
    mode_c: int = 1,
    regime: Regime = Regime.NOT_APPLICABLE,
) -> ResourceReport:
    """Evaluate all resource functionals between two target modes of a state.

    For states with three or more modes the entanglement/steering are computed
    on the reduced two-mode state and the monogamy residuals on the full state
    with mode_a as the focus.
    """
    e = log_negativity(v, ModePartition({mode_a}, {mode_c}))
    s_ac_raw, _ = gaussian_steering(v, {mode_a}, {mode_c})
    s_ca_raw, _ = gaussian_steering(v, {mode_c}, {mode_a})
    ent_res = steer_res = None
    if v.modes >= 3:
        ent_res, steer_res = monogamy_residuals(v, mode_a)
    return ResourceReport(
        entanglement=e,
        steering_ac_raw=s_ac_raw,
        steering_ca_raw=s_ca_raw,
        regime=regime,
        monogamy_ent_residual=ent_res,
        monogamy_steer_residual=steer_res,
    )
