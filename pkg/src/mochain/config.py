"""Run-configuration schema: JSON in, validated RunConfig out.

A run selects one of four system builders (effective, chain, eom, comm) and a
flat name->value parameter map, optionally swept along one or two axes. Time
grids are specified in multiples of the characteristic time so sweeps stay
well scaled as the coupling varies. Unknown keys are rejected everywhere with
the offending key path in the message; JSON syntax errors keep their
line/column from the parser.
"""

from __future__ import annotations

import dataclasses
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .chain import ChainParams, EffectiveModel, matched_detunings
from . import chain as chain_mod
from .errors import ConfigError
from .systems import CommParams, EomParams, comm_to_chain, eom_to_chain

SYSTEMS = ("effective", "chain", "eom", "comm")
FORMATS = ("csv", "json")


@dataclass(frozen=True)
class SweepAxis:
    name: str
    minimum: float
    maximum: float
    points: int
    scale: str = "linear"

    def values(self) -> list[float]:
        if self.scale == "log":
            lo, hi = math.log10(self.minimum), math.log10(self.maximum)
            return [10.0 ** (lo + (hi - lo) * i / (self.points - 1)) for i in range(self.points)]
        return [
            self.minimum + (self.maximum - self.minimum) * i / (self.points - 1)
            for i in range(self.points)
        ]


@dataclass(frozen=True)
class OutputSpec:
    path: str | None = None
    format: str = "csv"


@dataclass(frozen=True)
class RunConfig:
    system: str
    parameters: dict[str, float]
    sweep: tuple[SweepAxis, ...] = ()
    t_end_in_tau: float = 2.0
    samples: int = 201
    outputs: OutputSpec = OutputSpec()


def _reject_unknown(mapping: dict, allowed: set[str], path: str) -> None:
    unknown = set(mapping) - allowed
    if unknown:
        raise ConfigError(f"{path}: unknown key(s) {sorted(unknown)}; allowed: {sorted(allowed)}")


def _number(value: Any, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{path}: expected a number, got {type(value).__name__}")
    if not math.isfinite(float(value)):
        raise ConfigError(f"{path}: value must be finite")
    return float(value)


def _count(value: Any, path: str, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{path}: expected an integer, got {type(value).__name__}")
    if value < minimum:
        raise ConfigError(f"{path}: must be >= {minimum}, got {value}")
    return value


def _parse_axis(raw: Any, path: str) -> SweepAxis:
    if not isinstance(raw, dict):
        raise ConfigError(f"{path}: expected an object")
    _reject_unknown(raw, {"name", "min", "max", "points", "scale"}, path)
    for key in ("name", "min", "max", "points"):
        if key not in raw:
            raise ConfigError(f"{path}.{key}: required")
    name = raw["name"]
    if not isinstance(name, str):
        raise ConfigError(f"{path}.name: expected a string")
    lo = _number(raw["min"], f"{path}.min")
    hi = _number(raw["max"], f"{path}.max")
    points = _count(raw["points"], f"{path}.points", 2)
    scale = raw.get("scale", "linear")
    if scale not in ("linear", "log"):
        raise ConfigError(f"{path}.scale: must be 'linear' or 'log'")
    if scale == "log" and (lo <= 0 or hi <= 0):
        raise ConfigError(f"{path}: log scale needs positive bounds")
    if hi <= lo:
        raise ConfigError(f"{path}: max must exceed min")
    return SweepAxis(name=name, minimum=lo, maximum=hi, points=points, scale=scale)


_REQUIRED: dict[str, tuple[str, ...]] = {
    "effective": ("g_eff", "kappa_a", "kappa_c"),
    "eom": ("omega_b", "delta_a", "g_a", "g_c", "kappa_a", "kappa_c", "kappa_b"),
    "comm": ("omega_b", "delta_a", "g_a", "g_m", "g_c",
             "kappa_a", "kappa_m", "kappa_b", "kappa_c"),
}
_OPTIONAL: dict[str, tuple[str, ...]] = {
    "effective": ("n_a", "n_c"),
    "eom": ("n_a", "n_c", "n_b"),
    "comm": ("delta_m", "n_a", "n_m", "n_c", "n_b"),
}


def _allowed_parameters(system: str, params: dict[str, float]) -> set[str]:
    if system != "chain":
        return set(_REQUIRED[system]) | set(_OPTIONAL[system])
    n = int(params.get("n", 0))
    allowed = {"n", "delta_a", "delta_c", "theta", "phi", "g_a", "g_c",
               "kappa_a", "kappa_c", "n_a", "n_c"}
    for s in range(1, n + 1):
        allowed |= {f"omega_{s}", f"kappa_mid_{s}", f"n_mid_{s}"}
    for s in range(1, n):
        allowed |= {f"g_mid_{s}"}
    return allowed


def _required_parameters(system: str, params: dict[str, float]) -> set[str]:
    if system != "chain":
        return set(_REQUIRED[system])
    n = int(params.get("n", 0))
    required = {"n", "delta_a", "theta", "phi", "g_a", "g_c", "kappa_a", "kappa_c"}
    required |= {f"omega_{s}" for s in range(1, n + 1)}
    required |= {f"kappa_mid_{s}" for s in range(1, n + 1)}
    required |= {f"g_mid_{s}" for s in range(1, n)}
    return required


def parse_config(raw: dict, source: str = "config") -> RunConfig:
    """Validate a decoded JSON object into a RunConfig."""
    if not isinstance(raw, dict):
        raise ConfigError(f"{source}: top level must be an object")
    _reject_unknown(raw, {"system", "parameters", "sweep", "times", "outputs", "unit"}, source)
    system = raw.get("system")
    if system not in SYSTEMS:
        raise ConfigError(f"{source}.system: must be one of {SYSTEMS}, got {system!r}")
    raw_params = raw.get("parameters")
    if not isinstance(raw_params, dict) or not raw_params:
        raise ConfigError(f"{source}.parameters: required non-empty object")
    params: dict[str, float] = {}
    for key, value in raw_params.items():
        if key == "n":
            params[key] = float(_count(value, f"{source}.parameters.n", 1))
        else:
            params[key] = _number(value, f"{source}.parameters.{key}")
    allowed = _allowed_parameters(system, params)
    _reject_unknown(params, allowed, f"{source}.parameters")
    missing = _required_parameters(system, params) - set(params)
    if missing:
        raise ConfigError(f"{source}.parameters: missing {sorted(missing)}")

    axes: list[SweepAxis] = []
    if "sweep" in raw:
        sweep = raw["sweep"]
        if not isinstance(sweep, dict):
            raise ConfigError(f"{source}.sweep: expected an object")
        _reject_unknown(sweep, {"axis1", "axis2"}, f"{source}.sweep")
        if "axis2" in sweep and "axis1" not in sweep:
            raise ConfigError(f"{source}.sweep: axis2 given without axis1")
        for key in ("axis1", "axis2"):
            if key in sweep:
                axis = _parse_axis(sweep[key], f"{source}.sweep.{key}")
                if axis.name not in allowed:
                    raise ConfigError(
                        f"{source}.sweep.{key}.name: {axis.name!r} is not a parameter "
                        f"of system {system!r}"
                    )
                axes.append(axis)
        if len(axes) == 2 and axes[0].name == axes[1].name:
            raise ConfigError(f"{source}.sweep: both axes sweep {axes[0].name!r}")

    t_end_in_tau, samples = 2.0, 201
    if "times" in raw:
        times = raw["times"]
        if not isinstance(times, dict):
            raise ConfigError(f"{source}.times: expected an object")
        _reject_unknown(times, {"t_end_in_tau", "samples"}, f"{source}.times")
        if "t_end_in_tau" in times:
            t_end_in_tau = _number(times["t_end_in_tau"], f"{source}.times.t_end_in_tau")
            if t_end_in_tau <= 0:
                raise ConfigError(f"{source}.times.t_end_in_tau: must be positive")
        if "samples" in times:
            samples = _count(times["samples"], f"{source}.times.samples", 2)

    outputs = OutputSpec()
    if "outputs" in raw:
        out = raw["outputs"]
        if not isinstance(out, dict):
            raise ConfigError(f"{source}.outputs: expected an object")
        _reject_unknown(out, {"path", "format"}, f"{source}.outputs")
        fmt = out.get("format", "csv")
        if fmt not in FORMATS:
            raise ConfigError(f"{source}.outputs.format: must be one of {FORMATS}")
        path = out.get("path")
        if path is not None and not isinstance(path, str):
            raise ConfigError(f"{source}.outputs.path: expected a string")
        outputs = OutputSpec(path=path, format=fmt)

    if "unit" in raw and not isinstance(raw["unit"], str):
        raise ConfigError(f"{source}.unit: expected a string (documentation only)")

    return RunConfig(
        system=system,
        parameters=params,
        sweep=tuple(axes),
        t_end_in_tau=t_end_in_tau,
        samples=samples,
        outputs=outputs,
    )


def load_config(path: str | Path) -> RunConfig:
    """Read and validate a JSON config file."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return parse_config(raw, source=str(path))


def build_chain_params(params: dict[str, float]) -> ChainParams:
    """Chain parameters from the flat map; delta_c is matched when not given."""
    n = int(params["n"])
    base = ChainParams(
        n=n,
        delta_a=params["delta_a"],
        delta_c=params.get("delta_c", -params["delta_a"]),
        omegas=tuple(params[f"omega_{s}"] for s in range(1, n + 1)),
        g_a=params["g_a"],
        g_c=params["g_c"],
        g_mid=tuple(params[f"g_mid_{s}"] for s in range(1, n)),
        theta=params["theta"],
        phi=params["phi"],
        kappa_a=params["kappa_a"],
        kappa_c=params["kappa_c"],
        kappa_mid=tuple(params[f"kappa_mid_{s}"] for s in range(1, n + 1)),
        n_a=params.get("n_a", 0.0),
        n_c=params.get("n_c", 0.0),
        n_mid=tuple(params.get(f"n_mid_{s}", 0.0) for s in range(1, n + 1)),
    )
    if "delta_c" in params:
        return base
    _, delta_c = matched_detunings(base)
    return dataclasses.replace(base, delta_c=delta_c)


def build_eom_params(params: dict[str, float]) -> EomParams:
    return EomParams(
        omega_b=params["omega_b"],
        delta_a=params["delta_a"],
        g_a=params["g_a"],
        g_c=params["g_c"],
        kappa_a=params["kappa_a"],
        kappa_c=params["kappa_c"],
        kappa_b=params["kappa_b"],
        n_a=params.get("n_a", 0.0),
        n_c=params.get("n_c", 0.0),
        n_b=params.get("n_b", 10.0),
    )


def build_comm_params(params: dict[str, float]) -> CommParams:
    return CommParams(
        omega_b=params["omega_b"],
        delta_a=params["delta_a"],
        g_a=params["g_a"],
        g_m=params["g_m"],
        g_c=params["g_c"],
        kappa_a=params["kappa_a"],
        kappa_m=params["kappa_m"],
        kappa_b=params["kappa_b"],
        kappa_c=params["kappa_c"],
        delta_m=params.get("delta_m"),
        n_a=params.get("n_a", 0.0),
        n_m=params.get("n_m", 0.0),
        n_c=params.get("n_c", 0.0),
        n_b=params.get("n_b", 10.0),
    )


def effective_model(system: str, params: dict[str, float]) -> EffectiveModel:
    """Reduce any configured system to its effective two-mode model."""
    if system == "effective":
        return EffectiveModel(
            g_eff=params["g_eff"],
            kappa_a=params["kappa_a"],
            kappa_c=params["kappa_c"],
            n_a=params.get("n_a", 0.0),
            n_c=params.get("n_c", 0.0),
        )
    if system == "chain":
        return chain_mod.reduce(build_chain_params(params))
    if system == "eom":
        return chain_mod.reduce(eom_to_chain(build_eom_params(params)))
    if system == "comm":
        return chain_mod.reduce(comm_to_chain(build_comm_params(params)))
    raise ConfigError(f"unknown system {system!r}")
