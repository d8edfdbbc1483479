"""Run configuration: defaults, flat key=value files, and overrides.

Precedence is command-line overrides > config file > built-in defaults.
Angles are radians, powers dBm, densities nodes/m^2, times microseconds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .analytics import ChannelParams, DelayParams, ReliabilityParams
from .geometry import DeploymentConfig
from .stargraph import StarGraphSpec


class ConfigError(ValueError):
    """Unknown key, unparsable value, or out-of-range parameter."""


def _positive(v):
    return v > 0


def _nonnegative(v):
    return v >= 0


# key -> (type, default, validator, description)
KEY_SPECS: dict[str, tuple[type, object, object, str]] = {
    "n": (int, 4, lambda v: v >= 2, "star graph symbol count"),
    "k": (int, 2, _positive, "star graph label length"),
    "R": (float, 50.0, _positive, "deployment disk radius, m"),
    "delta": (float, 0.45, lambda v: 0 < v < 1, "sector disk scaling proportion"),
    "lambda_rn": (float, 0.2, _positive, "regular node density, nodes/m^2"),
    "phi": (float, math.pi / 3, lambda v: 0 < v <= math.pi, "forwarding sector angle, rad"),
    "p_rn": (float, 30.0, lambda v: True, "regular node transmit power, dBm"),
    "p_i": (float, 20.0, lambda v: True, "interferer transmit power, dBm"),
    "sigma_z2": (float, -55.0, lambda v: True, "noise power, dBm"),
    "alpha": (float, 3.0, lambda v: v > 2, "path loss exponent (> 2)"),
    "beta": (float, 0.0, lambda v: True, "SINR threshold, dB"),
    "epsilon": (float, 3.0, _positive, "super node power ratio P_SN / P_RN"),
    "lambda_i": (float, 2.5e-5, _nonnegative, "interferer density, nodes/m^2"),
    "g_max": (int, 8, _nonnegative, "max retransmissions per hop"),
    "varpi": (float, 1.0, _nonnegative, "transmit probability per unit clustering"),
    "a1": (float, 1.299e-7, _nonnegative, "super node failure rate"),
    "a2": (float, 5.299e-7, _nonnegative, "regular node failure rate"),
    "tau": (float, 8.0, _positive, "slots per time interval"),
    "t_s": (float, 200.0, _positive, "number of time intervals"),
    "t1": (float, 50.0, _positive, "forward transmission+processing delay, us"),
    "t2": (float, 10.0, _positive, "ACK/NACK delay, us"),
    "trials": (int, 1000, _positive, "Monte Carlo trials per sweep point"),
    "seed": (int, 1, lambda v: v >= 0, "base RNG seed"),
}


@dataclass(frozen=True)
class RunConfig:
    """One fully-resolved experiment configuration."""

    deployment: DeploymentConfig = field(default_factory=DeploymentConfig)
    channel: ChannelParams = field(default_factory=ChannelParams)
    reliability: ReliabilityParams = field(default_factory=ReliabilityParams)
    delay: DelayParams = field(default_factory=DelayParams)
    trials: int = 1000
    base_seed: int = 1
    out_path: str | None = None

    def values(self) -> dict:
        """Flatten back to the key=value vocabulary."""
        d = self.deployment
        c = self.channel
        r = self.reliability
        t = self.delay
        return {
            "n": d.spec.n,
            "k": d.spec.k,
            "R": d.R,
            "delta": d.delta,
            "lambda_rn": d.lambda_rn,
            "phi": d.phi,
            "p_rn": c.p_rn,
            "p_i": c.p_i,
            "sigma_z2": c.sigma_z2,
            "alpha": c.alpha,
            "beta": c.beta,
            "epsilon": c.epsilon,
            "lambda_i": c.lambda_i,
            "g_max": r.g_max,
            "varpi": r.varpi,
            "a1": r.a1,
            "a2": r.a2,
            "tau": r.tau,
            "t_s": r.t_s,
            "t1": t.t1,
            "t2": t.t2,
            "trials": self.trials,
            "seed": self.base_seed,
        }

    def replace(self, **overrides) -> "RunConfig":
        vals = self.values()
        for key, value in overrides.items():
            if key not in vals:
                raise ConfigError(f"unknown config key '{key}'")
            vals[key] = value
        return config_from_values(vals, out_path=self.out_path)


def _coerce(key: str, raw) -> object:
    typ, _, check, _ = KEY_SPECS[key]
    try:
        value = typ(raw)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"config key '{key}': cannot parse {raw!r} as {typ.__name__}") from exc
    if not check(value):
        raise ConfigError(f"config key '{key}': value {value!r} out of range ({KEY_SPECS[key][3]})")
    return value


def config_from_values(values: dict, out_path: str | None = None) -> RunConfig:
    vals = {key: spec[1] for key, spec in KEY_SPECS.items()}
    for key, raw in values.items():
        if key not in KEY_SPECS:
            raise ConfigError(f"unknown config key '{key}'")
        vals[key] = _coerce(key, raw)
    if not (1 <= vals["k"] <= vals["n"] - 1):
        raise ConfigError(f"config key 'k': need 1 <= k <= n-1, got n={vals['n']}, k={vals['k']}")
    deployment = DeploymentConfig(
        R=vals["R"],
        delta=vals["delta"],
        spec=StarGraphSpec(vals["n"], vals["k"]),
        lambda_rn=vals["lambda_rn"],
        phi=vals["phi"],
        seed=vals["seed"],
    )
    channel = ChannelParams(
        p_rn=vals["p_rn"],
        epsilon=vals["epsilon"],
        p_i=vals["p_i"],
        sigma_z2=vals["sigma_z2"],
        alpha=vals["alpha"],
        beta=vals["beta"],
        lambda_i=vals["lambda_i"],
    )
    reliability = ReliabilityParams(
        g_max=vals["g_max"],
        varpi=vals["varpi"],
        a1=vals["a1"],
        a2=vals["a2"],
        tau=vals["tau"],
        t_s=vals["t_s"],
    )
    delay = DelayParams(t1=vals["t1"], t2=vals["t2"])
    return RunConfig(
        deployment=deployment,
        channel=channel,
        reliability=reliability,
        delay=delay,
        trials=vals["trials"],
        base_seed=vals["seed"],
        out_path=out_path,
    )


def parse_config_file(path) -> dict:
    """Flat `key = value` lines; '#' starts a comment; blank lines ignored."""
    values = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.split("#", 1)[0].strip()
            if not text:
                continue
            if "=" not in text:
                raise ConfigError(f"{path}:{lineno}: expected key=value, got {line.strip()!r}")
            key, raw = (part.strip() for part in text.split("=", 1))
            if key not in KEY_SPECS:
                raise ConfigError(f"{path}:{lineno}: unknown config key '{key}'")
            values[key] = raw
    return values


def load_config(path=None, overrides: dict | None = None, out_path: str | None = None) -> RunConfig:
    """Resolve a configuration: overrides > file > defaults."""
    values: dict = {}
    if path is not None:
        values.update(parse_config_file(path))
    if overrides:
        for key, value in overrides.items():
            if key not in KEY_SPECS:
                raise ConfigError(f"unknown config key '{key}'")
            if value is not None:
                values[key] = value
    return config_from_values(values, out_path=out_path)


def default_config() -> RunConfig:
    return RunConfig()
