"""Small-world IoT routing toolkit: (n,k)-star backbones, greedy forwarding,
closed-form performance models, and a seeded Monte Carlo engine."""

from .analytics import ChannelParams, DelayParams, HopDistances, ReliabilityParams, SwitchHopCounts
from .config import RunConfig, default_config, load_config
from .geometry import DeploymentConfig, RnField, SnPlacement
from .kernels import BACKEND
from .montecarlo import MetricsRecord, TrialOutcome, measured_acc, run_experiment, run_trial
from .routing import NNR, SWITCH, Hop, Route, RouteFailure, nnr_route, scheme_select, switch_route
from .stargraph import StarGraph, StarGraphSpec, diameter_formula, shortest_path

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ChannelParams",
    "DelayParams",
    "DeploymentConfig",
    "Hop",
    "HopDistances",
    "MetricsRecord",
    "NNR",
    "ReliabilityParams",
    "RnField",
    "Route",
    "RouteFailure",
    "RunConfig",
    "SWITCH",
    "SnPlacement",
    "StarGraph",
    "StarGraphSpec",
    "SwitchHopCounts",
    "TrialOutcome",
    "default_config",
    "diameter_formula",
    "load_config",
    "measured_acc",
    "nnr_route",
    "run_experiment",
    "run_trial",
    "scheme_select",
    "shortest_path",
    "switch_route",
]
