"""Seeded trial engine.

One trial samples a world (regular-node field plus per-node survival draws),
routes one packet corner to corner under both schemes, and replays every hop
with truncated-geometric retransmissions driven by the closed-form per-link
decode probability.  Sweeps aggregate trials into records holding the
simulated and closed-form metrics side by side; everything is a pure function
of (config, base seed).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields

import numpy as np
from scipy.spatial import cKDTree

from . import analytics, routing
from .analytics import HopDistances
from .config import RunConfig
from .geometry import RnField, SnPlacement, anchor_sn_distances, link_lengths, place_sns, sample_rn_field
from .routing import NNR, RN_RN, RN_SN, SWITCH, Route, RouteFailure
from .stargraph import StarGraph


@dataclass
class TrialOutcome:
    scheme: str
    delivered: bool
    hops: int
    attempts: int
    delay_us: float
    route_failed: bool = False


@dataclass
class SchemeAggregate:
    trials: int = 0
    route_failures: int = 0
    delivered: int = 0
    hop_sum: float = 0.0
    attempt_sum: float = 0.0
    delay_sum: float = 0.0
    delay_sq_sum: float = 0.0
    acc_sum: float = 0.0
    acc_count: int = 0

    def add(self, outcome: TrialOutcome) -> None:
        self.trials += 1
        if outcome.route_failed:
            self.route_failures += 1
            return
        self.hop_sum += outcome.hops
        self.attempt_sum += outcome.attempts
        if outcome.delivered:
            self.delivered += 1
            self.delay_sum += outcome.delay_us
            self.delay_sq_sum += outcome.delay_us**2

    @property
    def routed(self) -> int:
        return self.trials - self.route_failures

    @property
    def route_fail_frac(self) -> float:
        return self.route_failures / self.trials if self.trials else math.nan

    @property
    def delivered_frac(self) -> float:
        return self.delivered / self.routed if self.routed else math.nan

    @property
    def mean_hops(self) -> float:
        return self.hop_sum / self.routed if self.routed else math.nan

    @property
    def mean_attempts(self) -> float:
        return self.attempt_sum / self.routed if self.routed else math.nan

    @property
    def delay_mean(self) -> float:
        return self.delay_sum / self.delivered if self.delivered else math.nan

    @property
    def delay_std(self) -> float:
        if self.delivered < 2:
            return math.nan
        m = self.delay_mean
        var = max(self.delay_sq_sum / self.delivered - m * m, 0.0)
        return math.sqrt(var)

    @property
    def acc_mean(self) -> float:
        return self.acc_sum / self.acc_count if self.acc_count else math.nan


@dataclass
class MetricsRecord:
    """One sweep row: inputs plus closed-form and simulated outputs for one scheme."""

    scheme: str
    lambda_rn: float
    phi: float
    epsilon: float
    lambda_i: float
    sigma_z2: float
    alpha: float
    n: int
    k: int
    R: float
    delta: float
    trials: int
    seed: int
    asl_analytic: float
    acc_analytic: float
    rho_analytic: float
    re_analytic: float
    delay_analytic_us: float
    asl_sim: float = math.nan
    acc_sim: float = math.nan
    delivered_frac: float = math.nan
    delay_sim_mean_us: float = math.nan
    delay_sim_std_us: float = math.nan
    attempts_sim_mean: float = math.nan
    route_fail_frac: float = math.nan


METRICS_COLUMNS = [f.name for f in fields(MetricsRecord)]


def hop_channel(kind: str, channel: analytics.ChannelParams) -> tuple[float, float]:
    """(interferer density, transmit power dBm) seen by a hop of this kind."""
    if kind in (RN_RN, RN_SN):
        return channel.lambda_i, channel.p_rn
    return 0.0, channel.p_rn + 10 * math.log10(channel.epsilon)


def _simulate_route(
    route: Route,
    rng: np.random.Generator,
    config: RunConfig,
    rn_alive: np.ndarray,
    sn_alive: np.ndarray,
) -> TrialOutcome:
    """Replay a route hop by hop: per-hop truncated-geometric retransmissions
    capped at g_max + 1 attempts, receivers dead for the whole traversal when
    their survival draw failed."""
    channel = config.channel
    g1 = config.reliability.g_max + 1
    t1, t2 = config.delay.t1, config.delay.t2

    n_hops = route.hop_count
    rho = np.empty(n_hops)
    for i, hop in enumerate(route.hops):
        lam_i, p_dbm = hop_channel(hop.kind, channel)
        rho[i] = analytics.success_prob(hop.length, lam_i, p_dbm, channel)

    u = rng.random(n_hops)
    with np.errstate(divide="ignore"):
        q = 1.0 - rho
        sure = rho >= 1.0
        mid = ~sure & (rho > 0.0)
        draws = np.full(n_hops, np.inf)
        draws[sure] = 1.0
        draws[mid] = np.floor(np.log(u[mid]) / np.log(q[mid])) + 1.0
    success = draws <= g1
    attempts = np.minimum(draws, g1)

    for i, hop in enumerate(route.hops):
        if hop.rx is None:
            continue
        kind, idx = hop.rx
        alive = rn_alive[idx] if kind == "rn" else sn_alive[idx]
        if not alive:
            success[i] = False
            attempts[i] = g1

    delivered = bool(success.all())
    last = n_hops if delivered else int(np.argmin(success)) + 1
    used = attempts[:last]
    delay = float(used.sum() * t1 + (used - 1).sum() * t2)
    return TrialOutcome(
        scheme=route.scheme,
        delivered=delivered,
        hops=n_hops,
        attempts=int(used.sum()),
        delay_us=delay,
    )


def run_trial(
    config: RunConfig,
    trial_seed,
    placements: list[SnPlacement] | None = None,
    graph: StarGraph | None = None,
) -> tuple[TrialOutcome, TrialOutcome]:
    """Sample one world and evaluate both schemes in it.

    Returns (backbone outcome, greedy outcome).  Both schemes share the field
    and the per-node survival draws, so the pair is a matched comparison.
    """
    if graph is None:
        graph = StarGraph(config.deployment.spec)
    if placements is None:
        placements = place_sns(config.deployment)
    rng = np.random.default_rng(trial_seed)
    field = sample_rn_field(config.deployment, rng)
    rn_alive = rng.random(len(field.points)) < config.reliability.gamma_rn
    sn_alive = rng.random(len(graph)) < config.reliability.gamma_sn

    outcomes = {}
    for scheme in (SWITCH, NNR):
        try:
            if scheme == SWITCH:
                route = routing.switch_route(field, placements, graph, config.deployment.phi)
            else:
                route = routing.nnr_route(field.srn, field.drn, field, config.deployment.phi)
        except RouteFailure:
            outcomes[scheme] = TrialOutcome(
                scheme=scheme, delivered=False, hops=0, attempts=0, delay_us=0.0, route_failed=True
            )
            continue
        outcomes[scheme] = _simulate_route(route, rng, config, rn_alive, sn_alive)
    return outcomes[SWITCH], outcomes[NNR]


def measured_acc(
    field: RnField,
    radius: float,
    placements: list[SnPlacement] | None = None,
    graph: StarGraph | None = None,
) -> float:
    """Average clustering coefficient of the realized communication graph.

    Regular nodes within `radius` of each other are linked, as are super and
    regular nodes; super nodes link per the backbone graph.  Nodes with fewer
    than two neighbors carry no defined coefficient and are excluded from the
    average.
    """
    n_rn = len(field.points)
    tree = cKDTree(field.points)
    adj: list[set[int]] = [set() for _ in range(n_rn)]
    for a, b in tree.query_pairs(radius):
        adj[a].add(b)
        adj[b].add(a)

    if placements is not None and graph is not None:
        base = n_rn
        adj.extend(set() for _ in range(len(graph)))
        for i, p in enumerate(placements):
            for j in tree.query_ball_point(p.coords, radius):
                adj[base + i].add(j)
                adj[j].add(base + i)
        for i, nbrs in enumerate(graph.adjacency):
            for j in nbrs:
                adj[base + i].add(base + j)

    total = 0.0
    counted = 0
    for v, nbrs in enumerate(adj):
        b = len(nbrs)
        if b < 2:
            continue
        nb = sorted(nbrs)
        links = 0
        for ii in range(b):
            ai = adj[nb[ii]]
            for jj in range(ii + 1, b):
                if nb[jj] in ai:
                    links += 1
        total += 2 * links / (b * (b - 1))
        counted += 1
    return total / counted if counted else 0.0


def trial_seed(base_seed: int, point_index: int, trial_index: int) -> np.random.SeedSequence:
    """Derived, collision-free stream for one trial of one sweep point."""
    return np.random.SeedSequence((base_seed, point_index, trial_index))


def _analytic_record(config: RunConfig, graph: StarGraph, split, scheme: str, trials: int) -> MetricsRecord:
    dep = config.deployment
    channel = config.channel
    e_rn = analytics.expected_nn_distance(dep.lambda_rn, dep.phi)
    l_intra, l_inter = link_lengths(dep)
    dists = HopDistances(e_rn=e_rn, l_intra=l_intra, l_inter=l_inter)

    if scheme == SWITCH:
        l1, l2 = anchor_sn_distances(dep)
        counts = analytics.analytic_switch_counts(l1, l2, dep.lambda_rn, dep.phi, graph, split)
        asl = counts.total
        acc = analytics.acc_switch(
            dep.lambda_rn,
            dep.phi,
            dep.spec,
            analytics.measured_e_s(graph),
            m_r=dep.lambda_rn * (2 * dep.R) ** 2,
            n_sn=dep.spec.node_count,
        )
        rho = analytics.route_success_switch(counts, dists, channel)
        re = analytics.reliability_switch(counts, dists, channel, config.reliability, acc)
        delay = analytics.delay_switch(counts, dists, channel, config.delay)
    else:
        w = analytics.asl_nnr(dep.R, dep.lambda_rn, dep.phi)
        asl = w
        acc = analytics.acc_nnr(dep.lambda_rn, dep.phi)
        rho = analytics.route_success_nnr(w, dists, channel)
        re = analytics.reliability_nnr(w, dists, channel, config.reliability, acc)
        delay = analytics.delay_nnr(w, dists, channel, config.delay)

    return MetricsRecord(
        scheme=scheme,
        lambda_rn=dep.lambda_rn,
        phi=dep.phi,
        epsilon=channel.epsilon,
        lambda_i=channel.lambda_i,
        sigma_z2=channel.sigma_z2,
        alpha=channel.alpha,
        n=dep.spec.n,
        k=dep.spec.k,
        R=dep.R,
        delta=dep.delta,
        trials=trials,
        seed=config.base_seed,
        asl_analytic=asl,
        acc_analytic=acc,
        rho_analytic=rho,
        re_analytic=re,
        delay_analytic_us=delay,
    )


def run_experiment(
    config: RunConfig,
    grid: list[dict] | None = None,
    trials: int | None = None,
    acc_trials: int = 8,
) -> list[MetricsRecord]:
    """Evaluate every grid point: closed forms plus `trials` seeded trials.

    Each grid entry is a dict of config overrides; an empty grid means one
    point at the base config.  Trial t of point i draws from the stream
    derived from (base seed, i, t), so output is reproducible and points are
    independent.  The realized clustering coefficient is averaged over the
    first `acc_trials` worlds of each point.  Returns two records (one per
    scheme) per grid point.
    """
    if grid is None:
        grid = [{}]
    if trials is None:
        trials = config.trials

    graphs: dict[tuple[int, int], StarGraph] = {}
    splits: dict[tuple[int, int], tuple[float, float]] = {}
    records: list[MetricsRecord] = []
    for point_index, overrides in enumerate(grid):
        cfg = config.replace(**overrides) if overrides else config
        dep = cfg.deployment
        key = (dep.spec.n, dep.spec.k)
        if key not in graphs:
            graphs[key] = StarGraph(dep.spec)
            splits[key] = analytics.diameter_split(graphs[key])
        graph = graphs[key]
        placements = place_sns(dep)

        recs = {s: _analytic_record(cfg, graph, splits[key], s, trials) for s in (SWITCH, NNR)}

        if trials > 0:
            aggs = {SWITCH: SchemeAggregate(), NNR: SchemeAggregate()}
            e_rn = analytics.expected_nn_distance(dep.lambda_rn, dep.phi)
            for t in range(trials):
                seed = trial_seed(cfg.base_seed, point_index, t)
                sw, nn = run_trial(cfg, seed, placements=placements, graph=graph)
                aggs[SWITCH].add(sw)
                aggs[NNR].add(nn)
                if t < acc_trials:
                    world = np.random.default_rng(trial_seed(cfg.base_seed, point_index, t))
                    field = sample_rn_field(dep, world)
                    aggs[NNR].acc_sum += measured_acc(field, e_rn)
                    aggs[NNR].acc_count += 1
                    aggs[SWITCH].acc_sum += measured_acc(field, e_rn, placements, graph)
                    aggs[SWITCH].acc_count += 1
            for scheme, agg in aggs.items():
                rec = recs[scheme]
                rec.asl_sim = agg.mean_hops
                rec.acc_sim = agg.acc_mean
                rec.delivered_frac = agg.delivered_frac
                rec.delay_sim_mean_us = agg.delay_mean
                rec.delay_sim_std_us = agg.delay_std
                rec.attempts_sim_mean = agg.mean_attempts
                rec.route_fail_frac = agg.route_fail_frac

        records.extend(recs[s] for s in (SWITCH, NNR))
    return records
