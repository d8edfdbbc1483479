"""Trial engine: seeded worlds, retransmission draws, aggregation."""

import math
from dataclasses import asdict

import numpy as np
import pytest

from switchsim import montecarlo as mc
from switchsim import routing
from switchsim.config import RunConfig, config_from_values
from switchsim.geometry import RnField, place_sns
from switchsim.montecarlo import SchemeAggregate, measured_acc, run_experiment, run_trial
from switchsim.routing import NNR, RN_RN, SWITCH, Hop, Route, RouteFailure
from switchsim.stargraph import StarGraph


def cfg(**kw) -> RunConfig:
    values = {"lambda_rn": 0.1, "seed": 3}
    values.update(kw)
    return config_from_values(values)


def single_hop_route(length: float) -> Route:
    return Route(scheme=NNR, hops=[Hop((0.0, 0.0), (length, 0.0), RN_RN, length, ("rn", 0))])


def test_run_trial_deterministic():
    config = cfg()
    a = run_trial(config, 42)
    b = run_trial(config, 42)
    assert a == b
    c = run_trial(config, 43)
    assert c != a


def test_run_trial_perfect_conditions():
    # no noise, no interference, immortal nodes: every hop takes one attempt
    config = cfg(sigma_z2=-400.0, lambda_i=0.0, a1=0.0, a2=0.0)
    sw, nn = run_trial(config, 7)
    for outcome in (sw, nn):
        assert outcome.delivered
        assert outcome.attempts == outcome.hops
        assert outcome.delay_us == pytest.approx(outcome.hops * config.delay.t1)
    assert sw.scheme == SWITCH and nn.scheme == NNR
    assert sw.hops < nn.hops


def test_delivered_outcome_invariants():
    # under the default (noisy) channel: attempts never fall below hops and
    # accrued delay never falls below hops * t1
    config = cfg(lambda_rn=0.2)
    for t in range(25):
        for outcome in run_trial(config, mc.trial_seed(5, 0, t)):
            if outcome.delivered:
                assert outcome.attempts >= outcome.hops
                assert outcome.delay_us >= outcome.hops * config.delay.t1 - 1e-9


def test_simulate_route_zero_success_exhausts_budget():
    # noise so strong the hop can never decode: budget burned, not delivered
    config = cfg(sigma_z2=100.0, lambda_i=0.0)
    rng = np.random.default_rng(0)
    out = mc._simulate_route(single_hop_route(5.0), rng, config, np.ones(1, bool), np.ones(0, bool))
    g1 = config.reliability.g_max + 1
    assert not out.delivered
    assert out.attempts == g1
    assert out.delay_us == pytest.approx(g1 * config.delay.t1 + (g1 - 1) * config.delay.t2)


def test_simulate_route_dead_receiver_fails():
    config = cfg(sigma_z2=-400.0, lambda_i=0.0)
    rng = np.random.default_rng(0)
    out = mc._simulate_route(single_hop_route(5.0), rng, config, np.zeros(1, bool), np.ones(0, bool))
    assert not out.delivered
    assert out.attempts == config.reliability.g_max + 1


def test_truncated_geometric_matches_budget_bound():
    # single hop at a distance giving rho ~= 0.30: the delivered fraction must
    # match the closed-form budget bound 1 - (1-rho)^(G+1)
    config = cfg(lambda_i=0.0)
    d = 724.3
    rho = math.exp(-(10**-8.5) * d**3)
    assert 0.29 < rho < 0.31
    route = single_hop_route(d)
    rng = np.random.default_rng(2024)
    n = 50_000
    delivered = sum(
        mc._simulate_route(route, rng, config, np.ones(1, bool), np.ones(0, bool)).delivered
        for _ in range(n)
    )
    p = 1 - (1 - rho) ** (config.reliability.g_max + 1)
    se = math.sqrt(p * (1 - p) / n)
    assert abs(delivered / n - p) < 3 * se


def test_attempts_mean_tracks_geometric_mean():
    # rho ~= 0.8: mean attempts over delivered trials approaches 1/rho
    config = cfg(lambda_i=0.0)
    d = 412.0
    rho = math.exp(-(10**-8.5) * d**3)
    assert 0.79 < rho < 0.82
    route = single_hop_route(d)
    rng = np.random.default_rng(11)
    outs = [mc._simulate_route(route, rng, config, np.ones(1, bool), np.ones(0, bool)) for _ in range(20_000)]
    mean_attempts = np.mean([o.attempts for o in outs if o.delivered])
    assert mean_attempts == pytest.approx(1 / rho, rel=0.02)


# --- measured clustering ------------------------------------------------------


def far_field(points) -> RnField:
    pts = np.vstack([np.asarray(points, dtype=float), [[1000.0, 1000.0], [1100.0, 1100.0]]])
    return RnField(points=pts, srn=pts[-2], drn=pts[-1])


def test_measured_acc_triangle():
    field = far_field([[0.0, 0.0], [0.5, 0.0], [0.25, 0.4]])
    assert measured_acc(field, radius=1.0) == pytest.approx(1.0)


def test_measured_acc_star_is_zero():
    center = [0.0, 0.0]
    leaves = [[0.9 * math.cos(a), 0.9 * math.sin(a)] for a in (0, 2 * math.pi / 3, 4 * math.pi / 3)]
    field = far_field([center] + leaves)
    assert measured_acc(field, radius=1.0) == pytest.approx(0.0)


def test_measured_acc_includes_backbone():
    config = cfg(lambda_rn=0.2)
    graph = StarGraph(config.deployment.spec)
    placements = place_sns(config.deployment)
    rng = np.random.default_rng(5)
    from switchsim.geometry import sample_rn_field

    field = sample_rn_field(config.deployment, rng)
    radius = math.sqrt(math.pi / (2 * 0.2 * config.deployment.phi))
    rgg_only = measured_acc(field, radius)
    mixed = measured_acc(field, radius, placements, graph)
    assert 0.0 < mixed < 1.0
    assert mixed != rgg_only


# --- experiments ---------------------------------------------------------------


def test_run_experiment_single_point():
    config = cfg(trials=1)
    records = run_experiment(config, None, trials=1, acc_trials=1)
    assert len(records) == 2
    assert {r.scheme for r in records} == {SWITCH, NNR}
    for r in records:
        assert r.trials == 1
        assert not math.isnan(r.asl_sim)
        assert not math.isnan(r.acc_sim)


def test_run_experiment_deterministic():
    config = cfg()
    grid = [{"lambda_rn": 0.05}, {"lambda_rn": 0.1}]
    a = run_experiment(config, grid, trials=3, acc_trials=1)
    b = run_experiment(config, grid, trials=3, acc_trials=1)
    assert [asdict(r) for r in a] == [asdict(r) for r in b]


def test_run_experiment_route_failure_flagged(monkeypatch):
    def always_fails(*args, **kwargs):
        raise RouteFailure("forced")

    monkeypatch.setattr(routing, "switch_route", always_fails)
    config = cfg()
    records = run_experiment(config, None, trials=4, acc_trials=0)
    sw = next(r for r in records if r.scheme == SWITCH)
    nn = next(r for r in records if r.scheme == NNR)
    assert sw.route_fail_frac == 1.0
    assert math.isnan(sw.delivered_frac)
    assert math.isnan(sw.asl_sim)
    assert nn.route_fail_frac == 0.0
    assert not math.isnan(nn.asl_sim)


def test_scheme_aggregate_counters():
    agg = SchemeAggregate()
    agg.add(mc.TrialOutcome(scheme=SWITCH, delivered=True, hops=5, attempts=6, delay_us=310.0))
    agg.add(mc.TrialOutcome(scheme=SWITCH, delivered=False, hops=5, attempts=9, delay_us=200.0))
    agg.add(mc.TrialOutcome(scheme=SWITCH, delivered=False, hops=0, attempts=0, delay_us=0.0, route_failed=True))
    assert agg.trials == 3
    assert agg.routed == 2
    assert agg.delivered_frac == 0.5
    assert agg.route_fail_frac == pytest.approx(1 / 3)
    assert agg.mean_hops == 5.0
    assert agg.delay_mean == 310.0


def test_trial_seed_streams_distinct():
    seeds = {tuple(mc.trial_seed(1, i, t).entropy) for i in range(3) for t in range(3)}
    assert len(seeds) == 9
