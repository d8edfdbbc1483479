"""Canned sweeps behind the `figure` CLI subcommand.

Each experiment writes one wide-format CSV: an x column followed by one
column per plotted series.  Sweeps over the node density resample worlds per
trial and tie the interferer density to lambda_rn / 8000; power-ratio and
noise sweeps are closed-form only.
"""

from __future__ import annotations

import math
from dataclasses import replace


from . import analytics
from .analytics import HopDistances, SwitchHopCounts
from .config import RunConfig
from .geometry import anchor_sn_distances, link_lengths, place_sns, sample_rn_field, write_deployment_csv
from .montecarlo import run_experiment
from .routing import NNR, SWITCH
from .stargraph import StarGraph, diameter_formula, write_edge_list

LAMBDA_GRID = [round(0.05 * i, 2) for i in range(1, 9)]
ASL_GRID = list(range(5, 61, 5))
EPSILON_GRID = [round(0.5 + 0.25 * i, 2) for i in range(19)]
ACC_GRID = [round(0.05 * i, 2) for i in range(1, 21)]
PHI_SET = [math.pi / 3, math.pi / 2]
PHI_TAGS = ["phi_pi3", "phi_pi2"]
LAMBDA_I_DIVISORS = [16000, 8000, 4000]
SIGMA_SET = [-55.0, -50.0, -45.0]
ASL_SET = [10, 20, 30]

FIGURE_NAMES = [f"fig{i}" for i in range(4, 12)]

# trial counts chosen per experiment: density sweeps need sampled routes,
# model-input sweeps are closed-form only
DEFAULT_TRIALS = {"fig4": 30, "fig5": 200, "fig10": 1000, "fig11": 1000}


def fmt(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_csv(path, header: list[str], rows: list[list]) -> None:
    with open(path, "w") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(fmt(v) for v in row) + "\n")


def _density_grid(config: RunConfig, phis: list[float] | None = None) -> list[dict]:
    """Cross of the density grid with the requested sector angles, interferer
    density tied to lambda_rn / 8000."""
    phis = phis if phis is not None else [config.deployment.phi]
    return [
        {"lambda_rn": lam, "phi": phi, "lambda_i": lam / 8000}
        for phi in phis
        for lam in LAMBDA_GRID
    ]


def _base_pieces(config: RunConfig):
    graph = StarGraph(config.deployment.spec)
    split = analytics.diameter_split(graph)
    dep = config.deployment
    l_intra, l_inter = link_lengths(dep)
    e_rn = analytics.expected_nn_distance(dep.lambda_rn, dep.phi)
    dists = HopDistances(e_rn=e_rn, l_intra=l_intra, l_inter=l_inter)
    l1, l2 = anchor_sn_distances(dep)
    return graph, split, dists, l1, l2


def _counts_for_asl(asl: float, graph: StarGraph, split) -> SwitchHopCounts:
    """Backbone hop counts consistent with a prescribed total hop count."""
    d = diameter_formula(graph.spec)
    legs = max(asl - d, 1.0)
    return SwitchHopCounts(w1=legs / 2, w2=legs / 2, c1=split[0], c2=split[1])


def fig4_rows(config: RunConfig, trials: int):
    header = ["lambda_rn", "acc_nnr_analytic", "acc_switch_analytic", "acc_nnr_sim", "acc_switch_sim"]
    records = run_experiment(config, _density_grid(config), trials=trials, acc_trials=trials)
    rows = []
    for i, lam in enumerate(LAMBDA_GRID):
        sw, nn = records[2 * i], records[2 * i + 1]
        rows.append([lam, nn.acc_analytic, sw.acc_analytic, nn.acc_sim, sw.acc_sim])
    return header, rows


def fig5_rows(config: RunConfig, trials: int):
    header = ["lambda_rn", "asl_nnr_analytic", "asl_switch_analytic", "asl_nnr_sim", "asl_switch_sim"]
    records = run_experiment(config, _density_grid(config), trials=trials, acc_trials=0)
    rows = []
    for i, lam in enumerate(LAMBDA_GRID):
        sw, nn = records[2 * i], records[2 * i + 1]
        rows.append([lam, nn.asl_analytic, sw.asl_analytic, nn.asl_sim, sw.asl_sim])
    return header, rows


def fig6_rows(config: RunConfig, trials=None):
    graph, split, dists, l1, l2 = _base_pieces(config)
    dep = config.deployment
    counts = analytics.analytic_switch_counts(l1, l2, dep.lambda_rn, dep.phi, graph, split)
    header = ["epsilon"] + [f"rho_switch_li_{d}" for d in LAMBDA_I_DIVISORS]
    rows = []
    for eps in EPSILON_GRID:
        row = [eps]
        for div in LAMBDA_I_DIVISORS:
            channel = replace(config.channel, epsilon=eps, lambda_i=dep.lambda_rn / div)
            row.append(analytics.route_success_switch(counts, dists, channel))
        rows.append(row)
    return header, rows


def fig7_rows(config: RunConfig, trials=None):
    graph, split, dists, _, _ = _base_pieces(config)
    dep = config.deployment
    header = (
        ["asl"]
        + [f"rho_switch_li_{d}" for d in LAMBDA_I_DIVISORS]
        + [f"rho_nnr_li_{d}" for d in LAMBDA_I_DIVISORS]
    )
    rows = []
    for asl in ASL_GRID:
        counts = _counts_for_asl(asl, graph, split)
        row = [asl]
        for div in LAMBDA_I_DIVISORS:
            channel = replace(config.channel, lambda_i=dep.lambda_rn / div)
            row.append(analytics.route_success_switch(counts, dists, channel))
        for div in LAMBDA_I_DIVISORS:
            channel = replace(config.channel, lambda_i=dep.lambda_rn / div)
            row.append(analytics.route_success_nnr(float(asl), dists, channel))
        rows.append(row)
    return header, rows


def fig8_rows(config: RunConfig, trials=None):
    graph, split, dists, _, _ = _base_pieces(config)
    dep = config.deployment
    header = ["asl"] + [f"delay_switch_us_sz_{int(abs(s))}dbm" for s in SIGMA_SET]
    rows = []
    for asl in ASL_GRID:
        counts = _counts_for_asl(asl, graph, split)
        row = [asl]
        for sigma in SIGMA_SET:
            channel = replace(config.channel, sigma_z2=sigma, lambda_i=dep.lambda_rn / 8000)
            row.append(analytics.delay_switch(counts, dists, channel, config.delay))
        rows.append(row)
    return header, rows


def fig9_rows(config: RunConfig, trials=None):
    graph, split, dists, _, _ = _base_pieces(config)
    dep = config.deployment
    channel = replace(config.channel, lambda_i=dep.lambda_rn / 8000)
    header = ["acc"] + [f"re_switch_asl{a}" for a in ASL_SET]
    rows = []
    for acc in ACC_GRID:
        row = [acc]
        for asl in ASL_SET:
            counts = _counts_for_asl(asl, graph, split)
            row.append(analytics.reliability_switch(counts, dists, channel, config.reliability, acc))
        rows.append(row)
    return header, rows


def density_phi_records(config: RunConfig, trials: int):
    """Shared sweep for the density-vs-angle comparisons: one record pair per
    (phi, lambda_rn) point, in grid order."""
    return run_experiment(config, _density_grid(config, PHI_SET), trials=trials, acc_trials=0)


def _pivot_density_phi(records, value):
    """Rows lambda_rn, then per-phi SWITCH/NNR columns of `value(record)`."""
    rows = []
    for i, lam in enumerate(LAMBDA_GRID):
        row = [lam]
        for p in range(len(PHI_SET)):
            base = 2 * (p * len(LAMBDA_GRID) + i)
            sw, nn = records[base], records[base + 1]
            row.extend([value(sw), value(nn)])
        rows.append(row)
    return rows


def fig10_rows(config: RunConfig, trials: int, records=None):
    if records is None:
        records = density_phi_records(config, trials)
    header = ["lambda_rn"]
    for tag in PHI_TAGS:
        header += [f"re_switch_sim_{tag}", f"re_nnr_sim_{tag}"]
    for tag in PHI_TAGS:
        header += [f"re_switch_analytic_{tag}", f"re_nnr_analytic_{tag}"]
    sim = _pivot_density_phi(records, lambda r: r.delivered_frac)
    ana = _pivot_density_phi(records, lambda r: r.re_analytic)
    rows = [s + a[1:] for s, a in zip(sim, ana)]
    return header, rows


def max_delay_reduction_pct(records) -> float:
    """Reduction of the worst-case delay when switching off the greedy-only
    scheme, in percent, taken over the whole density/angle grid."""
    sim_n = [r.delay_sim_mean_us for r in records if r.scheme == NNR]
    sim_s = [r.delay_sim_mean_us for r in records if r.scheme == SWITCH]
    if any(math.isnan(v) for v in sim_n + sim_s):
        sim_n = [r.delay_analytic_us for r in records if r.scheme == NNR]
        sim_s = [r.delay_analytic_us for r in records if r.scheme == SWITCH]
    return 100.0 * (1.0 - max(sim_s) / max(sim_n))


def fig11_rows(config: RunConfig, trials: int, records=None):
    if records is None:
        records = density_phi_records(config, trials)
    header = ["lambda_rn"]
    for tag in PHI_TAGS:
        header += [f"delay_switch_sim_us_{tag}", f"delay_nnr_sim_us_{tag}"]
    for tag in PHI_TAGS:
        header += [f"delay_switch_analytic_us_{tag}", f"delay_nnr_analytic_us_{tag}"]
    header.append("max_delay_reduction_pct")
    sim = _pivot_density_phi(records, lambda r: r.delay_sim_mean_us)
    ana = _pivot_density_phi(records, lambda r: r.delay_analytic_us)
    reduction = max_delay_reduction_pct(records)
    rows = [s + a[1:] + [reduction] for s, a in zip(sim, ana)]
    return header, rows


FIGURE_BUILDERS = {
    "fig4": fig4_rows,
    "fig5": fig5_rows,
    "fig6": fig6_rows,
    "fig7": fig7_rows,
    "fig8": fig8_rows,
    "fig9": fig9_rows,
    "fig10": fig10_rows,
    "fig11": fig11_rows,
}


def figure_experiment(name: str, config: RunConfig, out_path, trials: int | None = None) -> str:
    """Run one canned experiment and write its CSV; returns the path written."""
    if name not in FIGURE_BUILDERS:
        raise ValueError(f"unknown figure name '{name}' (expected one of {', '.join(FIGURE_NAMES)})")
    if trials is None:
        trials = DEFAULT_TRIALS.get(name, 0)
    header, rows = FIGURE_BUILDERS[name](config, trials)
    write_csv(out_path, header, rows)
    return str(out_path)


def topology_experiment(config: RunConfig, out_path) -> tuple[str, str]:
    """Write the deployment CSV plus the backbone edge list next to it."""
    placements = place_sns(config.deployment)
    field = sample_rn_field(config.deployment)
    write_deployment_csv(out_path, placements, field)
    out = str(out_path)
    edges_path = (out[:-4] if out.endswith(".csv") else out) + "_edges.csv"
    write_edge_list(StarGraph(config.deployment.spec), edges_path)
    return out, edges_path
