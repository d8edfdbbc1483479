"""Closed-form performance models.

Covers the hop-count model (average shortest-path length), the clustering
coefficient of the random geometric layer and of the combined network, the
per-link decode probability under Rayleigh fading with Poisson interferers,
and the end-to-end retransmission-aware reliability and delay expressions for
both the backbone scheme (SWITCH) and plain greedy forwarding (NNR).

Powers enter in dBm and are converted to linear milliwatts at this module's
boundary; every formula below operates on linear quantities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import integrate, special

from .stargraph import StarGraph, StarGraphSpec, diameter_formula, neighbors


class ModelError(ValueError):
    """Parameters outside the validity range of a closed-form expression."""


def dbm_to_mw(value_dbm: float) -> float:
    return 10.0 ** (value_dbm / 10.0)


def db_to_linear(value_db: float) -> float:
    return 10.0 ** (value_db / 10.0)


@dataclass(frozen=True)
class ChannelParams:
    """Radio parameters; powers in dBm, beta in dB, densities in nodes/m^2."""

    p_rn: float = 30.0
    epsilon: float = 3.0
    p_i: float = 20.0
    sigma_z2: float = -55.0
    alpha: float = 3.0
    beta: float = 0.0
    lambda_i: float = 2.5e-5

    def __post_init__(self):
        if self.alpha <= 2:
            raise ModelError(f"alpha must exceed 2 (got {self.alpha}): interference moment diverges")
        if self.epsilon <= 0:
            raise ModelError(f"epsilon must be positive, got {self.epsilon}")
        if self.lambda_i < 0:
            raise ModelError(f"lambda_i must be nonnegative, got {self.lambda_i}")

    @property
    def p_rn_mw(self) -> float:
        return dbm_to_mw(self.p_rn)

    @property
    def p_sn_mw(self) -> float:
        return self.epsilon * dbm_to_mw(self.p_rn)

    @property
    def p_i_mw(self) -> float:
        return dbm_to_mw(self.p_i)

    @property
    def noise_mw(self) -> float:
        return dbm_to_mw(self.sigma_z2)

    @property
    def beta_lin(self) -> float:
        return db_to_linear(self.beta)


@dataclass(frozen=True)
class ReliabilityParams:
    """Retransmission budget and node-failure model."""

    g_max: int = 8
    varpi: float = 1.0
    a1: float = 1.299e-7
    a2: float = 5.299e-7
    tau: float = 8.0
    t_s: float = 200.0

    def __post_init__(self):
        if self.g_max < 0:
            raise ModelError(f"g_max must be nonnegative, got {self.g_max}")
        if self.a1 < 0 or self.a2 < 0:
            raise ModelError("failure rates must be nonnegative")

    @property
    def gamma_sn(self) -> float:
        """Probability a super node survives the whole observation window."""
        return math.exp(-self.a1 * self.tau * self.t_s)

    @property
    def gamma_rn(self) -> float:
        """Probability a regular node survives the whole observation window."""
        return math.exp(-self.a2 * self.tau * self.t_s)


@dataclass(frozen=True)
class DelayParams:
    """Per-attempt forward delay and feedback delay, microseconds."""

    t1: float = 50.0
    t2: float = 10.0

    def __post_init__(self):
        if self.t1 <= 0 or self.t2 <= 0:
            raise ModelError("t1 and t2 must be positive")


@dataclass(frozen=True)
class SwitchHopCounts:
    """Hop counts of a backbone route: leg hops w1/w2 and backbone hops c1/c2.

    Real-valued so that closed-form expectations can be used as exponents.
    """

    w1: float
    w2: float
    c1: float
    c2: float

    @property
    def total(self) -> float:
        return self.w1 + self.w2 + self.c1 + self.c2


@dataclass(frozen=True)
class HopDistances:
    """Representative per-kind hop lengths (meters)."""

    e_rn: float
    l_intra: float
    l_inter: float


def expected_nn_distance(lambda_rn: float, phi: float) -> float:
    """Mean distance to the nearest point of a Poisson field inside a sector
    of angle phi: sqrt(pi / (2 lambda phi))."""
    if lambda_rn <= 0 or phi <= 0:
        raise ModelError("lambda_rn and phi must be positive")
    return math.sqrt(math.pi / (2 * lambda_rn * phi))


def path_efficiency(phi: float) -> float:
    """Mean straight-line progress per unit traveled, (2/phi) sin(phi/2)."""
    if not (0 < phi <= math.pi):
        raise ModelError(f"phi must lie in (0, pi], got {phi}")
    return (2 / phi) * math.sin(phi / 2)


def expected_progress(lambda_rn: float, phi: float) -> float:
    return expected_nn_distance(lambda_rn, phi) * path_efficiency(phi)


def asl_nnr(R: float, lambda_rn: float, phi: float) -> float:
    """Expected hop count corner to corner (distance 2 sqrt(2) R)."""
    return 2 * math.sqrt(2) * R / expected_progress(lambda_rn, phi)


def leg_hops(distance: float, lambda_rn: float, phi: float) -> float:
    """Expected greedy hop count to cover a straight-line distance."""
    return distance / expected_progress(lambda_rn, phi)


def asl_switch(l1: float, l2: float, lambda_rn: float, phi: float, spec: StarGraphSpec) -> float:
    """Expected total hops: both greedy legs plus the backbone diameter."""
    return leg_hops(l1, lambda_rn, phi) + leg_hops(l2, lambda_rn, phi) + diameter_formula(spec)


# --- clustering -----------------------------------------------------------


def _lens_fraction(x: float, e: float) -> float:
    """Fraction of a disk of radius e covered by its overlap with an equal
    disk whose center is x away."""
    return (2 / math.pi) * math.acos(x / (2 * e)) - x * math.sqrt(4 * e * e - x * x) / (2 * math.pi * e * e)


@lru_cache(maxsize=None)
def _lens_integral() -> float:
    # scale-free: integrate the lens fraction against the neighbor-distance
    # density 2u du on [0, 1] (u = distance / radius)
    val, _ = integrate.quad(lambda u: _lens_fraction(u, 1.0) * 2 * u, 0.0, 1.0, epsabs=1e-10, epsrel=1e-10)
    return val


def acc_nnr(lambda_rn: float, phi: float) -> float:
    """Average clustering coefficient of the geometric layer alone.

    Evaluated by adaptive quadrature of the lens-overlap probability over the
    neighbor-distance density on [0, E(r)]; the result is independent of
    lambda_rn and phi (the radius scales out) and equals 1 - 3 sqrt(3)/(4 pi).
    """
    e = expected_nn_distance(lambda_rn, phi)
    val, _ = integrate.quad(
        lambda x: _lens_fraction(x, e) * 2 * x / (e * e), 0.0, e, epsabs=1e-8, epsrel=1e-10
    )
    return val


def mean_neighbor_count(phi: float) -> float:
    """Expected geometric-layer degree lambda pi E(r)^2 = pi^2 / (2 phi)."""
    return math.pi**2 / (2 * phi)


def acc_switch(
    lambda_rn: float,
    phi: float,
    spec: StarGraphSpec,
    e_s: float,
    m_r: float,
    n_sn: int,
) -> float:
    """Average clustering coefficient with super nodes mixed in.

    m_r is the (expected) regular-node population, n_sn the super-node count,
    e_s the average number of links among a super node's backbone neighbors.
    """
    b_r = mean_neighbor_count(phi)
    if b_r < 1:
        raise ModelError(f"mean neighbor count {b_r:.3f} < 1: clustering model degenerate")
    c_nnr = acc_nnr(lambda_rn, phi)
    delta_r = b_r * (b_r - 1) / 2 * _lens_integral()
    n = spec.n
    mixed = 2 * n_sn * (delta_r + e_s) / ((b_r + n - 1) * (b_r + n - 2) * (m_r + n_sn))
    return m_r * c_nnr / (m_r + n_sn) + mixed


def measured_e_s(graph: StarGraph) -> float:
    """Average number of edges among each node's backbone neighborhood."""
    spec = graph.spec
    total = 0
    for lab in graph.nodes:
        nbr = neighbors(spec, lab)
        nbr_sets = [set(neighbors(spec, x)) for x in nbr]
        cnt = 0
        for i in range(len(nbr)):
            for j in range(i + 1, len(nbr)):
                if nbr[j] in nbr_sets[i]:
                    cnt += 1
        total += cnt
    return total / len(graph.nodes)


# --- link success ---------------------------------------------------------


def q_alpha(alpha: float) -> float:
    """Interference shape constant pi Gamma(1 + 2/alpha) Gamma(1 - 2/alpha)."""
    if alpha <= 2:
        raise ModelError(f"alpha must exceed 2, got {alpha}")
    return math.pi * special.gamma(1 + 2 / alpha) * special.gamma(1 - 2 / alpha)


def success_prob(d, lambda_i: float, p_tx_dbm: float, channel: ChannelParams):
    """Probability the receiver decodes a transmission over distance d.

    Rayleigh fading, noise power and a Poisson field of interferers of
    density lambda_i integrated out in closed form:
    exp(-beta d^alpha sigma^2 / P - lambda_i q_alpha (P_I beta / P)^(2/alpha) d^2).
    Accepts scalar or ndarray d.
    """
    p_tx = dbm_to_mw(p_tx_dbm)
    a = channel.alpha
    beta = channel.beta_lin
    d = np.asarray(d, dtype=float)
    noise_term = beta * d**a * channel.noise_mw / p_tx
    if lambda_i > 0:
        interf_term = lambda_i * q_alpha(a) * (channel.p_i_mw * beta / p_tx) ** (2 / a) * d**2
    else:
        interf_term = 0.0
    out = np.exp(-noise_term - interf_term)
    return float(out) if out.ndim == 0 else out


def rn_hop_success(dists: HopDistances, channel: ChannelParams) -> float:
    """Decode probability of one interference-exposed regular-node hop."""
    return success_prob(dists.e_rn, channel.lambda_i, channel.p_rn, channel)


def sn_hop_success(d: float, channel: ChannelParams) -> float:
    """Decode probability over an orthogonal super-node channel (no interference)."""
    p_sn_dbm = channel.p_rn + 10 * math.log10(channel.epsilon)
    return success_prob(d, 0.0, p_sn_dbm, channel)


def route_success_switch(counts: SwitchHopCounts, dists: HopDistances, channel: ChannelParams) -> float:
    """End-to-end decode probability of a backbone route: w1 + w2 - 1
    interference-exposed hops, one boosted SN->RN hop, and the backbone hops."""
    rho_rn = rn_hop_success(dists, channel)
    return (
        rho_rn ** (counts.w1 + counts.w2 - 1)
        * sn_hop_success(dists.e_rn, channel)
        * sn_hop_success(dists.l_intra, channel) ** counts.c1
        * sn_hop_success(dists.l_inter, channel) ** counts.c2
    )


def route_success_nnr(w_nnr: float, dists: HopDistances, channel: ChannelParams) -> float:
    return rn_hop_success(dists, channel) ** w_nnr


# --- reliability ----------------------------------------------------------


def transmit_probability(varpi: float, acc: float) -> float:
    """Channel-access probability, proportional to clustering, clamped to [0, 1]."""
    return min(max(varpi * acc, 0.0), 1.0)


def ps_max(rho: float, ell: float, g_max: int) -> float:
    """Upper bound on per-hop decode success within g_max retransmissions
    when each attempt happens with probability ell and succeeds with rho."""
    q = 1.0 - rho
    return 1.0 - (ell * q + 1.0 - ell) ** (g_max + 1)


def reliability_switch(
    counts: SwitchHopCounts,
    dists: HopDistances,
    channel: ChannelParams,
    rel: ReliabilityParams,
    acc: float,
) -> float:
    """End-to-end reliability of a backbone route: per-hop capped decode
    bounds combined with node survival, super nodes counted once per
    backbone receiver plus the exit node."""
    ell = transmit_probability(rel.varpi, acc)
    p_rn = ps_max(rn_hop_success(dists, channel), ell, rel.g_max)
    p_intra = ps_max(sn_hop_success(dists.l_intra, channel), ell, rel.g_max)
    p_inter = ps_max(sn_hop_success(dists.l_inter, channel), ell, rel.g_max)
    p_exit = ps_max(sn_hop_success(dists.e_rn, channel), ell, rel.g_max)
    return (
        (p_rn * rel.gamma_rn) ** (counts.w1 + counts.w2 - 1)
        * p_intra**counts.c1
        * p_inter**counts.c2
        * p_exit
        * rel.gamma_sn ** (counts.c1 + counts.c2 + 1)
    )


def reliability_nnr(
    w_nnr: float,
    dists: HopDistances,
    channel: ChannelParams,
    rel: ReliabilityParams,
    acc: float,
) -> float:
    ell = transmit_probability(rel.varpi, acc)
    p_hop = ps_max(rn_hop_success(dists, channel), ell, rel.g_max)
    return (p_hop * rel.gamma_rn) ** w_nnr


# --- delay ----------------------------------------------------------------


def hop_delay(rho: float, dp: DelayParams) -> float:
    """Expected one-hop delay under geometric retransmissions: (t1+t2)/rho - t2."""
    if rho <= 0:
        raise ModelError("zero decode probability: infinite expected delay")
    return (dp.t1 + dp.t2) / rho - dp.t2


def delay_switch(
    counts: SwitchHopCounts,
    dists: HopDistances,
    channel: ChannelParams,
    dp: DelayParams,
) -> float:
    """Expected end-to-end delay of a backbone route, microseconds."""
    rho_rn = rn_hop_success(dists, channel)
    rho_intra = sn_hop_success(dists.l_intra, channel)
    rho_inter = sn_hop_success(dists.l_inter, channel)
    rho_exit = sn_hop_success(dists.e_rn, channel)
    if min(rho_rn, rho_intra, rho_inter, rho_exit) <= 0:
        raise ModelError("zero decode probability: infinite expected delay")
    t12 = dp.t1 + dp.t2
    return (
        (counts.w1 + counts.w2 - 1) * t12 / rho_rn
        + counts.c1 * t12 / rho_intra
        + counts.c2 * t12 / rho_inter
        + t12 / rho_exit
        - counts.total * dp.t2
    )


def delay_nnr(w_nnr: float, dists: HopDistances, channel: ChannelParams, dp: DelayParams) -> float:
    return w_nnr * hop_delay(rn_hop_success(dists, channel), dp)


# --- backbone hop-count split ---------------------------------------------


def backbone_hop_split(graph: StarGraph) -> tuple[float, float]:
    """Mean intra/inter hop counts of the deterministic shortest route,
    averaged over all ordered node pairs."""
    from .stargraph import shortest_path  # local import to keep module load light

    tot_intra = tot_inter = pairs = 0
    for u in graph.nodes:
        for v in graph.nodes:
            if u == v:
                continue
            path = shortest_path(graph, u, v)
            for a, b in zip(path, path[1:]):
                if a[-1] != b[-1]:
                    tot_inter += 1
                else:
                    tot_intra += 1
            pairs += 1
    return tot_intra / pairs, tot_inter / pairs


def diameter_split(graph: StarGraph) -> tuple[float, float]:
    """The backbone diameter split into intra/inter parts in the proportion
    observed on actual shortest routes (used by the closed-form sweeps)."""
    c1m, c2m = backbone_hop_split(graph)
    d = diameter_formula(graph.spec)
    s = c1m + c2m
    return d * c1m / s, d * c2m / s


def analytic_switch_counts(
    l1: float,
    l2: float,
    lambda_rn: float,
    phi: float,
    graph: StarGraph,
    split: tuple[float, float] | None = None,
) -> SwitchHopCounts:
    """Closed-form hop counts for a backbone route with measured leg lengths."""
    if split is None:
        split = diameter_split(graph)
    return SwitchHopCounts(
        w1=leg_hops(l1, lambda_rn, phi),
        w2=leg_hops(l2, lambda_rn, phi),
        c1=split[0],
        c2=split[1],
    )
