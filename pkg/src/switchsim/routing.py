"""Route construction: greedy nearest-in-sector forwarding between regular
nodes, and full backbone routes source -> entry SN -> exit SN -> destination.

Hop kinds drive the channel model downstream: RN_RN and RN_SN receivers are
interference-exposed at regular-node transmit power; SN_SN and SN_RN hops ride
the orthogonal super-node channels (no inter-route interference, boosted
power).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .geometry import RnField, SnPlacement
from .stargraph import INTER, StarGraph, edge_class, shortest_path

RN_RN = "RN_RN"
RN_SN = "RN_SN"
SN_SN_INTRA = "SN_SN_INTRA"
SN_SN_INTER = "SN_SN_INTER"
SN_RN = "SN_RN"

SWITCH = "SWITCH"
NNR = "NNR"

# receiver tags: ("rn", field index) or ("sn", graph node index)
Rx = tuple[str, int]


class RouteFailure(RuntimeError):
    """Greedy forwarding could not reach the destination."""


@dataclass(frozen=True)
class Hop:
    frm: tuple[float, float]
    to: tuple[float, float]
    kind: str
    length: float
    rx: Rx | None = None


@dataclass
class Route:
    scheme: str
    hops: list[Hop] = field(default_factory=list)
    w1: int = 0
    w2: int = 0
    c1: int = 0
    c2: int = 0

    @property
    def hop_count(self) -> int:
        return len(self.hops)

    @property
    def total_length(self) -> float:
        return sum(h.length for h in self.hops)


def _hop(frm, to, kind, rx=None) -> Hop:
    fx, fy = float(frm[0]), float(frm[1])
    tx, ty = float(to[0]), float(to[1])
    return Hop((fx, fy), (tx, ty), kind, math.hypot(tx - fx, ty - fy), rx)


def _greedy_indices(points: np.ndarray, src, dst, phi: float) -> list[int]:
    xs = np.ascontiguousarray(points[:, 0])
    ys = np.ascontiguousarray(points[:, 1])
    hops, status = kernels.greedy_route(
        xs, ys, float(src[0]), float(src[1]), float(dst[0]), float(dst[1]), math.cos(phi / 2)
    )
    if status == kernels.STATUS_EMPTY_SECTOR:
        raise RouteFailure(f"no relay inside the forwarding sector toward {tuple(dst)}")
    if status == kernels.STATUS_NO_PROGRESS:
        raise RouteFailure(f"greedy step moved away from {tuple(dst)}")
    return hops


def nnr_next_hop(current, dest, field: RnField, phi: float) -> np.ndarray:
    """Single greedy step: nearest field point strictly inside the sector of
    half-angle phi/2 aimed at dest, or dest itself once it is nearer than
    every candidate.  Raises RouteFailure when the sector holds no relay."""
    cx, cy = float(current[0]), float(current[1])
    tx, ty = float(dest[0]), float(dest[1])
    ddx, ddy = tx - cx, ty - cy
    dd2 = ddx * ddx + ddy * ddy
    if dd2 == 0.0:
        raise ValueError("current and dest coincide")
    px = field.points[:, 0] - cx
    py = field.points[:, 1] - cy
    dot = px * ddx + py * ddy
    pc2 = px * px + py * py
    ch = math.cos(phi / 2)
    elig = (dot > 0.0) & (dot * dot > ch * ch * pc2 * dd2)
    cand = np.nonzero(elig)[0]
    if cand.size == 0:
        raise RouteFailure(f"no relay inside the forwarding sector toward {tuple(dest)}")
    best = cand[np.argmin(pc2[cand])]
    if dd2 < pc2[best]:
        return np.array([tx, ty])
    return field.points[best].copy()


def _leg_hops(field: RnField, indices: list[int], src, dst, dst_rx: Rx | None) -> list[Hop]:
    hops = []
    cur = (float(src[0]), float(src[1]))
    for idx in indices:
        if idx == kernels.DEST_HOP:
            to = (float(dst[0]), float(dst[1]))
            rx = dst_rx
        else:
            to = (float(field.points[idx, 0]), float(field.points[idx, 1]))
            rx = ("rn", idx)
        hops.append(_hop(cur, to, RN_RN, rx))
        cur = to
    return hops


def nnr_route(src, dst, field: RnField, phi: float) -> Route:
    """Greedy multi-hop route through the field from src to dst (all RN_RN)."""
    indices = _greedy_indices(field.points, src, dst, phi)
    hops = _leg_hops(field, indices, src, dst, dst_rx=None)
    return Route(scheme=NNR, hops=hops)


def nearest_placement(placements: list[SnPlacement], point) -> int:
    coords = np.array([p.coords for p in placements])
    d2 = (coords[:, 0] - float(point[0])) ** 2 + (coords[:, 1] - float(point[1])) ** 2
    return int(np.argmin(d2))


def switch_route(field: RnField, placements: list[SnPlacement], graph: StarGraph, phi: float) -> Route:
    """Full route source anchor -> nearest SN -> backbone -> nearest SN -> destination anchor.

    The final hop of the entry leg is RN_SN, backbone hops are classified
    intra/inter per edge, and the first hop of the exit leg is SN_RN.
    Populates the leg hop counts w1/w2 and backbone counts c1/c2.
    """
    ssn = nearest_placement(placements, field.srn)
    dsn = nearest_placement(placements, field.drn)

    leg1_idx = _greedy_indices(field.points, field.srn, placements[ssn].coords, phi)
    leg1 = _leg_hops(field, leg1_idx, field.srn, placements[ssn].coords, dst_rx=("sn", ssn))
    leg1[-1] = Hop(leg1[-1].frm, leg1[-1].to, RN_SN, leg1[-1].length, leg1[-1].rx)

    backbone: list[Hop] = []
    c1 = c2 = 0
    labels = shortest_path(graph, placements[ssn].label, placements[dsn].label)
    for a, b in zip(labels, labels[1:]):
        ia, ib = graph.index[a], graph.index[b]
        kind = SN_SN_INTER if edge_class(a, b) == INTER else SN_SN_INTRA
        if kind == SN_SN_INTER:
            c2 += 1
        else:
            c1 += 1
        backbone.append(_hop(placements[ia].coords, placements[ib].coords, kind, ("sn", ib)))

    leg2_idx = _greedy_indices(field.points, placements[dsn].coords, field.drn, phi)
    leg2 = _leg_hops(field, leg2_idx, placements[dsn].coords, field.drn, dst_rx=None)
    leg2[0] = Hop(leg2[0].frm, leg2[0].to, SN_RN, leg2[0].length, leg2[0].rx)

    return Route(
        scheme=SWITCH,
        hops=leg1 + backbone + leg2,
        w1=len(leg1),
        w2=len(leg2),
        c1=c1,
        c2=c2,
    )


def scheme_select(field: RnField, placements: list[SnPlacement], graph: StarGraph, phi: float) -> str:
    """Pick the scheme the source would use: NNR only when it needs strictly
    fewer hops than the backbone route (ties go to SWITCH)."""
    direct = nnr_route(field.srn, field.drn, field, phi)
    backbone = switch_route(field, placements, graph, phi)
    return NNR if direct.hop_count < backbone.hop_count else SWITCH


def write_route_csv(route: Route, path) -> None:
    with open(path, "w") as fh:
        fh.write("hop_index,kind,x1,y1,x2,y2,length\n")
        for i, h in enumerate(route.hops):
            fh.write(f"{i},{h.kind},{h.frm[0]!r},{h.frm[1]!r},{h.to[0]!r},{h.to[1]!r},{h.length!r}\n")
