"""Node deployment: super nodes on a sectored disk, regular nodes as a
homogeneous Poisson point process on the enclosing square.

The disk of radius R is split into n sectors.  Each sector holds an inscribed
disk of radius r = R sin(pi/n) / (1 + sin(pi/n)); super nodes sit equally
spaced on that disk scaled by a proportion delta, which keeps the per-sector
disks disjoint.  Regular nodes are scattered uniformly over [-R, R]^2 with
density lambda_rn, with the packet source pinned at (-R, -R) and the
destination at (R, R).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .stargraph import Label, StarGraphSpec, enumerate_nodes, format_label


class GeometryError(ValueError):
    """Invalid deployment parameters."""


@dataclass(frozen=True)
class DeploymentConfig:
    """Everything needed to lay out one deployment deterministically."""

    R: float = 50.0
    delta: float = 0.45
    spec: StarGraphSpec = field(default_factory=lambda: StarGraphSpec(4, 2))
    lambda_rn: float = 0.2
    phi: float = math.pi / 3
    seed: int = 1

    def __post_init__(self):
        if self.R <= 0:
            raise GeometryError(f"R must be positive, got {self.R}")
        if not (0 < self.delta < 1):
            raise GeometryError(f"delta must lie in (0, 1), got {self.delta}")
        if self.lambda_rn <= 0:
            raise GeometryError(f"lambda_rn must be positive, got {self.lambda_rn}")
        if not (0 < self.phi <= math.pi):
            raise GeometryError(f"phi must lie in (0, pi], got {self.phi}")


@dataclass(frozen=True)
class SnPlacement:
    """One super node pinned to a sector slot."""

    label: Label
    coords: tuple[float, float]
    sector: int


@dataclass
class RnField:
    """Sampled regular nodes plus the fixed source/destination anchors.

    `points` contains every regular node including the two anchors; the
    anchors are always the last two rows (source then destination).
    """

    points: np.ndarray
    srn: np.ndarray
    drn: np.ndarray

    @property
    def srn_index(self) -> int:
        return len(self.points) - 2

    @property
    def drn_index(self) -> int:
        return len(self.points) - 1


def inner_radius(R: float, n: int) -> float:
    """Radius of the disk inscribed in one of n equal sectors of a disk of radius R."""
    s = math.sin(math.pi / n)
    return R * s / (1 + s)


def sector_centers(R: float, n: int) -> list[tuple[float, float]]:
    """Inscribed-disk centers, sector 1 first, rotating counterclockwise."""
    r = inner_radius(R, n)
    base = complex(r / math.tan(math.pi / n), r)
    omega = 2 * math.pi / n
    out = []
    for m in range(n):
        c = base * complex(math.cos(omega * m), math.sin(omega * m))
        out.append((c.real, c.imag))
    return out


def place_sns(config: DeploymentConfig) -> list[SnPlacement]:
    """Pin every super node to a slot on its sector's scaled disk.

    The sector of a label is its last symbol.  Within a sector the labels are
    assigned in lexicographic order to slots spaced equally around the scaled
    disk, the first slot lying on the ray from the origin through the disk
    center.  Returned in lexicographic label order (matching StarGraph node
    order).
    """
    spec = config.spec
    n = spec.n
    r_scaled = config.delta * inner_radius(config.R, n)
    centers = sector_centers(config.R, n)
    per_sector = spec.sector_size

    by_sector: dict[int, list[Label]] = {m: [] for m in range(1, n + 1)}
    for lab in enumerate_nodes(spec):
        by_sector[lab[-1]].append(lab)

    placements: dict[Label, SnPlacement] = {}
    for sector, labels in by_sector.items():
        cx, cy = centers[sector - 1]
        base_angle = math.atan2(cy, cx)
        for slot, lab in enumerate(labels):
            ang = base_angle + 2 * math.pi * slot / per_sector
            placements[lab] = SnPlacement(
                label=lab,
                coords=(cx + r_scaled * math.cos(ang), cy + r_scaled * math.sin(ang)),
                sector=sector,
            )
    return [placements[lab] for lab in enumerate_nodes(spec)]


def sample_rn_field(config: DeploymentConfig, rng: np.random.Generator | None = None) -> RnField:
    """Poisson(lambda_rn * (2R)^2) regular nodes uniform on [-R, R]^2.

    Fully determined by `config.seed` unless an explicit generator is given.
    The source (-R, -R) and destination (R, R) anchors are appended last.
    """
    if rng is None:
        rng = np.random.default_rng(config.seed)
    R = config.R
    count = rng.poisson(config.lambda_rn * (2 * R) ** 2)
    pts = rng.uniform(-R, R, size=(count, 2))
    srn = np.array([-R, -R])
    drn = np.array([R, R])
    points = np.vstack([pts, srn[None, :], drn[None, :]])
    return RnField(points=points, srn=srn, drn=drn)


def link_lengths(config: DeploymentConfig) -> tuple[float, float]:
    """Backbone hop lengths used by the closed-form models.

    Returns (l, L_long): the nominal spacing of adjacent super nodes within a
    sector, and the long-range cross-sector distance taken at its maximum
    2R (1 + delta sin(pi/n)) / (1 + sin(pi/n)).
    """
    n = config.spec.n
    s = math.sin(math.pi / n)
    r_scaled = config.delta * inner_radius(config.R, n)
    l_intra = 2 * r_scaled * s
    l_inter = 2 * config.R * (1 + config.delta * s) / (1 + s)
    return l_intra, l_inter


def anchor_sn_distances(config: DeploymentConfig, placements: list[SnPlacement] | None = None) -> tuple[float, float]:
    """Euclidean distances from the source anchor to its nearest super node
    and from the destination anchor to its nearest super node (L1, L2)."""
    if placements is None:
        placements = place_sns(config)
    coords = np.array([p.coords for p in placements])
    srn = np.array([-config.R, -config.R])
    drn = np.array([config.R, config.R])
    l1 = float(np.min(np.hypot(*(coords - srn).T)))
    l2 = float(np.min(np.hypot(*(coords - drn).T)))
    return l1, l2


def write_deployment_csv(path, placements: list[SnPlacement], field: RnField) -> None:
    """Dump one `kind,label,x,y,sector` row per node (SN, RN, SRN, DRN)."""
    with open(path, "w") as fh:
        fh.write("kind,label,x,y,sector\n")
        for p in placements:
            x, y = p.coords
            fh.write(f"SN,{format_label(p.label)},{x!r},{y!r},{p.sector}\n")
        n_rn = len(field.points) - 2
        for i in range(n_rn):
            x, y = float(field.points[i, 0]), float(field.points[i, 1])
            fh.write(f"RN,rn{i},{x!r},{y!r},\n")
        fh.write(f"SRN,srn,{float(field.srn[0])!r},{float(field.srn[1])!r},\n")
        fh.write(f"DRN,drn,{float(field.drn[0])!r},{float(field.drn[1])!r},\n")
