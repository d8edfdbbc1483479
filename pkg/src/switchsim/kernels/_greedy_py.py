"""Pure-numpy greedy forwarding kernel (fallback backend).

Semantics are shared bit-for-bit with the compiled kernel: the same
double-precision expressions, the same strict comparisons, and the same
first-index tie-break, so routes are identical across backends.
"""

from __future__ import annotations

import numpy as np

STATUS_OK = 0
STATUS_EMPTY_SECTOR = 1
STATUS_NO_PROGRESS = 2

# A hop index of -1 denotes the destination point itself (used when the
# destination is not a member of the point field, e.g. a super node).
DEST_HOP = -1


def greedy_route(
    xs: np.ndarray,
    ys: np.ndarray,
    sx: float,
    sy: float,
    tx: float,
    ty: float,
    cos_half: float,
) -> tuple[list[int], int]:
    """Greedy nearest-in-sector walk from (sx, sy) to (tx, ty).

    Each step picks the nearest field point strictly inside the sector of
    half-angle acos(cos_half) centered on the ray toward the destination;
    the walk hops straight to the destination once it is nearer than every
    candidate.  Every hop must strictly reduce the remaining distance.

    Returns (hop_indices, status); indices refer to rows of xs/ys, with
    DEST_HOP marking a final hop to the destination coordinates.
    """
    ch2 = cos_half * cos_half
    cx, cy = sx, sy
    hops: list[int] = []
    limit = len(xs) + 1
    while True:
        ddx = tx - cx
        ddy = ty - cy
        dd2 = ddx * ddx + ddy * ddy
        if dd2 == 0.0:
            return hops, STATUS_OK
        px = xs - cx
        py = ys - cy
        dot = px * ddx + py * ddy
        pc2 = px * px + py * py
        elig = (dot > 0.0) & (dot * dot > ch2 * pc2 * dd2)
        cand = np.nonzero(elig)[0]
        if cand.size == 0:
            return hops, STATUS_EMPTY_SECTOR
        best = cand[np.argmin(pc2[cand])]
        if dd2 < pc2[best]:
            hops.append(DEST_HOP)
            return hops, STATUS_OK
        bx = xs[best]
        by = ys[best]
        hops.append(int(best))
        if bx == tx and by == ty:
            return hops, STATUS_OK
        ndx = tx - bx
        ndy = ty - by
        nd2 = ndx * ndx + ndy * ndy
        if nd2 >= dd2:
            return hops, STATUS_NO_PROGRESS
        cx, cy = bx, by
        if len(hops) > limit:
            return hops, STATUS_NO_PROGRESS
