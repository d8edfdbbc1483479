# cython: language_level=3
"""Compiled greedy forwarding kernel.

Mirrors _greedy_py.greedy_route exactly; see that module for the contract.
Compiled with -ffp-contract=off so double arithmetic matches numpy.
"""

STATUS_OK = 0
STATUS_EMPTY_SECTOR = 1
STATUS_NO_PROGRESS = 2

DEST_HOP = -1


def greedy_route(
    double[::1] xs,
    double[::1] ys,
    double sx,
    double sy,
    double tx,
    double ty,
    double cos_half,
):
    cdef double ch2 = cos_half * cos_half
    cdef double cx = sx
    cdef double cy = sy
    cdef Py_ssize_t n = xs.shape[0]
    cdef Py_ssize_t i, best
    cdef double ddx, ddy, dd2, px, py, dot, pc2, best_pc2, bx, by, ndx, ndy, nd2
    cdef Py_ssize_t limit = n + 1
    hops = []
    while True:
        ddx = tx - cx
        ddy = ty - cy
        dd2 = ddx * ddx + ddy * ddy
        if dd2 == 0.0:
            return hops, STATUS_OK
        best = -1
        best_pc2 = 0.0
        for i in range(n):
            px = xs[i] - cx
            py = ys[i] - cy
            pc2 = px * px + py * py
            # a point at or beyond the running nearest can never win
            if best >= 0 and pc2 >= best_pc2:
                continue
            dot = px * ddx + py * ddy
            if dot <= 0.0:
                continue
            if dot * dot <= ch2 * pc2 * dd2:
                continue
            best = i
            best_pc2 = pc2
        if best < 0:
            return hops, STATUS_EMPTY_SECTOR
        if dd2 < best_pc2:
            hops.append(DEST_HOP)
            return hops, STATUS_OK
        bx = xs[best]
        by = ys[best]
        hops.append(best)
        if bx == tx and by == ty:
            return hops, STATUS_OK
        ndx = tx - bx
        ndy = ty - by
        nd2 = ndx * ndx + ndy * ndy
        if nd2 >= dd2:
            return hops, STATUS_NO_PROGRESS
        cx = bx
        cy = by
        if len(hops) > limit:
            return hops, STATUS_NO_PROGRESS
