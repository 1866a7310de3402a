# Copyright (c) 2024, The hitset authors. All rights reserved.
# See file LICENSE for terms.

"""Dual segment generation for the 1d, unit-disk and L1 cases.

In all three cases a point hits a run of consecutive disks, so it yields at
most one dual segment. Inputs are the sorted, non-containing disks.
"""

import collections
import math

import numpy as np
from sortedcontainers import SortedList

from . import exceptions
from .coverage import DualSegment

# Event order at equal abscissa
_LEFT, _CENTER, _RIGHT, _POINT = range(4)


def dual_segments_1d(points, disks):
    """Sweep with a FIFO queue of the disks containing the sweep position.

    Since no disk contains another, disks leave the queue in the order they
    entered it; a point inside the queue's disks yields ``[front, rear]``.
    """
    events = [(s.left, _LEFT, j) for j, s in enumerate(disks, 1)]
    events += [(s.right, _RIGHT, j) for j, s in enumerate(disks, 1)]
    events += [(p.x, _POINT, i) for i, p in enumerate(points)]
    events.sort()
    queue = collections.deque()
    out = []
    for _, kind, idx in events:
        if kind == _LEFT:
            queue.append(idx)
        elif kind == _RIGHT:
            if not queue or queue[0] != idx:
                raise exceptions.HitsetInvariantError(
                    "disk %d leaves the sweep out of order, front is %r"
                    % (idx, queue[0] if queue else None)
                )
            queue.popleft()
        elif queue:
            p = points[idx]
            out.append(DualSegment(queue[0], queue[-1], p.w, p.id))
    return out


def dual_segments_unit(points, disks):
    """Binary search on the sorted centers.

    A point at height ``y`` below the common radius ``r`` lies in exactly the
    disks whose center is within ``sqrt(r^2 - y^2)`` of its x-coordinate.
    """
    if not disks or not points:
        return []
    r = disks[0].radius
    centers = np.fromiter((s.center_x for s in disks), dtype=np.float64)
    xs = np.fromiter((p.x for p in points), dtype=np.float64)
    ys = np.fromiter((p.y for p in points), dtype=np.float64)
    inside = ys < r
    half = np.sqrt(np.where(inside, r * r - ys * ys, 0.0))
    lo = np.searchsorted(centers, xs - half, side="right")
    hi = np.searchsorted(centers, xs + half, side="left") - 1
    keep = np.nonzero(inside & (lo <= hi))[0]
    return [
        DualSegment(int(lo[i]) + 1, int(hi[i]) + 1, points[i].w, points[i].id)
        for i in keep
    ]


def dual_segments_l1(points, disks):
    """Sweep with two status trees over the diamonds' upper edges.

    At the sweep abscissa ``x``, ``T_L`` holds the disks whose upper-left
    edge spans ``x`` (keyed by left endpoint) and ``T_R`` those whose
    upper-right edge does (keyed by right endpoint). A point ``(x, y)`` lies
    below the left edge of disk ``j`` iff ``l_j < x - y`` and below its right
    edge iff ``r_j > x + y``.
    """
    events = []
    for j, s in enumerate(disks, 1):
        events.append((s.left, _LEFT, j))
        events.append((s.center_x, _CENTER, j))
        events.append((s.right, _RIGHT, j))
    events += [(p.x, _POINT, i) for i, p in enumerate(points)]
    events.sort()
    t_left = SortedList()
    t_right = SortedList()
    out = []
    for _, kind, idx in events:
        if kind == _LEFT:
            t_left.add((disks[idx - 1].left, idx))
        elif kind == _CENTER:
            s = disks[idx - 1]
            t_left.remove((s.left, idx))
            t_right.add((s.right, idx))
        elif kind == _RIGHT:
            t_right.remove((disks[idx - 1].right, idx))
        else:
            p = points[idx]
            seg = _l1_query(t_left, t_right, p)
            if seg is not None:
                out.append(DualSegment(seg[0], seg[1], p.w, p.id))
    return out


def _l1_query(t_left, t_right, p):
    # k_R: lowest right edge above p; k_L: lowest left edge above p
    k_right = k_left = None
    i = t_right.bisect_right((p.x + p.y, math.inf))
    if i < len(t_right):
        k_right = t_right[i][1]
    i = t_left.bisect_left((p.x - p.y, -math.inf)) - 1
    if i >= 0:
        k_left = t_left[i][1]
    if k_right is not None and k_left is not None:
        return k_right, k_left
    if k_right is not None:
        return k_right, t_right[-1][1]
    if k_left is not None:
        return t_left[0][1], k_left
    return None
