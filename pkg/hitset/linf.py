# Copyright (c) 2024, The hitset authors. All rights reserved.
# See file LICENSE for terms.

"""Dual segment generation for line-constrained L-infinity disks (squares).

A square ``s_t`` is hit by ``(x, y)`` iff ``l_t < x < r_t`` and
``y < y(s_t)``, the ordinate of its upper edge. For every start index ``j``
the generator visits, in increasing order, each end index ``k`` such that
some point defines the dual segment ``[j, k]``, and reports ``[j, k]`` with
the weight of the lightest point hitting all of ``s_j..s_k`` unless that
point also hits ``s_{j-1}`` or ``s_{k+1}`` (the segment is then redundant).

Queries run on a merge-sort tree over the points, giving O(log^2 n) per
query instead of the O(log n) of segment-dragging structures with
fractional cascading.
"""

import bisect
import logging
import math

import numpy as np

from . import exceptions
from ._trees import MinSegmentTree
from .coverage import DualSegment
from .model import Metric, hits

logger = logging.getLogger("hitset")


class _PointLayers:
    """Merge-sort tree over points sorted by x.

    Level ``L`` holds the points in blocks of ``2**L`` consecutive
    x-positions, each block sorted by y. Block ``b`` of level ``L`` occupies
    slots ``[b << L, min(n, (b + 1) << L))`` of the level arrays.
    """

    def __init__(self, points):
        self.points = points
        self.n = n = len(points)
        self.xs = [p.x for p in points]
        ys = np.fromiter((p.y for p in points), dtype=np.float64, count=n)
        self.ys_array = ys
        slots = np.arange(n)
        self.ys = []
        self.pos = []
        level = 0
        while True:
            block = slots >> level
            order = np.lexsort((slots, ys, block))
            self.ys.append(ys[order].tolist())
            self.pos.append(order)
            if (1 << level) >= n:
                break
            level += 1

    def block(self, level, b):
        return b << level, min(self.n, (b + 1) << level)

    def nodes(self, lo, hi):
        """Canonical blocks covering x-positions ``[lo, hi)``, left to right."""
        left, right = [], []
        level = 0
        while lo < hi:
            if lo & 1:
                left.append((level, lo))
                lo += 1
            if hi & 1:
                hi -= 1
                right.append((level, hi))
            lo >>= 1
            hi >>= 1
            level += 1
        return left + right[::-1]

    def x_range(self, x1, x2):
        return bisect.bisect_left(self.xs, x1), bisect.bisect_right(self.xs, x2)


class DragStructure:
    """Segment dragging over a point set."""

    def __init__(self, points, layers=None):
        self.layers = layers if layers is not None else _PointLayers(points)

    def _occupied(self, level, b, y_lo, y_hi):
        ys = self.layers.ys[level]
        s, e = self.layers.block(level, b)
        i = bisect.bisect_right(ys, y_lo, s, e)
        return i < e and ys[i] < y_hi

    def drag_rightward(self, x0, y_lo, y_hi):
        """Drag the vertical segment ``x0 x (y_lo, y_hi)`` rightwards.

        Returns
        -------
        WeightedPoint or None
            The point with minimal x among those with ``x >= x0`` and
            ``y_lo < y < y_hi``.
        """
        layers = self.layers
        start = bisect.bisect_left(layers.xs, x0)
        for level, b in layers.nodes(start, layers.n):
            if not self._occupied(level, b, y_lo, y_hi):
                continue
            while level > 0:
                level -= 1
                b *= 2
                if not self._occupied(level, b, y_lo, y_hi):
                    b += 1
            return layers.points[b]
        return None

    def drag_downward(self, x1, x2, y):
        """Drag the horizontal segment ``[x1, x2] x y`` downwards.

        Returns the highest point with ``x1 <= x <= x2`` and ``y(p) < y``.
        """
        layers = self.layers
        best = None
        for level, b in layers.nodes(*layers.x_range(x1, x2)):
            ys = layers.ys[level]
            s, e = layers.block(level, b)
            i = bisect.bisect_left(ys, y, s, e) - 1
            if i >= s and (best is None or ys[i] > best[0]):
                best = (ys[i], int(layers.pos[level][i]))
        return None if best is None else layers.points[best[1]]


class MinWeightStructure:
    """Downward minimum-weight point queries.

    Every block keeps a staircase: its points sorted by y such that each
    kept point is lighter than all points below it, ties broken by smaller
    id. Dropped points always have a lighter point below them, so the
    highest staircase point under a query height is the block's answer.
    """

    def __init__(self, points, layers=None):
        layers = layers if layers is not None else _PointLayers(points)
        self.layers = layers
        n = layers.n
        ws = np.fromiter((p.w for p in points), dtype=np.float64, count=n)
        ids = np.fromiter((p.id for p in points), dtype=np.int64, count=n)
        rank = np.empty(n, dtype=np.int64)
        rank[np.lexsort((ids, ws))] = np.arange(n)
        self.ys, self.pos, self.rank, self.starts = [], [], [], []
        for level, order in enumerate(layers.pos):
            block = np.arange(n) >> level
            nblocks = int(block[-1]) + 1 if n else 0
            # Later blocks get smaller offsets, so one running minimum over
            # the level restarts at every block boundary.
            v = rank[order] + (nblocks - block) * n
            keep = v == np.minimum.accumulate(v) if n else np.zeros(0, bool)
            kept_ys = layers.ys_array[order][keep]
            self.ys.append(kept_ys.tolist())
            self.pos.append(order[keep])
            self.rank.append(rank[order][keep])
            self.starts.append(
                np.searchsorted(block[keep], np.arange(nblocks + 1)).tolist()
            )

    def min_weight_below(self, x1, x2, y):
        """Minimum-weight point with ``x1 <= x <= x2`` and ``y(p) < y``.

        Ties are broken by smaller point id. Returns None if no point
        qualifies.
        """
        layers = self.layers
        best = None
        for level, b in layers.nodes(*layers.x_range(x1, x2)):
            ys = self.ys[level]
            s, e = self.starts[level][b], self.starts[level][b + 1]
            i = bisect.bisect_left(ys, y, s, e) - 1
            if i >= s:
                r = int(self.rank[level][i])
                if best is None or r < best[0]:
                    best = (r, int(self.pos[level][i]))
        return None if best is None else layers.points[best[1]]


class MaxRangeStructure:
    """Range minima over the upper edges of the sorted squares.

    Indices are 1-based like dual points.
    """

    def __init__(self, disks):
        self.disks = disks
        self.m = len(disks)
        self.lefts = [s.left for s in disks]
        self.tree = MinSegmentTree.from_values(
            (s.top, t) for t, s in enumerate(disks)
        )

    def range_min_top(self, j, k):
        """Index of the lowest square in ``s_j..s_k``; ties go to the
        smaller index."""
        return self.tree.min(j - 1, k)[1] + 1

    def max_range(self, p, j):
        """Largest ``k`` such that `p` hits every square of ``s_j..s_k``."""
        below = self.tree.first_at_or_below(j - 1, (p.y, math.inf))
        k_height = self.m if below is None else below
        k_left = bisect.bisect_left(self.lefts, p.x)
        k = min(k_height, k_left)
        assert k >= j, "point %d does not hit square %d" % (p.id, j)
        return k


def dual_segments_linf(points, disks):
    """Dual segments covering every non-redundant element of the dual set.

    Parameters
    ----------
    points: sequence of WeightedPoint
        Points sorted by x, on or above the x-axis.
    disks: sequence of Disk
        Sorted squares, no square containing another.

    Returns
    -------
    list of DualSegment
        Every emitted segment is a dual segment carrying the minimum weight
        among its defining points; every non-redundant dual segment is
        emitted. The same interval may be emitted twice.
    """
    m = len(disks)
    if not points or not m:
        return []
    layers = _PointLayers(points)
    drag = DragStructure(points, layers)
    lightest = MinWeightStructure(points, layers)
    ranges = MaxRangeStructure(disks)
    out = []
    rounds = 0
    for j in range(1, m + 1):
        s = disks[j - 1]
        if j == 1:
            parts = [(s.left, s.right, -math.inf)]
        else:
            prev = disks[j - 2]
            parts = []
            # Points left of r_{j-1} must rise above s_{j-1} to avoid it.
            if prev.top < s.top:
                parts.append((s.left, prev.right, prev.top))
            parts.append((max(s.left, prev.right), s.right, -math.inf))
        for x_lo, x_hi, y_lo in parts:
            rounds += _scan(j, x_lo, x_hi, y_lo, disks, drag, lightest, ranges, out)
    logger.debug("linf: %d rounds, %d segments emitted", rounds, len(out))
    return out


def _scan(j, x_lo, x_hi, y_lo, disks, drag, lightest, ranges, out):
    """Visit the end indices of segments starting at ``j`` defined by points
    in ``[x_lo, x_hi) x (y_lo, y(s_j))``.

    While end index ``t`` is still open, the candidates are the region's
    points hitting all of ``s_j..s_t``. Their smallest max-range ``k`` is
    reached either by the leftmost or by the highest candidate. Returns the
    number of rounds performed.

    Every round but the last closes one end index ``k``, emitting its
    segment or dropping it as redundant, so the rounds never exceed the
    closed indices plus one.
    """
    m = len(disks)
    t = j
    rounds = closed = 0
    while t <= m:
        rounds += 1
        if rounds > closed + 1:
            raise exceptions.HitsetInvariantError(
                "square %d: %d rounds for %d end indices" % (j, rounds, closed)
            )
        y_cap = disks[ranges.range_min_top(j, t) - 1].top
        if y_cap <= y_lo:
            break
        x0 = max(x_lo, disks[t - 1].left)
        p = drag.drag_rightward(x0, y_lo, y_cap)
        if p is None or p.x >= x_hi:
            break
        q = drag.drag_downward(x0, x_hi, y_cap)
        k = min(ranges.max_range(p, j), ranges.max_range(q, j))
        if k < t:
            raise exceptions.HitsetInvariantError(
                "square %d: end index scan does not advance past %d" % (j, t)
            )
        y_star = disks[ranges.range_min_top(j, k) - 1].top
        best = lightest.min_weight_below(disks[k - 1].left, disks[j - 1].right, y_star)
        extends_left = j > 1 and hits(best, disks[j - 2], Metric.LINF)
        extends_right = k < m and hits(best, disks[k], Metric.LINF)
        if not (extends_left or extends_right):
            out.append(DualSegment(j, k, best.w, best.id))
        closed += 1
        t = k + 1
    return rounds
