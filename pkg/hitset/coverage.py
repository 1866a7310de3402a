# Copyright (c) 2024, The hitset authors. All rights reserved.
# See file LICENSE for terms.

"""1D weighted interval coverage, and the direct 1D hitting set DP."""

import bisect
import heapq
import logging
import math
from dataclasses import dataclass

from ._trees import MinSegmentTree
from .noncontainment import check_noncontainment
from .solution import HitSolution, Status

logger = logging.getLogger("hitset")


@dataclass(frozen=True, order=True)
class DualPoint:
    position: int


@dataclass(frozen=True, order=True)
class DualSegment:
    """Index interval ``[lo, hi]`` over the sorted disks, weighted by the
    point it originates from."""

    lo: int
    hi: int
    weight: float
    origin: int

    @property
    def key(self):
        return (self.lo, self.hi, self.origin)


@dataclass(frozen=True)
class CoverageSolution:
    chosen: tuple
    total_weight: float
    status: Status

    @property
    def ok(self):
        return self.status is Status.OPTIMAL


def _coverage_table(positions, segments):
    """Suffix DP over the sorted dual points.

    ``cost[j]`` is the minimum weight needed to cover points ``j..M-1`` and
    ``choice[j]`` the segment picked to cover point ``j``. Segments are swept
    from right to left through a heap keyed by ``(cost, lo, hi, origin)``;
    entries whose first covered point lies right of ``j`` have expired.
    """
    M = len(positions)
    by_last = [[] for _ in range(M)]
    for s in segments:
        a = bisect.bisect_left(positions, s.lo)
        b = bisect.bisect_right(positions, s.hi) - 1
        if a <= b:
            by_last[b].append((a, s))
    cost = [math.inf] * (M + 1)
    cost[M] = 0.0
    choice = [None] * M
    heap = []
    for j in range(M - 1, -1, -1):
        for a, s in by_last[j]:
            value = s.weight + cost[j + 1]
            heapq.heappush(heap, (value, s.lo, s.hi, s.origin, a, j, s))
        while heap and heap[0][4] > j:
            heapq.heappop(heap)
        if heap:
            top = heap[0]
            cost[j] = top[0]
            choice[j] = (top[5], top[6])
    return cost, choice


def solve_coverage(dual_points, dual_segments):
    """Minimum-weight set of segments covering every dual point.

    Parameters
    ----------
    dual_points: sequence of DualPoint
        The points to cover, sorted by position.
    dual_segments: iterable of DualSegment
        Candidate segments; segments covering no point are ignored.

    Returns
    -------
    CoverageSolution
        An optimal cover, or status infeasible if some point lies in no
        segment. Ties between optima are broken deterministically: the
        segment covering the first uncovered point is the one with the
        smallest ``(lo, hi, origin)``.
    """
    positions = [p.position for p in dual_points]
    if not positions:
        return CoverageSolution((), 0.0, Status.OPTIMAL)
    cost, choice = _coverage_table(positions, dual_segments)
    if math.isinf(cost[0]):
        logger.debug("coverage infeasible: %d points", len(positions))
        return CoverageSolution((), math.inf, Status.INFEASIBLE)
    chosen = []
    j = 0
    while j < len(positions):
        b, s = choice[j]
        chosen.append(s)
        j = b + 1
    chosen.sort(key=lambda s: s.key)
    total = math.fsum(s.weight for s in chosen)
    return CoverageSolution(tuple(chosen), total, Status.OPTIMAL)


def solve_hitting_1d_direct(points, disks):
    """Optimal 1D hitting set without building dual segments.

    Parameters
    ----------
    points: sequence of WeightedPoint
        Points on the line, sorted by x.
    disks: sequence of Disk
        Disks sorted by extent with no disk containing another.

    Returns
    -------
    HitSolution

    Notes
    -----
    With ``a_i`` the number of disks lying strictly left of point ``i``, the
    cost of using point ``i`` as the rightmost chosen point is
    ``w_i + W(a_i)``, where ``W(j)`` is the optimum for the first ``j`` disks.
    ``W(j)`` is the minimum cost among the points inside disk ``j``, queried
    from a range-minimum tree over the points processed so far.
    """
    assert check_noncontainment(disks)
    m = len(disks)
    if m == 0:
        return HitSolution.optimal((), 0.0)
    xs = [p.x for p in points]
    rights = [s.right for s in disks]
    tree = MinSegmentTree(len(points))
    W = [0.0] + [math.inf] * m
    best = [None] * (m + 1)
    a_of = {}
    events = [(p.x, 0, i) for i, p in enumerate(points)]
    events += [(s.right, 1, j) for j, s in enumerate(disks, 1)]
    events.sort()
    for _, kind, idx in events:
        if kind == 0:
            p = points[idx]
            a = bisect.bisect_left(rights, p.x)
            a_of[p.id] = a
            tree[idx] = (p.w + W[a], p.id)
        else:
            s = disks[idx - 1]
            lo = bisect.bisect_right(xs, s.left)
            hi = bisect.bisect_left(xs, s.right)
            value, pid = tree.min(lo, hi)
            W[idx] = value
            best[idx] = pid
    if math.isinf(W[m]):
        return HitSolution.infeasible()
    chosen = []
    j = m
    while j > 0:
        pid = best[j]
        chosen.append(pid)
        j = a_of[pid]
    weights = {p.id: p.w for p in points}
    return HitSolution.optimal(chosen, math.fsum(weights[i] for i in chosen))
