# Copyright (c) 2024, The hitset authors. All rights reserved.
# See file LICENSE for terms.

"""Solvers for line-separable unit disks and for half-planes.

A lower half-plane ``y <= a*x + b`` behaves like a disk of infinite radius
centered far below the points; ordering such disks by center is ordering
the half-planes by slope. Lower-only instances therefore reduce to interval
coverage over the slope order. Mixed instances are solved by guessing two
points ``p``, ``q`` of the optimum: the line through them splits the
remaining work into a lower-only and an upper-only instance.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from . import exceptions
from .dual import dual_segments_bruteforce, runs_from_matrix, solve_from_segments
from .l2 import dual_segments_l2
from .model import (
    HalfPlane,
    HalfPlaneInstance,
    Metric,
    Side,
    halfplane_hit_matrix,
    hits,
)
from .noncontainment import noncontainment_subset
from .public_api import _get_ctx
from .solution import HitSolution

logger = logging.getLogger("hitset")

_FLIP = {Side.LOWER: Side.UPPER, Side.UPPER: Side.LOWER}


def solve_line_separable_unit(instance, algo="fast", stats=None):
    """Optimal hitting set of a validated, normalized `SeparableInstance`.

    Disks are reduced to their chords on the x-axis for the non-containment
    filter and ordered by center. A disk not reaching above the axis holds no
    point, so the instance is infeasible.

    Parameters
    ----------
    instance: SeparableInstance
    algo: str
        ``"brute-dual"`` for direct predicate evaluation, anything else for
        the arrangement engine.
    stats: SolveStats, optional
    """
    unreachable = [s.id for s in instance.disks if not s.reaches_axis]
    if unreachable:
        logger.debug("disks %s do not reach above the axis", unreachable[:5])
        return HitSolution.infeasible()
    kept = noncontainment_subset(instance.disks).kept
    if stats is not None:
        stats.kept = len(kept)
    if not kept:
        return HitSolution.optimal((), 0.0)
    emitted = None
    if algo == "brute-dual":
        segments = dual_segments_bruteforce(instance.points, kept, Metric.L2)
    else:
        segments = dual_segments_l2(instance.points, kept, stats=stats)
        if stats is not None:
            emitted = stats.segments_emitted
    return solve_from_segments(kept, segments, stats=stats, emitted=emitted)


def _reflect_halfplane(h):
    return HalfPlane(-h.a, -h.b, _FLIP[h.side], h.id)


def _reflect_point(p):
    return replace(p, y=-p.y)


def reflect(instance):
    """Mirror a `HalfPlaneInstance` at the x-axis.

    Points map to ``(x, -y)`` and ``y >= a*x + b`` to ``y <= -a*x - b`` (and
    vice versa). Hits are preserved and reflecting twice is the identity.
    """
    return HalfPlaneInstance(
        tuple(_reflect_point(p) for p in instance.points),
        tuple(_reflect_halfplane(h) for h in instance.halfplanes),
    )


def reduce_parallel(halfplanes):
    """Keep, per slope, the lower half-plane with the smallest intercept.

    The others contain it and are hit by any point hitting it. Returns the
    survivors sorted by ``(slope, id)``.
    """
    best = {}
    for h in halfplanes:
        cur = best.get(h.a)
        if cur is None or (h.b, h.id) < (cur.b, cur.id):
            best[h.a] = h
    return sorted(best.values(), key=lambda h: (h.a, h.id))


def _solve_lower_matrix(points, halfplanes, hit, stats=None):
    """Lower-only solve given the ``points x halfplanes`` hit matrix."""
    if not halfplanes:
        return HitSolution.optimal((), 0.0)
    kept = reduce_parallel(halfplanes)
    if stats is not None:
        stats.kept = len(kept)
    column = {h.id: c for c, h in enumerate(halfplanes)}
    cols = [column[h.id] for h in kept]
    segments = runs_from_matrix(
        hit[:, cols], [p.w for p in points], [p.id for p in points]
    )
    return solve_from_segments(kept, segments, stats=stats)


def solve_lower_only(points, halfplanes, stats=None):
    """Optimal hitting set for lower half-planes.

    All-upper input is reflected first.

    Parameters
    ----------
    points: sequence of WeightedPoint
    halfplanes: sequence of HalfPlane
        All of the same side.
    stats: SolveStats, optional

    Returns
    -------
    HitSolution

    Raises
    ------
    HitsetError
        If lower and upper half-planes are mixed.
    """
    points, halfplanes = tuple(points), tuple(halfplanes)
    sides = {h.side for h in halfplanes}
    if len(sides) > 1:
        raise exceptions.HitsetError(
            "solve_lower_only needs half-planes of one side, use solve_general"
        )
    if sides == {Side.UPPER}:
        points = tuple(_reflect_point(p) for p in points)
        halfplanes = tuple(_reflect_halfplane(h) for h in halfplanes)
    xs = np.fromiter((p.x for p in points), np.float64, len(points))
    ys = np.fromiter((p.y for p in points), np.float64, len(points))
    hit = halfplane_hit_matrix(xs, ys, halfplanes)
    return _solve_lower_matrix(points, halfplanes, hit, stats=stats)


@dataclass(frozen=True)
class PairPartition:
    s0: tuple  # hit by p or q
    s1: tuple  # lower, not hit by p or q
    s2: tuple  # upper, not hit by p or q
    p1: tuple  # strictly below the line pq
    p2: tuple  # strictly above the line pq


def _side_of_line(p, q, r):
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


def partition_by_pair(points, halfplanes, p, q):
    """Split points and half-planes by the pair ``p``, ``q``.

    Requires ``x(p) < x(q)``. Points on the line through ``p`` and ``q``
    belong to neither side.
    """
    if not p.x < q.x:
        raise exceptions.HitsetError("partition_by_pair needs x(p) < x(q)")
    s0, s1, s2 = [], [], []
    for h in halfplanes:
        if hits(p, h) or hits(q, h):
            s0.append(h)
        elif h.side is Side.LOWER:
            s1.append(h)
        else:
            s2.append(h)
    p1, p2 = [], []
    for r in points:
        side = _side_of_line(p, q, r)
        if side < 0:
            p1.append(r)
        elif side > 0:
            p2.append(r)
    return PairPartition(tuple(s0), tuple(s1), tuple(s2), tuple(p1), tuple(p2))


@dataclass(frozen=True)
class Candidate:
    """A feasible hitting set built around one or two guessed points."""

    weight: float
    ids: tuple
    pair: tuple
    below: HitSolution = None
    above: HitSolution = None

    @property
    def signature(self):
        return (self.weight, self.ids)


class _GeneralSolver:
    def __init__(self, points, halfplanes):
        self.points = tuple(points)
        self.halfplanes = tuple(halfplanes)
        xs = np.fromiter((p.x for p in self.points), np.float64, len(self.points))
        ys = np.fromiter((p.y for p in self.points), np.float64, len(self.points))
        self.hit = halfplane_hit_matrix(xs, ys, self.halfplanes)
        self.row = {p.id: i for i, p in enumerate(self.points)}
        self.col = {h.id: c for c, h in enumerate(self.halfplanes)}
        self.weight = {p.id: p.w for p in self.points}

    def _candidate(self, ids, pair, below=None, above=None):
        weight = math.fsum(self.weight[i] for i in ids)
        return Candidate(weight, tuple(sorted(ids)), pair, below, above)

    def singletons(self):
        for i in np.nonzero(self.hit.all(axis=1))[0]:
            p = self.points[i]
            yield self._candidate([p.id], (p.id,))

    def _sub(self, points, halfplanes, flip):
        rows = [self.row[p.id] for p in points]
        cols = [self.col[h.id] for h in halfplanes]
        hit = self.hit[np.ix_(rows, cols)]
        if flip:
            points = [_reflect_point(p) for p in points]
            halfplanes = [_reflect_halfplane(h) for h in halfplanes]
        return _solve_lower_matrix(points, halfplanes, hit)

    def pair(self, i, k):
        p, q = self.points[i], self.points[k]
        if p.x > q.x:
            p, q = q, p
        part = partition_by_pair(self.points, self.halfplanes, p, q)
        below = self._sub(part.p1, part.s1, flip=False)
        if not below.ok:
            return None
        above = self._sub(part.p2, part.s2, flip=True)
        if not above.ok:
            return None
        ids = [p.id, q.id, *below.chosen_points, *above.chosen_points]
        return self._candidate(ids, (p.id, q.id), below, above)


def best_candidate(points, halfplanes, workers=None):
    """Lightest candidate over all singletons and pairs, or None.

    Ties go to the lexicographically smallest sorted id tuple.
    """
    solver = _GeneralSolver(points, halfplanes)
    if workers is None:
        workers = _get_ctx().workers
    candidates = list(solver.singletons())
    n = len(solver.points)

    def row(i):
        return [solver.pair(i, k) for k in range(i + 1, n)]

    if workers > 1 and n > 2:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(row, range(n)))
    else:
        rows = [row(i) for i in range(n)]
    candidates += [c for r in rows for c in r if c is not None]
    logger.debug(
        "general half-planes: %d feasible candidates from %d points",
        len(candidates),
        n,
    )
    if not candidates:
        return None
    return min(candidates, key=lambda c: c.signature)


def solve_general(points, halfplanes, workers=None):
    """Optimal hitting set for a mix of lower and upper half-planes.

    Parameters
    ----------
    points: sequence of WeightedPoint
    halfplanes: sequence of HalfPlane
    workers: int, optional
        Threads evaluating pair candidates. Defaults to the ``WORKERS``
        option.

    Returns
    -------
    HitSolution
        Infeasible if no singleton or pair yields a feasible candidate.
    """
    if not halfplanes:
        return HitSolution.optimal((), 0.0)
    best = best_candidate(points, halfplanes, workers=workers)
    if best is None:
        return HitSolution.infeasible()
    return HitSolution.optimal(best.ids, best.weight)
