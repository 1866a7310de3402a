# Copyright (c) 2024, The hitset authors. All rights reserved.
# See file LICENSE for terms.

"""Dual segment generation through the arrangement of disk boundaries.

Above the x-axis every disk contributes one arc. Two arcs cross at most once
there, and after removing containing disks every pair with overlapping
extents crosses exactly once. A left-to-right sweep over the arcs assigns a
face to every gap between consecutive arcs; all points of a face hit the same
disks. Faces are chained into paths: the face ending at a crossing continues
as the face opening on the other side of it, and its disk set changes by
losing the upper arc and gaining the lower one. Walking each path while
maintaining the maximal runs of its disk set yields every dual segment.

The same engine serves line-constrained L2 disks (centers on the axis) and
line-separable disks (centers below it).
"""

import bisect
import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from sortedcontainers import SortedList

from . import exceptions
from ._trees import INF_KEY, MinSegmentTree
from .coverage import DualSegment

logger = logging.getLogger("hitset")

# Relative distance under which two events on the same arc are considered
# simultaneous and the instance is rejected.
SWEEP_TOLERANCE = 1e-12

# Event order at equal abscissa
_LEFT, _CROSS, _RIGHT, _POINT = range(4)


class ArcFamily:
    """Upper boundary arcs of sorted, non-containing disks.

    Arc ``a`` (0-based) belongs to disk index ``a + 1``.
    """

    def __init__(self, disks):
        self.disks = tuple(disks)
        self.m = len(self.disks)
        self.cx = np.fromiter((s.center_x for s in self.disks), np.float64, self.m)
        self.cy = np.fromiter((s.center_y for s in self.disks), np.float64, self.m)
        self.r = np.fromiter((s.radius for s in self.disks), np.float64, self.m)
        self.lefts = [s.left for s in self.disks]
        self.rights = [s.right for s in self.disks]
        self._cx, self._cy = self.cx.tolist(), self.cy.tolist()
        self._r2 = (self.r * self.r).tolist()

    def height(self, a, x):
        dx = x - self._cx[a]
        return self._cy[a] + math.sqrt(max(0.0, self._r2[a] - dx * dx))


@dataclass(frozen=True)
class ArrangementVertex:
    x: float
    y: float
    kind: str  # "crossing", "left" or "right"
    arcs: tuple  # 0-based arcs meeting at the vertex


@dataclass
class Arrangement:
    arcs: ArcFamily
    cross_x: np.ndarray
    cross_y: np.ndarray
    cross_a: np.ndarray
    cross_b: np.ndarray

    @property
    def kappa(self):
        return len(self.cross_x)

    def vertices(self):
        """All vertices, extent endpoints first, then crossings by x."""
        for a in range(self.arcs.m):
            yield ArrangementVertex(self.arcs.lefts[a], 0.0, "left", (a,))
            yield ArrangementVertex(self.arcs.rights[a], 0.0, "right", (a,))
        for x, y, a, b in zip(self.cross_x, self.cross_y, self.cross_a, self.cross_b):
            yield ArrangementVertex(float(x), float(y), "crossing", (int(a), int(b)))


def kappa(disks):
    """Number of disk pairs whose boundaries cross above the x-axis.

    Counted directly over all pairs as those whose extents overlap without
    one containing the other.
    """
    lefts = np.fromiter((s.left for s in disks), np.float64)
    rights = np.fromiter((s.right for s in disks), np.float64)
    m = len(lefts)
    total = 0
    step = max(1, (1 << 22) // max(m, 1))
    for start in range(0, m, step):
        la = lefts[start : start + step, None]
        ra = rights[start : start + step, None]
        cross = (la < lefts[None, :]) & (lefts[None, :] < ra) & (ra < rights[None, :])
        total += int(np.count_nonzero(cross))
    return total


def _candidate_pairs(arcs):
    lefts = np.asarray(arcs.lefts)
    rights = np.asarray(arcs.rights)
    m = arcs.m
    first = np.arange(m) + 1
    ends = np.searchsorted(lefts, rights, side="left")
    counts = np.maximum(ends - first, 0)
    total = int(counts.sum())
    a = np.repeat(np.arange(m), counts)
    group_start = np.repeat(np.cumsum(counts) - counts, counts)
    b = np.repeat(first, counts) + (np.arange(total) - group_start)
    if total and np.any(rights[b] <= rights[a]):
        raise exceptions.HitsetInvariantError("arrangement built on nested disks")
    return a, b


def build_arrangement(disks):
    """Crossings of the boundary arcs above the x-axis.

    Parameters
    ----------
    disks: ArcFamily or sequence of disks
        Sorted disks with no disk containing another.

    Returns
    -------
    Arrangement
        Crossings sorted by x; ``kappa`` is their number.

    Raises
    ------
    HitsetDegeneracyError
        If two arcs are tangent, a crossing does not lie above the axis or
        two events on one arc coincide.
    """
    arcs = disks if isinstance(disks, ArcFamily) else ArcFamily(disks)
    a, b = _candidate_pairs(arcs)
    cx, cy, r = arcs.cx, arcs.cy, arcs.r
    dx = cx[b] - cx[a]
    dy = cy[b] - cy[a]
    d2 = dx * dx + dy * dy
    d = np.sqrt(d2)
    along = (r[a] ** 2 - r[b] ** 2 + d2) / (2 * d)
    h2 = r[a] ** 2 - along * along
    if np.any(h2 <= 0):
        raise exceptions.HitsetDegeneracyError("tangent disk boundaries")
    h = np.sqrt(h2)
    mx = cx[a] + along * dx / d
    my = cy[a] + along * dy / d
    x1, y1 = mx - h * dy / d, my + h * dx / d
    x2, y2 = mx + h * dy / d, my - h * dx / d
    upper = y1 >= y2
    xs = np.where(upper, x1, x2)
    ys = np.where(upper, y1, y2)
    if np.any(ys <= 0):
        raise exceptions.HitsetDegeneracyError("crossing on or below the axis")
    order = np.argsort(xs, kind="stable")
    arrangement = Arrangement(arcs, xs[order], ys[order], a[order], b[order])
    _check_arc_events(arrangement)
    logger.debug("arrangement: %d arcs, kappa=%d", arcs.m, arrangement.kappa)
    return arrangement


def _check_arc_events(arrangement):
    arcs = arrangement.arcs
    owner = np.concatenate(
        [arrangement.cross_a, arrangement.cross_b, np.arange(arcs.m), np.arange(arcs.m)]
    )
    xs = np.concatenate(
        [
            arrangement.cross_x,
            arrangement.cross_x,
            np.asarray(arcs.lefts, dtype=np.float64),
            np.asarray(arcs.rights, dtype=np.float64),
        ]
    )
    if len(xs) < 2:
        return
    order = np.lexsort((xs, owner))
    owner, xs = owner[order], xs[order]
    same = owner[1:] == owner[:-1]
    gap = np.abs(xs[1:] - xs[:-1])
    scale = np.maximum(1.0, np.maximum(np.abs(xs[1:]), np.abs(xs[:-1])))
    bad = np.nonzero(same & (gap <= SWEEP_TOLERANCE * scale))[0]
    if len(bad):
        raise exceptions.HitsetDegeneracyError(
            "coincident events on the boundary of disk index %d" % (owner[bad[0]] + 1)
        )


@dataclass
class Face:
    id: int
    owner: Optional[int]  # 1-based disk index whose left endpoint opens it
    left_vertex: ArrangementVertex
    right_vertex: Optional[ArrangementVertex] = None
    parent: Optional[int] = None
    lost: Optional[int] = None  # 1-based disk index left when entering
    gained: Optional[int] = None  # 1-based disk index entered
    successor: Optional[int] = None
    weight: float = math.inf
    argmin: Optional[int] = None

    @property
    def initial(self):
        return self.owner is not None

    @property
    def key(self):
        return INF_KEY if self.argmin is None else (self.weight, self.argmin)


@dataclass
class FaceGraph:
    faces: list
    paths: list
    face_of_point: dict
    kappa: int

    @property
    def edges(self):
        return [(f.parent, f.id) for f in self.faces if f.parent is not None]


def _locate(arcs, order, x, y):
    """Number of active arcs above height ``y`` at abscissa ``x``."""
    lo, hi = 0, len(order)
    while lo < hi:
        mid = (lo + hi) // 2
        if arcs.height(order[mid], x) > y:
            lo = mid + 1
        else:
            hi = mid
    return lo


def build_face_graph(arrangement, points):
    """Sweep the arrangement, creating faces and locating the points.

    The status lists the active arcs from top to bottom; ``gap_face[a]`` is
    the face directly below arc ``a``. A new arc always enters and leaves at
    the bottom of the status.

    Returns
    -------
    FaceGraph
    """
    arcs = arrangement.arcs
    events = [(x, _LEFT, a) for a, x in enumerate(arcs.lefts)]
    events += [(x, _RIGHT, a) for a, x in enumerate(arcs.rights)]
    events += [(float(x), _CROSS, c) for c, x in enumerate(arrangement.cross_x)]
    events += [(p.x, _POINT, i) for i, p in enumerate(points)]
    events.sort()
    cross_y = arrangement.cross_y.tolist()
    cross_a = arrangement.cross_a.tolist()
    cross_b = arrangement.cross_b.tolist()

    faces = []
    order = []
    pos = {}
    gap_face = {}
    face_of_point = {}

    def new_face(**kwargs):
        f = Face(len(faces), **kwargs)
        faces.append(f)
        return f

    for x, kind, idx in events:
        if kind == _LEFT:
            v = ArrangementVertex(x, 0.0, "left", (idx,))
            pos[idx] = len(order)
            order.append(idx)
            gap_face[idx] = new_face(owner=idx + 1, left_vertex=v).id
        elif kind == _CROSS:
            upper, lower = cross_a[idx], cross_b[idx]
            i = pos.get(upper)
            if i is None or pos.get(lower) != i + 1:
                raise exceptions.HitsetDegeneracyError(
                    "arcs of disk indices %d and %d are not adjacent at x=%r"
                    % (upper + 1, lower + 1, x)
                )
            v = ArrangementVertex(x, cross_y[idx], "crossing", (upper, lower))
            closing = faces[gap_face[upper]]
            closing.right_vertex = v
            opening = new_face(
                owner=None,
                left_vertex=v,
                parent=closing.id,
                lost=upper + 1,
                gained=lower + 1,
            )
            closing.successor = opening.id
            order[i], order[i + 1] = lower, upper
            pos[lower], pos[upper] = i, i + 1
            gap_face[upper] = gap_face[lower]
            gap_face[lower] = opening.id
        elif kind == _RIGHT:
            if not order or order[-1] != idx:
                raise exceptions.HitsetDegeneracyError(
                    "disk index %d ends above another arc at x=%r" % (idx + 1, x)
                )
            faces[gap_face[idx]].right_vertex = ArrangementVertex(
                x, 0.0, "right", (idx,)
            )
            order.pop()
            del pos[idx]
            del gap_face[idx]
        else:
            p = points[idx]
            t = _locate(arcs, order, x, p.y)
            if t == 0:
                face_of_point[p.id] = None
                continue
            f = faces[gap_face[order[t - 1]]]
            face_of_point[p.id] = f.id
            if (p.w, p.id) < f.key:
                f.weight, f.argmin = p.w, p.id

    kappa = arrangement.kappa
    if len(faces) > 1 + 2 * arcs.m + 2 * kappa:
        raise exceptions.HitsetInvariantError(
            "%d faces exceed the bound for m=%d, kappa=%d" % (len(faces), arcs.m, kappa)
        )
    paths = []
    for f in faces:
        if f.initial:
            path = [f.id]
            while faces[path[-1]].successor is not None:
                path.append(faces[path[-1]].successor)
            paths.append(path)
    return FaceGraph(faces, paths, face_of_point, kappa)


def initial_face_interval(arcs, j):
    """Disk indices ``[k, j]`` containing the left endpoint of disk ``j``."""
    k = bisect.bisect_right(arcs.rights, arcs.lefts[j - 1]) + 1
    return min(k, j), j


class IntervalSet:
    """Pairwise-disjoint integer intervals keyed by left endpoint, each with
    the path position where it appeared."""

    def __init__(self):
        self._los = SortedList()
        self._spans = {}

    def __len__(self):
        return len(self._los)

    def __iter__(self):
        for lo in self._los:
            hi, birth = self._spans[lo]
            yield lo, hi, birth

    def add(self, lo, hi, birth):
        assert lo <= hi and self.find(lo) is None and self.find(hi) is None
        self._los.add(lo)
        self._spans[lo] = (hi, birth)

    def remove(self, lo):
        self._los.remove(lo)
        return self._spans.pop(lo)

    def find(self, index):
        """Left endpoint of the interval containing `index`, or None."""
        i = self._los.bisect_right(index) - 1
        if i < 0:
            return None
        lo = self._los[i]
        return lo if self._spans[lo][0] >= index else None


def process_path(faces, interval):
    """Dual segments of the faces along one path.

    Parameters
    ----------
    faces: sequence of Face
        The path, starting at an initial face.
    interval: tuple
        ``(k, j)``, the disk set of the initial face.

    Returns
    -------
    list of DualSegment
        Every maximal run of every face's disk set, weighted by the lightest
        point over the faces where the run lived uninterrupted. Runs living
        only in empty faces are dropped.
    """
    tree = MinSegmentTree.from_values(f.key for f in faces)
    runs = IntervalSet()
    runs.add(interval[0], interval[1], 0)
    out = []

    def emit(lo, hi, birth, last):
        w, pid = tree.min(birth, last + 1)
        if w < math.inf:
            out.append(DualSegment(lo, hi, w, pid))

    for i in range(1, len(faces)):
        lost, gained = faces[i].lost, faces[i].gained
        removed = inserted = 0
        lo = runs.find(lost)
        if lo is None or runs.find(gained) is not None:
            raise exceptions.HitsetInvariantError(
                "face %d: inconsistent crossing data" % faces[i].id
            )
        hi, birth = runs.remove(lo)
        removed += 1
        emit(lo, hi, birth, i - 1)
        if lo < lost:
            runs.add(lo, lost - 1, i)
            inserted += 1
        if lost < hi:
            runs.add(lost + 1, hi, i)
            inserted += 1
        new_lo = new_hi = gained
        for neighbour in (gained - 1, gained + 1):
            nlo = runs.find(neighbour)
            if nlo is None:
                continue
            nhi, nbirth = runs.remove(nlo)
            removed += 1
            if nbirth < i:
                emit(nlo, nhi, nbirth, i - 1)
            new_lo, new_hi = min(new_lo, nlo), max(new_hi, nhi)
        runs.add(new_lo, new_hi, i)
        inserted += 1
        if removed > 3 or inserted > 3:
            raise exceptions.HitsetInvariantError(
                "face %d changes more than three runs" % faces[i].id
            )
    last = len(faces) - 1
    for lo, hi, birth in list(runs):
        emit(lo, hi, birth, last)
    return out


def dual_segments_l2(points, disks, stats=None):
    """Dual segments of L2 or line-separable disks via the arrangement.

    Parameters
    ----------
    points: sequence of WeightedPoint
        Points on or above the x-axis, sorted by x.
    disks: sequence of Disk or SeparableDisk
        Sorted, non-containing disks reaching above the axis.
    stats: SolveStats, optional
        Receives kappa, face, path and emitted segment counts.

    Returns
    -------
    list of DualSegment
        The segments emitted along all paths, deduplicated to the minimum
        weight per interval.
    """
    from .dual import dedup_and_prune

    if not disks:
        return []
    arcs = ArcFamily(disks)
    arrangement = build_arrangement(arcs)
    graph = build_face_graph(arrangement, points)
    emitted = []
    for path in graph.paths:
        faces = [graph.faces[i] for i in path]
        emitted += process_path(faces, initial_face_interval(arcs, faces[0].owner))
    bound = arcs.m + 3 * len(graph.faces)
    if len(emitted) > bound:
        raise exceptions.HitsetInvariantError(
            "%d segments emitted, bound is %d" % (len(emitted), bound)
        )
    logger.debug(
        "l2: %d faces, %d paths, %d segments emitted",
        len(graph.faces),
        len(graph.paths),
        len(emitted),
    )
    if stats is not None:
        stats.kappa = graph.kappa
        stats.faces = len(graph.faces)
        stats.paths = len(graph.paths)
        stats.segments_emitted = len(emitted)
    return dedup_and_prune(emitted)
