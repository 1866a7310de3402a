# Copyright (c) 2024, The hitset authors. All rights reserved.
# See file LICENSE for terms.

"""Reduction of hitting set instances to 1D interval coverage.

Sorted disks become dual points ``1..m``; every point contributes one
segment per maximal run of consecutive disk indices it hits, weighted by the
point's weight. An optimal cover of the dual points lifts back to an optimal
hitting set by taking the origins of the chosen segments.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import exceptions
from ._trees import MinSegmentTree
from .coverage import DualPoint, DualSegment, solve_coverage
from .model import Metric, disk_hit_matrix
from .public_api import _get_ctx
from .solution import HitSolution

logger = logging.getLogger("hitset")

# Upper bound on the number of matrix cells evaluated per chunk
_CHUNK_CELLS = 1 << 22


@dataclass(frozen=True)
class DualInstance:
    dual_points: tuple
    dual_segments: tuple
    disk_ids: tuple

    def lines(self):
        """``lo hi weight origin`` lines, as written by ``--emit-duals``."""
        from .io import format_weight

        for s in self.dual_segments:
            yield "%d %d %s %d" % (s.lo, s.hi, format_weight(s.weight), s.origin)


def dual_points(disks):
    return tuple(DualPoint(j) for j in range(1, len(disks) + 1))


def runs_from_matrix(hit, weights, origins):
    """Maximal runs of True per row of a boolean hit matrix.

    Parameters
    ----------
    hit: ndarray of bool, shape (k, m)
        Row ``i`` tells which of the sorted constraints point ``i`` hits.
    weights, origins: sequences of length k
        Weight and id of the point behind each row.

    Returns
    -------
    list of DualSegment
        Segments with 1-based inclusive indices, ordered by row then ``lo``.
    """
    k, m = hit.shape
    if k == 0 or m == 0:
        return []
    padded = np.zeros((k, m + 2), dtype=np.int8)
    padded[:, 1:-1] = hit
    edges = np.diff(padded, axis=1)
    starts = np.argwhere(edges == 1)
    ends = np.argwhere(edges == -1)
    # argwhere is row-major, so starts and ends pair up run by run
    return [
        DualSegment(int(c0) + 1, int(c1), float(weights[r]), int(origins[r]))
        for (r, c0), (_, c1) in zip(starts, ends)
    ]


def dual_segments_bruteforce(points, disks, metric, workers=None):
    """All dual segments by direct predicate evaluation, in O(nm) time.

    Parameters
    ----------
    points: sequence of WeightedPoint
    disks: sequence of Disk or SeparableDisk
        The sorted, non-containing disks; index ``j`` is ``disks[j - 1]``.
    metric: Metric
        Hit predicate for line-constrained disks (L2 for separable disks).
    workers: int, optional
        Threads evaluating row chunks. Defaults to the ``WORKERS`` option.

    Returns
    -------
    list of DualSegment
    """
    n, m = len(points), len(disks)
    if n == 0 or m == 0:
        return []
    if workers is None:
        workers = _get_ctx().workers
    xs = np.fromiter((p.x for p in points), dtype=np.float64, count=n)
    ys = np.fromiter((p.y for p in points), dtype=np.float64, count=n)
    ws = [p.w for p in points]
    ids = [p.id for p in points]
    cx = np.fromiter((s.center_x for s in disks), dtype=np.float64, count=m)
    cy = np.fromiter((s.center_y for s in disks), dtype=np.float64, count=m)
    r = np.fromiter((s.radius for s in disks), dtype=np.float64, count=m)
    step = max(1, _CHUNK_CELLS // m)

    def rows(lo):
        hi = min(n, lo + step)
        hit = disk_hit_matrix(xs[lo:hi], ys[lo:hi], cx, cy, r, metric)
        return runs_from_matrix(hit, ws[lo:hi], ids[lo:hi])

    starts = range(0, n, step)
    if workers > 1 and len(starts) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(rows, starts))
    else:
        chunks = [rows(lo) for lo in starts]
    return [s for chunk in chunks for s in chunk]


def dedup_and_prune(segments, prune=False):
    """Collapse identical intervals and optionally drop redundant ones.

    Identical intervals keep the minimum ``(weight, origin)``. With `prune`,
    a segment is dropped when another segment strictly contains it with no
    larger weight; such a segment is never needed by an optimal cover.

    Returns
    -------
    list of DualSegment
        Sorted by ``(lo, hi)``.
    """
    best = {}
    for s in segments:
        key = (s.lo, s.hi)
        cur = best.get(key)
        if cur is None or (s.weight, s.origin) < (cur.weight, cur.origin):
            best[key] = s
    out = sorted(best.values(), key=lambda s: (s.lo, s.hi))
    if not prune or len(out) < 2:
        return out
    # Visit by lo ascending, hi descending: every strict superset of a
    # segment is visited before it. The tree holds, per hi rank, the minimum
    # weight seen so far.
    his = sorted({s.hi for s in out})
    rank = {h: i for i, h in enumerate(his)}
    tree = MinSegmentTree(len(his), neutral=float("inf"))
    kept = []
    for s in sorted(out, key=lambda s: (s.lo, -s.hi)):
        i = rank[s.hi]
        if tree.min(i, len(his)) > s.weight:
            kept.append(s)
        if tree[i] > s.weight:
            tree[i] = s.weight
    kept.sort(key=lambda s: (s.lo, s.hi))
    logger.debug("pruned %d of %d dual segments", len(out) - len(kept), len(out))
    return kept


def lift_solution(coverage):
    """Turn an optimal cover into a hitting set of its segment origins.

    Raises
    ------
    HitsetInvariantError
        If two chosen segments share an origin. No optimal cover can do so,
        so this signals a solver bug.
    """
    if not coverage.ok:
        return HitSolution.infeasible()
    origins = [s.origin for s in coverage.chosen]
    if len(set(origins)) != len(origins):
        raise exceptions.HitsetInvariantError("duplicate origin at optimum")
    return HitSolution.optimal(origins, coverage.total_weight)


def solve_from_segments(disks, segments, prune=False, stats=None, emitted=None):
    """Deduplicate, cover and lift; records the dual instance in `stats`.

    `emitted` is the generator's output count when `segments` was already
    deduplicated upstream; it defaults to ``len(segments)``.
    """
    deduped = dedup_and_prune(segments, prune=prune)
    duals = DualInstance(
        dual_points(disks), tuple(deduped), tuple(s.id for s in disks)
    )
    if stats is not None:
        stats.segments_emitted = len(segments) if emitted is None else emitted
        stats.segments_dedup = len(deduped)
        stats.duals = duals
    coverage = solve_coverage(duals.dual_points, duals.dual_segments)
    solution = lift_solution(coverage)
    logger.debug(
        "covered %d dual points with %d segments: %s",
        len(duals.dual_points),
        len(coverage.chosen),
        solution,
    )
    return solution


def segments_per_origin(segments):
    counts = {}
    for s in segments:
        counts[s.origin] = counts.get(s.origin, 0) + 1
    return counts


def check_single_segment_per_point(segments, metric):
    """In 1d, unit and L1 every point yields at most one segment."""
    for origin, count in segments_per_origin(segments).items():
        if count > 1:
            raise exceptions.HitsetInvariantError(
                "point %d yields %d dual segments under %s"
                % (origin, count, Metric(metric).value)
            )
