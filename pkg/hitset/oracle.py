# Copyright (c) 2024, The hitset authors. All rights reserved.
# See file LICENSE for terms.

"""Exhaustive reference solver and solution verification."""

import logging
import math

import numpy as np

from . import exceptions
from .model import hit_matrix
from .public_api import _get_ctx
from .solution import HitSolution

logger = logging.getLogger("hitset")


def coverage_masks(hit):
    """Pack each row of a boolean matrix into ``ceil(m / 64)`` uint64 words."""
    n, m = hit.shape
    words = max(1, -(-m // 64))
    padded = np.zeros((n, words * 64), dtype=np.uint64)
    padded[:, :m] = hit
    shifts = np.arange(64, dtype=np.uint64)
    return np.bitwise_or.reduce(
        padded.reshape(n, words, 64) << shifts, axis=2
    ).astype(np.uint64)


def oracle_optimal(instance):
    """Optimal hitting set by enumerating every subset of points.

    Subset coverage and weight tables are built by doubling: the subsets
    containing point ``i`` are those without it, extended by its mask.

    Returns
    -------
    HitSolution
        Among minimum-weight solutions the one with the lexicographically
        smallest sorted id tuple.

    Raises
    ------
    HitsetError
        If the instance has more points than the ``ORACLE_MAX_N`` option.
    """
    n, m = instance.n, instance.m
    limit = _get_ctx().oracle_max_n
    if n > limit:
        raise exceptions.HitsetError(
            "oracle limited to %d points, instance has %d" % (limit, n)
        )
    if m == 0:
        return HitSolution.optimal((), 0.0)
    points = sorted(instance.points, key=lambda p: p.id)
    hit = hit_matrix(instance)
    order = [instance.points.index(p) for p in points]
    masks = coverage_masks(hit[order])
    full = coverage_masks(np.ones((1, m), dtype=bool))[0]
    cover = np.zeros((1 << n, len(full)), dtype=np.uint64)
    weight = np.zeros(1 << n, dtype=np.float64)
    for i, p in enumerate(points):
        half = 1 << i
        cover[half : 2 * half] = cover[:half] | masks[i]
        weight[half : 2 * half] = weight[:half] + p.w
    feasible = np.all(cover == full, axis=1)
    if not feasible.any():
        return HitSolution.infeasible()
    best = weight[feasible].min()
    ties = np.nonzero(feasible & (weight == best))[0]
    chosen = min(
        tuple(points[i].id for i in range(n) if (s >> i) & 1) for s in ties.tolist()
    )
    logger.debug("oracle: %d optimal subsets of weight %g", len(ties), best)
    return HitSolution.optimal(
        chosen, math.fsum(p.w for p in points if p.id in chosen)
    )


def verify(instance, solution):
    """Check a solution against an instance.

    An optimal solution verifies iff its points exist, hit every constraint
    and sum to its reported weight. An infeasible one verifies iff some
    constraint contains no point at all.
    """
    hit = hit_matrix(instance)
    if not solution.ok:
        return bool(instance.m) and not bool(hit.any(axis=0).all())
    row = {p.id: i for i, p in enumerate(instance.points)}
    if not solution.chosen_points <= row.keys():
        logger.debug("solution names unknown points")
        return False
    rows = [row[i] for i in solution.sorted_ids]
    if instance.m and not hit[rows].any(axis=0).all():
        logger.debug("solution leaves constraints unhit")
        return False
    total = math.fsum(instance.points[r].w for r in rows)
    return math.isclose(total, solution.total_weight, rel_tol=1e-12, abs_tol=1e-12)
