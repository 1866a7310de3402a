# Copyright (c) 2024, The hitset authors. All rights reserved.
# See file LICENSE for terms.

import logging
import time
from dataclasses import dataclass

from . import exceptions
from .dual import (
    check_single_segment_per_point,
    dedup_and_prune,
    dual_segments_bruteforce,
    solve_from_segments,
)
from .fast_basic import dual_segments_1d, dual_segments_l1, dual_segments_unit
from .halfplane import solve_general, solve_line_separable_unit, solve_lower_only
from .l2 import dual_segments_l2
from .linf import dual_segments_linf
from .model import HalfPlaneInstance, Metric, SeparableInstance, normalize, validate
from .noncontainment import noncontainment_subset
from .public_api import _get_ctx
from .solution import HitSolution

logger = logging.getLogger("hitset")

ALGOS = ("auto", "oracle", "brute-dual", "fast")

_FAST = {
    Metric.ONED: dual_segments_1d,
    Metric.UNIT: dual_segments_unit,
    Metric.L1: dual_segments_l1,
}


@dataclass
class SolveStats:
    """Counters filled in by `solve`; fields a path does not touch stay
    None.

    ``segments_emitted`` counts the dual segments as the generator produced
    them, duplicates included, on every path. ``segments_dedup`` counts what
    reached the coverage step.
    """

    problem: str = None
    algo: str = None
    n: int = None
    m: int = None
    kept: int = None
    kappa: int = None
    faces: int = None
    paths: int = None
    segments_emitted: int = None
    segments_dedup: int = None
    duals: object = None
    seconds: float = None

    def as_row(self):
        """The scalar counters, for CSV output and ``--stats``."""
        return {
            k: v for k, v in self.__dict__.items() if k != "duals" and v is not None
        }


def _solve_disks(instance, algo, stats):
    if not instance.disks:
        return HitSolution.optimal((), 0.0)
    kept = noncontainment_subset(instance.disks).kept
    stats.kept = len(kept)
    points, metric = instance.points, instance.metric
    if algo == "brute-dual":
        segments = dual_segments_bruteforce(points, kept, metric)
        return solve_from_segments(kept, segments, stats=stats)
    if metric in _FAST:
        segments = _FAST[metric](points, kept)
        check_single_segment_per_point(segments, metric)
        return solve_from_segments(kept, segments, stats=stats)
    if metric is Metric.LINF:
        segments = dual_segments_linf(points, kept)
        emitted = len(segments)
        deduped = dedup_and_prune(segments)
        pruned = dedup_and_prune(deduped, prune=True)
        bound = 2 * len(points) + len(kept)
        if len(pruned) > bound:
            raise exceptions.HitsetInvariantError(
                "%d non-redundant dual segments exceed 2n+m=%d" % (len(pruned), bound)
            )
        segments = pruned if _get_ctx().linf_prune else deduped
        return solve_from_segments(kept, segments, stats=stats, emitted=emitted)
    segments = dual_segments_l2(points, kept, stats=stats)
    return solve_from_segments(
        kept, segments, stats=stats, emitted=stats.segments_emitted
    )


def solve(instance, algo="auto", stats=None):
    """Minimum-weight hitting set of an instance.

    Parameters
    ----------
    instance: Instance, SeparableInstance or HalfPlaneInstance
        Input in any order; it is normalized and validated first.
    algo: str
        ``"fast"`` for the specialised dual segment generators,
        ``"brute-dual"`` for the O(nm) dual construction, ``"oracle"`` for
        exhaustive search on small inputs. ``"auto"`` picks ``"fast"``.
    stats: SolveStats, optional
        Receives sizes, counters and the dual instance.

    Returns
    -------
    HitSolution
        Chosen point ids refer to the input points. Infeasibility is
        reported through the status, not raised.

    Raises
    ------
    HitsetValidationError
        If the instance violates the model or general position.
    """
    if algo not in ALGOS:
        raise exceptions.HitsetError(
            "unknown algo %r, expected one of %s" % (algo, ", ".join(ALGOS))
        )
    if algo == "auto":
        algo = "fast"
    stats = stats if stats is not None else SolveStats()
    instance = normalize(instance)
    validate(instance).raise_if_invalid()
    stats.problem, stats.algo = instance.problem, algo
    stats.n, stats.m = instance.n, instance.m
    logger.debug(
        "solving %s with %s: n=%d m=%d", instance.problem, algo, instance.n, instance.m
    )
    start = time.perf_counter()
    if algo == "oracle":
        from .oracle import oracle_optimal

        solution = oracle_optimal(instance)
    elif isinstance(instance, HalfPlaneInstance):
        if instance.lower_only or instance.upper_only:
            solution = solve_lower_only(
                instance.points, instance.halfplanes, stats=stats
            )
        else:
            solution = solve_general(instance.points, instance.halfplanes)
    elif isinstance(instance, SeparableInstance):
        solution = solve_line_separable_unit(instance, algo=algo, stats=stats)
    else:
        solution = _solve_disks(instance, algo, stats)
    stats.seconds = time.perf_counter() - start
    logger.debug("%s in %.3fs", solution, stats.seconds)
    return solution
