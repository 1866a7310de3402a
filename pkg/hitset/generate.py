# Copyright (c) 2024, The hitset authors. All rights reserved.
# See file LICENSE for terms.

"""Seeded random instances in general position."""

import logging
from dataclasses import dataclass

import numpy as np

from . import exceptions
from .model import (
    PROBLEMS,
    HalfPlaneInstance,
    Instance,
    Metric,
    SeparableInstance,
    disk_hits_paired,
    halfplane_hits_paired,
    validate,
)
from .public_api import _get_ctx

logger = logging.getLogger("hitset")

# Violation kinds fixed by redrawing the last subject: a point for the first,
# a constraint for the others. Anything else redraws the whole instance.
_POINT_FIXES = ("duplicate point x",)
_CONSTRAINT_FIXES = ("coincident extent endpoints", "point on boundary")


@dataclass(frozen=True)
class GenParams:
    """Parameters of `generate`.

    ``radius_range`` bounds disk radii; unit and separable problems use its
    upper end as the common radius. ``y_max`` bounds point heights and
    defaults to a value keeping witnesses inside their disks.
    ``separable_depth`` bounds how far below the axis separable centers lie,
    as a fraction of the radius. ``sides`` is ``"lower"``, ``"upper"`` or
    ``"mixed"`` for half-planes.
    """

    problem: str
    n: int
    m: int
    seed: int = 0
    span: float = 100.0
    radius_range: tuple = (1.0, 10.0)
    wmax: int = 9
    ensure_hittable: bool = False
    y_max: float = None
    separable_depth: float = 0.5
    sides: str = "mixed"

    def __post_init__(self):
        if self.problem not in PROBLEMS:
            raise exceptions.HitsetError("unknown problem %r" % self.problem)
        if self.n < 0 or self.m < 0:
            raise exceptions.HitsetError("n and m must be non-negative")
        if self.wmax < 1:
            raise exceptions.HitsetError("wmax must be at least 1")
        lo, hi = self.radius_range
        if not 0 < lo <= hi:
            raise exceptions.HitsetError("bad radius range %r" % (self.radius_range,))
        if not 0 <= self.separable_depth < 1:
            raise exceptions.HitsetError("separable_depth must lie in [0, 1)")
        if self.sides not in ("lower", "upper", "mixed"):
            raise exceptions.HitsetError("unknown sides %r" % self.sides)


class _Draft:
    """Coordinates of an instance being drawn, in draw order.

    In ensure-hittable mode ``witness[j]`` is the point constraint ``j`` is
    built around. `build` sorts the draft into an instance and keeps the
    draw index behind every id, so that a violation found by `validate`
    can be fixed by redrawing only the coordinates it names.
    """

    def __init__(self, rng, params):
        n, m = params.n, params.m
        self.rng, self.params = rng, params
        self.xs = np.zeros(n)
        self.ys = np.zeros(n)
        self.ws = rng.integers(1, params.wmax + 1, size=n).astype(float)
        self.witness = None
        if params.ensure_hittable and m:
            self.witness = rng.integers(n, size=m)
        self.point_of_id = np.arange(n)
        self.constraint_of_id = np.arange(m)
        self.redraw_all()

    def redraw_all(self):
        self.redraw(np.arange(self.params.n), np.arange(self.params.m))

    def redraw(self, points, constraints):
        """Draw new coordinates for the given point and constraint draw
        indices. Constraints built around a redrawn point follow it."""
        points = np.unique(np.asarray(points, dtype=np.int64))
        constraints = np.asarray(constraints, dtype=np.int64)
        if len(points):
            self.draw_points(points)
            if self.witness is not None:
                moved = np.nonzero(np.isin(self.witness, points))[0]
                constraints = np.concatenate([constraints, moved])
        constraints = np.unique(constraints)
        if len(constraints):
            self.draw_constraints(constraints)

    def repair(self, report):
        """Redraw what the violations of `report` name.

        Returns False when some violation cannot be traced to a single
        point or constraint.
        """
        points, constraints = [], []
        for v in report.violations:
            if not v.subjects:
                return False
            if v.kind in _POINT_FIXES:
                points.append(self.point_of_id[v.subjects[-1]])
            elif v.kind in _CONSTRAINT_FIXES:
                constraints.append(self.constraint_of_id[v.subjects[-1]])
            else:
                return False
        self.redraw(points, constraints)
        return True

    def unhit(self):
        """Draw indices of constraints missing their witness."""
        if self.witness is None:
            return np.zeros(0, dtype=np.int64)
        return np.nonzero(~self.witness_hits())[0]

    def _point_order(self):
        order = np.lexsort((self.ws, self.ys, self.xs))
        self.point_of_id = order
        return zip(self.xs[order], self.ys[order], self.ws[order])


class _LineDraft(_Draft):
    def __init__(self, rng, params):
        self.metric = Metric(params.problem)
        self.cx = np.zeros(params.m)
        self.r = np.zeros(params.m)
        hi = params.radius_range[1]
        self.y_max = params.y_max
        if self.y_max is None:
            self.y_max = 0.9 * hi if self.metric is Metric.UNIT else hi
        super().__init__(rng, params)

    def draw_points(self, idx):
        self.xs[idx] = self.rng.uniform(0.0, self.params.span, size=len(idx))
        if self.metric is not Metric.ONED:
            self.ys[idx] = self.rng.uniform(0.0, self.y_max, size=len(idx))

    def draw_constraints(self, idx):
        rng, params, k = self.rng, self.params, len(idx)
        lo, hi = params.radius_range
        unit = self.metric is Metric.UNIT
        r = np.full(k, hi) if unit else rng.uniform(lo, hi, size=k)
        if self.witness is None:
            self.cx[idx] = rng.uniform(0.0, params.span, size=k)
            self.r[idx] = r
            return
        w = self.witness[idx]
        high = self.ys[w] >= r
        if unit:
            # Lowering a point keeps it inside every disk it was in.
            np.minimum.at(
                self.ys, w[high], rng.uniform(0.0, 0.9 * hi, size=high.sum())
            )
        else:
            r[high] = self.ys[w[high]] / rng.uniform(0.3, 0.9, size=high.sum())
        y = self.ys[w]
        if self.metric in (Metric.L2, Metric.UNIT):
            slack = np.sqrt(r * r - y * y)
        elif self.metric is Metric.L1:
            slack = r - y
        else:
            slack = r
        self.cx[idx] = self.xs[w] + rng.uniform(-0.9, 0.9, size=k) * slack
        self.r[idx] = r

    def witness_hits(self):
        w = self.witness
        zeros = np.zeros(len(w))
        return disk_hits_paired(
            self.xs[w], self.ys[w], self.cx, zeros, self.r, self.metric
        )

    def build(self):
        points = list(self._point_order())
        order = np.lexsort((self.r, self.cx))
        self.constraint_of_id = order
        disks = zip(self.cx[order], self.r[order])
        return Instance.from_tuples(self.params.problem, points, disks)


class _SeparableDraft(_Draft):
    def __init__(self, rng, params):
        self.radius = params.radius_range[1]
        self.depth = params.separable_depth * self.radius
        self.y_max = params.y_max
        if self.y_max is None:
            self.y_max = 0.9 * (self.radius - self.depth)
        self.cx = np.zeros(params.m)
        self.cy = np.zeros(params.m)
        super().__init__(rng, params)

    def draw_points(self, idx):
        self.xs[idx] = self.rng.uniform(0.0, self.params.span, size=len(idx))
        self.ys[idx] = self.rng.uniform(0.0, self.y_max, size=len(idx))

    def draw_constraints(self, idx):
        rng, k, r = self.rng, len(idx), self.radius
        cy = -rng.uniform(0.0, self.depth, size=k)
        self.cy[idx] = cy
        if self.witness is None:
            self.cx[idx] = rng.uniform(0.0, self.params.span, size=k)
            return
        w = self.witness[idx]
        high = self.ys[w] - cy >= r
        np.minimum.at(
            self.ys, w[high], rng.uniform(0.0, 0.9, size=high.sum()) * (r + cy[high])
        )
        dy = self.ys[w] - cy
        slack = np.sqrt(r * r - dy * dy)
        self.cx[idx] = self.xs[w] + rng.uniform(-0.9, 0.9, size=k) * slack

    def witness_hits(self):
        w = self.witness
        r = np.full(len(w), self.radius)
        return disk_hits_paired(self.xs[w], self.ys[w], self.cx, self.cy, r, Metric.L2)

    def build(self):
        points = list(self._point_order())
        order = np.lexsort((self.cy, self.cx))
        self.constraint_of_id = order
        disks = zip(self.cx[order], self.cy[order])
        return SeparableInstance.from_tuples(self.radius, points, disks)


class _HalfPlaneDraft(_Draft):
    def __init__(self, rng, params):
        self.a = np.zeros(params.m)
        self.b = np.zeros(params.m)
        self.lower = np.ones(params.m, dtype=bool)
        super().__init__(rng, params)

    def draw_points(self, idx):
        span = self.params.span
        self.xs[idx] = self.rng.uniform(0.0, span, size=len(idx))
        self.ys[idx] = self.rng.uniform(-span / 2, span / 2, size=len(idx))

    def draw_constraints(self, idx):
        rng, params, k = self.rng, self.params, len(idx)
        if params.sides == "mixed":
            lower = rng.integers(2, size=k) == 0
        else:
            lower = np.full(k, params.sides == "lower")
        a = rng.uniform(-2.0, 2.0, size=k)
        if self.witness is None:
            b = rng.uniform(-params.span, params.span, size=k)
        else:
            w = self.witness[idx]
            sign = np.where(lower, 1.0, -1.0)
            offset = rng.uniform(0.05, 0.25, size=k) * params.span
            b = self.ys[w] - a * self.xs[w] + sign * offset
        self.a[idx], self.b[idx], self.lower[idx] = a, b, lower

    def witness_hits(self):
        w = self.witness
        xs, ys = self.xs[w], self.ys[w]
        return halfplane_hits_paired(xs, ys, self.a, self.b, self.lower)

    def build(self):
        points = list(self._point_order())
        sides = ["lower" if lower else "upper" for lower in self.lower]
        return HalfPlaneInstance.from_tuples(points, zip(self.a, self.b, sides))


_DRAFTS = {
    "separable-unit": _SeparableDraft,
    "halfplane": _HalfPlaneDraft,
}


def generate(params):
    """A random valid instance, deterministic in ``params``.

    In ensure-hittable mode every constraint is built around a witness point
    strictly inside it, and only that witness is checked. An instance failing
    validation has the points or constraints named by each violation redrawn
    from the same random stream; each round counts against ``GEN_RETRIES``.

    Raises
    ------
    HitsetError
        If ``ensure_hittable`` is requested without points, or no valid
        instance was found within the retry cap.
    """
    if params.ensure_hittable and params.n == 0 and params.m > 0:
        raise exceptions.HitsetError(
            "cannot hit %d constraints with no points" % params.m
        )
    rng = np.random.default_rng(params.seed)
    draft = _DRAFTS.get(params.problem, _LineDraft)(rng, params)
    retries = _get_ctx().gen_retries
    for attempt in range(retries):
        instance = draft.build()
        report = validate(instance)
        if not report.ok:
            logger.info(
                "attempt %d rejected: %d violations (%s)",
                attempt,
                len(report.violations),
                ", ".join(sorted(report.kinds())),
            )
            if not draft.repair(report):
                draft.redraw_all()
            continue
        unhit = draft.unhit()
        if len(unhit):
            logger.info("attempt %d rejected: %d unhit", attempt, len(unhit))
            draft.redraw((), unhit)
            continue
        return instance
    raise exceptions.HitsetError(
        "no valid %s instance after %d attempts" % (params.problem, retries)
    )
