# Copyright (c) 2024, The hitset authors. All rights reserved.
# See file LICENSE for terms.

"""Input model shared by all solvers.

Three kinds of instances exist:

* `Instance`: weighted points and disks centered on the x-axis under one
  `Metric`.
* `SeparableInstance`: points on or above the x-axis and equal-radius disks
  whose centers lie on or below it.
* `HalfPlaneInstance`: points and non-vertical lower/upper half-planes.

All of them expose ``points``, ``constraints``, ``problem`` and
``hit_matrix()`` so that the oracle, verification and the brute-force dual
construction can treat them uniformly.
"""

import enum
import functools
import logging
import math
from dataclasses import dataclass, field, replace

import numpy as np

from . import exceptions
from .public_api import _get_ctx

logger = logging.getLogger("hitset")


class Metric(enum.Enum):
    ONED = "1d"
    UNIT = "unit"
    L1 = "l1"
    L2 = "l2"
    LINF = "linf"


class Side(enum.Enum):
    LOWER = "lower"
    UPPER = "upper"


PROBLEMS = ("1d", "unit", "l1", "l2", "linf", "separable-unit", "halfplane")


@dataclass(frozen=True)
class WeightedPoint:
    x: float
    y: float
    w: float
    id: int


@dataclass(frozen=True)
class Disk:
    """A disk whose center lies on the x-axis."""

    center_x: float
    radius: float
    id: int

    @property
    def center_y(self):
        return 0.0

    @property
    def left(self):
        return self.center_x - self.radius

    @property
    def right(self):
        return self.center_x + self.radius

    @property
    def top(self):
        # Upper edge ordinate of the L-infinity square
        return self.radius


@dataclass(frozen=True)
class SeparableDisk:
    """A disk centered on or below the x-axis.

    ``left`` and ``right`` delimit its chord on the x-axis; both are equal to
    ``center_x`` when the disk does not reach above the axis.
    """

    center_x: float
    center_y: float
    radius: float
    id: int

    @property
    def half_chord(self):
        if self.center_y <= -self.radius:
            return 0.0
        return math.sqrt(self.radius ** 2 - self.center_y ** 2)

    @property
    def reaches_axis(self):
        return self.center_y > -self.radius

    @property
    def left(self):
        return self.center_x - self.half_chord

    @property
    def right(self):
        return self.center_x + self.half_chord


@dataclass(frozen=True)
class HalfPlane:
    """The half-plane ``y <= a*x + b`` (lower) or ``y >= a*x + b`` (upper)."""

    a: float
    b: float
    side: Side
    id: int

    def line_at(self, x):
        return self.a * x + self.b


def _array(values, dtype=np.float64):
    return np.fromiter(values, dtype=dtype)


class _ArraysMixin:
    # functools.cached_property writes into the instance __dict__ directly,
    # which works on frozen dataclasses without slots.

    @functools.cached_property
    def xs(self):
        return _array((p.x for p in self.points))

    @functools.cached_property
    def ys(self):
        return _array((p.y for p in self.points))

    @functools.cached_property
    def weights(self):
        return _array((p.w for p in self.points))

    @functools.cached_property
    def point_ids(self):
        return _array((p.id for p in self.points), dtype=np.int64)

    @property
    def n(self):
        return len(self.points)

    @property
    def m(self):
        return len(self.constraints)


@dataclass(frozen=True)
class Instance(_ArraysMixin):
    metric: Metric
    points: tuple
    disks: tuple

    @classmethod
    def from_tuples(cls, metric, points=(), disks=()):
        """Build an instance from ``(x, y, w)`` and ``(center_x, radius)``
        tuples; ids are assigned in the given order."""
        return cls(
            Metric(metric),
            tuple(WeightedPoint(*map(float, p), i) for i, p in enumerate(points)),
            tuple(Disk(float(c), float(r), j) for j, (c, r) in enumerate(disks)),
        )

    @property
    def problem(self):
        return self.metric.value

    @property
    def constraints(self):
        return self.disks

    def hit_matrix(self, rows=slice(None)):
        cx = _array((s.center_x for s in self.disks))
        r = _array((s.radius for s in self.disks))
        return disk_hit_matrix(
            self.xs[rows], self.ys[rows], cx, np.zeros_like(cx), r, self.metric
        )


@dataclass(frozen=True)
class SeparableInstance(_ArraysMixin):
    points: tuple
    disks: tuple
    radius: float

    @classmethod
    def from_tuples(cls, radius, points=(), disks=()):
        radius = float(radius)
        return cls(
            tuple(WeightedPoint(*map(float, p), i) for i, p in enumerate(points)),
            tuple(
                SeparableDisk(float(cx), float(cy), radius, j)
                for j, (cx, cy) in enumerate(disks)
            ),
            radius,
        )

    @property
    def problem(self):
        return "separable-unit"

    @property
    def metric(self):
        return Metric.L2

    @property
    def constraints(self):
        return self.disks

    def hit_matrix(self, rows=slice(None)):
        cx = _array((s.center_x for s in self.disks))
        cy = _array((s.center_y for s in self.disks))
        r = np.full(len(self.disks), self.radius)
        return disk_hit_matrix(self.xs[rows], self.ys[rows], cx, cy, r, Metric.L2)


@dataclass(frozen=True)
class HalfPlaneInstance(_ArraysMixin):
    points: tuple
    halfplanes: tuple

    @classmethod
    def from_tuples(cls, points=(), halfplanes=()):
        return cls(
            tuple(WeightedPoint(*map(float, p), i) for i, p in enumerate(points)),
            tuple(
                HalfPlane(float(a), float(b), Side(side), j)
                for j, (a, b, side) in enumerate(halfplanes)
            ),
        )

    @property
    def problem(self):
        return "halfplane"

    @property
    def constraints(self):
        return self.halfplanes

    @property
    def lower_only(self):
        return all(h.side is Side.LOWER for h in self.halfplanes)

    @property
    def upper_only(self):
        return all(h.side is Side.UPPER for h in self.halfplanes)

    def hit_matrix(self, rows=slice(None)):
        return halfplane_hit_matrix(self.xs[rows], self.ys[rows], self.halfplanes)


def _inside(dx, dy, r, metric):
    if metric is Metric.ONED:
        return (dx < r) & (dy == 0)
    if metric is Metric.L1:
        return dx + dy < r
    if metric is Metric.LINF:
        return np.maximum(dx, dy) < r
    return dx * dx + dy * dy < r * r


def disk_hit_matrix(xs, ys, cx, cy, r, metric):
    """Vectorized strict containment of points in disks.

    Returns a boolean array of shape ``(len(xs), len(cx))``.
    """
    dx = np.abs(xs[:, None] - cx[None, :])
    dy = np.abs(ys[:, None] - cy[None, :])
    return _inside(dx, dy, r[None, :], metric)


def disk_hits_paired(xs, ys, cx, cy, r, metric):
    """Whether point ``k`` lies strictly inside disk ``k``, for every ``k``."""
    return _inside(np.abs(xs - cx), np.abs(ys - cy), r, metric)


def halfplane_hits_paired(xs, ys, a, b, lower):
    """Whether point ``k`` lies strictly inside half-plane ``k``."""
    line = xs * a + b
    return np.where(lower, ys < line, ys > line)


def halfplane_hit_matrix(xs, ys, halfplanes):
    a = _array((h.a for h in halfplanes))
    b = _array((h.b for h in halfplanes))
    lower = np.fromiter((h.side is Side.LOWER for h in halfplanes), dtype=bool)
    return halfplane_hits_paired(
        xs[:, None], ys[:, None], a[None, :], b[None, :], lower[None, :]
    )


def hits(p, s, metric=None):
    """Whether point `p` lies strictly inside `s`.

    `s` is a `Disk` (interpreted under `metric`), a `SeparableDisk` or a
    `HalfPlane`; `metric` is only consulted for `Disk`.
    """
    if isinstance(s, HalfPlane):
        line = s.line_at(p.x)
        return p.y < line if s.side is Side.LOWER else p.y > line
    dx = abs(p.x - s.center_x)
    dy = abs(p.y - s.center_y)
    if isinstance(s, SeparableDisk) or metric in (Metric.L2, Metric.UNIT):
        return dx * dx + dy * dy < s.radius * s.radius
    if metric is Metric.ONED:
        return p.y == 0 and dx < s.radius
    if metric is Metric.L1:
        return dx + dy < s.radius
    if metric is Metric.LINF:
        return max(dx, dy) < s.radius
    raise exceptions.HitsetError("unknown metric %r" % (metric,))


def normalize(instance):
    """Bring an instance into the canonical form expected by the solvers.

    Line-constrained instances have their points reflected above the x-axis.
    Points are sorted by x and disks by center; ids are preserved so that
    solutions can be reported in terms of the input.
    """
    key_point = lambda p: (p.x, p.id)  # noqa: E731
    if isinstance(instance, Instance):
        points = sorted(
            (p if p.y >= 0 else replace(p, y=-p.y) for p in instance.points),
            key=key_point,
        )
        disks = sorted(instance.disks, key=lambda s: (s.center_x, s.id))
        return Instance(instance.metric, tuple(points), tuple(disks))
    points = tuple(sorted(instance.points, key=key_point))
    if isinstance(instance, SeparableInstance):
        disks = sorted(instance.disks, key=lambda s: (s.center_x, s.id))
        return SeparableInstance(points, tuple(disks), instance.radius)
    return HalfPlaneInstance(points, instance.halfplanes)


@dataclass(frozen=True)
class Violation:
    kind: str
    message: str
    subjects: tuple = ()

    def __str__(self):
        return "%s: %s" % (self.kind, self.message)


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple = field(default_factory=tuple)

    @property
    def ok(self):
        return not self.violations

    def kinds(self):
        return {v.kind for v in self.violations}

    def raise_if_invalid(self):
        if self.violations:
            raise exceptions.HitsetValidationError(self)


def coincident(a, b, eps):
    """Tolerance test used for every general position check."""
    return np.abs(a - b) <= eps * np.maximum(1.0, np.maximum(np.abs(a), np.abs(b)))


def _close_pairs(values, eps):
    """Index pairs of values (in sorted order) that coincide within eps."""
    if len(values) < 2:
        return []
    order = np.argsort(values, kind="stable")
    v = values[order]
    close = np.nonzero(coincident(v[1:], v[:-1], eps))[0]
    return [(int(order[i]), int(order[i + 1])) for i in close]


def _metric_distance(dx, dy, metric):
    if metric is Metric.L1:
        return dx + dy
    if metric is Metric.LINF:
        return np.maximum(dx, dy)
    return np.hypot(dx, dy)


def _check_points(instance, eps, out):
    if instance.n == 0:
        return
    finite = np.isfinite(instance.xs) & np.isfinite(instance.ys)
    finite &= np.isfinite(instance.weights)
    for i in np.nonzero(~finite)[0]:
        p = instance.points[i]
        out.append(Violation("non-finite value", "point %d" % p.id, (p.id,)))
    for i in np.nonzero(finite & (instance.weights <= 0))[0]:
        p = instance.points[i]
        out.append(
            Violation("nonpositive weight", "point %d has w=%r" % (p.id, p.w), (p.id,))
        )
    for i, k in _close_pairs(np.where(finite, instance.xs, 0.0), eps):
        a, b = instance.points[i], instance.points[k]
        out.append(
            Violation(
                "duplicate point x",
                "points %d and %d share x=%r" % (a.id, b.id, a.x),
                (a.id, b.id),
            )
        )


def _check_boundaries(instance, disks, metric, eps, out):
    """Report points within tolerance of a disk boundary.

    Only points whose x lies within the disk's (tolerance-widened) x-extent
    are examined, located by binary search on the x-sorted points.
    """
    order = np.argsort(instance.xs, kind="stable")
    xs, ys = instance.xs[order], instance.ys[order]
    for s in disks:
        if not (math.isfinite(s.center_x) and math.isfinite(s.radius)):
            continue
        slack = eps * max(1.0, abs(s.center_x) + s.radius)
        lo = np.searchsorted(xs, s.center_x - s.radius - slack, side="left")
        hi = np.searchsorted(xs, s.center_x + s.radius + slack, side="right")
        if lo >= hi:
            continue
        dx = np.abs(xs[lo:hi] - s.center_x)
        dy = np.abs(ys[lo:hi] - s.center_y)
        d = _metric_distance(dx, dy, metric)
        near = np.abs(d - s.radius) <= eps * max(1.0, s.radius)
        for i in np.nonzero(near)[0]:
            p = instance.points[order[lo + i]]
            out.append(
                Violation(
                    "point on boundary",
                    "point %d lies on the boundary of disk %d" % (p.id, s.id),
                    (p.id, s.id),
                )
            )


def _check_extents(disks, eps, out):
    if len(disks) < 2:
        return
    ends = _array(v for s in disks for v in (s.left, s.right))
    for i, k in _close_pairs(ends, eps):
        a, b = disks[i // 2], disks[k // 2]
        out.append(
            Violation(
                "coincident extent endpoints",
                "disks %d and %d have coincident endpoints" % (a.id, b.id),
                (a.id, b.id),
            )
        )


def _validate_disks(instance, eps, out):
    good = []
    for s in instance.disks:
        if not (math.isfinite(s.center_x) and math.isfinite(s.radius)):
            out.append(Violation("non-finite value", "disk %d" % s.id, (s.id,)))
        elif s.radius <= 0:
            out.append(
                Violation(
                    "nonpositive radius",
                    "disk %d has r=%r" % (s.id, s.radius),
                    (s.id,),
                )
            )
        else:
            good.append(s)
    if instance.metric is Metric.ONED:
        for p in instance.points:
            if p.y != 0:
                out.append(
                    Violation(
                        "point off the line",
                        "1d point %d has y=%r" % (p.id, p.y),
                        (p.id,),
                    )
                )
    if instance.metric is Metric.UNIT and len({s.radius for s in good}) > 1:
        out.append(Violation("unequal unit radii", "unit disks differ in radius"))
    _check_extents(good, eps, out)
    _check_boundaries(instance, good, instance.metric, eps, out)


def _validate_separable(instance, eps, out):
    if not (math.isfinite(instance.radius) and instance.radius > 0):
        out.append(
            Violation("nonpositive radius", "common radius is %r" % instance.radius)
        )
        return
    for p in instance.points:
        if p.y < 0:
            out.append(
                Violation(
                    "point below line", "point %d has y=%r" % (p.id, p.y), (p.id,)
                )
            )
    good = []
    for s in instance.disks:
        if not (math.isfinite(s.center_x) and math.isfinite(s.center_y)):
            out.append(Violation("non-finite value", "disk %d" % s.id, (s.id,)))
        elif s.center_y > 0:
            out.append(
                Violation(
                    "center above line",
                    "disk %d has center y=%r" % (s.id, s.center_y),
                    (s.id,),
                )
            )
        else:
            good.append(s)
    _check_extents([s for s in good if s.reaches_axis], eps, out)
    _check_boundaries(instance, good, Metric.L2, eps, out)


def _validate_halfplanes(instance, eps, out):
    for h in instance.halfplanes:
        if not (math.isfinite(h.a) and math.isfinite(h.b)):
            out.append(
                Violation(
                    "non-finite value",
                    "half-plane %d is vertical or undefined" % h.id,
                    (h.id,),
                )
            )
            continue
        if instance.n == 0:
            continue
        line = h.a * instance.xs + h.b
        near = coincident(instance.ys, line, eps)
        for i in np.nonzero(near)[0]:
            p = instance.points[i]
            out.append(
                Violation(
                    "point on boundary",
                    "point %d lies on the line of half-plane %d" % (p.id, h.id),
                    (p.id, h.id),
                )
            )


def validate(instance, eps=None):
    """Check an instance against the model and general position rules.

    Parameters
    ----------
    instance: Instance, SeparableInstance or HalfPlaneInstance
        Normalized instance to check.
    eps: float, optional
        Relative tolerance. Defaults to the ``EPSILON`` option.

    Returns
    -------
    ValidationReport
        Every violation found; the instance is valid iff the report is empty.
    """
    if eps is None:
        eps = _get_ctx().epsilon
    out = []
    _check_points(instance, eps, out)
    if isinstance(instance, Instance):
        _validate_disks(instance, eps, out)
    elif isinstance(instance, SeparableInstance):
        _validate_separable(instance, eps, out)
    elif isinstance(instance, HalfPlaneInstance):
        _validate_halfplanes(instance, eps, out)
    else:
        raise exceptions.HitsetError("cannot validate %r" % type(instance))
    if out:
        logger.debug("validation found %d violations", len(out))
    return ValidationReport(tuple(out))


def hit_matrix(instance):
    """Boolean ``n x m`` matrix of point/constraint containment."""
    if instance.n == 0 or instance.m == 0:
        return np.zeros((instance.n, instance.m), dtype=bool)
    return instance.hit_matrix()
