import numpy as np
import pytest
from hypothesis import given, strategies as st

import hitset
from hitset.model import (
    Disk,
    HalfPlane,
    HalfPlaneInstance,
    Instance,
    Metric,
    SeparableDisk,
    SeparableInstance,
    Side,
    WeightedPoint,
    hit_matrix,
    hits,
    normalize,
    validate,
)

from .utils import DISK_PROBLEMS, random_instance

# Multiples of 1/8 keep every predicate computation exact
eighths = st.integers(-80, 80).map(lambda v: v / 8)
positive_eighths = st.integers(1, 80).map(lambda v: v / 8)


@pytest.mark.parametrize(
    "metric, expected",
    [(Metric.L2, True), (Metric.L1, False), (Metric.LINF, True), (Metric.UNIT, True)],
)
def test_hits_metrics(metric, expected):
    p = WeightedPoint(3.0, 3.0, 1.0, 0)
    assert hits(p, Disk(0.0, 5.0, 0), metric) is expected


def test_hits_1d():
    s = Disk(0.0, 2.0, 0)
    assert hits(WeightedPoint(1.0, 0.0, 1.0, 0), s, Metric.ONED)
    assert not hits(WeightedPoint(2.5, 0.0, 1.0, 0), s, Metric.ONED)
    assert not hits(WeightedPoint(1.0, 0.5, 1.0, 0), s, Metric.ONED)


def test_hits_halfplane_and_separable():
    p = WeightedPoint(1.0, 0.5, 1.0, 0)
    assert hits(p, HalfPlane(1.0, 0.0, Side.LOWER, 0))
    assert not hits(p, HalfPlane(1.0, 0.0, Side.UPPER, 0))
    assert hits(p, SeparableDisk(1.0, -0.2, 1.0, 0))
    assert not hits(p, SeparableDisk(1.0, -0.6, 1.0, 0))


@given(eighths, st.integers(0, 80).map(lambda v: v / 8), eighths, positive_eighths)
def test_hit_projects_into_extent(x, y, c, r):
    s = Disk(c, r, 0)
    for metric in Metric:
        p = WeightedPoint(x, 0.0 if metric is Metric.ONED else y, 1.0, 0)
        if hits(p, s, metric):
            assert s.left < x < s.right


@given(eighths, eighths, eighths, positive_eighths, positive_eighths)
def test_hits_monotone_under_containment(x, y, c, r, extra):
    p = WeightedPoint(x, abs(y), 1.0, 0)
    inner, outer = Disk(c, r, 0), Disk(c, r + extra, 1)
    for metric in (Metric.L1, Metric.L2, Metric.LINF):
        if hits(p, inner, metric):
            assert hits(p, outer, metric)


def test_normalize_reflects_and_sorts():
    instance = Instance.from_tuples("l2", [(5, 1, 1), (2, -3, 1)], [(4, 2), (0, 5)])
    out = normalize(instance)
    assert [(p.x, p.y, p.id) for p in out.points] == [(2, 3, 1), (5, 1, 0)]
    assert [s.id for s in out.disks] == [1, 0]


def test_normalize_idempotent():
    instance = random_instance("linf", 8, 6, seed=4)
    once = normalize(instance)
    assert normalize(once) == once


def test_validate_duplicate_x():
    instance = Instance.from_tuples("l2", [(1, 0.5, 1), (1, 0.2, 1)], [(0, 5)])
    assert "duplicate point x" in validate(instance).kinds()


def test_validate_point_on_boundary():
    instance = Instance.from_tuples("l2", [(0, 5, 1)], [(0, 5)])
    report = validate(instance)
    assert report.kinds() == {"point on boundary"}
    assert report.violations[0].subjects == (0, 0)


@pytest.mark.parametrize(
    "instance, kind",
    [
        (Instance.from_tuples("l1", [(0, 0.5, 0)], [(0, 2)]), "nonpositive weight"),
        (Instance.from_tuples("l1", [(0, 0.5, 1)], [(0, -2)]), "nonpositive radius"),
        (Instance.from_tuples("1d", [(0, 0.5, 1)], [(0, 2)]), "point off the line"),
        (
            Instance.from_tuples("unit", [(0, 0.5, 1)], [(0, 2), (1, 3)]),
            "unequal unit radii",
        ),
        (
            Instance.from_tuples("l2", [(9, 0.5, 1)], [(0, 2), (1, 1)]),
            "coincident extent endpoints",
        ),
        (
            Instance.from_tuples("l2", [(float("nan"), 0.5, 1)], [(0, 2)]),
            "non-finite value",
        ),
        (
            SeparableInstance.from_tuples(1, [(0, -0.5, 1)], [(0, -0.2)]),
            "point below line",
        ),
        (
            SeparableInstance.from_tuples(1, [(0, 0.5, 1)], [(0, 0.2)]),
            "center above line",
        ),
        (
            HalfPlaneInstance.from_tuples([(1, 1, 1)], [(1, 0, "lower")]),
            "point on boundary",
        ),
    ],
)
def test_validate_violations(instance, kind):
    assert kind in validate(instance).kinds()


@pytest.mark.parametrize("problem", DISK_PROBLEMS + ("separable-unit", "halfplane"))
def test_validate_random_instance(problem):
    report = validate(random_instance(problem, 12, 10, seed=7))
    assert report.ok
    report.raise_if_invalid()


def test_raise_if_invalid():
    instance = Instance.from_tuples("l2", [(1, 0.5, 1), (1, 0.2, 1)], [(0, 5)])
    with pytest.raises(hitset.exceptions.HitsetValidationError, match="duplicate"):
        validate(instance).raise_if_invalid()


def test_validate_tolerance_option():
    instance = Instance.from_tuples("l2", [(0, 0.5, 1), (1e-7, 0.2, 1)], [(0, 5)])
    assert validate(instance).ok
    assert "duplicate point x" in validate(instance, eps=1e-6).kinds()


def test_hit_matrix():
    instance = Instance.from_tuples(
        "l2", [(0, 1, 1), (5.2, 0.5, 1)], [(0, 2), (0.5, 2), (5, 1)]
    )
    expected = np.array([[True, True, False], [False, False, True]])
    np.testing.assert_array_equal(hit_matrix(instance), expected)
    empty = Instance.from_tuples("l2", [(0, 1, 1)], [])
    assert hit_matrix(empty).shape == (1, 0)


def test_hit_matrix_matches_hits():
    instance = random_instance("l1", 15, 12, seed=2, ensure_hittable=False)
    matrix = hit_matrix(instance)
    for i, p in enumerate(instance.points):
        for j, s in enumerate(instance.disks):
            assert matrix[i, j] == hits(p, s, Metric.L1)
