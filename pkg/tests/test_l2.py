import math

import pytest

import hitset
from hitset.coverage import DualSegment
from hitset.dual import dedup_and_prune, dual_segments_bruteforce
from hitset.l2 import (
    ArcFamily,
    ArrangementVertex,
    Face,
    IntervalSet,
    build_arrangement,
    build_face_graph,
    dual_segments_l2,
    initial_face_interval,
    kappa,
    process_path,
)
from hitset.model import Disk, Metric, SeparableInstance, WeightedPoint, normalize
from hitset.noncontainment import noncontainment_subset
from hitset.solver import SolveStats, solve

from .utils import prepared, random_instance, segment_set

TWO_DISKS = [Disk(0.0, 1.0, 0), Disk(1.0, 1.0, 1)]
THREE_POINTS = [
    WeightedPoint(-0.5, 0.2, 1.0, 0),  # first disk only
    WeightedPoint(0.45, 0.3, 2.0, 1),  # lens
    WeightedPoint(1.5, 0.2, 3.0, 2),  # second disk only
]


def test_single_crossing():
    arrangement = build_arrangement(TWO_DISKS)
    assert arrangement.kappa == 1
    assert arrangement.cross_x[0] == pytest.approx(0.5)
    assert arrangement.cross_y[0] == pytest.approx(math.sqrt(0.75))
    assert (int(arrangement.cross_a[0]), int(arrangement.cross_b[0])) == (0, 1)
    kinds = [v.kind for v in arrangement.vertices()]
    assert kinds.count("crossing") == 1
    assert kinds.count("left") == kinds.count("right") == 2


def test_kappa_counts_overlapping_pairs():
    assert kappa(TWO_DISKS) == 1
    assert kappa([Disk(0.0, 1.0, 0), Disk(5.0, 1.0, 1)]) == 0
    chain = [Disk(float(c), 1.2, c) for c in range(4)]
    # neighbours and next-but-one neighbours overlap
    assert kappa(chain) == 3 + 2
    assert kappa([]) == 0


def test_face_graph_of_two_disks():
    graph = build_face_graph(build_arrangement(TWO_DISKS), THREE_POINTS)
    assert graph.kappa == 1
    assert len(graph.faces) == 3
    assert graph.paths == [[0, 2], [1]]
    assert graph.edges == [(0, 2)]
    assert graph.face_of_point == {0: 0, 1: 1, 2: 2}

    first, lens, second = graph.faces
    assert first.owner == 1 and lens.owner == 2 and second.owner is None
    assert (second.lost, second.gained) == (1, 2)
    assert first.right_vertex.kind == "crossing"
    assert lens.right_vertex == ArrangementVertex(1.0, 0.0, "right", (0,))
    assert [f.key for f in graph.faces] == [(1.0, 0), (2.0, 1), (3.0, 2)]


def test_point_outside_every_disk():
    points = THREE_POINTS + [WeightedPoint(0.5, 5.0, 1.0, 3)]
    graph = build_face_graph(build_arrangement(TWO_DISKS), points)
    assert graph.face_of_point[3] is None
    assert graph.faces[1].key == (2.0, 1)


def test_segments_of_two_disks():
    stats = SolveStats()
    segments = dual_segments_l2(THREE_POINTS, TWO_DISKS, stats=stats)
    assert segment_set(segments) == {(1, 1, 1.0, 0), (1, 2, 2.0, 1), (2, 2, 3.0, 2)}
    assert (stats.kappa, stats.faces, stats.paths) == (1, 3, 2)
    assert stats.segments_emitted == 3


def test_empty_face_emits_nothing():
    points = [THREE_POINTS[0]]
    segments = dual_segments_l2(points, TWO_DISKS)
    assert segments == [DualSegment(1, 1, 1.0, 0)]
    assert dual_segments_l2(points, []) == []


def test_initial_face_interval():
    arcs = ArcFamily([Disk(float(c), 1.2, c) for c in range(4)])
    # left endpoint of disk 4 at x=1.8 lies in disks 2, 3 and 4
    assert initial_face_interval(arcs, 4) == (2, 4)
    assert initial_face_interval(arcs, 1) == (1, 1)
    far = ArcFamily([Disk(0.0, 1.0, 0), Disk(10.0, 1.0, 1)])
    assert initial_face_interval(far, 2) == (2, 2)


def test_interval_set():
    runs = IntervalSet()
    runs.add(1, 3, 0)
    runs.add(6, 6, 2)
    assert len(runs) == 2
    assert runs.find(2) == 1
    assert runs.find(6) == 6
    assert runs.find(4) is None
    assert runs.find(0) is None
    assert list(runs) == [(1, 3, 0), (6, 6, 2)]
    assert runs.remove(1) == (3, 0)
    assert runs.find(2) is None
    assert list(runs) == [(6, 6, 2)]


def test_process_path_rejects_unknown_crossing():
    v = ArrangementVertex(0.0, 0.0, "left", (0,))
    faces = [
        Face(0, owner=1, left_vertex=v),
        Face(1, owner=None, left_vertex=v, parent=0, lost=3, gained=4),
    ]
    with pytest.raises(hitset.exceptions.HitsetInvariantError, match="face 1"):
        process_path(faces, (1, 1))


def test_triple_point_is_degenerate():
    # all three boundaries pass through (0.5, sqrt(0.75))
    disks = [Disk(0.0, 1.0, 0), Disk(1.0, 1.0, 1), Disk(1.2, math.sqrt(1.24), 2)]
    with pytest.raises(hitset.exceptions.HitsetDegeneracyError):
        build_arrangement(disks)


@pytest.mark.parametrize("seed", range(8))
def test_face_graph_structure(seed):
    instance = random_instance("l2", 50, 40, seed=seed)
    points, kept = prepared(instance)
    arrangement = build_arrangement(kept)
    assert arrangement.kappa == kappa(kept)
    graph = build_face_graph(arrangement, points)
    # one initial face per disk, one new face per crossing
    assert len(graph.paths) == len(kept)
    assert len(graph.faces) == len(kept) + graph.kappa
    assert sorted(i for path in graph.paths for i in path) == list(
        range(len(graph.faces))
    )
    for p in points:
        f = graph.face_of_point[p.id]
        if f is not None:
            assert graph.faces[f].key <= (p.w, p.id)


@pytest.mark.parametrize("seed", range(10))
@pytest.mark.parametrize("ensure_hittable", [True, False])
def test_matches_bruteforce(seed, ensure_hittable):
    instance = random_instance("l2", 60, 40, seed=seed, ensure_hittable=ensure_hittable)
    points, kept = prepared(instance)
    brute = dedup_and_prune(dual_segments_bruteforce(points, kept, Metric.L2))
    assert segment_set(dual_segments_l2(points, kept)) == segment_set(brute)


@pytest.mark.parametrize("seed", range(10))
def test_separable_matches_bruteforce(seed):
    instance = normalize(random_instance("separable-unit", 50, 30, seed=seed))
    reaching = [s for s in instance.disks if s.reaches_axis]
    kept = noncontainment_subset(reaching).kept
    brute = dedup_and_prune(dual_segments_bruteforce(instance.points, kept, Metric.L2))
    fast = dual_segments_l2(instance.points, kept)
    assert segment_set(fast) == segment_set(brute)


@pytest.mark.parametrize("problem", ["l2", "separable-unit"])
@pytest.mark.parametrize("seed", range(10))
def test_solve_fast_matches_brute(problem, seed):
    hittable = seed % 2 == 0
    instance = random_instance(problem, 40, 40, seed=seed, ensure_hittable=hittable)
    fast = solve(instance, algo="fast")
    brute = solve(instance, algo="brute-dual")
    assert fast.status == brute.status
    assert fast.total_weight == brute.total_weight


def test_separable_examples():
    instance = SeparableInstance.from_tuples(
        1.0, points=[(0.5, 0.3, 4.0)], disks=[(0.0, -0.2), (1.0, -0.2)]
    )
    solution = solve(instance)
    assert solution.ok and solution.sorted_ids == (0,)
    assert solution.total_weight == 4.0

    unreachable = SeparableInstance.from_tuples(
        1.0, points=[(0.5, 0.3, 4.0)], disks=[(0.0, -2.0)]
    )
    assert not solve(unreachable).ok
