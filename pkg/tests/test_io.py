import pytest

import hitset
from hitset.io import (
    format_instance,
    format_solution,
    format_weight,
    parse_instance,
    parse_solution,
    read_instance,
    write_duals,
    write_instance,
)
from hitset.model import Metric, Side
from hitset.solution import HitSolution
from hitset.solver import SolveStats, solve

from .utils import random_instance

L2_TEXT = """\
hitset 1
problem l2   # trailing comment
points 2
0.5 0.25 3

2.0 0.1 1
disks 1
1.0 1.5
"""


def test_parse_instance():
    instance = parse_instance(L2_TEXT)
    assert instance.metric is Metric.L2
    assert [(p.x, p.y, p.w, p.id) for p in instance.points] == [
        (0.5, 0.25, 3.0, 0),
        (2.0, 0.1, 1.0, 1),
    ]
    assert [(s.center_x, s.radius, s.id) for s in instance.disks] == [(1.0, 1.5, 0)]


def test_parse_separable_and_halfplanes():
    separable = parse_instance(
        "hitset 1\nproblem separable-unit\nradius 2\npoints 1\n0 1 1\n"
        "disks 2\n0 -0.5\n1 -1\n"
    )
    assert separable.radius == 2.0
    assert [s.center_y for s in separable.disks] == [-0.5, -1.0]

    halfplanes = parse_instance(
        "hitset 1\nproblem halfplane\npoints 0\nhalfplanes 2\n1 0 lower\n-1 2 upper\n"
    )
    assert [h.side for h in halfplanes.halfplanes] == [Side.LOWER, Side.UPPER]
    assert halfplanes.n == 0


@pytest.mark.parametrize(
    "text, message",
    [
        ("", "line 1: unexpected end of file"),
        ("hitset 2\n", "line 1: unsupported format version"),
        ("hitset 1\nproblem l5\n", "line 2: unknown problem"),
        ("hitset 1\nproblem l2\npoints two\n", "line 3: bad points count"),
        ("hitset 1\nproblem l2\npoints -1\n", "line 3: negative points count"),
        ("hitset 1\nproblem l2\npoints 1\n0 1\n", "line 4: malformed point"),
        ("hitset 1\nproblem l2\npoints 0\ndisks 1\n", "line 5: unexpected end"),
        ("hitset 1\nproblem l2\npoints 0\ndisks 0\nextra\n", "line 5: trailing"),
        ("hitset 1\nproblem l2\npoints 0\nsquares 0\n", "line 4: expected 'disks'"),
        (
            "hitset 1\nproblem halfplane\npoints 0\nhalfplanes 1\n0 1 left\n",
            "line 5: malformed half-plane",
        ),
        ("hitset 1\nproblem separable-unit\nradius big\n", "line 3: bad radius"),
    ],
)
def test_parse_errors(text, message):
    with pytest.raises(hitset.exceptions.HitsetFormatError, match=message):
        parse_instance(text)


@pytest.mark.parametrize("problem", ["1d", "l2", "separable-unit", "halfplane"])
def test_instance_files(problem, tmp_path):
    instance = random_instance(problem, 12, 9, seed=1)
    path = tmp_path / "instance.txt"
    write_instance(instance, path)
    assert read_instance(path) == instance


def test_format_weight():
    assert format_weight(3.0) == "3"
    assert format_weight(0.5) == "0.5"
    assert format_weight(float("inf")) == "inf"


def test_format_solution():
    solution = HitSolution.optimal([4, 1], 7.0)
    assert format_solution(solution) == "status optimal\nweight 7\npoints 2\n1 4\n"
    assert format_solution(HitSolution.infeasible()) == "status infeasible\n"
    assert parse_solution(format_solution(solution)) == solution
    empty = HitSolution.optimal((), 0.0)
    assert parse_solution(format_solution(empty)) == empty


@pytest.mark.parametrize(
    "text, message",
    [
        ("status maybe\n", "unknown status"),
        ("status optimal\nweight x\n", "bad weight"),
        ("status optimal\nweight 1\npoints 2\n1\n", "2 distinct point ids"),
        ("status optimal\nweight 1\npoints 2\n1 1\n", "2 distinct point ids"),
        ("status optimal\nweight 1\npoints 1\na\n", "bad point ids"),
        ("status infeasible\nweight 1\n", "trailing"),
    ],
)
def test_parse_solution_errors(text, message):
    with pytest.raises(hitset.exceptions.HitsetFormatError, match=message):
        parse_solution(text)


def test_write_duals(tmp_path):
    stats = SolveStats()
    solve(parse_instance(L2_TEXT), stats=stats)
    path = tmp_path / "duals.txt"
    write_duals(stats.duals, path)
    lines = path.read_text().splitlines()
    assert lines[0] == "# lo hi weight origin"
    assert lines[1] == "duals %d" % len(stats.duals.dual_segments)
    assert lines[2:] == list(stats.duals.lines())
    for line in lines[2:]:
        lo, hi, _, origin = line.split()
        assert int(lo) <= int(hi)
        assert int(origin) in (0, 1)


def test_format_instance_uses_input_ids():
    instance = parse_instance(L2_TEXT)
    assert format_instance(instance).splitlines()[:4] == [
        "hitset 1",
        "problem l2",
        "points 2",
        "0.5 0.25 3",
    ]
