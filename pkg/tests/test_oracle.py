import numpy as np
import pytest

import hitset
from hitset.model import Instance
from hitset.oracle import coverage_masks, oracle_optimal, verify
from hitset.selftest import KINDS, check_instance, run_selftest
from hitset.solution import HitSolution

from .utils import random_instance


@pytest.fixture
def small_oracle(monkeypatch):
    monkeypatch.setenv("HITSET_ORACLE_MAX_N", "3")
    hitset.reset()
    yield
    hitset.reset()


def line_instance(disks):
    return Instance.from_tuples(
        "1d", points=[(0, 0, 2), (3, 0, 1), (5, 0, 1)], disks=disks
    )


TWO_GROUPS = line_instance([(0.5, 1), (4, 1.5)])


def test_coverage_masks():
    hit = np.zeros((2, 70), dtype=bool)
    hit[0, [0, 65]] = True
    hit[1, 63] = True
    masks = coverage_masks(hit)
    assert masks.shape == (2, 2)
    assert masks.dtype == np.uint64
    assert masks[0].tolist() == [1, 2]
    assert masks[1].tolist() == [1 << 63, 0]


def test_oracle_tie_goes_to_smallest_ids():
    solution = oracle_optimal(TWO_GROUPS)
    assert solution.ok
    assert solution.sorted_ids == (0, 1)
    assert solution.total_weight == 3


def test_oracle_without_constraints():
    solution = oracle_optimal(line_instance([]))
    assert solution.ok
    assert solution.chosen_points == frozenset()
    assert solution.total_weight == 0


def test_oracle_infeasible():
    assert not oracle_optimal(line_instance([(0.5, 1), (20, 1)])).ok


def test_oracle_size_guard(small_oracle):
    instance = random_instance("l2", 4, 3, seed=0)
    with pytest.raises(hitset.exceptions.HitsetError, match="limited to 3 points"):
        oracle_optimal(instance)


@pytest.mark.parametrize(
    "solution, expected",
    [
        (HitSolution.optimal((0, 1), 3.0), True),
        (HitSolution.optimal((0, 2), 3.0), True),
        (HitSolution.optimal((0,), 2.0), False),
        (HitSolution.optimal((0, 1), 4.0), False),
        (HitSolution.optimal((0, 7), 3.0), False),
        (HitSolution.infeasible(), False),
    ],
)
def test_verify(solution, expected):
    assert verify(TWO_GROUPS, solution) is expected


def test_verify_infeasible_instance():
    unhittable = line_instance([(0.5, 1), (20, 1)])
    assert verify(unhittable, HitSolution.infeasible())
    assert not verify(line_instance([]), HitSolution.infeasible())
    assert verify(line_instance([]), HitSolution.optimal((), 0.0))


def test_check_instance_agrees():
    assert check_instance(random_instance("linf", 8, 8, seed=4)) == []


def test_selftest():
    report = run_selftest(2 * len(KINDS), seed=1, max_n=7, max_m=7)
    assert report.trials == 2 * len(KINDS)
    assert report.ok, report.messages
