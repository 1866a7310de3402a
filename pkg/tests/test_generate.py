import pytest

import hitset
from hitset.generate import GenParams, generate
from hitset.model import (
    PROBLEMS,
    HalfPlaneInstance,
    ValidationReport,
    Violation,
    hit_matrix,
    validate,
)


@pytest.mark.parametrize("problem", PROBLEMS)
def test_deterministic(problem):
    params = GenParams(problem, 25, 20, seed=7, ensure_hittable=True)
    assert generate(params) == generate(params)
    assert generate(params) != generate(GenParams(problem, 25, 20, seed=8))


@pytest.mark.parametrize("problem", PROBLEMS)
@pytest.mark.parametrize("seed", range(3))
def test_ensure_hittable(problem, seed):
    instance = generate(GenParams(problem, 30, 30, seed=seed, ensure_hittable=True))
    assert (instance.n, instance.m) == (30, 30)
    assert validate(instance).ok
    assert hit_matrix(instance).any(axis=0).all()


@pytest.mark.parametrize("problem", PROBLEMS)
def test_ids_follow_x_order(problem):
    instance = generate(GenParams(problem, 20, 10, seed=2))
    xs = [p.x for p in instance.points]
    assert xs == sorted(xs)
    assert [p.id for p in instance.points] == list(range(20))
    assert all(p.w == int(p.w) and 1 <= p.w <= 9 for p in instance.points)


def test_wmax():
    instance = generate(GenParams("l1", 50, 0, seed=1, wmax=1))
    assert {p.w for p in instance.points} == {1.0}


@pytest.mark.parametrize("sides", ["lower", "upper"])
def test_halfplane_sides(sides):
    instance = generate(GenParams("halfplane", 10, 12, seed=0, sides=sides))
    assert isinstance(instance, HalfPlaneInstance)
    assert {h.side.value for h in instance.halfplanes} == {sides}


def test_empty():
    instance = generate(GenParams("l2", 0, 0, seed=0, ensure_hittable=True))
    assert (instance.n, instance.m) == (0, 0)


@pytest.mark.parametrize(
    "kwargs, message",
    [
        ({"problem": "l3"}, "unknown problem"),
        ({"n": -1}, "non-negative"),
        ({"wmax": 0}, "wmax"),
        ({"radius_range": (2.0, 1.0)}, "radius range"),
        ({"separable_depth": 1.0}, "separable_depth"),
        ({"sides": "left"}, "unknown sides"),
    ],
)
def test_bad_params(kwargs, message):
    args = {"problem": "l2", "n": 5, "m": 5, **kwargs}
    with pytest.raises(hitset.exceptions.HitsetError, match=message):
        GenParams(**args)


def test_hittable_needs_points():
    with pytest.raises(hitset.exceptions.HitsetError, match="no points"):
        generate(GenParams("unit", 0, 3, ensure_hittable=True))


def test_retry_cap(monkeypatch):
    monkeypatch.setenv("HITSET_GEN_RETRIES", "3")
    hitset.reset()
    rejected = ValidationReport((Violation("duplicate point x", "always"),))
    monkeypatch.setattr("hitset.generate.validate", lambda instance: rejected)
    try:
        with pytest.raises(hitset.exceptions.HitsetError, match="after 3 attempts"):
            generate(GenParams("l2", 5, 5, seed=0))
    finally:
        hitset.reset()


@pytest.fixture
def few_retries(monkeypatch):
    monkeypatch.setenv("HITSET_GEN_RETRIES", "10")
    hitset.reset()
    yield
    hitset.reset()


def test_collisions_are_redrawn_locally(few_retries):
    # About 16 duplicate abscissae per full draw, so redrawing everything
    # would almost never produce a valid instance within ten attempts.
    params = GenParams("1d", 4000, 5, seed=3, span=1e-3)
    instance = generate(params)
    assert validate(instance).ok
    assert instance.n == 4000


@pytest.mark.parametrize("problem", PROBLEMS)
def test_hittable_mode_checks_witnesses_only(problem, monkeypatch):
    def dense(*args):
        raise AssertionError("dense hit matrix built")

    with monkeypatch.context() as patch:
        patch.setattr("hitset.model.disk_hit_matrix", dense)
        patch.setattr("hitset.model.halfplane_hit_matrix", dense)
        instance = generate(GenParams(problem, 40, 50, seed=5, ensure_hittable=True))
    assert hit_matrix(instance).any(axis=0).all()
