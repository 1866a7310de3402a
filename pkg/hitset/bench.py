# Copyright (c) 2024, The hitset authors. All rights reserved.
# See file LICENSE for terms.

"""Timing runs over seeded instances, written as CSV."""

import csv
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, fields

from . import exceptions
from .generate import GenParams, generate
from .l2 import kappa
from .public_api import _get_ctx
from .solver import SolveStats, solve

logger = logging.getLogger("hitset")


@dataclass(frozen=True)
class BenchRecord:
    problem: str
    n: int
    m: int
    kappa: int
    algo: str
    repeat: int
    seconds: float
    weight: float
    status: str
    segments_raw: int
    segments_dedup: int

    @classmethod
    def columns(cls):
        return [f.name for f in fields(cls)]


def parse_sizes(text):
    """``"100,200x50"`` to ``[(100, 100), (200, 50)]``."""
    sizes = []
    for item in text.split(","):
        item = item.strip()
        try:
            if "x" in item:
                n, m = item.split("x")
                sizes.append((int(n), int(m)))
            else:
                sizes.append((int(item), int(item)))
        except ValueError:
            raise exceptions.HitsetError("bad size %r" % item) from None
    if any(n < 0 or m < 0 for n, m in sizes):
        raise exceptions.HitsetError("sizes must be non-negative")
    return sizes


def bench_instance(problem, n, m, seed):
    """The hittable instance `run_bench` times for one size.

    The coordinate span grows with the size so that point density and disk
    overlap stay bounded as n and m double.
    """
    span = max(GenParams.span, float(max(n, m)))
    params = GenParams(problem, n, m, seed=seed, span=span, ensure_hittable=n > 0)
    return generate(params)


def _kappa_of(instance):
    if instance.problem == "l2":
        return kappa(instance.disks)
    if instance.problem == "separable-unit":
        return kappa([s for s in instance.disks if s.reaches_axis])
    return None


def _run_cell(instance, algo, repeat, kappa_value):
    stats = SolveStats()
    start = time.perf_counter()
    solution = solve(instance, algo=algo, stats=stats)
    seconds = time.perf_counter() - start
    return BenchRecord(
        problem=instance.problem,
        n=instance.n,
        m=instance.m,
        kappa=kappa_value,
        algo=algo,
        repeat=repeat,
        seconds=seconds,
        weight=solution.total_weight,
        status=solution.status.value,
        segments_raw=stats.segments_emitted,
        segments_dedup=stats.segments_dedup,
    )


def run_bench(problem, sizes, seed=0, repeat=1, algos=("fast",), workers=None):
    """Solve one generated instance per size with every algo, `repeat` times.

    Instances are generated from ``seed`` plus the size index so that the
    same arguments reproduce every counter; only times vary. Cells run on
    `workers` threads and come back in submission order.

    Returns
    -------
    list of BenchRecord
    """
    if workers is None:
        workers = _get_ctx().workers
    cells = []
    for k, (n, m) in enumerate(sizes):
        instance = bench_instance(problem, n, m, seed + k)
        kappa_value = _kappa_of(instance)
        logger.info("bench %s n=%d m=%d kappa=%s", problem, n, m, kappa_value)
        for algo in algos:
            for r in range(repeat):
                cells.append((instance, algo, r, kappa_value))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda c: _run_cell(*c), cells))
    return [_run_cell(*c) for c in cells]


def write_csv(records, path):
    with open(path, "w", newline="") as f:
        writer = csv.DictWriter(f, fieldnames=BenchRecord.columns())
        writer.writeheader()
        for record in records:
            writer.writerow(asdict(record))


def growth_ratios(records):
    """Time ratios between consecutive sizes, per algo.

    Returns
    -------
    list of tuple
        ``(algo, size_before, size_after, ratio)`` with sizes as ``n + m``
        and times averaged over repeats.
    """
    totals = {}
    for r in records:
        key = (r.algo, r.n + r.m)
        t, c = totals.get(key, (0.0, 0))
        totals[key] = (t + r.seconds, c + 1)
    out = []
    for algo in dict.fromkeys(a for a, _ in totals):
        sizes = sorted(s for a, s in totals if a == algo)
        for before, after in zip(sizes, sizes[1:]):
            t0 = totals[algo, before][0] / totals[algo, before][1]
            t1 = totals[algo, after][0] / totals[algo, after][1]
            out.append((algo, before, after, t1 / t0 if t0 > 0 else float("inf")))
    return out
