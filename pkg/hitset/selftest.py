# Copyright (c) 2024, The hitset authors. All rights reserved.
# See file LICENSE for terms.

"""Agreement of the oracle, the brute-force dual and the fast solvers."""

import logging
from dataclasses import dataclass, field

import numpy as np

from .generate import GenParams, generate
from .oracle import oracle_optimal, verify
from .public_api import _get_ctx
from .solver import solve

logger = logging.getLogger("hitset")

# (problem, half-plane sides)
KINDS = (
    ("1d", "mixed"),
    ("unit", "mixed"),
    ("l1", "mixed"),
    ("l2", "mixed"),
    ("linf", "mixed"),
    ("separable-unit", "mixed"),
    ("halfplane", "lower"),
    ("halfplane", "mixed"),
)


@dataclass
class SelftestReport:
    trials: int = 0
    disagreements: int = 0
    messages: list = field(default_factory=list)

    @property
    def ok(self):
        return self.disagreements == 0


def check_instance(instance, algos=("brute-dual", "fast")):
    """Messages describing every way the solvers disagree on `instance`."""
    expected = oracle_optimal(instance)
    out = []
    for algo in algos:
        got = solve(instance, algo=algo)
        if got.status != expected.status or got.total_weight != expected.total_weight:
            out.append(
                "%s/%s: got %s, oracle %s" % (instance.problem, algo, got, expected)
            )
        elif not verify(instance, got):
            out.append("%s/%s: %s does not verify" % (instance.problem, algo, got))
    return out


def run_selftest(trials, seed=0, max_n=10, max_m=10, kinds=KINDS):
    """Run `trials` random instances, cycling through the problem kinds.

    Sizes are drawn from ``[1, max_n]`` and ``[1, max_m]``; ``max_n`` is
    capped at the oracle limit. Every other instance is generated without
    the hittable guarantee so that infeasible inputs get exercised.
    """
    rng = np.random.default_rng(seed)
    max_n = min(max_n, _get_ctx().oracle_max_n)
    report = SelftestReport()
    for t in range(trials):
        problem, sides = kinds[t % len(kinds)]
        params = GenParams(
            problem,
            int(rng.integers(1, max_n + 1)),
            int(rng.integers(1, max_m + 1)),
            seed=int(rng.integers(1 << 31)),
            ensure_hittable=t % 2 == 0,
            sides=sides,
        )
        messages = check_instance(generate(params))
        report.trials += 1
        if messages:
            report.disagreements += 1
            report.messages += ["%r: %s" % (params, m) for m in messages]
            logger.warning("selftest disagreement: %s", messages[0])
    return report
