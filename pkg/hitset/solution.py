# Copyright (c) 2024, The hitset authors. All rights reserved.
# See file LICENSE for terms.

import enum
import math
from dataclasses import dataclass


class Status(enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class HitSolution:
    """A hitting set, reported by input point ids."""

    chosen_points: frozenset
    total_weight: float
    status: Status

    @classmethod
    def optimal(cls, chosen, total_weight):
        return cls(frozenset(chosen), total_weight, Status.OPTIMAL)

    @classmethod
    def infeasible(cls):
        return cls(frozenset(), math.inf, Status.INFEASIBLE)

    @property
    def ok(self):
        return self.status is Status.OPTIMAL

    @property
    def sorted_ids(self):
        return tuple(sorted(self.chosen_points))

    def __str__(self):
        if not self.ok:
            return "<HitSolution infeasible>"
        return "<HitSolution weight=%g points=%s>" % (
            self.total_weight,
            list(self.sorted_ids),
        )
