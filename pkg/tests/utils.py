# Copyright (c) 2024, The hitset authors. All rights reserved.
# See file LICENSE for terms.

from hitset.generate import GenParams, generate
from hitset.model import normalize
from hitset.noncontainment import noncontainment_subset

DISK_PROBLEMS = ("1d", "unit", "l1", "l2", "linf")


def random_instance(problem, n, m, seed, ensure_hittable=True, **kwargs):
    return generate(
        GenParams(problem, n, m, seed=seed, ensure_hittable=ensure_hittable, **kwargs)
    )


def prepared(instance):
    """Sorted points and the sorted non-containing disks of an instance."""
    instance = normalize(instance)
    return instance.points, noncontainment_subset(instance.disks).kept


def segment_set(segments):
    return {(s.lo, s.hi, s.weight, s.origin) for s in segments}
