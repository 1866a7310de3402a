# Copyright (c) 2024, The hitset authors. All rights reserved.
# See file LICENSE for terms.

"""hitset: exact minimum-weight hitting sets for line-constrained disks"""

import logging
import os

from . import exceptions  # noqa
from ._version import __version__  # noqa
from .public_api import get_config, init, reset  # noqa
from .model import (  # noqa
    Disk,
    HalfPlane,
    HalfPlaneInstance,
    Instance,
    Metric,
    SeparableDisk,
    SeparableInstance,
    Side,
    WeightedPoint,
    hits,
    normalize,
    validate,
)
from .solution import HitSolution, Status  # noqa
from .solver import SolveStats, solve  # noqa

logger = logging.getLogger("hitset")

# Set the root logger before the solvers start logging
_level_enum = logging.getLevelName(os.getenv("HITSET_LOG_LEVEL", "WARNING"))
logging.basicConfig(level=_level_enum, format="%(levelname)s %(message)s")
