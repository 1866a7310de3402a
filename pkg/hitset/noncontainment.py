# Copyright (c) 2024, The hitset authors. All rights reserved.
# See file LICENSE for terms.

"""Removal of disks that contain another disk.

For disks centered on a common line, one disk contains another iff its
intersection with the line contains the other's. A hitting set for the
remaining disks therefore hits every removed disk as well. The functions here
only look at ``left``, ``right`` and ``id`` so they serve both line-constrained
disks and the chords of line-separable disks.
"""

import logging
from dataclasses import dataclass, field

logger = logging.getLogger("hitset")


@dataclass(frozen=True)
class NonContainmentResult:
    kept: tuple
    redundant_map: dict = field(default_factory=dict)


def noncontainment_subset(disks):
    """Drop every disk whose extent contains another disk's extent.

    Sweeps the disks by decreasing left endpoint while tracking the kept disk
    with the smallest right endpoint seen so far; a disk whose right endpoint
    exceeds it contains that disk.

    Parameters
    ----------
    disks: iterable
        Objects exposing ``left``, ``right`` and ``id``.

    Returns
    -------
    NonContainmentResult
        The kept disks sorted by extent (hence by center) and, for each
        removed disk id, the id of a kept disk inside it.
    """
    kept = []
    redundant = {}
    witness = None
    # Among equal left endpoints the shorter disk is visited first so that the
    # longer one is recognised as its container.
    for s in sorted(disks, key=lambda s: (-s.left, s.right, s.id)):
        if witness is not None and witness.right < s.right:
            redundant[s.id] = witness.id
        else:
            kept.append(s)
            witness = s
    kept.reverse()
    logger.debug(
        "non-containment: kept %d of %d disks", len(kept), len(kept) + len(redundant)
    )
    return NonContainmentResult(tuple(kept), redundant)


def check_noncontainment(disks):
    """True iff left and right endpoints are both strictly increasing."""
    return all(
        a.left < b.left and a.right < b.right for a, b in zip(disks, disks[1:])
    )
