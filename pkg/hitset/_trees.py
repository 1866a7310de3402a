# Copyright (c) 2024, The hitset authors. All rights reserved.
# See file LICENSE for terms.

import math

INF_KEY = (math.inf, math.inf)


class MinSegmentTree:
    """Range-minimum tree over comparable values.

    Leaves are stored in a full binary tree of power-of-two capacity; unused
    leaves hold `neutral`. Values are typically ``(key, tiebreak)`` tuples so
    that the minimum also identifies its argmin.
    """

    def __init__(self, size, neutral=INF_KEY):
        capacity = 1
        while capacity < max(size, 1):
            capacity *= 2
        self.size = size
        self.capacity = capacity
        self.neutral = neutral
        self.tree = [neutral] * (2 * capacity)

    @classmethod
    def from_values(cls, values, neutral=INF_KEY):
        values = list(values)
        self = cls(len(values), neutral)
        c = self.capacity
        self.tree[c : c + len(values)] = values
        for idx in range(c - 1, 0, -1):
            self.tree[idx] = min(self.tree[2 * idx], self.tree[2 * idx + 1])
        return self

    def __setitem__(self, idx, value):
        assert 0 <= idx < self.size
        idx += self.capacity
        self.tree[idx] = value
        # propagate the change through the tree.
        idx //= 2
        while idx >= 1:
            self.tree[idx] = min(self.tree[2 * idx], self.tree[2 * idx + 1])
            idx //= 2

    def __getitem__(self, idx):
        assert 0 <= idx < self.size
        return self.tree[idx + self.capacity]

    def __len__(self):
        return self.size

    def min(self, start=0, end=None):
        """Minimum over the half-open leaf range ``[start, end)``."""
        if end is None:
            end = self.size
        result = self.neutral
        lo = max(start, 0) + self.capacity
        hi = min(end, self.size) + self.capacity
        while lo < hi:
            if lo & 1:
                result = min(result, self.tree[lo])
                lo += 1
            if hi & 1:
                hi -= 1
                result = min(result, self.tree[hi])
            lo //= 2
            hi //= 2
        return result

    def first_at_or_below(self, start, bound):
        """Smallest leaf index ``>= start`` whose value is ``<= bound``."""
        if start >= self.size:
            return None
        return self._first(1, 0, self.capacity, start, bound)

    def _first(self, node, lo, hi, start, bound):
        if hi <= start or self.tree[node] > bound:
            return None
        if hi - lo == 1:
            return lo
        mid = (lo + hi) // 2
        found = self._first(2 * node, lo, mid, start, bound)
        if found is None:
            found = self._first(2 * node + 1, mid, hi, start, bound)
        return found
