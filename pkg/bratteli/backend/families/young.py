"""Young graph families.

This module provides the Young graph of partitions and the two graphs built
from it that the walled Brauer and partition algebras pascalize:

* `WalledYoungFamily`: pairs of partitions following the subgroup chain
  S_0 x S_0 < S_1 x S_0 < S_1 x S_1 < S_2 x S_1 < ... A step from level 2j
  adds a box to the first partition, a step from level 2j+1 to the second.
* `DoubledYoungFamily`: every Young level repeated twice (G_2i = G_2i+1 =
  C[S_i]); identity edges from level 2i to 2i+1, single boxes from 2i+1 to
  2i+2.

Partitions are tuples of weakly decreasing positive parts, () for the empty
partition.
"""

from __future__ import annotations

from typing import Any, Hashable, Iterable

from bratteli.backend.errors import InvalidVertexError
from bratteli.backend.families.base import Family, add_box, check_partition


class YoungFamily(Family):
    """The Young graph: partitions joined by single-box additions."""

    name = "young"
    unbounded_ratios = True

    def root(self) -> Hashable:
        return ()

    def successors(self, level: int, label: Hashable) -> Iterable[Hashable]:
        return add_box(label)

    def branching_ratio(self, l: int) -> int:
        return l

    def decode(self, value: Any) -> Hashable:
        return check_partition(value)


class WalledYoungFamily(Family):
    """Pairs of partitions growing alternately, first partition first."""

    name = "walled_young"
    unbounded_ratios = True

    def root(self) -> Hashable:
        return ((), ())

    def successors(self, level: int, label: Hashable) -> Iterable[Hashable]:
        first, second = label
        if level % 2 == 0:
            return [(grown, second) for grown in add_box(first)]
        return [(first, grown) for grown in add_box(second)]

    def branching_ratio(self, l: int) -> int:
        return (l + 1) // 2

    def decode(self, value: Any) -> Hashable:
        if not isinstance(value, (list, tuple)) or len(value) != 2:
            raise InvalidVertexError(f"walled labels are pairs of partitions, got {value!r}")
        return (check_partition(value[0]), check_partition(value[1]))


class DoubledYoungFamily(Family):
    """The Young graph with each level repeated twice."""

    name = "doubled_young"
    unbounded_ratios = True

    def root(self) -> Hashable:
        return ()

    def successors(self, level: int, label: Hashable) -> Iterable[Hashable]:
        if level % 2 == 0:
            return [label]
        return add_box(label)

    def branching_ratio(self, l: int) -> int:
        if l % 2 == 0:
            return l // 2
        return 1

    def decode(self, value: Any) -> Hashable:
        return check_partition(value)
