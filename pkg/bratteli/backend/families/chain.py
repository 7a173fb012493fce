"""The chain family: the half line with edges n - (n+1).

Its pascalization is the "half" of the Pascal graph, whose paths are the
nonnegative lattice walks and whose level sums of squared dimensions are the
Catalan numbers (Temperley-Lieb dimensions).
"""

from __future__ import annotations

from typing import Any, Hashable, Iterable, List

from bratteli.backend.errors import InvalidVertexError
from bratteli.backend.families.base import Family


class ChainFamily(Family):
    """Graph with one vertex per level, labelled by the level itself."""

    name = "chain"
    unbounded_ratios = False

    def root(self) -> Hashable:
        return 0

    def successors(self, level: int, label: Hashable) -> Iterable[Hashable]:
        return [label + 1]

    def branching_ratio(self, l: int) -> int:
        return 1

    def sort_labels(self, labels: Iterable[Hashable]) -> List[Hashable]:
        return sorted(set(labels))

    def decode(self, value: Any) -> Hashable:
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise InvalidVertexError(f"chain labels are nonnegative integers, got {value!r}")
        return value
