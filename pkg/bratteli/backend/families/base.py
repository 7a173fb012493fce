"""Base class for graded graph families.

This module defines the abstract family interface used by `build_family`.
A family knows its root label, how labels branch from one level to the
next, how to read and write labels as JSON, and (when known) the closed
form of its branching ratios a_l.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Any, Hashable, Iterable, List, Optional

from bratteli.backend.errors import InvalidVertexError


class Family(ABC):
    """Abstract base class for all built-in graph families.

    Concrete families are registered by name in `bratteli.backend.families`
    and instantiated by `build_family`. Instances are stateless.
    """

    name = ""
    # True when sup_l a_l is infinite, i.e. off-diagonal cylinders vanish on
    # the pascalization. None when the family has no closed form.
    unbounded_ratios: Optional[bool] = None

    @abstractmethod
    def root(self) -> Hashable:
        """Return the label of the unique level-0 vertex."""

    @abstractmethod
    def successors(self, level: int, label: Hashable) -> Iterable[Hashable]:
        """Return the labels at level + 1 joined to `label` at `level`.

        Args:
            level (int): Level of the lower vertex.
            label (Hashable): Label of the lower vertex.
        """

    def branching_ratio(self, l: int) -> Optional[int]:
        """Closed form of a_l = [dim A_l / dim A_(l-1)], or None if unknown.

        Args:
            l (int): Index of the ratio, l >= 1.
        """
        del l
        return None

    def sort_labels(self, labels: Iterable[Hashable]) -> List[Hashable]:
        """Order labels of one level deterministically (reverse lexicographic)."""
        return sorted(set(labels), reverse=True)

    def encode(self, label: Hashable) -> Any:
        """Convert a label to its JSON representation."""
        return label_to_json(label)

    def decode(self, value: Any) -> Hashable:
        """Convert a JSON value back to a label.

        Raises:
            InvalidVertexError: If the value is not a label of this family.
        """
        return label_from_json(value)


def check_partition(value: Any) -> tuple:
    """Validate a JSON partition and return it as a tuple.

    Raises:
        InvalidVertexError: If the value is not a weakly decreasing list of
            positive integers.
    """
    if not isinstance(value, (list, tuple)):
        raise InvalidVertexError(f"partition must be a list, got {value!r}")
    parts = tuple(value)
    if not all(isinstance(p, int) and not isinstance(p, bool) and p > 0 for p in parts):
        raise InvalidVertexError(f"partition parts must be positive integers: {value!r}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise InvalidVertexError(f"partition must be weakly decreasing: {value!r}")
    return parts


def add_box(partition: tuple) -> List[tuple]:
    """All partitions obtained from `partition` by adding one box."""
    result = []
    padded = partition + (0,)
    for i, part in enumerate(padded):
        if i == 0 or padded[i - 1] > part:
            result.append(partition[:i] + (part + 1,) + partition[i + 1 :])
    return result


def label_to_json(label: Hashable) -> Any:
    """Tuples become lists, recursively; other labels pass through."""
    if isinstance(label, tuple):
        return [label_to_json(x) for x in label]
    return label


def label_from_json(value: Any) -> Hashable:
    """Lists become tuples, recursively.

    Raises:
        InvalidVertexError: If a leaf is not an int or a string.
    """
    if isinstance(value, list):
        return tuple(label_from_json(x) for x in value)
    if isinstance(value, (int, str)) and not isinstance(value, bool):
        return value
    raise InvalidVertexError(f"unsupported label value {value!r}")
