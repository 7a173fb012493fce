# graded_graph.py
#
# Copyright 2025 thecodenomad
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Z+-graded locally finite graphs with a single root.

This module provides the `GradedGraph` container, the builder for the
built-in families, neighbor queries and the structural validator. Graphs
are built eagerly to a requested level and are immutable afterwards, so
they can be shared freely between dimension tables and reports.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, Hashable, Iterable, Iterator, List, Optional, Sequence, Tuple

from bratteli.backend.errors import DomainError, HorizonError, InvalidVertexError
from bratteli.backend.families import get_family_class
from bratteli.constants import CUSTOM_FAMILY, Direction

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Vertex:
    """A vertex of a graded graph: its level and a family-specific label."""

    level: int
    label: Hashable

    def __repr__(self) -> str:
        return f"{self.level}:{self.label!r}"


Edge = Tuple[Vertex, Vertex]
GraphPath = Tuple[Vertex, ...]


class GradedGraph:
    """An immutable graded graph built through `built_up_to`.

    The constructor accepts any level and edge data so that malformed
    graphs (for example loaded from JSON) can be inspected by `validate`.
    Queries assume a well-formed graph.

    Attributes:
        family (str): Name of the family the graph was built from.
        built_up_to (int): Highest constructed level.
    """

    def __init__(
        self,
        levels: Sequence[Sequence[Vertex]],
        edges: Iterable[Edge],
        family: str = CUSTOM_FAMILY,
    ):
        """Initialize the graph from its levels and edges.

        Args:
            levels: Vertices of each level, in their canonical order.
            edges: (lower, upper) vertex pairs.
            family: Registered family name, "custom" otherwise.
        """
        self.family = family
        self._levels: Tuple[Tuple[Vertex, ...], ...] = tuple(tuple(level) for level in levels)
        self._position: Dict[Vertex, Tuple[int, int]] = {}
        for k, level in enumerate(self._levels):
            for i, v in enumerate(level):
                self._position.setdefault(v, (k, i))
        self._edges: Tuple[Edge, ...] = tuple(edges)
        self._up: Dict[Vertex, List[Vertex]] = {v: [] for v in self._position}
        self._down: Dict[Vertex, List[Vertex]] = {v: [] for v in self._position}
        seen = set()
        for lower, upper in self._edges:
            if lower not in self._position or upper not in self._position or (lower, upper) in seen:
                continue
            seen.add((lower, upper))
            self._up[lower].append(upper)
            self._down[upper].append(lower)
        for adjacency in (self._up, self._down):
            for v, neighbors in adjacency.items():
                neighbors.sort(key=self._position.__getitem__)
        self._by_label: Dict[Hashable, List[Vertex]] = {}
        for v in self._position:
            self._by_label.setdefault(v.label, []).append(v)

    def __repr__(self) -> str:
        return f"GradedGraph(family={self.family!r}, built_up_to={self.built_up_to})"

    def __contains__(self, v: object) -> bool:
        return v in self._position

    @property
    def built_up_to(self) -> int:
        """Highest constructed level."""
        return len(self._levels) - 1

    @property
    def levels(self) -> Tuple[Tuple[Vertex, ...], ...]:
        """Vertices of every level in canonical order."""
        return self._levels

    @property
    def root(self) -> Vertex:
        """The level-0 vertex."""
        return self._levels[0][0]

    @property
    def edges(self) -> Tuple[Edge, ...]:
        """The edges exactly as the graph was constructed."""
        return self._edges

    def level(self, k: int) -> Tuple[Vertex, ...]:
        """Vertices of level k.

        Raises:
            HorizonError: If level k is not constructed.
        """
        if not 0 <= k <= self.built_up_to:
            raise HorizonError(f"level {k} is outside the built range 0..{self.built_up_to}")
        return self._levels[k]

    def vertices(self, up_to: Optional[int] = None) -> Iterator[Vertex]:
        """Iterate over vertices level by level through `up_to`."""
        top = self.built_up_to if up_to is None else min(up_to, self.built_up_to)
        for k in range(top + 1):
            yield from self._levels[k]

    def index(self, v: Vertex) -> int:
        """Position of `v` within its level.

        Raises:
            InvalidVertexError: If `v` is not a vertex of the graph.
        """
        self._require(v)
        return self._position[v][1]

    def up(self, v: Vertex) -> Tuple[Vertex, ...]:
        """Vertices at level(v) + 1 joined to `v`."""
        return self.neighbors(v, Direction.UP)

    def down(self, v: Vertex) -> Tuple[Vertex, ...]:
        """Vertices at level(v) - 1 joined to `v`."""
        return self.neighbors(v, Direction.DOWN)

    def neighbors(self, v: Vertex, direction: Direction) -> Tuple[Vertex, ...]:
        """Vertices joined to `v` across the level boundary in `direction`.

        Args:
            v (Vertex): The vertex queried.
            direction (Direction): `Direction.UP` or `Direction.DOWN`.

        Returns:
            Tuple[Vertex, ...]: Neighbors in canonical level order.

        Raises:
            InvalidVertexError: If `v` is not a vertex of the graph.
            HorizonError: If asking for upper neighbors of the top level.
        """
        self._require(v)
        if direction is Direction.UP:
            if v.level >= self.built_up_to:
                raise HorizonError(f"{v} lies on the top level {self.built_up_to}; nothing built above")
            return tuple(self._up[v])
        return tuple(self._down[v])

    def find_vertex(self, label: Hashable, level: Optional[int] = None) -> Vertex:
        """Look up a vertex by label, optionally restricted to one level.

        Raises:
            InvalidVertexError: If no vertex or more than one vertex matches.
        """
        matches = [v for v in self._by_label.get(label, ()) if level is None or v.level == level]
        if not matches:
            where = "" if level is None else f" at level {level}"
            raise InvalidVertexError(f"no vertex labelled {label!r}{where} in {self.family} graph")
        if len(matches) > 1:
            levels = ", ".join(str(v.level) for v in matches)
            raise InvalidVertexError(f"label {label!r} is ambiguous (levels {levels}); give a level")
        return matches[0]

    def without_edges(self, removed: Iterable[Edge]) -> "GradedGraph":
        """A copy of the graph with the given edges deleted."""
        removed = set(removed)
        return self._rebuild(self._levels, [e for e in self._edges if e not in removed])

    def truncated(self, max_level: int) -> "GradedGraph":
        """A copy of the graph restricted to levels 0..max_level."""
        if max_level > self.built_up_to:
            raise HorizonError(f"cannot truncate to {max_level}; built only to {self.built_up_to}")
        return self._rebuild(
            self._levels[: max_level + 1],
            [(v, w) for v, w in self._edges if w.level <= max_level],
        )

    def _rebuild(self, levels, edges) -> "GradedGraph":
        return GradedGraph(levels, edges, self.family)

    def _require(self, v: Vertex) -> None:
        if v not in self._position:
            raise InvalidVertexError(f"{v!r} is not a vertex of the {self.family} graph")


def build_family(family: str, max_level: int) -> GradedGraph:
    """Build a registered family through `max_level`.

    Args:
        family (str): Family name ("chain", "young", "walled_young",
            "doubled_young" or any registered name).
        max_level (int): Highest level to construct, >= 0.

    Returns:
        GradedGraph: The family graph, levels in reverse lexicographic label order.

    Raises:
        UnknownFamilyError: If the family is not registered.
        DomainError: If max_level is negative.
    """
    if max_level < 0:
        raise DomainError(f"max_level must be nonnegative, got {max_level}")
    impl = get_family_class(family)()
    levels: List[List[Vertex]] = [[Vertex(0, impl.root())]]
    edges: List[Edge] = []
    for k in range(max_level):
        pairs = [(v, label) for v in levels[k] for label in impl.successors(k, v.label)]
        upper = [Vertex(k + 1, label) for label in impl.sort_labels(label for _, label in pairs)]
        levels.append(upper)
        edges.extend((v, Vertex(k + 1, label)) for v, label in pairs)
    logger.debug(
        "GradedGraph: built %s through level %d (%d vertices, %d edges)",
        impl.name,
        max_level,
        sum(len(level) for level in levels),
        len(edges),
    )
    return GradedGraph(levels, edges, impl.name)


@dataclass
class ValidationReport:
    """Outcome of a structural check; `violations` name the offending objects."""

    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        """True when no violation was found."""
        return not self.violations


def validate(graph: GradedGraph) -> ValidationReport:
    """Check every GradedGraph invariant and report each violation.

    Checks a single root, level numbering, distinct vertices per level,
    edges between consecutive levels only, simplicity, and the absence of
    dangling vertices in the built range.

    Args:
        graph (GradedGraph): Graph to check.

    Returns:
        ValidationReport: Empty violation list on success.
    """
    report = ValidationReport()
    levels = graph.levels
    if not levels or len(levels[0]) != 1:
        count = len(levels[0]) if levels else 0
        report.violations.append(f"root: level 0 has {count} vertices, expected exactly 1")
    seen_vertices = set()
    for k, level in enumerate(levels):
        if not level:
            report.violations.append(f"empty level: level {k} has no vertices")
        for v in level:
            if v.level != k:
                report.violations.append(f"grading: vertex {v!r} listed on level {k}")
            if v in seen_vertices:
                report.violations.append(f"duplicate vertex: {v!r} on level {k}")
            seen_vertices.add(v)
    seen_edges = set()
    for lower, upper in graph.edges:
        if lower not in graph or upper not in graph:
            report.violations.append(f"unknown vertex: edge {lower!r} -> {upper!r}")
            continue
        if upper.level != lower.level + 1:
            report.violations.append(
                f"grading: edge {lower!r} -> {upper!r} joins levels {lower.level} and {upper.level}"
            )
        if (lower, upper) in seen_edges:
            report.violations.append(f"repeated edge: {lower!r} -> {upper!r}")
        seen_edges.add((lower, upper))
    consecutive = {(v, w) for v, w in seen_edges if w.level == v.level + 1}
    has_up = {v for v, _ in consecutive}
    has_down = {w for _, w in consecutive}
    for v in graph.vertices():
        if v.level < graph.built_up_to and v not in has_up:
            report.violations.append(f"dangling vertex: {v!r} has no upper neighbor")
        if v.level > 0 and v not in has_down:
            report.violations.append(f"dangling vertex: {v!r} has no lower neighbor")
    if report.ok:
        logger.debug("GradedGraph: %s graph through level %d is valid", graph.family, graph.built_up_to)
    else:
        logger.debug("GradedGraph: %d violations in %s graph", len(report.violations), graph.family)
    return report


def check_path(graph: GradedGraph, path: Sequence[Vertex]) -> GraphPath:
    """Return `path` as a tuple after checking it is a root path of `graph`.

    Raises:
        InvalidVertexError: If the path does not start at the root, skips a
            level or uses a missing edge.
    """
    path = tuple(path)
    if not path or path[0] != graph.root:
        raise InvalidVertexError("a path must start at the root")
    for i, v in enumerate(path):
        if v not in graph or v.level != i:
            raise InvalidVertexError(f"path step {i} is {v!r}, not a level-{i} vertex of the graph")
        if i and v not in graph.up(path[i - 1]):
            raise InvalidVertexError(f"no edge {path[i - 1]!r} -> {v!r}")
    return path

