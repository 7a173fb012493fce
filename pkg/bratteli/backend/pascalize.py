# pascalize.py
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

"""The pascalization operator and the path/random-walk correspondence.

Level k of the pascalized graph holds a copy (k, lambda) of every base
vertex lambda with |lambda| <= k and k - |lambda| even. A vertex (k, lambda)
is joined to (k+1, nu) whenever lambda and nu are adjacent in the base graph,
in either direction. Paths in the pascalized graph are therefore exactly the
trajectories of the nearest-neighbor walk on the base graph.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Sequence, Set, Tuple

from bratteli.backend.errors import HorizonError, InvalidWalkError
from bratteli.backend.graded_graph import (
    Edge,
    GradedGraph,
    GraphPath,
    ValidationReport,
    Vertex,
    check_path,
)
from bratteli.constants import PASCALIZED_PREFIX

logger = logging.getLogger(__name__)

WalkTrajectory = Tuple[Vertex, ...]


@dataclass(frozen=True, repr=False)
class PascalizedVertex(Vertex):
    """Vertex (k, lambda) of a pascalized graph; `label` is the base vertex."""

    @property
    def base(self) -> Vertex:
        """The base graph vertex lambda."""
        return self.label

    @property
    def is_diagonal(self) -> bool:
        """True on the embedded copy of the base graph, |lambda| = k."""
        return self.label.level == self.level

    def __repr__(self) -> str:
        return f"({self.level}, {self.label.label!r})"


class PascalizedGraph(GradedGraph):
    """A pascalized graph, materialized as an ordinary graded graph.

    Attributes:
        base (GradedGraph): The graph that was pascalized.
    """

    def __init__(self, levels, edges, base: GradedGraph):
        super().__init__(levels, edges, PASCALIZED_PREFIX + base.family)
        self.base = base

    def __repr__(self) -> str:
        return f"PascalizedGraph(base={self.base.family!r}, built_up_to={self.built_up_to})"

    def _rebuild(self, levels, edges) -> "PascalizedGraph":
        return PascalizedGraph(levels, edges, self.base)

    def vertex(self, k: int, base_vertex: Vertex) -> PascalizedVertex:
        """The vertex (k, base_vertex), checked to exist."""
        v = PascalizedVertex(k, base_vertex)
        self._require(v)
        return v

    def diagonal(self, k: int) -> Tuple[PascalizedVertex, ...]:
        """Vertices (k, lambda) with |lambda| = k, in base order."""
        return tuple(v for v in self.level(k) if v.is_diagonal)

    def off_diagonal(self, k: int) -> Tuple[PascalizedVertex, ...]:
        """Vertices (k, lambda) with |lambda| < k."""
        return tuple(v for v in self.level(k) if not v.is_diagonal)


def pascalize(base: GradedGraph, max_level: int) -> PascalizedGraph:
    """Build the pascalized graph of `base` through `max_level`.

    Level k lists base levels k, k-2, ... in that order (diagonal first),
    each in the base graph's own order.

    Args:
        base (GradedGraph): Graph to pascalize.
        max_level (int): Highest level to construct.

    Returns:
        PascalizedGraph: The pascalized graph.

    Raises:
        HorizonError: If the base graph is not built through max_level.
    """
    if base.built_up_to < max_level:
        raise HorizonError(
            f"pascalizing through level {max_level} needs the base built that far "
            f"(it is built to {base.built_up_to})"
        )
    levels: List[List[PascalizedVertex]] = []
    for k in range(max_level + 1):
        levels.append([PascalizedVertex(k, lam) for i in range(k, -1, -2) for lam in base.level(i)])
    edges: List[Edge] = []
    for k in range(max_level):
        for v in levels[k]:
            for nu in base.up(v.base) + base.down(v.base):
                edges.append((v, PascalizedVertex(k + 1, nu)))
    graph = PascalizedGraph(levels, edges, base)
    logger.debug(
        "PascalizedGraph: pascalized %s through level %d (%d vertices on the top level)",
        base.family,
        max_level,
        len(levels[-1]),
    )
    return graph


def walk_of_path(path: Sequence[PascalizedVertex]) -> WalkTrajectory:
    """The base-graph walk x_0, x_1, ... traced by a pascalized path."""
    return tuple(v.base for v in path)


def path_of_walk(pg: PascalizedGraph, walk: Sequence[Vertex]) -> GraphPath:
    """The unique pascalized path whose base labels are `walk`.

    Args:
        pg (PascalizedGraph): Pascalized graph the path lives in.
        walk (Sequence[Vertex]): Base vertices starting at the base root.

    Returns:
        GraphPath: Vertices (n, walk[n]).

    Raises:
        InvalidWalkError: If the walk does not start at the root or two
            consecutive labels are not adjacent in the base graph.
        HorizonError: If the walk is longer than the pascalized graph.
    """
    walk = tuple(walk)
    if not walk or walk[0] != pg.base.root:
        raise InvalidWalkError("a walk must start at the base root")
    if len(walk) - 1 > pg.built_up_to:
        raise HorizonError(f"walk of length {len(walk) - 1} exceeds level {pg.built_up_to}")
    for x, y in zip(walk, walk[1:]):
        if x not in pg.base or y not in pg.base:
            raise InvalidWalkError(f"walk visits a vertex outside the base graph: {x!r} -> {y!r}")
        adjacent = y in pg.base.down(x) or (x.level < pg.base.built_up_to and y in pg.base.up(x))
        if not adjacent:
            raise InvalidWalkError(f"walk step {x!r} -> {y!r} joins non-adjacent vertices")
    return check_path(pg, [PascalizedVertex(n, x) for n, x in enumerate(walk)])


def reflect_level(pg: PascalizedGraph, k: int) -> Set[PascalizedVertex]:
    """Level k rebuilt by reflecting level k-2 through level k-1 and adding base level k."""
    if k < 2:
        raise HorizonError("reflection needs two levels below k")
    reflected = {PascalizedVertex(k, v.base) for v in pg.level(k - 2)}
    return reflected | {PascalizedVertex(k, lam) for lam in pg.base.level(k)}


def check_reflection(pg: PascalizedGraph, k: int) -> ValidationReport:
    """Check that level k is the mirror image of level k-2 across level k-1.

    The reflected vertices must be exactly level k, and (k-2, lambda) -> (k-1, nu)
    must be an edge precisely when (k-1, nu) -> (k, lambda) is one.
    """
    report = ValidationReport()
    rebuilt = reflect_level(pg, k)
    if rebuilt != set(pg.level(k)):
        report.violations.append(f"reflection: rebuilt level {k} differs from level {k}")
    for v in pg.level(k - 2):
        mirror = PascalizedVertex(k, v.base)
        for w in pg.level(k - 1):
            if (w in pg.up(v)) != (mirror in pg.up(w)):
                report.violations.append(f"reflection: edge {v!r} -> {w!r} not mirrored at {mirror!r}")
    return report


def diagonal_subgraph(pg: PascalizedGraph) -> GradedGraph:
    """The diagonal vertices and the edges among them, relabelled as base vertices."""
    levels = [[v.base for v in pg.diagonal(k)] for k in range(pg.built_up_to + 1)]
    edges = [
        (v.base, w.base)
        for v, w in pg.edges
        if v in pg and w in pg and v.is_diagonal and w.is_diagonal
    ]
    return GradedGraph(levels, edges, pg.base.family)
