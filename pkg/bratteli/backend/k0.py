# k0.py
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

"""Infinitesimal vertices and the finite-level K0 quotient.

K0 is represented only through the incidence matrices of consecutive
levels. Deleting the rows and columns of infinitesimal vertices from the
matrices of a pascalized graph must give back the matrices of its base.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

from bratteli.backend.dimensions import CriterionResult
from bratteli.backend.graded_graph import GradedGraph, ValidationReport
from bratteli.backend.pascalize import PascalizedGraph, PascalizedVertex
from bratteli.constants import Verdict

logger = logging.getLogger(__name__)


def embedding_matrix(graph: GradedGraph, k: int) -> np.ndarray:
    """0/1 incidence matrix of the boundary k -> k+1.

    Rows follow level k and columns level k+1 in canonical order.
    """
    lower = graph.level(k)
    upper = graph.level(k + 1)
    matrix = np.zeros((len(lower), len(upper)), dtype=np.int64)
    for i, v in enumerate(lower):
        for w in graph.up(v):
            matrix[i, graph.index(w)] = 1
    return matrix


def embedding_matrices(graph: GradedGraph, n: int) -> List[np.ndarray]:
    """Incidence matrices of every boundary k -> k+1 with k < n."""
    return [embedding_matrix(graph, k) for k in range(n)]


@dataclass(frozen=True)
class InfinitesimalSet:
    """Vertices whose cylinders vanish under every central measure.

    Attributes:
        vertices (Tuple[PascalizedVertex, ...]): Flagged vertices, level by level.
        determined (bool): False when the vanishing criterion does not decide
            the question; `vertices` is then empty.
        verdict (Verdict): The criterion verdict the set was derived from.
    """

    vertices: Tuple[PascalizedVertex, ...]
    determined: bool
    verdict: Verdict

    def __contains__(self, v: object) -> bool:
        return v in self.vertices


def infinitesimal_vertices(pg: PascalizedGraph, criterion: CriterionResult, n: int) -> InfinitesimalSet:
    """Flag the off-diagonal vertices through level n when the criterion vanishes.

    When the branching ratios are bounded the criterion says nothing about
    which vertices are infinitesimal, so an empty, undetermined set is returned.
    """
    if criterion.verdict is Verdict.VANISHES:
        flagged = tuple(v for k in range(n + 1) for v in pg.off_diagonal(k))
        return InfinitesimalSet(flagged, True, criterion.verdict)
    logger.info(
        "InfinitesimalSet: undetermined for %s (criterion %s)", pg.base.family, criterion.verdict.value
    )
    return InfinitesimalSet((), False, criterion.verdict)


@dataclass
class K0Report(ValidationReport):
    """Outcome of `k0_quotient_check`; `failing_boundaries` lists each k with k -> k+1 wrong."""

    failing_boundaries: List[int] = field(default_factory=list)


def _kept(pg: PascalizedGraph, inf: InfinitesimalSet, k: int) -> List[PascalizedVertex]:
    return [v for v in pg.level(k) if v not in inf]


def k0_quotient_check(
    pg: PascalizedGraph, base: GradedGraph, inf: InfinitesimalSet, n: int
) -> K0Report:
    """Check that deleting infinitesimal vertices recovers the base matrices.

    For every boundary k < n the rows and columns of the pascalized
    incidence matrix that belong to infinitesimal vertices are deleted, the
    survivors are identified with base vertices by (k, lambda) <-> lambda and
    the result is compared with the base incidence matrix.

    Args:
        pg (PascalizedGraph): Pascalized graph through n.
        base (GradedGraph): Base graph through n.
        inf (InfinitesimalSet): Vertices to delete.
        n (int): Number of boundaries checked.

    Returns:
        K0Report: Violations name the failing boundaries.
    """
    report = K0Report()
    for k in range(n):
        full = embedding_matrix(pg, k)
        rows = _kept(pg, inf, k)
        cols = _kept(pg, inf, k + 1)
        strays = [v for v in rows + cols if not v.is_diagonal]
        if strays:
            report.failing_boundaries.append(k)
            report.violations.append(f"boundary {k}->{k + 1}: survivors off the base copy {strays!r}")
            continue
        expected = embedding_matrix(base, k)
        if len(rows) != expected.shape[0] or len(cols) != expected.shape[1]:
            report.failing_boundaries.append(k)
            report.violations.append(
                f"boundary {k}->{k + 1}: {len(rows)}x{len(cols)} survivors, base matrix is "
                f"{expected.shape[0]}x{expected.shape[1]}"
            )
            continue
        reduced = np.zeros_like(expected)
        for v in rows:
            for w in cols:
                reduced[base.index(v.base), base.index(w.base)] = full[pg.index(v), pg.index(w)]
        if not np.array_equal(reduced, expected):
            report.failing_boundaries.append(k)
            missing = int(np.sum(expected > reduced))
            extra = int(np.sum(reduced > expected))
            report.violations.append(
                f"boundary {k}->{k + 1}: quotient matrix differs from the base "
                f"({missing} missing, {extra} extra edges)"
            )
    if report.ok:
        logger.debug("K0Report: quotient of %s matches the base through level %d", pg.family, n)
    return report
