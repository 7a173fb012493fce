# central_measures.py
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

"""Central measures on path spaces, estimated at finite horizons.

A central measure is represented by the harmonic function
phi(v) = mu(C_v) / dim(v), where C_v is the cylinder of paths through v. The
module checks harmonicity exactly, builds the Plancherel assignment, samples
paths from the associated growth process, and computes the finite-n values
dim(d) dim(d; s_n) / dim(s_n) whose limit along typical paths recovers mu(C_d).

Samplers draw from a numpy `Generator`, the PCG64 bit generator with a
128-bit state. Each path is seeded with one 64-bit integer split off a parent
seed by `sample_seeds`, and `default_rng(seed)` expands it through a
`SeedSequence`, so a seed fixes the path. Weighted choices are made by exact
integer rejection sampling over the big-integer weights.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from bratteli.backend.dimensions import (
    BranchingRatios,
    CriterionResult,
    DimTable,
    MTable,
    dims_up_to,
    max_shift_ratio,
    vanishing_criterion,
)
from bratteli.backend.errors import CriterionError, DomainError, HorizonError
from bratteli.backend.families import is_registered
from bratteli.backend.graded_graph import GradedGraph, GraphPath, ValidationReport, Vertex, check_path
from bratteli.backend.pascalize import PascalizedGraph, PascalizedVertex
from bratteli.constants import Verdict

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HarmonicAssignment:
    """A candidate central measure given by phi on levels 0..top.

    Attributes:
        graph (GradedGraph): Graph the assignment lives on.
        values (Dict[Vertex, Fraction]): phi(v) for every vertex through `top`.
        top (int): Highest level assigned.
    """

    graph: GradedGraph
    values: Dict[Vertex, Fraction] = field(compare=False)
    top: int

    def __getitem__(self, v: Vertex) -> Fraction:
        try:
            return self.values[v]
        except KeyError:
            raise HorizonError(f"phi is undefined at {v!r}; assigned through level {self.top}") from None

    def cylinder(self, v: Vertex, dims: DimTable) -> Fraction:
        """mu(C_v) = phi(v) dim(v)."""
        return self[v] * dims[v]


def plancherel_assignment(graph: GradedGraph, dims: DimTable, n: int) -> HarmonicAssignment:
    """phi(v) = dim(v) / sum over level |v| of dim^2.

    On the Young graph this is dim(lambda) / |lambda|!, the Plancherel
    measure; on the chain it is phi = 1. It is harmonic on every graph
    with homogeneous branching.
    """
    if dims.top < n:
        raise HorizonError(f"the Plancherel assignment through {n} needs dimensions through {n}")
    values: Dict[Vertex, Fraction] = {}
    for k in range(n + 1):
        total = dims.sum_of_squares(k)
        for v, d in dims.level_values(k):
            values[v] = Fraction(d, total)
    return HarmonicAssignment(graph, values, n)


@dataclass
class HarmonicityReport(ValidationReport):
    """Outcome of `check_harmonicity`; `level` is where the first violation sits."""

    level: Optional[int] = None


def check_harmonicity(
    graph: GradedGraph, phi: HarmonicAssignment, n: int, dims: Optional[DimTable] = None
) -> HarmonicityReport:
    """Check that `phi` defines a central measure on levels 0..n.

    Verified level by level, stopping at the first violation: phi(root) = 1,
    phi >= 0, the level total of phi(v) dim(v) is 1, and
    phi(v) = sum of phi over the upper neighbors of v for levels below n.

    Args:
        graph (GradedGraph): Graph of the assignment.
        phi (HarmonicAssignment): Assignment through at least level n.
        n (int): Highest level checked.
        dims (DimTable, optional): Dimensions of `graph` through n.

    Returns:
        HarmonicityReport: Empty on success, otherwise the first violation.
    """
    if phi.top < n:
        raise HorizonError(f"phi is assigned through {phi.top}, cannot check through {n}")
    if dims is None:
        dims = dims_up_to(graph, n)
    report = HarmonicityReport()

    def fail(level: int, message: str) -> HarmonicityReport:
        report.level = level
        report.violations.append(message)
        return report

    if phi[graph.root] != 1:
        return fail(0, f"root: phi(root) = {phi[graph.root]}, expected 1")
    for k in range(n + 1):
        for v in graph.level(k):
            if phi[v] < 0:
                return fail(k, f"positivity: phi({v!r}) = {phi[v]} < 0")
        total = sum((phi.cylinder(v, dims) for v in graph.level(k)), Fraction(0))
        if total != 1:
            return fail(k, f"total: level {k} carries measure {total}, expected 1")
        if k == n:
            break
        for v in graph.level(k):
            above = sum((phi[w] for w in graph.up(v)), Fraction(0))
            if above != phi[v]:
                return fail(k, f"harmonicity: phi({v!r}) = {phi[v]} but upper neighbors sum to {above}")
    return report


@dataclass(frozen=True)
class ErgodicEstimate:
    """Finite-n values dim(d) dim(d; s_n) / dim(s_n) along a path.

    `values[i]` belongs to level `start + i`. No limit is claimed; only the
    finite-horizon values are reported.
    """

    target: Vertex
    path: GraphPath
    start: int
    values: Tuple[Fraction, ...]

    def rows(self) -> List[Tuple[int, Fraction]]:
        """(n, value) pairs."""
        return [(self.start + i, value) for i, value in enumerate(self.values)]

    @property
    def final(self) -> Fraction:
        """The value at the horizon."""
        return self.values[-1]


def ergodic_estimate(
    graph: GradedGraph, dims: DimTable, d: Vertex, s: Sequence[Vertex], horizon: int
) -> ErgodicEstimate:
    """The exact sequence dim(d) dim(d; s_n) / dim(s_n) for n = level(d) .. horizon.

    Args:
        graph (GradedGraph): Graph of the path.
        dims (DimTable): Dimensions through `horizon`.
        d (Vertex): Target vertex.
        s (Sequence[Vertex]): Root path through at least level `horizon`.
        horizon (int): Last level evaluated.

    Raises:
        DomainError: If horizon < level(d).
        HorizonError: If the path or the table stops below `horizon`.
    """
    if horizon < d.level:
        raise DomainError(f"horizon {horizon} lies below the target {d!r}")
    if len(s) <= horizon:
        raise HorizonError(f"path of length {len(s) - 1} does not reach level {horizon}")
    if dims.top < horizon:
        raise HorizonError(f"dimensions stop at level {dims.top}, below horizon {horizon}")
    path = check_path(graph, s[: horizon + 1])
    graph.index(d)
    values = tuple(
        Fraction(dims[d] * dims.between(d, path[m]), dims[path[m]]) for m in range(d.level, horizon + 1)
    )
    return ErgodicEstimate(d, path, d.level, values)


def _randbelow(rng: np.random.Generator, bound: int) -> int:
    """Uniform integer in [0, bound) for arbitrarily large `bound`."""
    if bound <= 0:
        raise DomainError("cannot sample from an empty range")
    bits = bound.bit_length()
    nbytes = (bits + 7) // 8
    mask = (1 << bits) - 1
    while True:
        candidate = int.from_bytes(rng.bytes(nbytes), "big") & mask
        if candidate < bound:
            return candidate


def _choose(rng: np.random.Generator, items: Sequence[Vertex], weights: Sequence[Fraction]) -> Vertex:
    scale = math.lcm(*(w.denominator for w in weights))
    integral = [int(w * scale) for w in weights]
    pick = _randbelow(rng, sum(integral))
    for item, weight in zip(items, integral):
        if pick < weight:
            return item
        pick -= weight
    raise AssertionError("weighted choice fell off the end")


def transition_probabilities(
    graph: GradedGraph, phi: HarmonicAssignment, v: Vertex
) -> Dict[Vertex, Fraction]:
    """P(v -> w) = phi(w) / phi(v) over the upper neighbors w of v.

    Raises:
        DomainError: If phi(v) = 0, so v is never reached.
    """
    if phi[v] == 0:
        raise DomainError(f"phi({v!r}) = 0; the growth process never visits it")
    return {w: phi[w] / phi[v] for w in graph.up(v)}


def sample_seeds(seed: int, count: int) -> List[int]:
    """`count` independent 64-bit child seeds split from `seed`."""
    children = np.random.SeedSequence(seed).spawn(count)
    return [int(child.generate_state(1, dtype=np.uint64)[0]) for child in children]


def growth_sample_path(graph: GradedGraph, phi: HarmonicAssignment, n: int, seed: int) -> GraphPath:
    """Sample a root path through level n from the growth process of `phi`.

    Each step moves from v to an upper neighbor w with probability
    phi(w) / phi(v), so the endpoint at level k is distributed by the cylinder
    measures of `phi`. Deterministic given `seed`.
    """
    if phi.top < n:
        raise HorizonError(f"phi is assigned through {phi.top}, cannot sample to level {n}")
    rng = np.random.default_rng(seed)
    path = [graph.root]
    for _ in range(n):
        steps = transition_probabilities(graph, phi, path[-1])
        path.append(_choose(rng, list(steps), list(steps.values())))
    return tuple(path)


def plancherel_sample_path(
    young: GradedGraph, n: int, seed: int, dims: Optional[DimTable] = None
) -> GraphPath:
    """Sample a path of the Plancherel growth process through level n.

    On the Young graph the transition probability is
    dim(L) / ((|l| + 1) dim(l)).

    Args:
        young (GradedGraph): Graph built through level n.
        n (int): Length of the path.
        seed (int): Generator seed.
        dims (DimTable, optional): Precomputed dimensions through n.
    """
    if dims is None:
        dims = dims_up_to(young, n)
    return growth_sample_path(young, plancherel_assignment(young, dims, n), n, seed)


def random_walk_path(
    graph: GradedGraph, dims: DimTable, n: int, seed: int, through: Optional[Vertex] = None
) -> GraphPath:
    """Sample a root path through level n, optionally forced through a vertex.

    Below `through` the path is uniform among the dim(through) root paths
    (each lower neighbor u is taken with probability dim(u) / dim(current));
    above it every step picks an upper neighbor uniformly.

    Raises:
        DomainError: If `through` lies above level n.
    """
    if n > graph.built_up_to:
        raise HorizonError(f"cannot sample to level {n}; graph built to {graph.built_up_to}")
    rng = np.random.default_rng(seed)
    start = through if through is not None else graph.root
    if start.level > n:
        raise DomainError(f"{start!r} lies above level {n}")
    graph.index(start)
    lower = [start]
    while lower[-1].level > 0:
        below = graph.down(lower[-1])
        weights = [Fraction(dims[u], dims[lower[-1]]) for u in below]
        lower.append(_choose(rng, below, weights))
    path = list(reversed(lower))
    while len(path) <= n:
        above = graph.up(path[-1])
        path.append(above[_randbelow(rng, len(above))])
    return tuple(path)


def exhaustive_cylinder_measures(
    graph: GradedGraph, phi: HarmonicAssignment, n: int
) -> Dict[Vertex, Fraction]:
    """mu(C_v) for every vertex through level n by weighting each root path.

    Every root-to-level-n path gets the product of its transition
    probabilities; mu(C_v) is the total weight of the paths through v.
    """
    if phi.top < n:
        raise HorizonError(f"phi is assigned through {phi.top}, cannot enumerate to level {n}")
    measures: Dict[Vertex, Fraction] = {v: Fraction(0) for v in graph.vertices(n)}
    stack: List[Tuple[Tuple[Vertex, ...], Fraction]] = [((graph.root,), Fraction(1))]
    while stack:
        path, weight = stack.pop()
        v = path[-1]
        if v.level == n:
            for u in path:
                measures[u] += weight
            continue
        for w, p in transition_probabilities(graph, phi, v).items():
            if p:
                stack.append((path + (w,), weight * p))
    return measures


@dataclass(frozen=True)
class DecayReport:
    """Upper bounds and exact values for an off-diagonal cylinder.

    Attributes:
        target (PascalizedVertex): The vertex (n0, lambda), |lambda| < n0.
        rows (Tuple[Tuple[int, Fraction, Fraction], ...]): (n, bound, value)
            for n = n0 .. horizon, bound = dim(n0, lambda) * max_shift_ratio(n).
        bounds (Tuple[Fraction, ...]): The bound at n0 + 2, n0 + 4, ...
        path (GraphPath): The path the values were taken along.
    """

    target: PascalizedVertex
    rows: Tuple[Tuple[int, Fraction, Fraction], ...]
    bounds: Tuple[Fraction, ...]
    path: GraphPath

    @property
    def strictly_decreasing(self) -> bool:
        """True when every headline bound drops below the previous one."""
        return all(a > b for a, b in zip(self.bounds, self.bounds[1:]))

    @property
    def sound(self) -> bool:
        """True when no value exceeds its bound."""
        return all(value <= bound for _, bound, value in self.rows)


def cylinder_decay_report(
    pg: PascalizedGraph,
    dims: DimTable,
    mt: MTable,
    d: PascalizedVertex,
    horizon: int,
    path: Optional[Sequence[Vertex]] = None,
    seed: int = 0,
) -> DecayReport:
    """Bounds on the cylinder of an off-diagonal vertex and the values along a path.

    A path through d to level n passes (n, nu) with |nu| <= n - 2, and shifting
    the segment above d down by two levels shows
    dim(d) dim(d; (n, nu)) / dim(n, nu) <= dim(d) max_shift_ratio(n). When the
    branching ratios are unbounded these bounds tend to 0.

    Args:
        pg (PascalizedGraph): Pascalized graph built through `horizon`.
        dims (DimTable): Dimensions of `pg` through `horizon`.
        mt (MTable): M table through `horizon + 1`.
        d (PascalizedVertex): Off-diagonal target vertex.
        horizon (int): Last level reported.
        path (Sequence[Vertex], optional): Path to evaluate along; sampled
            through d by `random_walk_path` when omitted.
        seed (int): Seed for the sampled path.

    Raises:
        DomainError: If d is diagonal or horizon < level(d).
        HorizonError: If the graph, table or M table stop short.
    """
    pg.index(d)
    if d.is_diagonal:
        raise DomainError(f"{d!r} lies on the embedded base graph; off-diagonal vertices only")
    if horizon < d.level:
        raise DomainError(f"horizon {horizon} lies below the target {d!r}")
    if mt.top < horizon + 1:
        raise HorizonError(f"the decay report to {horizon} needs M through level {horizon + 1}")
    if path is None:
        path = random_walk_path(pg, dims, horizon, seed, through=d)
    estimate = ergodic_estimate(pg, dims, d, path, horizon)
    rows = tuple((n, dims[d] * max_shift_ratio(mt, n), value) for n, value in estimate.rows())
    bounds = tuple(bound for n, bound, _ in rows if n > d.level and (n - d.level) % 2 == 0)
    return DecayReport(d, rows, bounds, estimate.path)


@dataclass
class ConcentrationReport(HarmonicityReport):
    """Outcome of `concentration_check`, with the lifted assignment."""

    lifted: Optional[HarmonicAssignment] = None


def lift_to_pascalization(pg: PascalizedGraph, phi: HarmonicAssignment, n: int) -> HarmonicAssignment:
    """phi on diagonal vertices (k, lambda), |lambda| = k, and 0 elsewhere."""
    values = {v: (phi[v.base] if v.is_diagonal else Fraction(0)) for v in pg.vertices(n)}
    return HarmonicAssignment(pg, values, n)


def concentration_check(
    pg: PascalizedGraph,
    phi: HarmonicAssignment,
    n: int,
    criterion: Optional[CriterionResult] = None,
) -> ConcentrationReport:
    """Check that a central measure of the base lifts to one on the diagonal.

    The lift is harmonic on the pascalization because the diagonal
    successors of (k, lambda), |lambda| = k, are exactly (k+1, L) with
    lambda -> L, and the off-diagonal successors carry 0.

    Args:
        pg (PascalizedGraph): Pascalized graph through n.
        phi (HarmonicAssignment): Central measure on the base graph.
        n (int): Highest level checked.
        criterion (CriterionResult, optional): The base verdict; computed
            from the family's closed form when omitted.

    Raises:
        CriterionError: If the vanishing criterion fails for the base.
    """
    if criterion is None:
        if not is_registered(pg.base.family):
            raise CriterionError(f"no closed-form ratios for {pg.base.family}; pass a criterion")
        criterion = vanishing_criterion(BranchingRatios.for_family(pg.base.family, 10), 4)
    if criterion.verdict is not Verdict.VANISHES:
        logger.warning(
            "ConcentrationCheck: refused for %s, criterion gives %s",
            pg.base.family,
            criterion.verdict.value,
        )
        raise CriterionError(
            f"off-diagonal cylinders of the {pg.base.family} pascalization need not vanish "
            f"(branching ratios are bounded); measures may charge vertices off the base copy"
        )
    lifted = lift_to_pascalization(pg, phi, n)
    dims = dims_up_to(pg, n)
    checked = check_harmonicity(pg, lifted, n, dims)
    report = ConcentrationReport(list(checked.violations), checked.level, lifted)
    for k in range(n):
        for v in pg.diagonal(k):
            stray = [w for w in pg.up(v) if not w.is_diagonal and lifted[w] != 0]
            if stray:
                report.violations.append(f"concentration: {v!r} sends mass off the diagonal: {stray!r}")
    return report
