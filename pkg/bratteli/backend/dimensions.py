# dimensions.py
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

"""Exact path counting and the pascalized dimension multiplier M(n, l).

All counts are Python integers and all ratios are `fractions.Fraction`, so
every comparison made here is exact. The module covers:

* `dims_up_to` and `dim_between`: root-to-vertex and vertex-to-vertex path counts.
* `branching_ratios`: the ratios a_l = [dim A_l / dim A_(l-1)] and the
  homogeneity of induction at every level.
* `m_table`: the triangle M(n, l) with dim(n, lambda) = M(n, |lambda|) dim(lambda)
  on the pascalization of a homogeneous graph, and the checks built on it
  (multiplicativity, the interleaved ratio chains, growth bounds and the
  vanishing criterion for off-diagonal cylinders).
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from bratteli.backend.errors import DomainError, HorizonError
from bratteli.backend.families import get_family_class, is_registered
from bratteli.backend.graded_graph import GradedGraph, ValidationReport, Vertex
from bratteli.backend.pascalize import PascalizedGraph
from bratteli.constants import CUSTOM_FAMILY, Verdict

logger = logging.getLogger(__name__)

# Record-breaking indices needed before a user-supplied a-sequence is
# treated as unbounded.
RECORD_THRESHOLD = 3


class DimTable:
    """Exact path counts dim(v) for every vertex through level `top`.

    Vertex-to-vertex counts dim(v; w) are computed on demand by a forward
    pass over the cone above v and memoized per source vertex.

    Attributes:
        graph (GradedGraph): The graph counted on.
        top (int): Highest level with computed dimensions.
    """

    def __init__(self, graph: GradedGraph, values: Dict[Vertex, int], top: int):
        self.graph = graph
        self.top = top
        self._values = values
        self._cones: Dict[Vertex, List[Dict[Vertex, int]]] = {}

    def __getitem__(self, v: Vertex) -> int:
        try:
            return self._values[v]
        except KeyError:
            raise HorizonError(f"no dimension for {v!r}; table covers levels 0..{self.top}") from None

    def __contains__(self, v: object) -> bool:
        return v in self._values

    def level_values(self, k: int) -> List[Tuple[Vertex, int]]:
        """(vertex, dim) pairs of level k in canonical order."""
        if k > self.top:
            raise HorizonError(f"level {k} beyond dimension table top {self.top}")
        return [(v, self._values[v]) for v in self.graph.level(k)]

    def sum_of_squares(self, k: int) -> int:
        """Sum of dim(v)^2 over level k, the dimension of the k-th algebra."""
        return sum(d * d for _, d in self.level_values(k))

    def between(self, v: Vertex, w: Vertex) -> int:
        """Number of paths from `v` up to `w` (1 when v == w, 0 when none)."""
        if w.level < v.level:
            raise DomainError(f"dim({v!r}; {w!r}) needs level(v) <= level(w)")
        if w.level > self.graph.built_up_to:
            raise HorizonError(f"{w!r} lies above the built graph")
        self.graph.index(v)
        self.graph.index(w)
        cone = self._cones.setdefault(v, [{v: 1}])
        _extend_cone(self.graph, cone, w.level - v.level)
        return cone[w.level - v.level].get(w, 0)


def _extend_cone(graph: GradedGraph, cone: List[Dict[Vertex, int]], depth: int) -> None:
    while len(cone) <= depth:
        nxt: Dict[Vertex, int] = defaultdict(int)
        for u, count in cone[-1].items():
            for x in graph.up(u):
                nxt[x] += count
        cone.append(dict(nxt))


def dims_up_to(graph: GradedGraph, n: int) -> DimTable:
    """Count root-to-vertex paths for every vertex through level n.

    Args:
        graph (GradedGraph): Graph built through at least level n.
        n (int): Highest level to count.

    Returns:
        DimTable: dim(root) = 1 and dim(w) = sum of dim over lower neighbors.

    Raises:
        HorizonError: If the graph is not built through level n.
    """
    if graph.built_up_to < n:
        raise HorizonError(f"dimensions through level {n} need the graph built that far")
    values: Dict[Vertex, int] = {graph.root: 1}
    for k in range(1, n + 1):
        for w in graph.level(k):
            values[w] = sum(values[v] for v in graph.down(w))
    logger.debug("DimTable: counted paths on %s through level %d", graph.family, n)
    return DimTable(graph, values, n)


def dim_between(graph: GradedGraph, v: Vertex, w: Vertex, dims: Optional[DimTable] = None) -> int:
    """Number of paths from `v` to `w`.

    Args:
        graph (GradedGraph): Graph containing both vertices.
        v (Vertex): Source vertex.
        w (Vertex): Target vertex, level(v) <= level(w).
        dims (DimTable, optional): Table whose per-source memo is reused.
    """
    if dims is None or dims.graph is not graph:
        dims = DimTable(graph, {}, -1)
    return dims.between(v, w)


@dataclass(frozen=True)
class BranchingRatios:
    """The sequence a_1, a_2, ... and per-level homogeneity verdicts.

    `values[l - 1]` is a_l. `homogeneous[l]` tells whether induction from
    level l multiplies every dimension by a_(l+1). When the sequence comes
    from a built-in family, `formula` gives a_l beyond the computed range.
    """

    values: Tuple[int, ...]
    homogeneous: Tuple[bool, ...] = ()
    family: str = CUSTOM_FAMILY
    formula: Optional[Callable[[int], int]] = field(default=None, compare=False)
    unbounded: Optional[bool] = None

    @classmethod
    def from_sequence(cls, values: Sequence[int]) -> "BranchingRatios":
        """Wrap a user-supplied sequence a_1, a_2, ...

        Raises:
            DomainError: If a value is not a positive integer.
        """
        values = tuple(values)
        if not all(isinstance(a, int) and a > 0 for a in values):
            raise DomainError("branching ratios must be positive integers")
        return cls(values)

    @classmethod
    def for_family(cls, name: str, length: int) -> "BranchingRatios":
        """The closed-form sequence of a registered family through index `length`."""
        impl = get_family_class(name)()
        values = tuple(impl.branching_ratio(l) for l in range(1, length + 1))
        return cls(
            values,
            homogeneous=(True,) * length,
            family=impl.name,
            formula=impl.branching_ratio,
            unbounded=impl.unbounded_ratios,
        )

    @property
    def length(self) -> int:
        """Number of values a_1..a_length available without the formula."""
        return len(self.values)

    @property
    def is_homogeneous(self) -> bool:
        """True when induction is homogeneous at every computed level."""
        return all(self.homogeneous)

    def a(self, l: int) -> int:
        """The ratio a_l, extended by the closed form when known.

        Raises:
            HorizonError: If l is beyond the computed range and no closed form exists.
        """
        if l < 1:
            raise DomainError(f"branching ratios are indexed from 1, got {l}")
        if l <= len(self.values):
            return self.values[l - 1]
        if self.formula is not None:
            return self.formula(l)
        raise HorizonError(f"a_{l} is beyond the supplied sequence of length {len(self.values)}")

    def extended(self, length: int) -> "BranchingRatios":
        """A copy holding a_1..a_length explicitly."""
        values = tuple(self.a(l) for l in range(1, length + 1))
        return BranchingRatios(values, self.homogeneous, self.family, self.formula, self.unbounded)


def branching_ratios(graph: GradedGraph, dims: DimTable, n: int) -> BranchingRatios:
    """Compute a_1..a_n and the homogeneity of levels 0..n-1.

    a_l is the integer part of dim A_l / dim A_(l-1) where dim A_l is the sum of
    squared dimensions on level l. Level l is homogeneous when the dimensions
    of the upper neighbors of every lambda sum to a_(l+1) dim(lambda); a
    non-integral dimension ratio makes the level inhomogeneous.

    Args:
        graph (GradedGraph): Base graph.
        dims (DimTable): Dimensions through level n.
        n (int): Highest level used.

    Returns:
        BranchingRatios: With the family's closed form attached when registered.
    """
    if dims.top < n:
        raise HorizonError(f"branching ratios through {n} need dimensions through {n}")
    algebra = [dims.sum_of_squares(k) for k in range(n + 1)]
    values = []
    homogeneous = []
    for l in range(1, n + 1):
        values.append(algebra[l] // algebra[l - 1])
    for l in range(n):
        a_next = values[l]
        exact = algebra[l + 1] % algebra[l] == 0
        induced = all(
            sum(dims[nu] for nu in graph.up(lam)) == a_next * dims[lam] for lam in graph.level(l)
        )
        homogeneous.append(exact and induced)
        if not homogeneous[-1]:
            logger.debug("BranchingRatios: level %d of %s is not homogeneous", l, graph.family)
    if is_registered(graph.family):
        impl = get_family_class(graph.family)()
        return BranchingRatios(
            tuple(values), tuple(homogeneous), impl.name, impl.branching_ratio, impl.unbounded_ratios
        )
    return BranchingRatios(tuple(values), tuple(homogeneous))


class MTable:
    """The triangle M(n, l), l <= n, n - l even, through level `top`.

    M(n, n) = 1, M(n, 0) = a_1 M(n-1, 1) and
    M(n, l) = M(n-1, l-1) + a_(l+1) M(n-1, l+1) for 0 < l < n. Every
    built-in family has a_1 = 1, so M(2n+2, 0) = M(2n+1, 1).
    """

    def __init__(self, a: BranchingRatios, top: int, entries: Dict[Tuple[int, int], int]):
        self.a = a
        self.top = top
        self._m = entries

    def __getitem__(self, key: Tuple[int, int]) -> int:
        n, l = key
        if n > self.top:
            raise HorizonError(f"M({n},{l}) is beyond the table top {self.top}")
        if not 0 <= l <= n or (n - l) % 2:
            raise DomainError(f"M({n},{l}) is undefined: need 0 <= l <= n and n - l even")
        return self._m[(n, l)]

    def row(self, n: int) -> List[Tuple[int, int]]:
        """(l, M(n, l)) for every defined l, in increasing l."""
        return [(l, self[n, l]) for l in range(n % 2, n + 1, 2)]

    def ratio(self, n: int) -> Fraction:
        """m_n = M(2n, 0) / M(2n+2, 0)."""
        return Fraction(self[2 * n, 0], self[2 * n + 2, 0])

    def ratio_sequence(self, count: int) -> List[Fraction]:
        """m_0 .. m_count."""
        return [self.ratio(n) for n in range(count + 1)]


def m_table(a: BranchingRatios, n: int) -> MTable:
    """Compute M(k, l) for every k <= n.

    Args:
        a (BranchingRatios): Needs a_1..a_n (directly or via the closed form).
        n (int): Highest level.

    Returns:
        MTable: The exact triangle.
    """
    if n < 0:
        raise DomainError("the M table needs n >= 0")
    entries: Dict[Tuple[int, int], int] = {(0, 0): 1}
    for k in range(1, n + 1):
        for l in range(k % 2, k + 1, 2):
            if l == k:
                entries[(k, l)] = 1
            elif l == 0:
                entries[(k, 0)] = a.a(1) * entries[(k - 1, 1)]
            else:
                entries[(k, l)] = entries[(k - 1, l - 1)] + a.a(l + 1) * entries[(k - 1, l + 1)]
    logger.debug("MTable: computed M through level %d for %s", n, a.family)
    return MTable(a, n, entries)


def verify_multiplicativity(
    pg: PascalizedGraph, dims: DimTable, base_dims: DimTable, mt: MTable, n: int
) -> ValidationReport:
    """Check dim(k, lambda) = M(k, |lambda|) dim(lambda) for every vertex through level n.

    Returns:
        ValidationReport: One violation per failing vertex, naming (k, lambda).
    """
    report = ValidationReport()
    for v in pg.vertices(n):
        expected = mt[v.level, v.base.level] * base_dims[v.base]
        if dims[v] != expected:
            report.violations.append(
                f"multiplicativity: dim{v!r} = {dims[v]} but M({v.level},{v.base.level}) "
                f"* dim({v.base.label!r}) = {expected}"
            )
    return report


def max_shift_ratio(mt: MTable, n: int) -> Fraction:
    """max over |lambda| < n of dim(n-2, lambda) / dim(n, lambda), in closed form.

    Equals M(n - 2 + e, 0) / M(n + e, 0) with e = 0 for even n and 1 for odd n.

    Raises:
        DomainError: If n < 2.
    """
    if n < 2:
        raise DomainError(f"the shift ratio needs n >= 2, got {n}")
    eps = n % 2
    return Fraction(mt[n - 2 + eps, 0], mt[n + eps, 0])


def observed_max_shift_ratio(pg: PascalizedGraph, dims: DimTable, n: int) -> Fraction:
    """The same maximum taken directly over the vertices of level n."""
    if n < 2:
        raise DomainError(f"the shift ratio needs n >= 2, got {n}")
    return max(Fraction(dims[pg.vertex(n - 2, v.base)], dims[v]) for v in pg.off_diagonal(n))


def ratio_chains(mt: MTable, n: int) -> Tuple[List[Fraction], List[Fraction]]:
    """The two interleaved chains of ratios of M between levels two apart.

    First chain: M(2n-2,0)/M(2n,0), then for l = 1..2n-2 the ratio
    M(2n-3,l)/M(2n-1,l) for odd l and M(2n-2,l)/M(2n,l) for even l.
    Second chain: for l = 0..2n-1, M(2n-1,l)/M(2n+1,l) for odd l and
    M(2n-2,l)/M(2n,l) for even l.

    Raises:
        DomainError: If n < 2.
        HorizonError: If the table does not reach level 2n+1.
    """
    if n < 2:
        raise DomainError(f"ratio chains need n >= 2, got {n}")
    if mt.top < 2 * n + 1:
        raise HorizonError(f"ratio chains at n={n} need M through level {2 * n + 1}")

    def even(l: int) -> Fraction:
        return Fraction(mt[2 * n - 2, l], mt[2 * n, l])

    first = [even(0)]
    for l in range(1, 2 * n - 1):
        first.append(Fraction(mt[2 * n - 3, l], mt[2 * n - 1, l]) if l % 2 else even(l))
    second = [Fraction(mt[2 * n - 1, l], mt[2 * n + 1, l]) if l % 2 else even(l) for l in range(2 * n)]
    return first, second


def check_ratio_chains(mt: MTable, n: int) -> ValidationReport:
    """Check the leading equality and every strict inequality of both chains."""
    report = ValidationReport()
    first, second = ratio_chains(mt, n)
    if first[0] != first[1]:
        report.violations.append(f"chain 1 at n={n}: {first[0]} != {first[1]}")
    for name, chain, start in (("chain 1", first, 1), ("chain 2", second, 0)):
        for i in range(start, len(chain) - 1):
            if not chain[i] > chain[i + 1]:
                report.violations.append(f"{name} at n={n}: {chain[i]} <= {chain[i + 1]} at l={i}")
    return report


def check_decreasing(ratios: Sequence[Fraction]) -> ValidationReport:
    """Check that a ratio sequence is strictly decreasing."""
    report = ValidationReport()
    for i in range(len(ratios) - 1):
        if not ratios[i] > ratios[i + 1]:
            report.violations.append(f"ratio {i + 1} = {ratios[i + 1]} does not drop below {ratios[i]}")
    return report


def bounded_growth(mt: MTable, bound: int, n: int) -> ValidationReport:
    """Check M(2k, 0) < (bound + 1)^(2k) for 1 <= k, 2k <= n.

    This is the finite-horizon form of the bounded case: when a_l <= bound
    for all l, M grows at most exponentially.
    """
    report = ValidationReport()
    for k in range(1, n // 2 + 1):
        if not mt[2 * k, 0] < (bound + 1) ** (2 * k):
            report.violations.append(f"growth: M({2 * k},0) = {mt[2 * k, 0]} >= {bound + 1}^{2 * k}")
    return report


def exponential_lower_bound(mt: MTable, base: int, start: int, n: int) -> ValidationReport:
    """Check M(2k, 0) > base^k for start <= k, 2k <= n."""
    report = ValidationReport()
    for k in range(start, n // 2 + 1):
        if not mt[2 * k, 0] > base**k:
            report.violations.append(f"growth: M({2 * k},0) = {mt[2 * k, 0]} <= {base}^{k}")
    return report


def zigzag_lower_bounds(mt: MTable, level: int, n: int) -> ValidationReport:
    """Check M(L + 2i, L) >= a_L^i for L + 2i <= n.

    Along the path that climbs to (L, L) and then alternates between base
    levels L and L-1, each return to base level L multiplies the count by at
    least a_L, so an unbounded a-sequence forces super-exponential growth.
    """
    if level < 1:
        raise DomainError("the zig-zag bound needs L >= 1")
    report = ValidationReport()
    a_l = mt.a.a(level)
    for i in range((n - level) // 2 + 1):
        if mt[level + 2 * i, level] < a_l**i:
            report.violations.append(f"zig-zag: M({level + 2 * i},{level}) < a_{level}^{i} = {a_l**i}")
    return report


@dataclass(frozen=True)
class CriterionResult:
    """Verdict of the vanishing criterion and the ratio sequence behind it.

    Attributes:
        verdict (Verdict): VANISHES when sup a_l is infinite.
        ratio_sequence (Tuple[Fraction, ...]): m_0 .. m_horizon.
        heuristic (bool): True when the verdict was inferred from a finite
            prefix of a user-supplied sequence rather than a closed form.
    """

    verdict: Verdict
    ratio_sequence: Tuple[Fraction, ...]
    heuristic: bool = False

    @property
    def vanishes(self) -> bool:
        """True when off-diagonal cylinders have measure zero."""
        return self.verdict is Verdict.VANISHES


def vanishing_criterion(a: BranchingRatios, horizon: int) -> CriterionResult:
    """Decide whether max dim(n-2, lambda)/dim(n, lambda) tends to zero.

    The limit is zero exactly when the branching ratios are unbounded. For a
    built-in family the verdict comes from its closed form; for a
    user-supplied prefix it is inferred from record-breaking values
    (at least RECORD_THRESHOLD of them) and flagged as heuristic.

    Args:
        a (BranchingRatios): Ratios through index 2 * horizon + 2, or a
            family sequence with a closed form.
        horizon (int): Last index n of the returned m_n, at least 4.

    Returns:
        CriterionResult: The verdict and m_0 .. m_horizon.

    Raises:
        DomainError: If horizon < 4.
        HorizonError: If a user sequence is too short.
    """
    if horizon < 4:
        raise DomainError(f"the vanishing criterion needs horizon >= 4, got {horizon}")
    mt = m_table(a.extended(2 * horizon + 2), 2 * horizon + 2)
    ratios = tuple(mt.ratio_sequence(horizon))
    if a.unbounded is not None:
        verdict = Verdict.VANISHES if a.unbounded else Verdict.POSITIVE_LIMIT
        return CriterionResult(verdict, ratios)
    records = 0
    best = None
    for value in a.values:
        if best is not None and value > best:
            records += 1
        best = value if best is None else max(best, value)
    verdict = Verdict.VANISHES if records >= RECORD_THRESHOLD else Verdict.POSITIVE_LIMIT
    logger.warning(
        "BranchingRatios: verdict %s for %s inferred from %d records in a prefix of length %d",
        verdict.value,
        a.family,
        records,
        a.length,
    )
    return CriterionResult(verdict, ratios, heuristic=True)


def algebra_dimensions(pg: PascalizedGraph, dims: DimTable, n: int) -> List[Tuple[int, int, int]]:
    """(k, sum over level k of dim^2, sum over the diagonal of dim^2) for k <= n.

    The first sum is the dimension of the k-th algebra whose branching graph
    is the pascalization, the second that of its quotient by the ideal of
    non-invertible generators, i.e. of the k-th base algebra.
    """
    rows = []
    for k in range(n + 1):
        total = dims.sum_of_squares(k)
        quotient = sum(dims[v] ** 2 for v in pg.diagonal(k))
        rows.append((k, total, quotient))
    return rows
