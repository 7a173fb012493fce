# test_graded_graph.py
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

"""Unit tests for graded graph construction, queries and validation."""

import pytest

from bratteli.backend.errors import DomainError, HorizonError, InvalidVertexError, UnknownFamilyError
from bratteli.backend.graded_graph import GradedGraph, Vertex, build_family, check_path, validate
from bratteli.constants import Direction
from tests.conftest import FAMILIES


def labels(graph, k):
    return set(v.label for v in graph.level(k))


class TestBuildFamily:
    def test_chain(self):
        """The chain has one vertex per level and edges n - (n+1)."""
        graph = build_family("chain", 5)
        assert [labels(graph, k) for k in range(6)] == [{0}, {1}, {2}, {3}, {4}, {5}]
        assert graph.edges == tuple((Vertex(n, n), Vertex(n + 1, n + 1)) for n in range(5))

    def test_young_level_three(self):
        """Level 3 of the Young graph holds the partitions of 3, largest first."""
        graph = build_family("young", 3)
        assert [v.label for v in graph.level(3)] == [(3,), (2, 1), (1, 1, 1)]

    def test_walled_young_level_three(self):
        """Pairs grow first partition first."""
        graph = build_family("walled_young", 3)
        assert labels(graph, 3) == {((2,), (1,)), ((1, 1), (1,))}
        assert labels(graph, 2) == {((1,), (1,))}

    def test_doubled_young_repeats_levels(self):
        """Levels 2i and 2i+1 both hold the partitions of i."""
        graph = build_family("doubled_young", 5)
        assert labels(graph, 2) == {(1,)}
        assert labels(graph, 3) == {(1,)}
        assert labels(graph, 4) == {(2,), (1, 1)}
        assert graph.up(Vertex(4, (2,))) == (Vertex(5, (2,)),)

    def test_root_only(self):
        """max_level 0 gives the bare root."""
        graph = build_family("young", 0)
        assert graph.built_up_to == 0
        assert graph.root == Vertex(0, ())
        assert graph.edges == ()

    def test_negative_level_raises(self):
        """Negative levels are outside the domain."""
        with pytest.raises(DomainError):
            build_family("young", -1)

    def test_unknown_family_raises(self):
        """Unregistered names raise."""
        with pytest.raises(UnknownFamilyError):
            build_family("free_group", 3)

    def test_young_level_sizes_match_partition_count(self, partitions):
        """|level n| is the number of partitions of n."""
        graph = build_family("young", 20)
        for n in range(21):
            assert len(graph.level(n)) == len(list(partitions(n)))
            assert labels(graph, n) == set(partitions(n))

    @pytest.mark.parametrize("family", FAMILIES)
    def test_families_are_valid(self, graphs, family):
        """Every built-in family satisfies every invariant."""
        assert validate(graphs[family]).ok


class TestNeighbors:
    def test_chain_up(self, chain):
        """The chain climbs by one."""
        assert chain.up(Vertex(3, 3)) == (Vertex(4, 4),)

    def test_young_up_and_down(self, young):
        """Box additions and removals."""
        v = Vertex(3, (2, 1))
        assert set(young.neighbors(v, Direction.UP)) == {
            Vertex(4, (3, 1)),
            Vertex(4, (2, 2)),
            Vertex(4, (2, 1, 1)),
        }
        assert set(young.neighbors(v, Direction.DOWN)) == {Vertex(2, (2,)), Vertex(2, (1, 1))}

    def test_unknown_vertex_raises(self, young):
        """Vertices not in the graph are invalid queries."""
        with pytest.raises(InvalidVertexError):
            young.up(Vertex(3, (5,)))

    def test_up_from_top_raises(self):
        """Nothing is built above the top level."""
        graph = build_family("young", 2)
        with pytest.raises(HorizonError):
            graph.up(Vertex(2, (2,)))
        assert graph.down(Vertex(2, (2,))) == (Vertex(1, (1,)),)

    @pytest.mark.parametrize("family", FAMILIES)
    def test_up_down_consistent(self, graphs, family):
        """w is above v exactly when v is below w."""
        graph = graphs[family].truncated(8)
        for v in graph.vertices(7):
            for w in graph.up(v):
                assert v in graph.down(w)
        for w in graph.vertices():
            for v in graph.down(w):
                assert w in graph.up(v)

    @pytest.mark.parametrize("family", FAMILIES)
    def test_every_vertex_on_a_root_to_top_path(self, graphs, family):
        """From every vertex one can descend to the root and climb to the top."""
        graph = graphs[family].truncated(8)
        for v in graph.vertices():
            u = v
            while u.level > 0:
                u = graph.down(u)[0]
            assert u == graph.root
            u = v
            while u.level < graph.built_up_to:
                u = graph.up(u)[0]
            assert u.level == 8


class TestLookup:
    def test_find_vertex(self, young):
        """Labels are unique in the Young graph."""
        assert young.find_vertex((2, 1)) == Vertex(3, (2, 1))

    def test_find_vertex_ambiguous(self, graphs):
        """Doubled labels need a level."""
        doubled = graphs["doubled_young"]
        with pytest.raises(InvalidVertexError, match="ambiguous"):
            doubled.find_vertex((1,))
        assert doubled.find_vertex((1,), level=3) == Vertex(3, (1,))

    def test_find_vertex_missing(self, young):
        """Unknown labels raise."""
        with pytest.raises(InvalidVertexError):
            young.find_vertex((2, 1), level=4)

    def test_index_and_level_errors(self, young):
        """Positions follow canonical order; levels outside the range raise."""
        assert young.index(Vertex(2, (1, 1))) == 1
        with pytest.raises(HorizonError):
            young.level(13)
        with pytest.raises(InvalidVertexError):
            young.index(Vertex(2, (3,)))

    def test_truncated_and_without_edges(self, young):
        """Copies are independent graphs."""
        small = young.truncated(3)
        assert small.built_up_to == 3
        assert validate(small).ok
        edge = (Vertex(1, (1,)), Vertex(2, (2,)))
        cut = small.without_edges([edge])
        assert Vertex(2, (2,)) not in cut.up(Vertex(1, (1,)))
        assert not validate(cut).ok
        with pytest.raises(HorizonError):
            small.truncated(4)


class TestValidate:
    def test_young_through_six_ok(self):
        """A well-formed Young graph passes."""
        report = validate(build_family("young", 6))
        assert report.ok
        assert report.violations == []

    def test_isolated_vertex_is_dangling(self):
        """An isolated level-2 vertex is named."""
        graph = build_family("young", 3)
        levels = [list(level) for level in graph.levels]
        levels[2].append(Vertex(2, (9,)))
        report = validate(GradedGraph(levels, graph.edges, "young"))
        assert not report.ok
        assert "dangling vertex: 2:(9,) has no upper neighbor" in report.violations
        assert "dangling vertex: 2:(9,) has no lower neighbor" in report.violations

    def test_edge_skipping_a_level(self):
        """A level-skipping edge is a grading violation."""
        graph = build_family("young", 3)
        edges = list(graph.edges) + [(Vertex(0, ()), Vertex(2, (2,)))]
        report = validate(GradedGraph(graph.levels, edges, "young"))
        assert any(v.startswith("grading: edge 0:() -> 2:(2,)") for v in report.violations)

    def test_root_duplicate_and_repeated_edge(self):
        """Two roots, a duplicated vertex and a repeated edge are all reported."""
        graph = build_family("chain", 2)
        levels = [[Vertex(0, 0), Vertex(0, 9)], [Vertex(1, 1), Vertex(1, 1)], [Vertex(2, 2)]]
        edges = list(graph.edges) + [graph.edges[0]]
        report = validate(GradedGraph(levels, edges, "chain"))
        text = "\n".join(report.violations)
        assert "root: level 0 has 2 vertices" in text
        assert "duplicate vertex: 1:1" in text
        assert "repeated edge: 0:0 -> 1:1" in text

    def test_misgraded_vertex_and_unknown_edge(self):
        """A vertex listed on the wrong level and an edge to nowhere are reported."""
        levels = [[Vertex(0, 0)], [Vertex(2, 1)], []]
        edges = [(Vertex(0, 0), Vertex(1, 7))]
        report = validate(GradedGraph(levels, edges, "custom"))
        text = "\n".join(report.violations)
        assert "grading: vertex 2:1 listed on level 1" in text
        assert "unknown vertex: edge 0:0 -> 1:7" in text
        assert "empty level: level 2 has no vertices" in text


class TestCheckPath:
    def test_valid_path(self, young):
        """A root path is returned as a tuple."""
        path = [Vertex(0, ()), Vertex(1, (1,)), Vertex(2, (1, 1))]
        assert check_path(young, path) == tuple(path)

    @pytest.mark.parametrize(
        "path",
        [
            [],
            [Vertex(1, (1,))],
            [Vertex(0, ()), Vertex(2, (2,))],
            [Vertex(0, ()), Vertex(1, (1,)), Vertex(2, (2,)), Vertex(3, (1, 1, 1))],
        ],
    )
    def test_invalid_paths(self, young, path):
        """Paths must start at the root and follow edges level by level."""
        with pytest.raises(InvalidVertexError):
            check_path(young, path)
