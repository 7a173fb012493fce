# conftest.py
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

"""Shared graphs and brute-force oracles.

The oracles here walk graphs vertex by vertex and never import the
dimension code they are compared against.
"""

import pytest

from bratteli.backend.graded_graph import build_family
from bratteli.backend.pascalize import pascalize

FAMILIES = ("chain", "young", "walled_young", "doubled_young")
ALGEBRA_FAMILIES = ("young", "walled_young", "doubled_young")


def enumerate_partitions(n, largest=None):
    """Every partition of n as a weakly decreasing tuple."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in enumerate_partitions(n - first, first):
            yield (first,) + rest


def count_dyck_paths(n):
    """Number of +-1 walks of length 2n from 0 to 0 that never go negative, by enumeration."""
    count = 0
    stack = [(0, 0)]
    while stack:
        steps, height = stack.pop()
        if steps == 2 * n:
            count += height == 0
            continue
        if height + 1 <= 2 * n - steps - 1:
            stack.append((steps + 1, height + 1))
        if height > 0:
            stack.append((steps + 1, height - 1))
    return count


def count_root_paths(graph, v):
    """Number of root paths to v, one path at a time."""
    total = 0
    stack = [v]
    while stack:
        u = stack.pop()
        if u.level == 0:
            total += 1
            continue
        stack.extend(graph.down(u))
    return total


def count_paths_between(graph, v, w):
    """Number of v-to-w paths by depth-first search upward from v."""
    if v.level > w.level:
        return 0
    total = 0
    stack = [v]
    while stack:
        u = stack.pop()
        if u.level == w.level:
            total += u == w
            continue
        stack.extend(graph.up(u))
    return total


@pytest.fixture(scope="session")
def partitions():
    """The brute-force partition enumerator."""
    return enumerate_partitions


@pytest.fixture(scope="session")
def dyck_paths():
    """The brute-force Dyck path counter."""
    return count_dyck_paths


@pytest.fixture(scope="session")
def root_paths():
    """The brute-force root path counter."""
    return count_root_paths


@pytest.fixture(scope="session")
def paths_between():
    """The brute-force vertex-to-vertex path counter."""
    return count_paths_between


@pytest.fixture(scope="session")
def graphs():
    """Family graphs through level 12, built once per session."""
    return {name: build_family(name, 12) for name in FAMILIES}


@pytest.fixture(scope="session")
def pascalized(graphs):
    """Pascalized family graphs through level 12."""
    return {name: pascalize(graph, 12) for name, graph in graphs.items()}


@pytest.fixture
def young(graphs):
    """The Young graph through level 12."""
    return graphs["young"]


@pytest.fixture
def chain(graphs):
    """The chain through level 12."""
    return graphs["chain"]


@pytest.fixture
def pyoung(pascalized):
    """The pascalized Young graph through level 12."""
    return pascalized["young"]


@pytest.fixture
def pchain(pascalized):
    """The pascalized chain through level 12."""
    return pascalized["chain"]
