# test_pascalize.py
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

"""Unit tests for the closed-form algebra dimensions."""

import math

import pytest

from bratteli.backend.errors import DomainError, UnknownFamilyError
from bratteli.backend.families import _REGISTRY, register
from bratteli.backend.families.chain import ChainFamily
from bratteli.backend.oracles import (
    bell,
    bell_numbers,
    catalan,
    expected_algebra_dimension,
    factorial,
    odd_double_factorial,
)


class TestSequences:
    def test_catalan(self):
        """1, 1, 2, 5, 14, 42."""
        assert [catalan(n) for n in range(6)] == [1, 1, 2, 5, 14, 42]

    def test_odd_double_factorial(self):
        """(-1)!! = 1 and 7!! = 105."""
        assert [odd_double_factorial(n) for n in range(5)] == [1, 1, 3, 15, 105]

    def test_factorial_matches_math(self):
        """The product agrees with math.factorial."""
        assert all(factorial(n) == math.factorial(n) for n in range(20))

    def test_bell_numbers(self):
        """1, 1, 2, 5, 15, 52, 203."""
        assert bell_numbers(6) == [1, 1, 2, 5, 15, 52, 203]
        assert bell(10) == 115975

    def test_bell_recurrence(self):
        """B_(n+1) = sum of C(n, k) B_k."""
        numbers = bell_numbers(15)
        for n in range(15):
            assert numbers[n + 1] == sum(math.comb(n, k) * numbers[k] for k in range(n + 1))


class TestExpectedAlgebraDimension:
    @pytest.mark.parametrize(
        "family, n, expected",
        [
            ("chain", 4, 14),
            ("young", 3, 15),
            ("walled_young", 5, 120),
            ("doubled_young", 4, 15),
            ("Doubled-Young", 4, 15),
        ],
    )
    def test_families(self, family, n, expected):
        """Each family maps to its algebra."""
        assert expected_algebra_dimension(family, n) == expected

    def test_negative_index(self):
        """Algebras are indexed from 0."""
        with pytest.raises(DomainError):
            expected_algebra_dimension("young", -1)

    def test_unknown_family(self):
        """Unregistered names are rejected by the registry."""
        with pytest.raises(UnknownFamilyError):
            expected_algebra_dimension("hecke", 2)

    def test_registered_family_without_closed_form(self, mocker):
        """A family added at runtime has no algebra dimension."""

        class LineFamily(ChainFamily):
            name = "line"

        mocker.patch.dict(_REGISTRY, _REGISTRY.copy())
        register("line", LineFamily)
        with pytest.raises(DomainError, match="no closed-form algebra dimension for line"):
            expected_algebra_dimension("line", 2)
