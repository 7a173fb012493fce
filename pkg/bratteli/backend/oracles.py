# oracles.py
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

"""Closed-form dimensions of the algebras whose branching graphs are pascalized.

These formulas share no code with the path-counting machinery and serve as
independent checks of it: Temperley-Lieb (Catalan), Brauer ((2n-1)!!),
walled Brauer (n!) and partition algebras (Bell numbers).
"""

import math
from typing import Callable, Dict, List

from bratteli.backend.errors import DomainError
from bratteli.backend.families import get_family_class


def catalan(n: int) -> int:
    """The n-th Catalan number."""
    return math.comb(2 * n, n) // (n + 1)


def odd_double_factorial(n: int) -> int:
    """(2n-1)!! = 1 * 3 * ... * (2n-1), with (-1)!! = 1."""
    return math.prod(range(1, 2 * n, 2))


def factorial(n: int) -> int:
    """n! as a direct product."""
    return math.prod(range(1, n + 1))


def bell_numbers(n: int) -> List[int]:
    """Bell numbers B_0 .. B_n from the Bell triangle."""
    numbers = [1]
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for value in row:
            nxt.append(nxt[-1] + value)
        row = nxt
        numbers.append(row[0])
    return numbers


def bell(n: int) -> int:
    """The n-th Bell number."""
    return bell_numbers(n)[n]


_ALGEBRA_DIMENSIONS: Dict[str, Callable[[int], int]] = {
    "chain": catalan,
    "young": odd_double_factorial,
    "walled_young": factorial,
    "doubled_young": bell,
}


def expected_algebra_dimension(family: str, n: int) -> int:
    """Dimension of the n-th algebra branching along the pascalization of `family`.

    Raises:
        UnknownFamilyError: If the family is not registered.
        DomainError: If no closed form is known for a registered family or n < 0.
    """
    if n < 0:
        raise DomainError(f"algebra dimensions are indexed from 0, got {n}")
    name = get_family_class(family).name
    try:
        return _ALGEBRA_DIMENSIONS[name](n)
    except KeyError:
        raise DomainError(f"no closed-form algebra dimension for {name}") from None
