# errors.py
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

"""Exception hierarchy for the Bratteli toolkit.

Every error carries the exit code the command line uses for it, so the CLI
can map failures to distinct statuses without a lookup table.
"""


class BratteliError(Exception):
    """Base class for all errors raised by the toolkit."""

    exit_code = 10


class InvalidVertexError(BratteliError):
    """Raised for unknown, malformed or ambiguous vertex labels."""

    exit_code = 3


class InvalidWalkError(InvalidVertexError):
    """Raised when consecutive walk labels are not adjacent in the base graph."""


class HorizonError(BratteliError):
    """Raised when a graph or table is not built far enough for a request."""

    exit_code = 4


class UnknownFamilyError(BratteliError):
    """Raised when a family name is not in the registry."""

    exit_code = 5


class DomainError(BratteliError):
    """Raised when an argument lies outside the domain of an operation."""

    exit_code = 6


class CriterionError(BratteliError):
    """Raised when an operation needs the vanishing criterion and it fails."""

    exit_code = 7


class GraphFormatError(BratteliError):
    """Raised for malformed JSON graph documents."""

    exit_code = 8
