# tables.py
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

"""Tab-separated and JSON rendering of results.

Exact rationals are written as "num/den" followed by a 12 significant digit
decimal column. Metadata lines start with "#".
"""

import json
from decimal import Context, Decimal
from fractions import Fraction
from typing import Any, Iterable, List, Sequence, Tuple

import numpy as np

from bratteli.backend.graded_graph import GradedGraph, Vertex
from bratteli.backend.graph_io import encode_label

DECIMAL_DIGITS = 12

_CONTEXT = Context(prec=DECIMAL_DIGITS)


def format_decimal(value: Fraction) -> str:
    """`value` rounded to 12 significant digits."""
    value = Fraction(value)
    quotient = _CONTEXT.divide(Decimal(value.numerator), Decimal(value.denominator))
    return format(quotient, "g") if quotient else "0"


def format_fraction(value: Fraction) -> str:
    """Exact "num/den" form; integers keep the "/1"."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def fraction_cells(value: Fraction) -> List[str]:
    """The exact and decimal columns of a rational."""
    return [format_fraction(value), format_decimal(value)]


def format_label(graph: GradedGraph, v: Vertex) -> str:
    """Compact JSON of the label of `v`, the syntax the CLI accepts."""
    return json.dumps(encode_label(graph, v), separators=(",", ":"))


def render_tsv(header: Sequence[str], rows: Iterable[Sequence[Any]], meta: Sequence[str] = ()) -> str:
    """A TSV document with optional "#" metadata lines and a header row."""
    lines = [f"# {line}" for line in meta]
    lines.append("\t".join(header))
    lines.extend("\t".join(str(cell) for cell in row) for row in rows)
    return "\n".join(lines) + "\n"


def render_json(document: Any) -> str:
    """Deterministic JSON with sorted keys."""
    return json.dumps(document, sort_keys=True, indent=2) + "\n"


def rational_rows(pairs: Iterable[Tuple[int, Fraction]]) -> List[List[str]]:
    """(n, value) pairs as rows n, num/den, decimal."""
    return [[str(n)] + fraction_cells(value) for n, value in pairs]


def rational_json(value: Fraction) -> dict:
    """A rational as {"num", "den", "decimal"}."""
    value = Fraction(value)
    return {"num": value.numerator, "den": value.denominator, "decimal": format_decimal(value)}


def render_matrix(matrix: np.ndarray, rows: Sequence[str], cols: Sequence[str], title: str) -> str:
    """An incidence matrix as a TSV block headed by its column labels."""
    header = [title] + list(cols)
    body = [[label] + [str(int(x)) for x in matrix_row] for label, matrix_row in zip(rows, matrix)]
    return render_tsv(header, body)
