# dot.py
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

"""Export of graded graphs to graphviz DOT, one rank per level.

After writing `young.gv` the picture is produced by

    dot -Tpng -O young.gv
"""

from typing import Optional

from bratteli.backend.errors import HorizonError
from bratteli.backend.graded_graph import GradedGraph
from bratteli.backend.pascalize import PascalizedVertex
from bratteli.view.tables import format_label


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(graph: GradedGraph, lo: int = 0, hi: Optional[int] = None) -> str:
    """DOT text for levels lo..hi of `graph`.

    Vertices of a level share a rank; diagonal vertices of a pascalized
    graph are drawn as boxes.

    Raises:
        HorizonError: If the range is empty or leaves the built levels.
    """
    hi = graph.built_up_to if hi is None else hi
    if not 0 <= lo <= hi <= graph.built_up_to:
        raise HorizonError(f"level range {lo}..{hi} is outside 0..{graph.built_up_to}")
    names = {}
    lines = [f"digraph {_quote(graph.family)} {{", "\trankdir = TB;"]
    for k in range(lo, hi + 1):
        lines.append("\t{")
        lines.append("\t\trank = same;")
        for i, v in enumerate(graph.level(k)):
            names[v] = f"v{k}_{i}"
            shape = "box" if isinstance(v, PascalizedVertex) and v.is_diagonal else "ellipse"
            lines.append(f"\t\t{names[v]} [label={_quote(format_label(graph, v))}, shape = {shape}];")
        lines.append("\t}")
    for k in range(lo, hi):
        for v in graph.level(k):
            for w in graph.up(v):
                lines.append(f"\t{names[v]} -> {names[w]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
