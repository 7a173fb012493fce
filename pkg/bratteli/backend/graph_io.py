# graph_io.py
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

"""JSON reading and writing of graded graphs and vertex labels.

A graph document is

    {"family": "young", "levels": [[label, ...], ...], "edges": [[[i, j], ...], ...]}

where `edges[k]` lists the edges of the boundary k -> k+1 as pairs of
positions in levels k and k+1. Partitions are integer lists and pairs of
partitions are two-element lists. Pascalized labels are written
`[k, base_label]`; the base level is fixed by the parity of k.
"""

from __future__ import annotations

import json
import logging
from typing import Any, Dict, Hashable, List, Optional

from bratteli.backend.errors import GraphFormatError, InvalidVertexError
from bratteli.backend.families import get_family_class, is_registered
from bratteli.backend.families.base import Family, label_from_json, label_to_json
from bratteli.backend.graded_graph import Edge, GradedGraph, Vertex, build_family
from bratteli.backend.pascalize import PascalizedGraph, PascalizedVertex
from bratteli.constants import CUSTOM_FAMILY, PASCALIZED_PREFIX

logger = logging.getLogger(__name__)


def _family_impl(name: str) -> Optional[Family]:
    if is_registered(name):
        return get_family_class(name)()
    return None


def encode_label(graph: GradedGraph, v: Vertex) -> Any:
    """JSON value of the label of `v` in `graph`."""
    if isinstance(v, PascalizedVertex):
        return [v.level, encode_label(graph.base, v.base)]
    impl = _family_impl(graph.family)
    return impl.encode(v.label) if impl is not None else label_to_json(v.label)


def resolve_base(base: GradedGraph, k: int, label: Hashable) -> Vertex:
    """The base vertex with `label` on a level i <= k with i = k (mod 2).

    Raises:
        InvalidVertexError: If no such vertex exists or more than one does.
    """
    matches = [Vertex(i, label) for i in range(k, -1, -2) if Vertex(i, label) in base]
    if len(matches) != 1:
        raise InvalidVertexError(f"no unique base vertex {label!r} below level {k} with matching parity")
    return matches[0]


def parse_vertex(graph: GradedGraph, value: Any, level: Optional[int] = None) -> Vertex:
    """Turn a JSON label into a vertex of `graph`.

    Pascalized graphs take `[k, base_label]`; other graphs take the bare
    label and optionally a level to disambiguate repeated labels.

    Raises:
        InvalidVertexError: If the value is malformed or names no vertex.
    """
    if isinstance(value, str):
        try:
            value = json.loads(value)
        except json.JSONDecodeError as exc:
            raise InvalidVertexError(f"vertex label is not valid JSON: {value!r}") from exc
    if isinstance(graph, PascalizedGraph):
        if not isinstance(value, list) or len(value) != 2 or not isinstance(value[0], int):
            raise InvalidVertexError(f"pascalized vertices are [k, base_label], got {value!r}")
        k, raw = value
        base_label = _decode(graph.base.family, raw)
        v = PascalizedVertex(k, resolve_base(graph.base, k, base_label))
        graph.index(v)
        return v
    return graph.find_vertex(_decode(graph.family, value), level)


def _decode(family: str, value: Any) -> Hashable:
    impl = _family_impl(family)
    return impl.decode(value) if impl is not None else label_from_json(value)


def dump_graph(graph: GradedGraph) -> Dict[str, Any]:
    """The JSON document of `graph`."""
    edges: List[List[List[int]]] = [[] for _ in range(graph.built_up_to)]
    for k in range(graph.built_up_to):
        for v in graph.level(k):
            for w in graph.up(v):
                edges[k].append([graph.index(v), graph.index(w)])
    return {
        "family": graph.family,
        "levels": [[encode_label(graph, v) for v in level] for level in graph.levels],
        "edges": edges,
    }


def dumps_graph(graph: GradedGraph) -> str:
    """`dump_graph` serialized with sorted keys and no trailing whitespace."""
    return json.dumps(dump_graph(graph), sort_keys=True)


def load_graph(document: Dict[str, Any]) -> GradedGraph:
    """Rebuild a graph from its JSON document.

    The result is not validated; run `validate` on graphs from untrusted
    sources. Pascalized documents rebuild their base family up to the top
    level of the document.

    Raises:
        GraphFormatError: If the document does not have the expected shape.
        InvalidVertexError: If a label is malformed for its family.
    """
    if not isinstance(document, dict):
        raise GraphFormatError("a graph document must be a JSON object")
    family = document.get("family", CUSTOM_FAMILY)
    levels_doc = document.get("levels")
    edges_doc = document.get("edges", [])
    if not (isinstance(family, str) and isinstance(levels_doc, list) and isinstance(edges_doc, list)):
        raise GraphFormatError("a graph document needs a string 'family' and lists 'levels' and 'edges'")
    if not all(isinstance(level, list) for level in levels_doc):
        raise GraphFormatError("every entry of 'levels' must be a list of labels")

    base: Optional[GradedGraph] = None
    if family.startswith(PASCALIZED_PREFIX):
        base_family = family[len(PASCALIZED_PREFIX) :]
        base = build_family(base_family, max(len(levels_doc) - 1, 0))
        levels = [[_pascalized(base, k, raw) for raw in level] for k, level in enumerate(levels_doc)]
    else:
        levels = [[Vertex(k, _decode(family, raw)) for raw in row] for k, row in enumerate(levels_doc)]

    edges: List[Edge] = []
    for k, boundary in enumerate(edges_doc):
        if k + 1 >= len(levels) or not isinstance(boundary, list):
            raise GraphFormatError(f"edges[{k}] has no level {k + 1} to point to")
        for pair in boundary:
            if not (isinstance(pair, list) and len(pair) == 2 and all(isinstance(i, int) for i in pair)):
                raise GraphFormatError(f"edges[{k}] entries are [lower, upper] positions, got {pair!r}")
            i, j = pair
            if not (0 <= i < len(levels[k]) and 0 <= j < len(levels[k + 1])):
                raise GraphFormatError(f"edges[{k}] entry {pair!r} is out of range")
            edges.append((levels[k][i], levels[k + 1][j]))

    if base is not None:
        graph: GradedGraph = PascalizedGraph(levels, edges, base)
    else:
        graph = GradedGraph(levels, edges, family)
    logger.debug("GraphIO: loaded %s graph with %d levels", family, len(levels))
    return graph


def _pascalized(base: GradedGraph, k: int, raw: Any) -> PascalizedVertex:
    if not isinstance(raw, list) or len(raw) != 2 or raw[0] != k:
        raise InvalidVertexError(f"level {k} pascalized labels are [{k}, base_label], got {raw!r}")
    return PascalizedVertex(k, resolve_base(base, k, _decode(base.family, raw[1])))


def loads_graph(text: str) -> GradedGraph:
    """`load_graph` from a JSON string.

    Raises:
        GraphFormatError: If the text is not JSON.
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"graph document is not valid JSON: {exc}") from exc
    return load_graph(document)
