"""Graph file format (JSON) and DOT rendering.

A graph document is a JSON object::

    {
      "n": 4,
      "edges": [
        [0, 1, 0],
        [0, 2, 0]
      ],
      "color_names": ["red"]
    }

``edges`` holds ``[u, v, color]`` triples, 0-indexed; the position of a triple
is the id of its edge.  ``color_names`` is optional and, when present, fixes
the number of colors.  ``dumps_graph`` always writes this exact layout so a
parse/emit cycle is byte-stable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import GraphFormatError
from .graph import ColoredEdge, ColoredMultigraph, RainbowCollection

DOT_PALETTE = ("red", "blue", "green", "gold", "purple", "orange", "cyan", "magenta", "brown", "gray")


@dataclass(frozen=True)
class GraphDocument:
    graph: ColoredMultigraph
    color_names: tuple[str, ...] | None = None

    def name_of(self, color: int) -> str:
        if self.color_names:
            return self.color_names[color]
        return str(color)


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def parse_graph(text: str) -> GraphDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(exc.msg, where=f"column {exc.colno}", line=exc.lineno) from None
    return graph_from_dict(data, text)


def _line_of(text: str | None, needle_index: int) -> int | None:
    """Line number of the ``needle_index``-th edge triple in a document."""
    if text is None:
        return None
    start = text.find('"edges"')
    if start < 0:
        return None
    depth = 0
    count = -1
    for pos in range(text.index("[", start), len(text)):
        ch = text[pos]
        if ch == "[":
            depth += 1
            if depth == 2:
                count += 1
                if count == needle_index:
                    return text.count("\n", 0, pos) + 1
        elif ch == "]":
            depth -= 1
            if depth == 0:
                break
    return None


def graph_from_dict(data, text: str | None = None) -> GraphDocument:
    if not isinstance(data, dict):
        raise GraphFormatError("document must be a JSON object")
    unknown = set(data) - {"n", "edges", "color_names"}
    if unknown:
        raise GraphFormatError(f"unknown fields {sorted(unknown)}")
    n = data.get("n")
    if not _is_int(n) or n < 1:
        raise GraphFormatError("must be a positive integer", where="n")
    raw_edges = data.get("edges")
    if not isinstance(raw_edges, list):
        raise GraphFormatError("must be a list of [u, v, color] triples", where="edges")
    names = data.get("color_names")
    if names is not None:
        if not isinstance(names, list) or not all(isinstance(x, str) for x in names):
            raise GraphFormatError("must be a list of strings", where="color_names")
        if len(set(names)) != len(names):
            raise GraphFormatError("names must be distinct", where="color_names")
    edges = []
    for i, item in enumerate(raw_edges):
        where = f"edges[{i}]"
        if not (isinstance(item, list) and len(item) == 3 and all(_is_int(x) for x in item)):
            raise GraphFormatError("must be a triple of integers [u, v, color]", where=where, line=_line_of(text, i))
        u, v, c = item
        for x in (u, v):
            if not 0 <= x < n:
                raise GraphFormatError(f"vertex {x} out of range [0, {n})", where=where, line=_line_of(text, i))
        if u == v:
            raise GraphFormatError(f"loop at vertex {u}", where=where, line=_line_of(text, i))
        if c < 0 or (names is not None and c >= len(names)):
            raise GraphFormatError(f"color {c} has no name", where=where, line=_line_of(text, i))
        edges.append(ColoredEdge(i, u, v, c))
    color_count = len(names) if names is not None else max((e.color for e in edges), default=-1) + 1
    graph = ColoredMultigraph(n, tuple(edges), color_count)
    return GraphDocument(graph, tuple(names) if names is not None else None)


def load_graph(path) -> GraphDocument:
    return parse_graph(Path(path).read_text())


def dumps_graph(doc: GraphDocument | ColoredMultigraph) -> str:
    if isinstance(doc, ColoredMultigraph):
        doc = GraphDocument(doc)
    g = doc.graph
    lines = ["{", f'  "n": {g.vertex_count},']
    if g.edges:
        lines.append('  "edges": [')
        rows = [f"    [{e.u}, {e.v}, {e.color}]" for e in g.edges]
        lines.append(",\n".join(rows))
        lines.append("  ]" + ("," if doc.color_names is not None else ""))
    else:
        lines.append('  "edges": []' + ("," if doc.color_names is not None else ""))
    if doc.color_names is not None:
        lines.append(f'  "color_names": {json.dumps(list(doc.color_names))}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def save_graph(doc: GraphDocument | ColoredMultigraph, path) -> None:
    Path(path).write_text(dumps_graph(doc))


def dot_color(doc: GraphDocument, color: int) -> str:
    if doc.color_names:
        return doc.color_names[color]
    return DOT_PALETTE[color % len(DOT_PALETTE)]


def graph_to_dot(doc: GraphDocument, name: str = "G") -> str:
    g = doc.graph
    out = [f"graph {name} {{"]
    out.extend(f"  {v};" for v in range(g.vertex_count))
    for e in g.edges:
        out.append(f'  {e.u} -- {e.v} [color="{dot_color(doc, e.color)}", label="e{e.id}"];')
    out.append("}")
    return "\n".join(out) + "\n"


def collection_to_dot(doc: GraphDocument, coll: RainbowCollection, name: str = "D") -> str:
    """One cluster per part, each with its own copy of the vertices."""
    g = doc.graph
    out = [f"graph {name} {{"]
    for i, part in enumerate(coll.parts):
        out.append(f"  subgraph cluster_{i} {{")
        out.append(f'    label="part {i}";')
        for v in range(g.vertex_count):
            out.append(f'    p{i}_{v} [label="{v}"];')
        for eid in part.edges:
            e = g.edges[eid]
            out.append(f'    p{i}_{e.u} -- p{i}_{e.v} [color="{dot_color(doc, e.color)}", label="e{e.id}"];')
        out.append("  }")
    out.append("}")
    return "\n".join(out) + "\n"


def collection_to_dict(doc: GraphDocument, coll: RainbowCollection) -> dict:
    g = doc.graph
    return {
        "shape": coll.shape,
        "parts": [
            {
                "edges": list(part.edges),
                "detail": [[eid, g.edges[eid].u, g.edges[eid].v, doc.name_of(g.edges[eid].color)] for eid in part.edges],
            }
            for part in coll.parts
        ],
    }
