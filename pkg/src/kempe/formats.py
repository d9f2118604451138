"""File formats: versioned graph JSON, DOT export of state graphs, and the
CSV search report.

All outputs are byte-deterministic for fixed inputs (the CSV wall-time
column can be suppressed for byte-stable comparisons).
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any

from .coloring import ColoringState
from .errors import StructureError
from .graphs import AGraph, EmbeddedGraph, Pair, ParentedAGraph
from .stategraph import StateGraph

FORMAT_NAME = "kempe-graph"
FORMAT_VERSION = 1


def graph_document(g, name: str | None = None) -> dict[str, Any]:
    """Serialize an EmbeddedGraph, Triangulation, AGraph, or ParentedAGraph."""
    ghost = None
    if isinstance(g, ParentedAGraph):
        ghost = g.ghost.value
        g = g.agraph
    doc: dict[str, Any] = {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "order": g.graph.order if not isinstance(g, EmbeddedGraph) else g.order,
        "rotation": [list(r) for r in (g if isinstance(g, EmbeddedGraph) else g.graph).rotation],
    }
    if name:
        doc["name"] = name
    if isinstance(g, AGraph):
        doc["boundary"] = {"u": g.u, "x": g.x, "v": g.v, "y": g.y}
    if ghost:
        doc["ghost"] = ghost
    return doc


def document_to_json(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def save_graph(g, path, name: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(document_to_json(graph_document(g, name)))


def load_graph(doc: dict[str, Any]):
    """Validate and construct a graph from a document.

    Returns an EmbeddedGraph, AGraph, or ParentedAGraph depending on the
    optional boundary and ghost fields; every structural invariant is
    re-checked and failures name the offending check.
    """
    if not isinstance(doc, dict):
        raise StructureError("graph document must be a JSON object")
    if doc.get("format") != FORMAT_NAME:
        raise StructureError(f"unknown document format {doc.get('format')!r}")
    if doc.get("version") != FORMAT_VERSION:
        raise StructureError(f"unsupported format version {doc.get('version')!r}")
    rotation = doc.get("rotation")
    if not isinstance(rotation, list):
        raise StructureError("missing rotation lists")
    g = EmbeddedGraph.from_rotation(rotation)
    if "order" in doc and doc["order"] != g.order:
        raise StructureError(
            f"declared order {doc['order']} does not match rotation count {g.order}"
        )
    boundary = doc.get("boundary")
    if boundary is None:
        return g
    try:
        a = AGraph(g, u=boundary["u"], x=boundary["x"], v=boundary["v"], y=boundary["y"])
    except (KeyError, TypeError):
        raise StructureError("boundary must map u, x, v, y to vertex ids") from None
    ghost = doc.get("ghost")
    if ghost is None:
        return a
    return ParentedAGraph(a, Pair(ghost))


def load_graph_file(path):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise StructureError(f"not valid JSON: {exc}") from None
    return load_graph(doc)


def _two_sign_label(state: ColoringState, a: AGraph) -> str:
    xy = "=" if state.same_class(a.x, a.y) else "≠"
    uv = "=" if state.same_class(a.u, a.v) else "≠"
    return f"{xy},{uv}"


def export_dot(sg: StateGraph, name: str = "states") -> str:
    """Deterministic DOT text for a state graph.

    When the underlying graph is an a-graph, each node carries the two-sign
    label: first sign for the (x, y) pair, second for (u, v), with "=" for
    identically colored pairs.  Otherwise nodes are labeled by index.
    """
    a = sg.source if isinstance(sg.source, AGraph) else None
    lines = [f"graph {name} {{"]
    for i, s in enumerate(sg.states):
        label = _two_sign_label(s, a) if a is not None else f"s{i}"
        lines.append(f'  s{i} [label="{label}"];')
    for i, j in sg.edges:
        lines.append(f"  s{i} -- s{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


SEARCH_CSV_FIELDS = [
    "m",
    "n",
    "config_id",
    "conforming",
    "order",
    "state_count",
    "xy_parent_i6c",
    "uv_parent_i6c",
    "astar_xy",
    "astar_uv",
    "cell_truncated",
    "wall_ms",
]


def search_report_csv(report, include_timings: bool = True) -> str:
    """CSV body: one row per configuration, a marker row for truncated cells
    that produced no rows, and a trailing summary comment."""
    truncated_cells = {(c.m, c.n) for c in report.cells if c.truncated}
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=SEARCH_CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in report.rows:
        writer.writerow(
            {
                "m": row.m,
                "n": row.n,
                "config_id": row.config_id,
                "conforming": row.conforming,
                "order": row.order,
                "state_count": row.state_count,
                "xy_parent_i6c": row.xy_parent_i6c,
                "uv_parent_i6c": row.uv_parent_i6c,
                "astar_xy": row.astar_xy,
                "astar_uv": row.astar_uv,
                "cell_truncated": (row.m, row.n) in truncated_cells,
                "wall_ms": row.wall_ms if include_timings else "",
            }
        )
    emitted = {(r.m, r.n) for r in report.rows}
    for cell in report.cells:
        if cell.truncated and (cell.m, cell.n) not in emitted:
            writer.writerow(
                {
                    "m": cell.m,
                    "n": cell.n,
                    "config_id": "(truncated)",
                    "conforming": "",
                    "order": "",
                    "state_count": "",
                    "xy_parent_i6c": "",
                    "uv_parent_i6c": "",
                    "astar_xy": "",
                    "astar_uv": "",
                    "cell_truncated": True,
                    "wall_ms": "",
                }
            )
    members = report.members()
    summary = (
        "; ".join(
            f"m={row.m} n={row.n} id={row.config_id} pair={pair.value}"
            for row, pair in members
        )
        or "none"
    )
    buf.write(f"# members: {summary}\n")
    if report.truncated:
        cells = ", ".join(f"({c.m},{c.n})" for c in report.cells if c.truncated)
        buf.write(f"# truncated cells: {cells}\n")
    return buf.getvalue()
