"""JSON documents for graphs, splines and reduction traces.

Integers are written as decimal strings so no precision is lost in transit.
A graph document looks like::

    {"vertices": [{"id": "v1", "m": "10"}, ...],
     "edges": [{"u": "v1", "v": "v2", "r": "8"}, ...]}

The order of ``vertices`` is the flow-up order.
"""

from __future__ import annotations

import json
from typing import Any, Dict, Iterable, List, Sequence

from .graph import LabeledGraph, MultiEdgeMerge, ValidationError, validate
from .reduction import ReductionTrace, VertexReduction, ZeroVertexReduction


class DocumentError(ValueError):
    pass


def parse_int(value: Any, what: str) -> int:
    if isinstance(value, bool):
        raise DocumentError(f"{what}: expected an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        text = value.strip()
        body = text[1:] if text[:1] in "+-" else text
        if body.isdigit() and body.isascii():
            return int(text)
    raise DocumentError(f"{what}: expected a decimal integer, got {value!r}")


def graph_from_document(doc: Dict[str, Any]) -> LabeledGraph:
    if not isinstance(doc, dict):
        raise DocumentError("graph document must be an object")
    unknown = set(doc) - {"vertices", "edges"}
    if unknown:
        raise DocumentError(f"unknown keys {sorted(unknown)}")
    vertices = doc.get("vertices")
    edges = doc.get("edges", [])
    if not isinstance(vertices, list) or not isinstance(edges, list):
        raise DocumentError("'vertices' and 'edges' must be arrays")
    verts = []
    for k, item in enumerate(vertices):
        if not isinstance(item, dict) or "id" not in item or "m" not in item:
            raise DocumentError(f"vertex #{k} needs 'id' and 'm'")
        if not isinstance(item["id"], str):
            raise DocumentError(f"vertex #{k}: id must be a string")
        verts.append((item["id"], parse_int(item["m"], f"vertex {item['id']!r} m")))
    index = {}
    for k, (vid, _) in enumerate(verts):
        index.setdefault(vid, k)
    out_edges = []
    for k, item in enumerate(edges):
        if not isinstance(item, dict) or not {"u", "v", "r"} <= set(item):
            raise DocumentError(f"edge #{k} needs 'u', 'v' and 'r'")
        try:
            u, v = index[item["u"]], index[item["v"]]
        except (KeyError, TypeError):
            raise DocumentError(f"edge #{k} names an unknown vertex") from None
        out_edges.append((u, v, parse_int(item["r"], f"edge #{k} r")))
    G = LabeledGraph(tuple(verts), tuple(out_edges))
    try:
        validate(G)
    except ValidationError as exc:
        raise DocumentError(str(exc)) from exc
    return G


def graph_to_document(G: LabeledGraph) -> Dict[str, Any]:
    return {
        "vertices": [{"id": vid, "m": str(m)} for vid, m in G.vertices],
        "edges": [{"u": G.ids[u], "v": G.ids[v], "r": str(r)} for u, v, r in G.edges],
    }


def load_graph(path: str) -> LabeledGraph:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: {exc}") from exc
    return graph_from_document(doc)


def dump_graph(G: LabeledGraph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(graph_to_document(G), fh, indent=2)
        fh.write("\n")


def spline_to_document(f: Sequence[int]) -> List[str]:
    return [str(x) for x in f]


def parse_spline(values: Iterable[Any]) -> tuple:
    return tuple(parse_int(x, "spline entry") for x in values)


def step_to_document(step) -> Dict[str, Any]:
    if isinstance(step, VertexReduction):
        return {
            "kind": "vertex_reduction",
            "removed": step.removed,
            "relabels": {k: str(v) for k, v in step.relabels.items()},
            "new_edges": [{"u": u, "v": v, "r": str(r)} for u, v, r in step.new_edges],
        }
    if isinstance(step, ZeroVertexReduction):
        return {
            "kind": "zero_vertex_reduction",
            "removed": step.removed,
            "relabels": {k: str(v) for k, v in step.relabels.items()},
        }
    if isinstance(step, MultiEdgeMerge):
        return {
            "kind": "multi_edge_merge",
            "u": step.u,
            "v": step.v,
            "merged_labels": [str(r) for r in step.merged_labels],
            "result_label": str(step.result_label),
        }
    raise TypeError(f"not a reduction step: {step!r}")


def trace_to_document(trace: ReductionTrace) -> Dict[str, Any]:
    return {
        "steps": [step_to_document(s) for s in trace.steps],
        "graphs": [graph_to_document(g) for g in trace.graphs],
    }
