"""Input checks shared by the estimator and the CLI."""

from __future__ import annotations

import numbers
from typing import Any, List, Tuple

from .graph import LabeledGraph, validate

_EXACT_FLOAT = 2**53


def check_graph(graph: Any) -> LabeledGraph:
    """Accept a :class:`LabeledGraph` or a graph document and validate it."""
    if isinstance(graph, LabeledGraph):
        validate(graph)
        return graph
    if isinstance(graph, dict):
        from .io import graph_from_document

        return graph_from_document(graph)
    raise TypeError(f"expected a LabeledGraph or graph document, got {type(graph).__name__}")


def check_integer(x: Any) -> int:
    if isinstance(x, bool):
        raise TypeError("booleans are not spline entries")
    if isinstance(x, numbers.Integral):
        return int(x)
    if isinstance(x, numbers.Real) and float(x).is_integer() and abs(x) < _EXACT_FLOAT:
        return int(x)
    raise ValueError(f"{x!r} is not an exactly representable integer")


def check_vector(f: Any, n: int) -> Tuple[int, ...]:
    out = tuple(check_integer(x) for x in f)
    if len(out) != n:
        raise ValueError(f"expected {n} entries, got {len(out)}")
    return out


def check_matrix(X: Any, n: int) -> List[Tuple[int, ...]]:
    """Rows of ``X`` as exact integer tuples of length ``n``."""
    if hasattr(X, "ndim") and X.ndim == 1:
        raise ValueError("expected a 2-d array; reshape a single spline with X.reshape(1, -1)")
    return [check_vector(row, n) for row in X]
