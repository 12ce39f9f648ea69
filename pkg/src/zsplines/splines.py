"""Spline verification, flow-up classification, subgraph extension and projection.

A spline on ``G`` is an integer vector ``f`` (one entry per vertex, in
vertex order) with ``m_v | f_v`` at every vertex and ``r_e | f_u - f_v``
on every edge; a zero label reads as equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence, Tuple

from .arith import Congruence, IncompatibleCongruences, crt_system
from .graph import LabeledGraph, VertexRef, induced_subgraph, validate

Spline = Tuple[int, ...]


class LengthMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Violation:
    """First failing condition of a non-spline.

    ``kind`` is ``"vertex"`` or ``"edge"``; ``index`` is the vertex position
    or edge position in ``G.edges``.
    """

    kind: str
    index: int
    message: str

    def __str__(self) -> str:
        return self.message


class FlowUpInfo(NamedTuple):
    leading_index: Optional[int]  # 1-based; None for the trivial spline
    leading_term: int


class NoLift(ValueError):
    """The projection onto the first ``n - 1`` vertices misses this vector.

    ``pair`` names the two clashing conditions on the last vertex, each
    either ``"m(<id>)"`` or ``"r(<id>,<id>)"``.
    """

    def __init__(self, pair: Tuple[str, str], message: str):
        self.pair = pair
        super().__init__(message)


def _divides(d: int, x: int) -> bool:
    return x == 0 if d == 0 else x % d == 0


def _as_vector(f: Iterable[int]) -> Spline:
    return tuple(int(x) for x in f)


def find_violation(G: LabeledGraph, f: Sequence[int]) -> Optional[Violation]:
    """Return the lowest-index failing condition, vertices before edges."""
    f = _as_vector(f)
    if len(f) != G.n:
        raise LengthMismatch(f"spline has {len(f)} entries, graph has {G.n} vertices")
    for k, (vid, m) in enumerate(G.vertices):
        if not _divides(m, f[k]):
            return Violation("vertex", k, f"vertex {vid}: {m} does not divide {f[k]}")
    for j, (a, b, r) in enumerate(G.edges):
        if not _divides(r, f[a] - f[b]):
            return Violation(
                "edge", j,
                f"edge {G.ids[a]}-{G.ids[b]}: {r} does not divide {f[a]} - {f[b]}",
            )
    return None


def is_spline(G: LabeledGraph, f: Sequence[int]) -> bool:
    return find_violation(G, f) is None


def flow_up_info(f: Sequence[int]) -> FlowUpInfo:
    for k, x in enumerate(f):
        if x != 0:
            return FlowUpInfo(k + 1, int(x))
    return FlowUpInfo(None, 0)


def boundary_product(G: LabeledGraph, S: Iterable[VertexRef]) -> int:
    """Product of labels of edges with exactly one endpoint in ``S``."""
    inside = {G.index(v) for v in S}
    a = 1
    for u, v, r in G.edges:
        if (u in inside) != (v in inside):
            a *= r
    return a


def extend_from_subgraph(G: LabeledGraph, S: Iterable[VertexRef], f_sub: Sequence[int]) -> Spline:
    """Extend a spline on the induced subgraph on ``S`` to all of ``G``.

    Entries on ``S`` are scaled by the product of boundary edge labels and
    every other entry is 0.
    """
    validate(G)
    S = sorted({G.index(v) for v in S})
    sub = induced_subgraph(G, S)
    bad = find_violation(sub, f_sub)
    if bad is not None:
        raise ValueError(f"not a spline on the subgraph: {bad}")
    a = boundary_product(G, S)
    f = [0] * G.n
    for k, x in zip(S, f_sub):
        f[k] = a * int(x)
    return tuple(f)


def project(G: LabeledGraph, f: Sequence[int], k: int) -> Spline:
    """Keep the entries on ``v_1 .. v_k``."""
    if not 1 <= k <= G.n:
        raise ValueError(f"k must lie in [1, {G.n}], got {k}")
    f = _as_vector(f)
    if len(f) != G.n:
        raise LengthMismatch(f"spline has {len(f)} entries, graph has {G.n} vertices")
    return f[:k]


def lift_to_supergraph(G: LabeledGraph, f_sub: Sequence[int]) -> Spline:
    """Extend a spline on ``v_1 .. v_{n-1}`` by a value at ``v_n``.

    The new entry is the least nonnegative solution of ``x = 0 (mod m_{v_n})``
    together with ``x = f_u (mod r)`` for each edge ``v_n u``. Raises
    :class:`NoLift` when that system is inconsistent.
    """
    validate(G)
    f_sub = _as_vector(f_sub)
    if G.n == 0 or len(f_sub) != G.n - 1:
        raise LengthMismatch(f"need {G.n - 1} entries, got {len(f_sub)}")
    bad = find_violation(induced_subgraph(G, range(G.n - 1)), f_sub) if G.n > 1 else None
    if bad is not None:
        raise ValueError(f"not a spline on the subgraph: {bad}")
    last = G.n - 1
    names = [f"m({G.ids[last]})"]
    system = [Congruence(0, G.vertices[last].m)]
    for u, r in G.incident(last):
        names.append(f"r({G.ids[last]},{G.ids[u]})")
        system.append(Congruence(f_sub[u], r))
    try:
        sol = crt_system(system)
    except IncompatibleCongruences as exc:
        i, j = exc.pair
        raise NoLift((names[i], names[j]), f"no value at {G.ids[last]}: {exc}") from None
    return f_sub + (sol.residue,)
