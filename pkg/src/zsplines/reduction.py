"""Graph reduction: multiple-edge merge, vertex reduction, zero-vertex reduction.

Each operator removes structure from a labeled graph while keeping track of
the spline module: merging parallel edges leaves the spline set unchanged,
and reducing a vertex ``v`` yields a graph whose splines are exactly the
splines of ``G`` with the entry at ``v`` deleted. :func:`lift` inverts that
projection with a canonical CRT choice.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Sequence, Tuple, Union

from .arith import Congruence, IncompatibleCongruences, crt_system, gcd, lcm, lcm_all
from .graph import (
    Edge,
    LabeledGraph,
    MultiEdgeMerge,
    UnknownVertex,
    VertexRef,
    _merge_parallel,
    normalize,
    validate,
)
from .splines import Spline, find_violation

__all__ = [
    "MultiEdgeMerge",
    "NotMultiple",
    "ReductionError",
    "ReductionTrace",
    "UnknownVertex",
    "VertexReduction",
    "ZeroVertexReduction",
    "lift",
    "merge_multiedges",
    "reduce",
    "vertex_reduce",
    "zero_vertex_reduce",
]


class NotMultiple(ValueError):
    pass


class ReductionError(RuntimeError):
    """Internal inconsistency: a lift over a reduced graph had no solution."""


@dataclass(frozen=True)
class VertexReduction:
    removed: str
    relabels: Dict[str, int]
    new_edges: Tuple[Tuple[str, str, int], ...]


@dataclass(frozen=True)
class ZeroVertexReduction:
    removed: str
    relabels: Dict[str, int]


ReductionStep = Union[VertexReduction, MultiEdgeMerge, ZeroVertexReduction]


@dataclass(frozen=True)
class ReductionTrace:
    steps: Tuple[ReductionStep, ...] = ()
    graphs: Tuple[LabeledGraph, ...] = field(default=())

    def __add__(self, other: "ReductionTrace") -> "ReductionTrace":
        return ReductionTrace(self.steps + other.steps, self.graphs + other.graphs)


def merge_multiedges(G: LabeledGraph, u: VertexRef, v: VertexRef) -> Tuple[LabeledGraph, MultiEdgeMerge]:
    """Replace the parallel edges between ``u`` and ``v`` by one lcm-labeled edge."""
    a, b = G.index(u), G.index(v)
    if a == b:
        raise NotMultiple("u and v must differ")
    family = [j for j, (x, y, _) in enumerate(G.edges) if {x, y} == {a, b}]
    if len(family) < 2:
        raise NotMultiple(f"{G.ids[a]} and {G.ids[b]} are joined by {len(family)} edge(s)")
    labels = tuple(G.edges[j].r for j in family)
    r = lcm_all(labels)
    edges = [e for j, e in enumerate(G.edges) if j not in family]
    edges.insert(family[0], Edge(min(a, b), max(a, b), r))
    step = MultiEdgeMerge(G.ids[min(a, b)], G.ids[max(a, b)], labels, r)
    return LabeledGraph(G.vertices, tuple(edges)), step


def vertex_reduce(G: LabeledGraph, v: VertexRef) -> Tuple[LabeledGraph, VertexReduction]:
    """Remove ``v``, relabel its neighbors and join them pairwise.

    Each neighbor ``w`` becomes ``lcm(m_w, gcd(m_v, r_vw))`` and each
    neighbor pair ``{w, x}`` gains an edge ``gcd(r_vw, r_vx)``, possibly
    parallel to an existing one. ``v`` must not carry parallel edges.
    """
    k = G.index(v)
    incident = G.incident(k)
    nbrs = [w for w, _ in incident]
    if len(set(nbrs)) != len(nbrs):
        raise ValueError(f"{G.ids[k]} has parallel edges; normalize first")
    m_v = G.vertices[k].m
    r_of = dict(incident)
    nbrs.sort()

    m = list(G.m)
    relabels = {}
    for w in nbrs:
        m[w] = lcm(m[w], gcd(m_v, r_of[w]))
        relabels[G.ids[w]] = m[w]
    new_edges = [(w, x, gcd(r_of[w], r_of[x])) for w, x in combinations(nbrs, 2)]

    relabeled = LabeledGraph(tuple(zip(G.ids, m)), G.edges + tuple(Edge(*e) for e in new_edges))
    step = VertexReduction(
        G.ids[k], relabels, tuple((G.ids[w], G.ids[x], r) for w, x, r in new_edges)
    )
    return relabeled.without_vertex(k), step


def _simplify(G: LabeledGraph) -> Tuple[LabeledGraph, List[MultiEdgeMerge]]:
    edges, merges = _merge_parallel(G)
    return LabeledGraph(G.vertices, tuple(e for e in edges if e.r != 1)), merges


def reduce(G: LabeledGraph, v: VertexRef) -> Tuple[LabeledGraph, ReductionTrace]:
    """Reduced graph on ``v``: vertex reduction followed by edge merging.

    The input is normalized first so ``v`` has at most one edge per
    neighbor; the result is simple and carries no edges labeled 1.
    """
    validate(G)
    vid = G.ids[G.index(v)]
    H, pre = normalize(G)
    H, step = vertex_reduce(H, vid)
    H, post = _simplify(H)
    return H, ReductionTrace(tuple(pre) + (step,) + tuple(post), (H,))


def zero_vertex_reduce(G: LabeledGraph, v: VertexRef) -> Tuple[LabeledGraph, ZeroVertexReduction]:
    """Remove ``v`` where the spline entry is known to be 0.

    Each neighbor ``w`` becomes ``lcm(m_w, r_vw)`` (all parallel labels
    included); no edges are added.
    """
    k = G.index(v)
    m = list(G.m)
    touched = []
    for w, r in G.incident(k):
        m[w] = lcm(m[w], r)
        touched.append(w)
    relabels = {G.ids[w]: m[w] for w in sorted(set(touched))}
    relabeled = LabeledGraph(tuple(zip(G.ids, m)), G.edges)
    return relabeled.without_vertex(k), ZeroVertexReduction(G.ids[k], relabels)


def lift(G: LabeledGraph, G_red: LabeledGraph, v: VertexRef, g: Sequence[int]) -> Spline:
    """Insert a value at ``v`` turning a spline of ``G_red`` into one of ``G``.

    ``G_red`` must be ``reduce(G, v)[0]``. The inserted value is the least
    nonnegative solution of ``x = 0 (mod m_v)`` and ``x = g_u (mod r_vu)``
    over the edges at ``v`` (the forced value when the modulus is 0).
    """
    k = G.index(v)
    expected = G.ids[:k] + G.ids[k + 1:]
    if G_red.ids != expected:
        raise ValueError("G_red does not have the vertices of G minus v")
    g = tuple(int(x) for x in g)
    bad = find_violation(G_red, g)
    if bad is not None:
        raise ValueError(f"not a spline on the reduced graph: {bad}")
    full_index = lambda w: w if w < k else w - 1
    system = [Congruence(0, G.vertices[k].m)]
    system += [Congruence(g[full_index(w)], r) for w, r in G.incident(k)]
    try:
        sol = crt_system(system)
    except IncompatibleCongruences as exc:
        raise ReductionError(f"lift at {G.ids[k]} failed: {exc}") from exc
    return g[:k] + (sol.residue,) + g[k:]
