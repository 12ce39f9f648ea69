"""Edge-labeled multigraphs with vertex modules ``m_v Z`` and edge modules ``Z / r_e Z``.

Vertex order is significant: position ``k`` (0-based) holds the vertex
``v_{k+1}`` of the flow-up order. Splines are integer vectors in that order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

from .arith import lcm_all

VertexRef = Union[int, str]


class Vertex(NamedTuple):
    id: str
    m: int


class Edge(NamedTuple):
    u: int
    v: int
    r: int


class ValidationError(ValueError):
    """A graph violates a structural invariant.

    ``kind`` is one of ``"duplicate id"``, ``"bad index"``,
    ``"negative label"`` or ``"empty id"``.
    """

    def __init__(self, kind: str, message: str):
        self.kind = kind
        super().__init__(f"{kind}: {message}")


class UnknownVertex(KeyError):
    pass


class EmptySelection(ValueError):
    pass


@dataclass(frozen=True)
class MultiEdgeMerge:
    """Parallel edges ``u -- v`` replaced by one edge labeled by their lcm."""

    u: str
    v: str
    merged_labels: Tuple[int, ...]
    result_label: int


@dataclass(frozen=True)
class LabeledGraph:
    vertices: Tuple[Vertex, ...] = ()
    edges: Tuple[Edge, ...] = ()
    _index: Dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(Vertex(str(i), int(m)) for i, m in self.vertices))
        object.__setattr__(self, "edges", tuple(Edge(int(u), int(v), int(r)) for u, v, r in self.edges))
        object.__setattr__(self, "_index", {vx.id: k for k, vx in enumerate(self.vertices)})

    @classmethod
    def from_labels(
        cls,
        m: Sequence[int],
        edges: Iterable[Tuple[int, int, int]] = (),
        ids: Optional[Sequence[str]] = None,
    ) -> "LabeledGraph":
        """Build a graph from vertex labels and 0-based ``(u, v, r)`` edges.

        Ids default to ``v1, v2, ...``.
        """
        if ids is None:
            ids = [f"v{k + 1}" for k in range(len(m))]
        return cls(tuple(zip(ids, m)), tuple(edges))

    @classmethod
    def path(cls, m: Sequence[int], r: Sequence[int]) -> "LabeledGraph":
        """Path ``v1 - v2 - ... - vn`` with edge ``v_k v_{k+1}`` labeled ``r[k-1]``."""
        if len(r) != max(len(m) - 1, 0):
            raise ValueError("a path on n vertices needs n - 1 edge labels")
        return cls.from_labels(m, [(k, k + 1, rk) for k, rk in enumerate(r)])

    @classmethod
    def cycle(cls, m: Sequence[int], r: Sequence[int]) -> "LabeledGraph":
        """Cycle with ``r[k-1]`` on ``v_k v_{k+1}`` and ``r[n-1]`` on ``v_n v_1``."""
        n = len(m)
        if len(r) != n:
            raise ValueError("a cycle on n vertices needs n edge labels")
        return cls.from_labels(m, [(k, (k + 1) % n, rk) for k, rk in enumerate(r)])

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def ids(self) -> Tuple[str, ...]:
        return tuple(vx.id for vx in self.vertices)

    @property
    def m(self) -> Tuple[int, ...]:
        return tuple(vx.m for vx in self.vertices)

    def index(self, v: VertexRef) -> int:
        """Resolve a vertex id or 0-based position to a position."""
        if isinstance(v, str):
            try:
                return self._index[v]
            except KeyError:
                raise UnknownVertex(v) from None
        if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < self.n:
            raise UnknownVertex(v)
        return v

    def incident(self, v: VertexRef) -> List[Tuple[int, int]]:
        """``(neighbor, r)`` for every non-loop edge at ``v``, in edge order."""
        k = self.index(v)
        out = []
        for a, b, r in self.edges:
            if a == b:
                continue
            if a == k:
                out.append((b, r))
            elif b == k:
                out.append((a, r))
        return out

    def neighbors(self, v: VertexRef) -> List[int]:
        return sorted({u for u, _ in self.incident(v)})

    def edge_labels(self, u: VertexRef, v: VertexRef) -> List[int]:
        a, b = self.index(u), self.index(v)
        return [r for x, y, r in self.edges if {x, y} == {a, b} and (x != y or a == b)]

    def is_simple(self) -> bool:
        seen = set()
        for a, b, _ in self.edges:
            key = (min(a, b), max(a, b))
            if a == b or key in seen:
                return False
            seen.add(key)
        return True

    def with_m(self, changes: Dict[VertexRef, int]) -> "LabeledGraph":
        """Copy with some vertex labels replaced."""
        m = list(self.m)
        for v, value in changes.items():
            m[self.index(v)] = value
        return LabeledGraph(tuple(zip(self.ids, m)), self.edges)

    def without_vertex(self, v: VertexRef) -> "LabeledGraph":
        """Drop ``v`` and its incident edges, reindexing the rest."""
        k = self.index(v)
        verts = self.vertices[:k] + self.vertices[k + 1:]
        shift = lambda x: x - 1 if x > k else x
        edges = tuple(Edge(shift(a), shift(b), r) for a, b, r in self.edges if k not in (a, b))
        return LabeledGraph(verts, edges)


def validate(G: LabeledGraph) -> None:
    """Raise :class:`ValidationError` on the first violated invariant."""
    seen = set()
    for vx in G.vertices:
        if not vx.id:
            raise ValidationError("empty id", "vertex ids must be nonempty")
        if vx.id in seen:
            raise ValidationError("duplicate id", repr(vx.id))
        seen.add(vx.id)
        if vx.m < 0:
            raise ValidationError("negative label", f"vertex {vx.id!r} has m = {vx.m}")
    for e in G.edges:
        if not (0 <= e.u < G.n and 0 <= e.v < G.n):
            raise ValidationError("bad index", f"edge {tuple(e)} on a {G.n}-vertex graph")
        if e.r < 0:
            raise ValidationError("negative label", f"edge {tuple(e)} has r = {e.r}")


def _merge_parallel(G: LabeledGraph) -> Tuple[List[Edge], List[MultiEdgeMerge]]:
    families: Dict[Tuple[int, int], List[int]] = {}
    for a, b, r in G.edges:
        if a != b:
            families.setdefault((min(a, b), max(a, b)), []).append(r)
    edges, merges = [], []
    for (a, b) in sorted(families):
        labels = families[(a, b)]
        r = lcm_all(labels)
        if len(labels) > 1:
            merges.append(MultiEdgeMerge(G.ids[a], G.ids[b], tuple(labels), r))
        edges.append(Edge(a, b, r))
    return edges, merges


def normalize(G: LabeledGraph) -> Tuple[LabeledGraph, List[MultiEdgeMerge]]:
    """Simple graph with the same splines, plus the merges that produced it.

    Self-loops are dropped, each parallel family becomes one edge labeled by
    the lcm of its labels, and edges labeled 1 are removed. Edges labeled 0
    stay: they force equal values at both ends.
    """
    validate(G)
    edges, merges = _merge_parallel(G)
    edges = tuple(e for e in edges if e.r != 1)
    return LabeledGraph(G.vertices, edges), merges


def induced_subgraph(G: LabeledGraph, S: Iterable[VertexRef]) -> LabeledGraph:
    keep = sorted({G.index(v) for v in S})
    if not keep:
        raise EmptySelection("induced subgraph needs at least one vertex")
    pos = {k: j for j, k in enumerate(keep)}
    edges = tuple(Edge(pos[a], pos[b], r) for a, b, r in G.edges if a in pos and b in pos)
    return LabeledGraph(tuple(G.vertices[k] for k in keep), edges)


def disjoint_union(
    G1: LabeledGraph, G2: LabeledGraph, prefixes: Tuple[str, str] = ("G1.", "G2.")
) -> LabeledGraph:
    """``G1`` followed by ``G2``; ids are prefixed only if they collide."""
    ids1, ids2 = G1.ids, G2.ids
    if set(ids1) & set(ids2):
        ids1 = tuple(prefixes[0] + i for i in ids1)
        ids2 = tuple(prefixes[1] + i for i in ids2)
    verts = tuple(zip(ids1, G1.m)) + tuple(zip(ids2, G2.m))
    shift = G1.n
    edges = G1.edges + tuple(Edge(a + shift, b + shift, r) for a, b, r in G2.edges)
    return LabeledGraph(verts, edges)
