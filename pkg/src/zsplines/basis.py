"""Flow-up bases from reduction sequences.

Reducing ``v_n, v_{n-1}, ..., v_2`` in turn gives graphs ``G_n, ..., G_1``
whose spline modules are successive projections of the original one. The
kernel of each projection is generated by a single flow-up vector, and lifting
these generators back up to ``G`` yields a triangular basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .arith import lcm_all
from .graph import LabeledGraph, VertexRef, normalize, validate
from .reduction import ReductionTrace, lift, reduce
from .splines import Spline


@dataclass(frozen=True)
class ReductionSequence:
    """Graphs ``G_n = normalize(G), G_{n-1}, ..., G_1``.

    ``graphs[0]`` is ``G_n``; use :meth:`graph` for 1-based access.
    ``traces[k]`` records the step from ``graphs[k]`` to ``graphs[k + 1]``.
    """

    graphs: Tuple[LabeledGraph, ...]
    traces: Tuple[ReductionTrace, ...]

    @property
    def n(self) -> int:
        return len(self.graphs)

    def graph(self, i: int) -> LabeledGraph:
        if not 1 <= i <= self.n:
            raise IndexError(f"no G_{i} in a sequence of length {self.n}")
        return self.graphs[self.n - i]


@dataclass(frozen=True)
class FlowUpBasis:
    """Flow-up generators of the spline module.

    ``leading_terms[i - 1]`` is the generator ``L_i`` of the leading-term
    ideal at ``v_i``. ``elements`` holds one spline per nonzero ``L_i``, in
    increasing ``i``; ``indices`` gives their 1-based positions.
    """

    elements: Tuple[Spline, ...]
    leading_terms: Tuple[int, ...]
    indices: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.elements)

    @property
    def degenerate(self) -> Tuple[int, ...]:
        """Positions whose kernel is trivial (``L_i = 0``)."""
        return tuple(i for i, L in enumerate(self.leading_terms, 1) if L == 0)

    def matrix(self) -> List[List[int]]:
        return [list(f) for f in self.elements]


def reduction_sequence(G: LabeledGraph) -> ReductionSequence:
    validate(G)
    H, _ = normalize(G)
    graphs, traces = ([H] if H.n else []), []
    while H.n > 1:
        H, trace = reduce(H, H.n - 1)
        graphs.append(H)
        traces.append(trace)
    return ReductionSequence(tuple(graphs), tuple(traces))


def kernel_generator(seq: ReductionSequence, i: int) -> int:
    """lcm of ``m_{v_i}`` and the labels of the edges at ``v_i`` in ``G_i``."""
    Gi = seq.graph(i)
    last = Gi.n - 1
    return lcm_all([Gi.vertices[last].m] + [r for _, r in Gi.incident(last)])


def _lift_up(seq: ReductionSequence, i: int, f: Spline) -> Spline:
    for j in range(i + 1, seq.n + 1):
        f = lift(seq.graph(j), seq.graph(j - 1), j - 1, f)
    return f


def flow_up_basis(G: LabeledGraph, seq: Optional[ReductionSequence] = None) -> FlowUpBasis:
    if seq is None:
        seq = reduction_sequence(G)
    leading, elements, indices = [], [], []
    for i in range(1, seq.n + 1):
        L = kernel_generator(seq, i)
        leading.append(L)
        if L == 0:
            continue
        elements.append(_lift_up(seq, i, (0,) * (i - 1) + (L,)))
        indices.append(i)
    return FlowUpBasis(tuple(elements), tuple(leading), tuple(indices))


def minimal_leading_term(G: LabeledGraph, i: int, order: Optional[Sequence[VertexRef]] = None) -> int:
    """Smallest positive ``f_{v_i}`` over splines vanishing on ``v_1 .. v_{i-1}``.

    Those vertices get ``m = 0``, then every vertex other than ``v_i`` is
    reduced away (descending position by default, or in ``order``) and the
    label left on ``v_i`` is returned. 0 means no such spline exists.
    """
    validate(G)
    if not 1 <= i <= G.n:
        raise ValueError(f"i must lie in [1, {G.n}], got {i}")
    target = G.ids[i - 1]
    H = G.with_m({s: 0 for s in range(i - 1)})
    if order is None:
        order = [G.ids[s] for s in reversed(range(G.n)) if s != i - 1]
    else:
        order = [G.ids[G.index(v)] for v in order]
        if sorted(order) != sorted(x for x in G.ids if x != target):
            raise ValueError("order must list every vertex except v_i exactly once")
    for vid in order:
        H, _ = reduce(H, vid)
    return H.vertices[0].m


def rank(G: LabeledGraph) -> int:
    seq = reduction_sequence(G)
    return sum(1 for i in range(1, seq.n + 1) if kernel_generator(seq, i) != 0)
