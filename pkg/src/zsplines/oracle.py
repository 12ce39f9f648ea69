"""Ground truth for spline modules, independent of the reduction machinery.

Two routes compute the spline lattice of a graph:

* :func:`spline_lattice_kernel` solves the divisibility conditions as an
  integer kernel problem with exact row reduction;
* :func:`spline_lattice_enumerate` brute-forces every spline inside a
  fundamental box and takes the lattice they generate.

Lattices are compared through their canonical row Hermite normal form.
Nothing here calls the CRT solver or the reduction code.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .graph import LabeledGraph, validate

Matrix = List[List[int]]

DEFAULT_BUDGET = 10**7


class DimensionMismatch(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    def __init__(self, needed: int, budget: int):
        self.needed = needed
        self.budget = budget
        super().__init__(f"enumeration needs up to {needed} candidates, budget is {budget}")


class ZeroLabel(ValueError):
    """Enumeration needs nonzero labels; use :func:`spline_lattice_kernel`."""


def _xgcd(a: int, b: int) -> Tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def _echelon(A: Matrix, ncols: int, reduce_above: bool = True) -> int:
    """Row-reduce ``A`` in place over its first ``ncols`` columns; return the rank.

    Only unimodular row operations are used.
    """
    rows = len(A)
    r = 0
    for c in range(ncols):
        if r == rows:
            break
        for k in range(r + 1, rows):
            b = A[k][c]
            if b == 0:
                continue
            a = A[r][c]
            g, x, y = _xgcd(a, b)
            p, q = a // g, b // g
            Ar, Ak = A[r], A[k]
            A[r] = [x * s + y * t for s, t in zip(Ar, Ak)]
            A[k] = [p * t - q * s for s, t in zip(Ar, Ak)]
        pivot = A[r][c]
        if pivot == 0:
            continue
        if pivot < 0:
            A[r] = [-s for s in A[r]]
            pivot = -pivot
        if reduce_above:
            for k in range(r):
                q = A[k][c] // pivot
                if q:
                    A[k] = [s - q * t for s, t in zip(A[k], A[r])]
        r += 1
    return r


def hnf(M: Sequence[Sequence[int]]) -> Matrix:
    """Canonical row Hermite normal form with zero rows removed.

    Pivots are positive and entries above each pivot lie in ``[0, pivot)``.
    """
    A = [[int(x) for x in row] for row in M]
    if not A:
        return []
    width = len(A[0])
    if any(len(row) != width for row in A):
        raise DimensionMismatch("rows of unequal length")
    rank = _echelon(A, width)
    return A[:rank]


def integer_kernel(M: Sequence[Sequence[int]], ncols: int) -> Matrix:
    """Basis of ``{x in Z^ncols : M x = 0}``."""
    k = len(M)
    # [M^T | I]; rows whose M^T part vanishes carry kernel vectors
    aug = [[M[i][j] for i in range(k)] + [int(j == c) for c in range(ncols)] for j in range(ncols)]
    rank = _echelon(aug, k, reduce_above=False)
    return [row[k:] for row in aug[rank:]]


class IntegerLattice:
    """Sublattice of ``Z^dim`` generated by the given rows."""

    def __init__(self, generators: Sequence[Sequence[int]], dim: Optional[int] = None):
        gens = [tuple(int(x) for x in row) for row in generators]
        if dim is None:
            if not gens:
                raise ValueError("dim is required for an empty generating set")
            dim = len(gens[0])
        if any(len(row) != dim for row in gens):
            raise DimensionMismatch(f"generators must have length {dim}")
        self.dim = dim
        self.generators = tuple(gens)
        self.hnf = tuple(tuple(row) for row in hnf(gens)) if gens else ()
        self._pivots = []
        for row in self.hnf:
            c = next(j for j, x in enumerate(row) if x)
            self._pivots.append((c, row[c]))

    @property
    def rank(self) -> int:
        return len(self.hnf)

    def pivots(self) -> List[Tuple[int, int]]:
        """``(column, pivot)`` for each HNF row."""
        return list(self._pivots)

    def index(self) -> int:
        """Index in ``Z^dim``; 0 when the lattice is not of full rank."""
        if self.rank < self.dim:
            return 0
        return math.prod(p for _, p in self.pivots())

    def __contains__(self, v: Sequence[int]) -> bool:
        v = [int(x) for x in v]
        if len(v) != self.dim:
            raise DimensionMismatch(f"vector of length {len(v)} in a lattice of dim {self.dim}")
        for row, (c, p) in zip(self.hnf, self._pivots):
            if any(v[:c]):
                return False
            q, rem = divmod(v[c], p)
            if rem:
                return False
            if q:
                v = [s - q * t for s, t in zip(v, row)]
        return not any(v)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntegerLattice):
            return NotImplemented
        return self.dim == other.dim and self.hnf == other.hnf

    def __hash__(self) -> int:
        return hash((self.dim, self.hnf))

    def __repr__(self) -> str:
        return f"IntegerLattice(dim={self.dim}, hnf={[list(r) for r in self.hnf]})"


def lattice_equal(A: IntegerLattice, B: IntegerLattice) -> bool:
    if A.dim != B.dim:
        raise DimensionMismatch(f"dims {A.dim} and {B.dim}")
    return A.hnf == B.hnf


def lattice_contains(A: IntegerLattice, v: Sequence[int]) -> bool:
    return v in A


def direct_sum(A: IntegerLattice, B: IntegerLattice) -> IntegerLattice:
    rows = [list(r) + [0] * B.dim for r in A.hnf] + [[0] * A.dim + list(r) for r in B.hnf]
    return IntegerLattice(rows, A.dim + B.dim)


def spline_lattice_kernel(G: LabeledGraph) -> IntegerLattice:
    """Spline lattice as the projection of an integer kernel.

    Unknowns are ``f`` (n), ``a`` (n) and ``b`` (one per edge), subject to
    ``f_v - m_v a_v = 0`` and ``f_u - f_v - r_e b_e = 0``; a zero label
    turns its row into an exact equation on ``f``.
    """
    validate(G)
    n, E = G.n, len(G.edges)
    width = 2 * n + E
    rows = []
    for k, (_, m) in enumerate(G.vertices):
        row = [0] * width
        row[k] = 1
        row[n + k] = -m
        rows.append(row)
    for j, (u, v, r) in enumerate(G.edges):
        row = [0] * width
        row[u] += 1
        row[v] -= 1
        row[2 * n + j] = -r
        rows.append(row)
    kernel = integer_kernel(rows, width) if rows else []
    return IntegerLattice([row[:n] for row in kernel], n)


# --- enumeration ---------------------------------------------------------


def _require_nonzero(G: LabeledGraph) -> None:
    for vid, m in G.vertices:
        if m == 0:
            raise ZeroLabel(f"vertex {vid} has m = 0")
    for u, v, r in G.edges:
        if r == 0:
            raise ZeroLabel(f"edge {G.ids[u]}-{G.ids[v]} has r = 0")


def box_moduli(G: LabeledGraph) -> List[int]:
    """``M_k = lcm(m_k, labels at k)``: ``M_k e_k`` is always a spline."""
    out = []
    for k, (_, m) in enumerate(G.vertices):
        M = m
        for u, v, r in G.edges:
            if k in (u, v) and u != v:
                M = math.lcm(M, r)
        out.append(M)
    return out


class _Search:
    """Depth-first search over ``prod_k [0, M_k)``.

    Vertices in ``fixed`` keep their given value. The others are assigned one
    at a time, ``first`` (if given) leading, then greedily the vertex with the
    fewest candidates given those already placed. Candidates for a vertex
    form an arithmetic progression found by direct scanning, so no
    congruence solver is involved.
    """

    def __init__(self, G: LabeledGraph, fixed: Dict[int, int], first: Optional[int] = None):
        _require_nonzero(G)
        self.G = G
        self.fixed = dict(fixed)
        self.M = box_moduli(G)
        placed = set(self.fixed)
        todo = [k for k in range(G.n) if k not in placed]
        self.order: List[int] = []
        self.back: List[List[Tuple[int, int]]] = []
        self.step: List[int] = []
        while todo:
            options = []
            for k in todo if first is None else [first]:
                back = [
                    (v if u == k else u, r)
                    for u, v, r in G.edges
                    if u != v and k in (u, v) and (v if u == k else u) in placed
                ]
                step = math.lcm(G.vertices[k].m, *[r for _, r in back])
                options.append((self.M[k] // step, k, back, step))
            _, k, back, step = min(options, key=lambda o: o[:2])
            first = None
            todo.remove(k)
            placed.add(k)
            self.order.append(k)
            self.back.append(back)
            self.step.append(step)

    def bound(self) -> int:
        """Exact cap on the number of complete assignments visited."""
        return math.prod(self.M[k] // s for k, s in zip(self.order, self.step))

    def candidates(self, depth: int, f: List[int], positive: bool = False) -> range:
        k = self.order[depth]
        top = self.M[k]
        # fold the conditions one at a time; the solutions so far are x + cur*Z
        x, cur = 0, self.G.vertices[k].m
        for a, b in ((f[u], r) for u, r in self.back[depth]):
            for t in range(b):
                if (x + t * cur - a) % b == 0:
                    x += t * cur
                    break
            else:
                return range(0)
            cur = math.lcm(cur, b)
        x %= cur
        if positive:
            return range(x or cur, top + 1, cur)
        return range(x, top, cur)

    def solutions(self, f: List[int], depth: int = 0) -> Iterator[Tuple[int, ...]]:
        if depth == len(self.order):
            yield tuple(f)
            return
        k = self.order[depth]
        for x in self.candidates(depth, f):
            f[k] = x
            yield from self.solutions(f, depth + 1)
        f[k] = 0

    def start(self) -> List[int]:
        f = [0] * self.G.n
        for k, x in self.fixed.items():
            f[k] = x
        return f


def enumerate_splines(G: LabeledGraph, budget: int = DEFAULT_BUDGET) -> Iterator[Tuple[int, ...]]:
    """Every spline with ``0 <= f_k < M_k`` (see :func:`box_moduli`)."""
    validate(G)
    search = _Search(G, {})
    needed = search.bound()
    if needed > budget:
        raise BudgetExceeded(needed, budget)
    return search.solutions(search.start())


def spline_lattice_enumerate(G: LabeledGraph, budget: int = DEFAULT_BUDGET) -> IntegerLattice:
    """Lattice generated by all splines in the box and the ``M_k e_k``."""
    M = box_moduli(G) if G.n else []
    rows = [[M[k] if j == k else 0 for j in range(G.n)] for k in range(G.n)]
    lat = IntegerLattice(rows, G.n)
    basis = [list(r) for r in lat.hnf]
    for f in enumerate_splines(G, budget):
        if f not in lat:
            basis = hnf(basis + [list(f)])
            lat = IntegerLattice(basis, G.n)
    return lat


def observed_leading_terms(G: LabeledGraph, i: int, budget: int = DEFAULT_BUDGET) -> List[int]:
    """Positive values ``t <= M_i`` such that some spline has zeros before ``v_i`` and ``f_{v_i} = t``.

    Every candidate ``t`` is tried; the search for a completion stops at the
    first spline found.
    """
    validate(G)
    if not 1 <= i <= G.n:
        raise ValueError(f"i must lie in [1, {G.n}], got {i}")
    k = i - 1
    search = _Search(G, {s: 0 for s in range(k)}, first=k)
    needed = search.bound()
    if needed > budget:
        raise BudgetExceeded(needed, budget)
    f = search.start()
    found = []
    for t in search.candidates(0, f, positive=True):
        f[k] = t
        if next(search.solutions(f, 1), None) is not None:
            found.append(t)
    return found


@dataclass(frozen=True)
class Counterexample:
    index: int
    found: Optional[int]
    expected: int

    def __str__(self) -> str:
        if self.found is None:
            return f"i = {self.index}: leading term {self.expected} is not attained"
        return f"i = {self.index}: found {self.found}, not a multiple of {self.expected}"


def certify_minimal_leading_terms(
    G: LabeledGraph, basis, budget: int = DEFAULT_BUDGET
) -> Optional[Counterexample]:
    """Check every ``L_i`` of ``basis`` against the observed leading terms.

    Returns ``None`` when, for every ``i``, each observed leading term is a
    multiple of ``L_i`` and ``L_i`` itself occurs; otherwise the first
    failure found.
    """
    leading = tuple(basis.leading_terms)
    if len(leading) != G.n:
        raise DimensionMismatch(f"{len(leading)} leading terms for {G.n} vertices")
    for i, L in enumerate(leading, 1):
        observed = observed_leading_terms(G, i, budget)
        bad = [t for t in observed if L == 0 or t % L]
        if bad:
            return Counterexample(i, min(bad), L)
        if L != 0 and L not in observed:
            return Counterexample(i, None, L)
    return None
