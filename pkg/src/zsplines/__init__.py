"""Generalized splines over Z on edge-labeled graphs.

Vertices carry modules ``m_v Z`` and edges carry ``Z / r_e Z``. A spline is
an integer vector ``f`` with ``m_v | f_v`` and ``r_e | f_u - f_v``. The
package computes flow-up bases of the spline module by graph reduction and
checks them against an independent lattice oracle.
"""

from .arith import Congruence, CrtSolution, IncompatibleCongruences, crt_pair, crt_system, ext_gcd, gcd, lcm
from .basis import (
    FlowUpBasis,
    ReductionSequence,
    flow_up_basis,
    kernel_generator,
    minimal_leading_term,
    rank,
    reduction_sequence,
)
from .estimator import SplineBasis
from .graph import LabeledGraph, ValidationError, disjoint_union, induced_subgraph, normalize, validate
from .oracle import (
    IntegerLattice,
    certify_minimal_leading_terms,
    hnf,
    lattice_contains,
    lattice_equal,
    spline_lattice_enumerate,
    spline_lattice_kernel,
)
from .reduction import ReductionTrace, lift, merge_multiedges, reduce, vertex_reduce, zero_vertex_reduce
from .splines import (
    FlowUpInfo,
    NoLift,
    Violation,
    extend_from_subgraph,
    find_violation,
    flow_up_info,
    is_spline,
    lift_to_supergraph,
    project,
)

__version__ = "0.1.0"
