import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zsplines import (
    LabeledGraph,
    NoLift,
    extend_from_subgraph,
    find_violation,
    flow_up_info,
    induced_subgraph,
    is_spline,
    lift_to_supergraph,
    project,
)
from zsplines.oracle import spline_lattice_kernel
from zsplines.splines import LengthMismatch, boundary_product

P3 = LabeledGraph.path([10, 15, 21], [8, 12])


@pytest.mark.parametrize("f", [(10, 90, 42), (0, 120, 0), (0, 0, 84), (0, 0, 0), (20, 60, 84)])
def test_basis_vectors_are_splines(f):
    assert is_spline(P3, f)


def test_violation_reports_first_failure():
    bad = find_violation(P3, (5, 90, 42))
    assert (bad.kind, bad.index) == ("vertex", 0)
    bad = find_violation(P3, (10, 90, 84))
    assert (bad.kind, bad.index) == ("edge", 1)
    assert "12" in str(bad)
    with pytest.raises(LengthMismatch):
        find_violation(P3, (10, 90))


def test_zero_labels():
    G = LabeledGraph.from_labels([0, 3], [(0, 1, 0)])
    assert is_spline(G, (0, 0))
    assert not is_spline(G, (3, 3))
    H = LabeledGraph.from_labels([2, 2], [(0, 1, 0)])
    assert is_spline(H, (4, 4)) and not is_spline(H, (4, 6))


def test_flow_up_info():
    assert flow_up_info((0, 120, 0)) == (2, 120)
    assert flow_up_info((10, 90, 42)) == (1, 10)
    assert flow_up_info((0, 0, 0)) == (None, 0)


def test_extend_from_subgraph_example():
    assert boundary_product(P3, ["v2", "v3"]) == 8
    f = extend_from_subgraph(P3, ["v2", "v3"], (105, 21))
    assert f == (0, 840, 168)
    assert is_spline(P3, f)
    with pytest.raises(ValueError):
        extend_from_subgraph(P3, ["v2", "v3"], (1, 21))


def test_project_and_lift_examples():
    assert project(P3, (10, 90, 42), 2) == (10, 90)
    assert lift_to_supergraph(P3, (10, 90)) == (10, 90, 42)
    assert lift_to_supergraph(P3, (0, 120)) == (0, 120, 0)
    with pytest.raises(ValueError):
        project(P3, (10, 90, 42), 0)


def test_no_lift_names_clashing_conditions():
    G = LabeledGraph.from_labels([1, 3, 0], [(1, 2, 2)])
    with pytest.raises(NoLift) as info:
        lift_to_supergraph(G, (0, 3))
    assert info.value.pair == ("m(v3)", "r(v3,v2)")
    assert lift_to_supergraph(G, (0, 6)) == (0, 6, 0)


def small_graph_and_coeffs():
    @st.composite
    def build(draw):
        n = draw(st.integers(1, 4))
        m = draw(st.lists(st.integers(0, 15), min_size=n, max_size=n))
        pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
        edges = [(a, b, draw(st.integers(0, 15))) for a, b in pairs if draw(st.booleans())]
        G = LabeledGraph.from_labels(m, edges)
        gens = spline_lattice_kernel(G).hnf
        coeffs = draw(st.lists(st.integers(-6, 6), min_size=len(gens), max_size=len(gens)))
        f = [0] * n
        for c, row in zip(coeffs, gens):
            f = [x + c * y for x, y in zip(f, row)]
        return G, tuple(f)

    return build()


@settings(max_examples=80, deadline=None)
@given(small_graph_and_coeffs(), small_graph_and_coeffs())
def test_splines_form_a_module(Gf, other):
    G, f = Gf
    assert is_spline(G, f)
    assert is_spline(G, tuple(-x for x in f))
    assert is_spline(G, tuple(7 * x for x in f))
    g = tuple(3 * x for x in f)
    assert is_spline(G, tuple(x + y for x, y in zip(f, g)))


@settings(max_examples=80, deadline=None)
@given(small_graph_and_coeffs())
def test_project_then_lift_gives_a_spline(Gf):
    G, f = Gf
    if G.n < 2:
        return
    g = project(G, f, G.n - 1)
    assert is_spline(induced_subgraph(G, range(G.n - 1)), g)
    h = lift_to_supergraph(G, g)
    assert h[:-1] == g and is_spline(G, h)
