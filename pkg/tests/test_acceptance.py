"""Acceptance suite: one test per criterion, each prints a PASS/FAIL line."""

import contextlib
import io
import itertools
import json
import time
from functools import reduce as fold
from math import gcd

import numpy as np

from _gen import random_graph, seeded, simple_graph
from zsplines import (
    Congruence,
    IncompatibleCongruences,
    IntegerLattice,
    LabeledGraph,
    certify_minimal_leading_terms,
    crt_system,
    extend_from_subgraph,
    flow_up_basis,
    induced_subgraph,
    is_spline,
    lattice_equal,
    lift,
    minimal_leading_term,
    normalize,
    reduce,
    spline_lattice_enumerate,
    spline_lattice_kernel,
)
from zsplines.arith import lcm
from zsplines.cli import main
from zsplines.io import dump_graph
from zsplines.oracle import BudgetExceeded, enumerate_splines

ENUM_BUDGET = 10**5


def lcm_all(*xs):
    return fold(lcm, xs, 1)


def gcd_all(*xs):
    return fold(gcd, xs, 0)


def test_ac1_path_basis_golden(tmp_path, record):
    path = tmp_path / "p3.json"
    dump_graph(LabeledGraph.path([10, 15, 21], [8, 12]), path)
    out = io.StringIO()
    t0 = time.perf_counter()
    with contextlib.redirect_stdout(out):
        code = main(["--format", "machine", "basis", str(path)])
    elapsed = time.perf_counter() - t0
    doc = json.loads(out.getvalue())
    got = {tuple(int(x) for x in b["spline"]) for b in doc["basis"]}
    ok = code == 0 and got == {(10, 90, 42), (0, 120, 0), (0, 0, 84)} and elapsed < 1.0
    record("AC1", ok, f"basis={sorted(got, reverse=True)} t={elapsed:.3f}s")
    assert ok


def k4(m, r):
    # r1 v1v2, r2 v2v3, r3 v1v3, r4 v1v4, r5 v2v4, r6 v3v4
    return LabeledGraph.from_labels(
        m, [(0, 1, r[0]), (1, 2, r[1]), (0, 2, r[2]), (0, 3, r[3]), (1, 3, r[4]), (2, 3, r[5])]
    )


def test_ac2_k4_reduction_formulas(record):
    rng = seeded(20)
    failures = 0
    for _ in range(100):
        m = [rng.randint(1, 50) for _ in range(4)]
        r = [rng.randint(1, 50) for _ in range(6)]
        H, trace = reduce(k4(m, r), "v4")
        want_m = (
            lcm(m[0], gcd(m[3], r[3])),
            lcm(m[1], gcd(m[3], r[4])),
            lcm(m[2], gcd(m[3], r[5])),
        )
        want_r = {
            ("v1", "v2"): lcm(r[0], gcd(r[3], r[4])),
            ("v2", "v3"): lcm(r[1], gcd(r[4], r[5])),
            ("v1", "v3"): lcm(r[2], gcd(r[3], r[5])),
        }
        got_r = {pair: 1 for pair in want_r}
        for u, v, lab in H.edges:
            got_r[(H.ids[u], H.ids[v])] = lab
        merges = {(s.u, s.v): s.result_label for s in trace.steps if hasattr(s, "merged_labels")}
        merges_ok = all(want_r[p] == lab for p, lab in merges.items())
        if H.ids != ("v1", "v2", "v3") or H.m != want_m or got_r != want_r or not merges_ok:
            failures += 1
    record("AC2", failures == 0, f"100 instances, {failures} mismatches")
    assert failures == 0


def test_ac3_oracle_equivalence(record):
    rng = seeded(2)
    t0 = time.perf_counter()
    bad = enumerated = 0
    for _ in range(200):
        G = random_graph(rng, rng.randint(2, 5), 1, 30)
        spanned = IntegerLattice(flow_up_basis(G).elements, G.n)
        if not lattice_equal(spanned, spline_lattice_kernel(G)):
            bad += 1
            continue
        try:
            E = spline_lattice_enumerate(G, ENUM_BUDGET)
        except BudgetExceeded:
            continue
        enumerated += 1
        bad += not lattice_equal(spanned, E)
    elapsed = time.perf_counter() - t0
    ok = bad == 0 and elapsed < 60
    record("AC3", ok, f"200 graphs, {enumerated} also enumerated, {bad} mismatches, t={elapsed:.1f}s")
    assert ok


def test_ac4_minimality(record):
    rng = seeded(4)
    failures = []
    for _ in range(50):
        G = random_graph(rng, rng.randint(1, 4), 1, 12)
        cex = certify_minimal_leading_terms(G, flow_up_basis(G))
        if cex is not None:
            failures.append(str(cex))
    record("AC4", not failures, f"50 graphs, {len(failures)} counterexamples")
    assert not failures


def test_ac5_invariance(record):
    rng = seeded(5)
    failures = 0
    for _ in range(20):
        G = random_graph(rng, 5, 1, 30, density=0.4)
        values = {
            minimal_leading_term(G, 1, order)
            for order in itertools.permutations(["v2", "v3", "v4", "v5"])
        }
        failures += len(values) != 1
    record("AC5", failures == 0, f"20 graphs x 24 orders, {failures} non-invariant")
    assert failures == 0


def cycle_closed_form(m, r):
    n = len(m)
    terms = [m[0]]
    for k in range(1, n):
        terms.append(gcd_all(m[k], *r[:k]))
        terms.append(gcd_all(m[k], *r[k:]))
    return lcm_all(*terms)


def test_ac6_cycle_closed_form(record):
    rng = seeded(6)
    failures = 0
    for _ in range(50):
        n = rng.randint(3, 6)
        m = [rng.randint(1, 20) for _ in range(n)]
        r = [rng.randint(1, 20) for _ in range(n)]
        failures += minimal_leading_term(LabeledGraph.cycle(m, r), 1) != cycle_closed_form(m, r)
    record("AC6", failures == 0, f"50 cycles, {failures} mismatches")
    assert failures == 0


def test_ac7_lift_section(record):
    rng = seeded(7)
    checked = failures = 0
    for _ in range(30):
        G = random_graph(rng, rng.randint(2, 4), 1, 12)
        v = rng.choice(G.ids)
        H, _ = reduce(G, v)
        k = G.index(v)
        for g in enumerate_splines(H, 10**6):
            f = lift(G, H, v, g)
            checked += 1
            if not is_spline(G, f) or f[:k] + f[k + 1:] != tuple(g):
                failures += 1
    ok = failures == 0 and checked > 0
    record("AC7", ok, f"{checked} reduced-graph splines lifted, {failures} failures")
    assert ok


def test_ac8_normalization_invariance(record):
    rng = seeded(8)
    failures = 0
    for _ in range(100):
        G = simple_graph(rng, rng.randint(2, 5), 1, 30)
        edges = list(G.edges)
        for _ in range(rng.randint(1, 4)):
            a, b = rng.sample(range(G.n), 2)
            edges.append((a, b, rng.choice([1, rng.randint(1, 30)])))
        noisy = LabeledGraph(G.vertices, tuple(edges))
        clean, _ = normalize(noisy)
        base = spline_lattice_kernel(noisy)
        same = lattice_equal(base, spline_lattice_kernel(clean))
        stripped = LabeledGraph(G.vertices, tuple(e for e in G.edges if e.r != 1))
        same &= lattice_equal(spline_lattice_kernel(G), spline_lattice_kernel(stripped))
        failures += not same
    record("AC8", failures == 0, f"100 instances, {failures} lattice changes")
    assert failures == 0


def test_ac9_subgraph_extension(record):
    rng = seeded(9)
    checked = failures = 0
    for _ in range(100):
        G = random_graph(rng, rng.randint(2, 6), 0, 30)
        S = sorted(rng.sample(range(G.n), rng.randint(1, G.n)))
        sub = induced_subgraph(G, S)
        gens = spline_lattice_kernel(sub).hnf
        for _ in range(5):
            f_sub = [0] * sub.n
            for row in gens:
                c = rng.randint(-5, 5)
                f_sub = [a + c * b for a, b in zip(f_sub, row)]
            checked += 1
            failures += not is_spline(G, extend_from_subgraph(G, S, f_sub))
    record("AC9", failures == 0, f"{checked} extensions, {failures} non-splines")
    assert failures == 0


def brute_crt(system, L):
    x = np.arange(L, dtype=np.int64)
    mask = np.ones(L, dtype=bool)
    for a, mod in system:
        mask &= (x - a) % mod == 0
    hits = np.flatnonzero(mask)
    return int(hits[0]) if hits.size else None


def random_system(rng, limit=10**5):
    while True:
        moduli = [rng.randint(1, 400) for _ in range(rng.randint(1, 4))]
        L = lcm_all(*moduli)
        if L <= limit:
            return [Congruence(rng.randint(-1000, 1000), mod) for mod in moduli], L


def test_ac10_crt_against_brute_scan(record):
    rng = seeded(10)
    failures = solvable = 0
    for _ in range(10**4):
        system, L = random_system(rng)
        expected = brute_crt(system, L)
        try:
            sol = crt_system(system)
        except IncompatibleCongruences:
            failures += expected is not None
            continue
        solvable += 1
        failures += expected is None or sol.residue != expected or sol.modulus != L
    record("AC10", failures == 0, f"10^4 systems ({solvable} solvable), {failures} disagreements")
    assert failures == 0
