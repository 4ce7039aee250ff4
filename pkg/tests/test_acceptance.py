"""Acceptance criteria, one test each, each printing a PASS/FAIL line.

The checks are written against the public library functions directly rather
than through the ``verify`` suites, so the two act as cross-checks.
"""

import random
import time

import pytest

from normdepth.betti import (
    betti_hochster,
    betti_taylor,
    g_profile,
    has_linear_resolution,
    is_linear_quotients_order,
    predict_adjoin_variable,
    verify_betti_splitting,
)
from normdepth.complexes import GF2, QQ, induced_subcomplex, reduced_homology, stanley_reisner
from normdepth.constructions import predict_adjoin_edge_for, realize_profile, staircase_graph
from normdepth.graphs import (
    Graph,
    clique_complex,
    complement,
    complement_has_cut_vertex,
    cut_split,
    cut_vertices,
    disjoint_union,
    edge_ideal,
    gamma_complex,
    is_chordal,
    is_cochordal,
    is_connected,
    is_dominating_matching,
    is_special_matching,
    is_zero_depth_witness,
    matching_number,
)
from normdepth.ideal import (
    adjoin_variable,
    ideal_sum,
    monomial,
    monomial_grade,
    multiply_monomial,
    product_disjoint,
    squarefree_power,
)
from normdepth.sweeps import conjecture_sweep, graphs_up_to, random_ideal

pytestmark = pytest.mark.slow

ORDERS = {
    1: [(2, 4), (3, 4), (2, 5), (3, 5), (2, 6), (3, 6), (1, 6)],
    2: [(2, 3, 4, 5), (2, 3, 4, 6), (1, 2, 4, 6), (1, 3, 4, 6), (1, 2, 5, 6), (1, 3, 5, 6), (2, 3, 5, 6)],
    3: [(1, 2, 3, 4, 5, 6)],
}


def order(k):
    return [monomial(*s) for s in ORDERS[k]]


def finish(record, number, title, failures, start, limit, detail=""):
    elapsed = time.perf_counter() - start
    passed = not failures and elapsed < limit
    info = f"{elapsed:.1f}s, limit {limit}s"
    if detail:
        info = f"{detail}; {info}"
    if failures:
        info += f"; failures: {failures[:3]}"
    record(number, title, passed, info)
    assert not failures, failures
    assert elapsed < limit


def test_criterion_01_worked_example(record, example_graph):
    start = time.perf_counter()
    g = example_graph
    ideal = edge_ideal(g)
    gc = complement(g)
    failures = []
    checks = {
        "nu = 3": matching_number(g) == 3 == monomial_grade(ideal),
        "g = (1,0,0)": g_profile(ideal).gs == (1, 0, 0),
        "complement chordal": is_chordal(gc),
        "complement connected": is_connected(gc),
        "cut vertex {1}": cut_vertices(gc) == {1},
        "second power": set(squarefree_power(ideal, 2).gens) == set(order(2)) and len(order(2)) == 7,
        "third power": squarefree_power(ideal, 3).gens == (monomial(1, 2, 3, 4, 5, 6),),
        "orders": all(is_linear_quotients_order(order(k)) for k in (1, 2, 3)),
        "special": is_special_matching(g, ((1, 6), (3, 5)), cut_split(g, 1, {2, 3})),
        "dominating": is_dominating_matching(g, ((1, 6), (3, 5))),
        "witness i=6": is_zero_depth_witness(g, 2, order(2), ((1, 6), (3, 5)), 6),
    }
    failures = [name for name, ok in checks.items() if not ok]
    finish(record, 1, "worked example reproduced", failures, start, 5)


@pytest.fixture(scope="module")
def cochordal_run():
    """One pass over cochordal graphs on n <= 6 shared by criteria 2 and 3."""
    start = time.perf_counter()
    rows = []
    for g in graphs_up_to(6):
        if not is_cochordal(g):
            continue
        ideal = edge_ideal(g)
        prof = g_profile(ideal)
        n = g.n
        lhs = betti_hochster(ideal).total(n - 2)
        delta = clique_complex(complement(g))
        full = (1 << n) - 1
        rhs = sum(reduced_homology(induced_subcomplex(delta, full & ~(1 << j)), QQ).get(0, 0) for j in range(n))
        rows.append((g, prof, lhs, rhs))
    return rows, time.perf_counter() - start


def test_criterion_02_cut_vertex_equivalence(record, cochordal_run):
    rows, elapsed = cochordal_run
    start = time.perf_counter() - elapsed
    failures = []
    for g, prof, _, _ in rows:
        c1 = complement_has_cut_vertex(g)
        c2 = prof.gs[0] == 1
        c3 = c2 and all(x == 0 for x in prof.gs[1:])
        if not c1 == c2 == c3:
            failures.append(g.to_json())
    finish(record, 2, "cut vertex <=> g(1)=1 <=> g=(1,0,...,0)", failures, start, 600, f"{len(rows)} graphs")


def test_criterion_03_top_betti_identity(record, cochordal_run):
    rows, elapsed = cochordal_run
    start = time.perf_counter() - elapsed
    failures = [{"graph": g.to_json(), "lhs": lhs, "rhs": rhs} for g, _, lhs, rhs in rows if lhs != rhs]
    finish(record, 3, "beta_{n-2} = sum of H0 over vertex deletions", failures, start, 600, f"{len(rows)} graphs")


def test_criterion_04_product_additivity(record):
    start = time.perf_counter()
    rng = random.Random(7)
    failures = []
    for _ in range(50):
        a, b = random_ideal(rng, 5, 5), random_ideal(rng, 5, 5)
        pa, pb, pp = g_profile(a), g_profile(b), g_profile(product_disjoint(a, b))
        nu = min(pa.nu, pb.nu)
        if pp.nu != nu or pp.gs != tuple(pa.gs[k] + pb.gs[k] for k in range(nu)):
            failures.append((str(a), str(b)))
    finish(record, 4, "g additive over disjoint products, nu = min", failures, start, 300, "50 pairs")


def test_criterion_05_adjoin_variable(record):
    start = time.perf_counter()
    rng = random.Random(7)
    failures = []
    for _ in range(50):
        ideal = random_ideal(rng, 6, 6)
        j = adjoin_variable(ideal)
        if g_profile(j) != predict_adjoin_variable(g_profile(ideal)):
            failures.append(("profile", str(ideal)))
        x = 1 << ideal.ambient
        for k in range(2, monomial_grade(j) + 1):
            first = squarefree_power(ideal, k)
            second = multiply_monomial(squarefree_power(ideal, k - 1), x, j.ambient)
            jk = squarefree_power(j, k)
            if ideal_sum(first, second).gens != jk.gens or not verify_betti_splitting(jk, first, second):
                failures.append(("splitting", str(ideal), k))
    finish(record, 5, "adjoining a variable: recursion and Betti splitting", failures, start, 600, "50 ideals")


def test_criterion_06_adjoin_edge(record):
    start = time.perf_counter()
    edge = Graph(2, [(1, 2)])
    failures, count = [], 0
    for h in graphs_up_to(5):
        if not is_cochordal(h):
            continue
        count += 1
        predicted = predict_adjoin_edge_for(h, g_profile(edge_ideal(h)))
        if g_profile(edge_ideal(disjoint_union(h, edge))) != predicted:
            failures.append(h.to_json())
    finish(record, 6, "adjoining a disjoint edge: recursion", failures, start, 600, f"{count} graphs")


def test_criterion_07_staircase(record):
    start = time.perf_counter()
    failures = []
    for s, m in [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]:
        r = staircase_graph(s, m)
        prof = g_profile(r.ideal)
        expected = tuple(max(s - k, 0) for k in range(m))
        if prof.nu != m or prof.gs != expected:
            failures.append(((s, m), prof.gs))
    finish(record, 7, "staircase graphs g = (s, ..., 1, 0, ..., 0)", failures, start, 600)


def test_criterion_08_realize(record):
    start = time.perf_counter()
    failures = []
    sizes = []
    for target in [(0, 0), (1, 0), (1, 1), (2, 1)]:
        r = realize_profile(target)
        sizes.append(r.variables)
        prof = g_profile(r.ideal)
        if prof.gs != target or prof.nu != len(target) or r.variables > 11:
            failures.append((target, prof.gs, r.variables))
    finish(record, 8, "prescribed profiles realized", failures, start, 900, f"variables {sizes}")


def test_criterion_09_oracles(record):
    start = time.perf_counter()
    rng = random.Random(7)
    failures = []
    for _ in range(100):
        ideal = random_ideal(rng, 8, 8)
        for field in (QQ, GF2):
            if betti_hochster(ideal, field) != betti_taylor(ideal, field):
                failures.append((str(ideal), str(field)))
    finish(record, 9, "Hochster = Taylor in characteristic 0 and 2", failures, start, 600, "100 ideals")


def test_criterion_10_properties(record):
    start = time.perf_counter()
    failures = []
    profiles = 0
    for g in graphs_up_to(5):
        ideal = edge_ideal(g)
        try:
            prof = g_profile(ideal)  # GProfile refuses negative g
        except ArithmeticError as exc:
            failures.append(("g >= 0", g.to_json(), str(exc)))
            continue
        profiles += 1
        if min(prof.gs) < 0:
            failures.append(("g >= 0", g.to_json()))
        if has_linear_resolution(ideal) != is_cochordal(g):
            failures.append(("linear resolution", g.to_json()))
        for k in range(1, matching_number(g) + 1):
            gamma = gamma_complex(g, k)
            if stanley_reisner(squarefree_power(ideal, k)).facets != gamma.facets:
                failures.append(("gamma", g.to_json(), k))
            chi = sum((-1) ** (f.bit_count() - 1) for f in gamma.faces())
            h = reduced_homology(gamma)
            if chi != sum((-1) ** d * v for d, v in h.items()):
                failures.append(("euler", g.to_json(), k))
    finish(record, 10, "g >= 0, Euler identity, linear resolution iff cochordal, Gamma_k", failures, start, 600,
           f"{profiles} profiles")


def test_criterion_11_conjecture_sweep(record):
    start = time.perf_counter()
    rep = conjecture_sweep(5)
    finish(record, 11, "all profiles non-increasing for n <= 5", rep.counterexamples, start, 600,
           f"{rep.instances} graphs")
