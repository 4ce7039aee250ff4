"""Named verification suites run by ``normdepth verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .betti import (
    betti_hochster,
    betti_taylor,
    g_profile,
    has_linear_resolution,
    is_linear_quotients_order,
    predict_adjoin_variable,
    verify_betti_splitting,
)
from .complexes import GF2, QQ, FieldSpec, induced_subcomplex, reduced_homology, stanley_reisner
from .constructions import (
    cut_vertex_example_graph,
    predict_adjoin_edge_for,
    realize_profile,
    staircase_graph,
)
from .graphs import (
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
from .ideal import (
    adjoin_variable,
    ideal_sum,
    monomial,
    monomial_grade,
    multiply_monomial,
    product_disjoint,
    squarefree_power,
)
from .sweeps import conjecture_sweep, graphs_up_to, random_ideal


@dataclass
class SuiteOptions:
    max_vertices: int | None = None
    trials: int | None = None
    seed: int = 7
    field: FieldSpec = QQ
    jobs: int = 1


@dataclass
class SuiteResult:
    suite: str
    field: str
    checks: list[dict] = field(default_factory=list)

    def check(self, name: str, passed: bool, **detail) -> bool:
        self.checks.append({"name": name, "passed": bool(passed), **detail})
        return passed

    @property
    def passed(self) -> bool:
        return all(c["passed"] for c in self.checks)

    def to_json(self) -> dict:
        return {"suite": self.suite, "field": self.field, "passed": self.passed, "checks": self.checks}


EXAMPLE_ORDERS = {
    1: [(2, 4), (3, 4), (2, 5), (3, 5), (2, 6), (3, 6), (1, 6)],
    2: [(2, 3, 4, 5), (2, 3, 4, 6), (1, 2, 4, 6), (1, 3, 4, 6), (1, 2, 5, 6), (1, 3, 5, 6), (2, 3, 5, 6)],
    3: [(1, 2, 3, 4, 5, 6)],
}


def example_order(k: int) -> list[int]:
    return [monomial(*s) for s in EXAMPLE_ORDERS[k]]


def run_example36(opts: SuiteOptions) -> SuiteResult:
    res = SuiteResult("example36", str(opts.field))
    g = cut_vertex_example_graph()
    ideal = edge_ideal(g)
    gc = complement(g)
    res.check("matching number 3", matching_number(g) == 3 and monomial_grade(ideal) == 3)
    prof = g_profile(ideal, opts.field)
    res.check("profile (1,0,0)", prof.gs == (1, 0, 0), profile=prof.to_json())
    res.check("complement chordal", is_chordal(gc))
    res.check("complement connected", is_connected(gc))
    res.check("cut vertices {1}", cut_vertices(gc) == {1})
    res.check("second power generators", set(squarefree_power(ideal, 2).gens) == set(example_order(2)))
    res.check("third power principal", squarefree_power(ideal, 3).gens == (monomial(1, 2, 3, 4, 5, 6),))
    for k in (1, 2, 3):
        res.check(f"listed order k={k} has linear quotients", is_linear_quotients_order(example_order(k)))
    m = ((1, 6), (3, 5))
    split = cut_split(g, 1, {2, 3})
    res.check("M special", is_special_matching(g, m, split))
    res.check("M dominating", is_dominating_matching(g, m))
    res.check("M witness at i=6", is_zero_depth_witness(g, 2, example_order(2), m, 6))
    return res


def run_cochordal_sweep(opts: SuiteOptions) -> SuiteResult:
    """Cut-vertex classification of cochordal graphs with ``g(1) = 1``."""
    nmax = opts.max_vertices or 6
    res = SuiteResult(f"thm32-sweep(max_vertices={nmax})", str(opts.field))
    count, failures = 0, []
    for g in graphs_up_to(nmax):
        if not is_cochordal(g):
            continue
        count += 1
        prof = g_profile(edge_ideal(g), opts.field)
        c1 = complement_has_cut_vertex(g)
        c2 = prof.gs[0] == 1
        c3 = c2 and all(x == 0 for x in prof.gs[1:])
        if not c1 == c2 == c3:
            failures.append({"graph": g.to_json(), "profile": prof.to_json()})
    res.check("three conditions agree", not failures, instances=count, counterexamples=failures[:20])
    return res


def top_betti_sides(g: Graph, field: FieldSpec = QQ) -> tuple[int, int]:
    """``β_{n-2}(S/I(G))`` and the sum of ``dim H̃^0`` over vertex deletions of ``Δ(G^c)``."""
    n = g.n
    lhs = betti_hochster(edge_ideal(g), field).total(n - 2)
    delta = clique_complex(complement(g))
    rhs = sum(
        reduced_homology(induced_subcomplex(delta, full_minus(n, j)), field).get(0, 0)
        for j in range(1, n + 1)
    )
    return lhs, rhs


def run_top_betti(opts: SuiteOptions) -> SuiteResult:
    nmax = opts.max_vertices or 6
    res = SuiteResult(f"top-betti(max_vertices={nmax})", str(opts.field))
    count, bad = 0, []
    for g in graphs_up_to(nmax):
        if not is_cochordal(g):
            continue
        count += 1
        lhs, rhs = top_betti_sides(g, opts.field)
        if lhs != rhs:
            bad.append({"graph": g.to_json(), "lhs": lhs, "rhs": rhs})
    res.check("beta_{n-2} equals sum of H0 of vertex deletions", not bad, instances=count, counterexamples=bad[:20])
    return res


def full_minus(n: int, j: int) -> int:
    return ((1 << n) - 1) & ~(1 << (j - 1))


def run_product(opts: SuiteOptions) -> SuiteResult:
    trials = opts.trials or 50
    res = SuiteResult(f"product(trials={trials}, seed={opts.seed})", str(opts.field))
    rng = random.Random(opts.seed)
    bad = []
    for _ in range(trials):
        a, b = random_ideal(rng, 5, 5), random_ideal(rng, 5, 5)
        pa, pb = g_profile(a, opts.field), g_profile(b, opts.field)
        prod = product_disjoint(a, b)
        pp = g_profile(prod, opts.field)
        nu = min(pa.nu, pb.nu)
        if pp.nu != nu or any(pp.gs[k] != pa.gs[k] + pb.gs[k] for k in range(nu)):
            bad.append({"first": str(a), "second": str(b), "product": pp.to_json()})
    res.check("g additive and nu = min", not bad, instances=trials, counterexamples=bad)
    return res


def adjoin_splittings(ideal, field: FieldSpec) -> list[dict]:
    """Check ``J^[k] = I^[k] + x I^[k-1]`` as a Betti splitting for ``k = 2..nu(J)``."""
    j = adjoin_variable(ideal)
    x = 1 << ideal.ambient
    problems = []
    for k in range(2, monomial_grade(j) + 1):
        jk = squarefree_power(j, k)
        first = squarefree_power(ideal, k)
        second = multiply_monomial(squarefree_power(ideal, k - 1), x, j.ambient)
        if ideal_sum(first, second).gens != jk.gens:
            problems.append({"k": k, "error": "generators do not decompose"})
            continue
        rep = verify_betti_splitting(jk, first, second, field)
        if not rep:
            problems.append({"k": k, "discrepancies": rep.discrepancies})
    return problems


def run_adjoin_variable(opts: SuiteOptions) -> SuiteResult:
    trials = opts.trials or 50
    res = SuiteResult(f"adjoin-variable(trials={trials}, seed={opts.seed})", str(opts.field))
    rng = random.Random(opts.seed)
    bad, split_bad, mono_bad = [], [], []
    for _ in range(trials):
        ideal = random_ideal(rng, 6, 6)
        p = g_profile(ideal, opts.field)
        pj = g_profile(adjoin_variable(ideal), opts.field)
        if pj != predict_adjoin_variable(p):
            bad.append({"ideal": str(ideal), "profile": pj.to_json()})
        if p.is_non_increasing() and not pj.is_non_increasing():
            mono_bad.append(str(ideal))
        probs = adjoin_splittings(ideal, opts.field)
        if probs:
            split_bad.append({"ideal": str(ideal), "problems": probs})
    res.check("profile of (I,x) matches recursion", not bad, instances=trials, counterexamples=bad)
    res.check("non-increasing preserved", not mono_bad, counterexamples=mono_bad)
    res.check("J^[k] = I^[k] + x I^[k-1] is a Betti splitting", not split_bad, counterexamples=split_bad)
    return res


def run_adjoin_edge(opts: SuiteOptions) -> SuiteResult:
    nmax = opts.max_vertices or 5
    res = SuiteResult(f"adjoin-edge(max_vertices={nmax})", str(opts.field))
    edge = Graph(2, [(1, 2)])
    count, bad = 0, []
    for h in graphs_up_to(nmax):
        if not is_cochordal(h):
            continue
        count += 1
        predicted = predict_adjoin_edge_for(h, g_profile(edge_ideal(h), opts.field))
        actual = g_profile(edge_ideal(disjoint_union(h, edge)), opts.field)
        if actual != predicted:
            bad.append({"graph": h.to_json(), "actual": actual.to_json(), "predicted": predicted.to_json()})
    res.check("profile of H + edge matches recursion", not bad, instances=count, counterexamples=bad)
    return res


STAIRCASE_CASES = [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]
REALIZE_TARGETS = [(0, 0), (1, 0), (1, 1), (2, 1)]


def run_staircase(opts: SuiteOptions) -> SuiteResult:
    res = SuiteResult("staircase", str(opts.field))
    for s, m in STAIRCASE_CASES:
        r = staircase_graph(s, m)
        prof = g_profile(r.ideal, opts.field)
        expected = tuple(max(s - k, 0) for k in range(m))
        res.check(f"s={s}, m={m}", prof.nu == m and prof.gs == expected and prof == r.predicted,
                  profile=prof.to_json(), vertices=r.ideal.ambient)
    return res


def run_realize(opts: SuiteOptions) -> SuiteResult:
    res = SuiteResult("realize", str(opts.field))
    for target in REALIZE_TARGETS:
        r = realize_profile(target)
        prof = g_profile(r.ideal, opts.field)
        res.check(f"target {list(target)}", prof.gs == target and prof == r.predicted and r.variables <= 11,
                  profile=prof.to_json(), variables=r.variables)
    return res


def run_oracle(opts: SuiteOptions) -> SuiteResult:
    trials = opts.trials or 100
    res = SuiteResult(f"oracle(trials={trials}, seed={opts.seed})", "QQ and GF(2)")
    rng = random.Random(opts.seed)
    bad = []
    for _ in range(trials):
        ideal = random_ideal(rng, 8, 8)
        for fld in (QQ, GF2):
            if betti_hochster(ideal, fld) != betti_taylor(ideal, fld):
                bad.append({"ideal": str(ideal), "field": str(fld)})
    res.check("Hochster equals Taylor", not bad, instances=trials, counterexamples=bad)
    return res


def run_properties(opts: SuiteOptions) -> SuiteResult:
    nmax = opts.max_vertices or 5
    res = SuiteResult(f"properties(max_vertices={nmax})", str(opts.field))
    froberg_bad, gamma_bad = [], []
    count = 0
    for g in graphs_up_to(nmax):
        count += 1
        ideal = edge_ideal(g)
        if has_linear_resolution(ideal, opts.field) != is_cochordal(g):
            froberg_bad.append(g.to_json())
        for k in range(1, matching_number(g) + 1):
            power = squarefree_power(ideal, k)
            if stanley_reisner(power).facets != gamma_complex(g, k).facets:
                gamma_bad.append({"graph": g.to_json(), "k": k})
        g_profile(ideal, opts.field)  # negative g raises inside GProfile
    res.check("linear resolution iff cochordal", not froberg_bad, instances=count, counterexamples=froberg_bad)
    res.check("Stanley-Reisner complex of I^[k] is Gamma_k", not gamma_bad, counterexamples=gamma_bad)
    return res


def run_conjecture(opts: SuiteOptions) -> SuiteResult:
    nmax = opts.max_vertices or 5
    res = SuiteResult(f"conjecture(max_vertices={nmax})", str(opts.field))
    rep = conjecture_sweep(nmax, field=opts.field, jobs=opts.jobs)
    res.check("all profiles non-increasing", not rep.counterexamples, instances=rep.instances,
              counterexamples=rep.counterexamples)
    return res


SUITES: dict[str, Callable[[SuiteOptions], SuiteResult]] = {
    "example36": run_example36,
    "thm32-sweep": run_cochordal_sweep,
    "top-betti": run_top_betti,
    "product": run_product,
    "adjoin-variable": run_adjoin_variable,
    "adjoin-edge": run_adjoin_edge,
    "staircase": run_staircase,
    "realize": run_realize,
    "oracle": run_oracle,
    "properties": run_properties,
    "conjecture": run_conjecture,
}
