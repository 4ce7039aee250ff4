"""Invariants checked on random ideals and graphs."""

from itertools import combinations

from hypothesis import given, settings
from hypothesis import strategies as st

from normdepth.betti import (
    betti_hochster,
    betti_taylor,
    g_profile,
    predict_adjoin_variable,
    predict_product,
)
from normdepth.complexes import GF2, QQ, SimplicialComplex, induced_subcomplex, is_connected_complex, reduced_homology, stanley_reisner
from normdepth.graphs import (
    Graph,
    clique_complex,
    edge_ideal,
    enumerate_matchings,
    gamma_complex,
    is_chordal,
    isolated_vertices,
    matching_number,
)
from normdepth.ideal import (
    adjoin_variable,
    divides,
    minimalize,
    monomial_grade,
    product_disjoint,
    squarefree_power,
)

SETTINGS = settings(max_examples=60, deadline=None)


@st.composite
def ideals(draw, max_vars=5, max_gens=5):
    n = draw(st.integers(1, max_vars))
    masks = draw(st.lists(st.integers(1, (1 << n) - 1), min_size=1, max_size=max_gens))
    return minimalize(masks)


@st.composite
def graphs(draw, min_n=2, max_n=6, allow_isolated=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(1, n + 1), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    g = Graph(n, chosen)
    if not allow_isolated and isolated_vertices(g):
        # attach each isolated vertex to vertex 1 or 2
        extra = [(v, 1 if v != 1 else 2) for v in isolated_vertices(g)]
        g = Graph(n, list(g.edges) + extra)
    return g


@st.composite
def complexes(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    facets = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=1, max_size=6))
    return SimplicialComplex.from_faces(n, facets)


@SETTINGS
@given(ideals())
def test_minimalize_idempotent(ideal):
    assert minimalize(ideal.gens) == ideal


@SETTINGS
@given(ideals(6, 6))
def test_powers_are_nested_and_end_at_grade(ideal):
    nu = monomial_grade(ideal)
    for k in range(1, nu):
        bigger, smaller = squarefree_power(ideal, k + 1), squarefree_power(ideal, k)
        assert all(any(divides(u, v) for u in smaller.gens) for v in bigger.gens)
    assert not squarefree_power(ideal, nu).is_zero
    assert squarefree_power(ideal, nu + 1).is_zero


@SETTINGS
@given(ideals(4, 4), ideals(4, 4), st.integers(1, 3))
def test_product_commutes_with_powers(a, b, k):
    left = squarefree_power(product_disjoint(a, b), k)
    right = product_disjoint(squarefree_power(a, k), squarefree_power(b, k)) if min(
        monomial_grade(a), monomial_grade(b)) >= k else None
    if right is None:
        assert left.is_zero
    else:
        assert set(left.gens) == set(right.gens)


@SETTINGS
@given(complexes())
def test_euler_characteristic(cx):
    faces = cx.faces()
    chi = sum((-1) ** (f.bit_count() - 1) for f in faces)
    for field in (QQ, GF2):
        h = reduced_homology(cx, field)
        assert chi == sum((-1) ** d * v for d, v in h.items())


@SETTINGS
@given(complexes())
def test_connectivity_matches_h0(cx):
    if cx.vertex_mask:
        assert is_connected_complex(cx) == (reduced_homology(cx).get(0, 0) == 0)


@SETTINGS
@given(graphs(1, 7, allow_isolated=True))
def test_chordal_clique_complexes_have_only_h0(h):
    if is_chordal(h):
        for field in (QQ, GF2):
            assert set(reduced_homology(clique_complex(h), field)) <= {0}


@SETTINGS
@given(ideals(6, 6))
def test_hochster_equals_taylor(ideal):
    for field in (QQ, GF2):
        assert betti_hochster(ideal, field) == betti_taylor(ideal, field)


@SETTINGS
@given(ideals(5, 5))
def test_adjoin_variable_prediction(ideal):
    assert g_profile(adjoin_variable(ideal)) == predict_adjoin_variable(g_profile(ideal))


@settings(max_examples=30, deadline=None)
@given(ideals(4, 4), ideals(4, 4))
def test_product_prediction(a, b):
    assert g_profile(product_disjoint(a, b)) == predict_product(g_profile(a), g_profile(b))


@SETTINGS
@given(graphs())
def test_edge_ideal_powers_are_matchings(g):
    ideal = edge_ideal(g)
    assert monomial_grade(ideal) == matching_number(g)
    for k in range(1, matching_number(g) + 1):
        power = squarefree_power(ideal, k)
        covers = {sum(1 << (v - 1) for e in m for v in e) for m in enumerate_matchings(g, k)}
        assert set(power.gens) == covers
        assert stanley_reisner(power).facets == gamma_complex(g, k).facets


@SETTINGS
@given(graphs(max_n=6))
def test_profiles_nonnegative_and_field_independent_on_small_graphs(g):
    prof = g_profile(edge_ideal(g))
    assert min(prof.gs) >= 0
    assert g_profile(edge_ideal(g), GF2) == prof


@SETTINGS
@given(complexes(5), st.integers(0, 31))
def test_induced_subcomplex_faces(cx, w):
    w &= (1 << cx.n) - 1
    sub = induced_subcomplex(cx, w)
    assert sub.faces() == {f for f in cx.faces() if f & ~w == 0}
