import pytest

from normdepth.betti import (
    BettiTable,
    GProfile,
    betti_hochster,
    betti_taylor,
    colon_is_linear,
    depth_of,
    g_profile,
    has_linear_resolution,
    is_linear_quotients_order,
    linear_quotients_order,
    linear_resolution_obstruction,
    pd_of,
    predict_adjoin_variable,
    predict_product,
    verify_betti_splitting,
)
from normdepth.complexes import GF2, QQ
from normdepth.errors import CapExceeded, NormDepthError
from normdepth.graphs import complement, complete_bipartite, cycle_graph, edge_ideal, path_graph
from normdepth.ideal import (
    MonomialIdeal,
    adjoin_variable,
    ideal_sum,
    initial_degree,
    minimalize,
    monomial,
    monomial_grade,
    multiply_monomial,
    squarefree_power,
    widen,
)


def taylor_profile(ideal, field=QQ):
    """Independent profile: depth from the Taylor complex instead of Hochster."""
    gs = []
    for k in range(1, monomial_grade(ideal) + 1):
        power = squarefree_power(ideal, k)
        depth = ideal.ambient - betti_taylor(power, field).pd
        gs.append(depth - (initial_degree(power) - 1))
    return tuple(gs)


def test_path_betti():
    table = betti_hochster(MonomialIdeal.from_supports([(1, 2), (2, 3)]))
    assert table.entries == {(0, 0): 1, (1, 2): 2, (2, 3): 1}
    assert table == betti_taylor(MonomialIdeal.from_supports([(1, 2), (2, 3)]))


def test_complete_intersection_betti():
    table = betti_hochster(MonomialIdeal.from_supports([(1, 2), (3, 4)]))
    assert table.entries == {(0, 0): 1, (1, 2): 2, (2, 4): 1}
    assert table.ideal_betti() == {(0, 2): 2, (1, 4): 1}


def test_cut_vertex_example_depths(example_graph):
    ideal = edge_ideal(example_graph)
    assert pd_of(ideal) == 4
    assert depth_of(ideal) == 2
    assert depth_of(squarefree_power(ideal, 2)) == 3
    assert depth_of(squarefree_power(ideal, 2), GF2) == 3


def test_betti_json_and_rendering():
    table = betti_hochster(MonomialIdeal.from_supports([(1, 2), (2, 3)]))
    assert BettiTable.from_json(table.to_json()) == table
    text = str(table)
    assert "total:" in text and text.splitlines()[1].split()[1:] == ["1", "2", "1"]


@pytest.mark.parametrize(
    "ideal, expected",
    [
        (edge_ideal(complete_bipartite(2, 2)), (0, 0)),
        (MonomialIdeal.from_supports([(1, 2)]), (0,)),
        (MonomialIdeal.from_supports([(1, 2), (3,)]), (1, 0)),
        (edge_ideal(path_graph(4)), (1, 0)),
    ],
)
def test_profiles(ideal, expected):
    prof = g_profile(ideal)
    assert prof.gs == expected
    assert taylor_profile(ideal) == expected
    assert g_profile(ideal, GF2).gs == expected


def test_profile_rejects_zero_and_widened():
    with pytest.raises(NormDepthError):
        g_profile(MonomialIdeal((), 0))
    with pytest.raises(NormDepthError):
        g_profile(widen(MonomialIdeal.from_supports([(1, 2)]), 3))


def test_caps():
    with pytest.raises(CapExceeded):
        betti_taylor(edge_ideal(path_graph(20)))
    with pytest.raises(CapExceeded):
        g_profile(MonomialIdeal.from_supports([(1, 2)]), cap=1)


def test_gprofile_validation():
    with pytest.raises(ArithmeticError):
        GProfile(1, (2,), (0,), (-1,))
    with pytest.raises(NormDepthError):
        GProfile(1, (2,), (1,), (5,))
    prof = GProfile.from_g([1, 0], [2, 4])
    assert GProfile.from_json(prof.to_json()) == prof
    assert prof.is_non_increasing()
    assert not GProfile.from_g([0, 1], [2, 4]).is_non_increasing()


def test_predict_adjoin_variable_examples():
    single = g_profile(MonomialIdeal.from_supports([(1, 2)]))
    assert predict_adjoin_variable(single).gs == (1, 0)
    assert predict_adjoin_variable(single) == g_profile(adjoin_variable(MonomialIdeal.from_supports([(1, 2)])))


def test_predict_product_example():
    a = GProfile.from_g([1, 0], [2, 4])
    b = GProfile.from_g([2, 1, 0], [1, 3, 5])
    p = predict_product(a, b)
    assert p.gs == (3, 1) and p.dks == (3, 7)


def test_linear_resolution():
    # C4 is cochordal (its complement is two disjoint edges); the complement
    # of C4 is not, since its own complement is the 4-cycle
    assert has_linear_resolution(edge_ideal(cycle_graph(4)))
    two_edges = edge_ideal(complement(cycle_graph(4)))
    assert not has_linear_resolution(two_edges)
    assert linear_resolution_obstruction(two_edges) is not None
    assert has_linear_resolution(edge_ideal(path_graph(4)))
    assert linear_resolution_obstruction(MonomialIdeal.from_supports([(1, 2), (3,)])) is not None


def test_linear_quotients():
    p4 = edge_ideal(path_graph(4))
    order = linear_quotients_order(p4)
    assert order is not None and is_linear_quotients_order(order)
    assert linear_quotients_order(MonomialIdeal.from_supports([(1, 2), (3, 4)])) is None
    assert colon_is_linear([monomial(1, 2)], monomial(2, 3))
    assert not colon_is_linear([monomial(1, 2)], monomial(3, 4))


def test_splitting_of_adjoined_variable():
    ideal = edge_ideal(path_graph(4))
    j = adjoin_variable(ideal)
    x = 1 << ideal.ambient
    first = squarefree_power(ideal, 2)
    second = multiply_monomial(squarefree_power(ideal, 1), x, j.ambient)
    jk = squarefree_power(j, 2)
    assert ideal_sum(first, second).gens == jk.gens
    assert verify_betti_splitting(jk, first, second)


def test_splitting_detects_a_bad_split():
    # (x1x2, x2x3, x3x4) split as (x1x2, x3x4) + (x2x3) is not a Betti splitting
    ideal = edge_ideal(path_graph(4))
    first = MonomialIdeal((monomial(1, 2), monomial(3, 4)), 4)
    second = MonomialIdeal((monomial(2, 3),), 4)
    assert not verify_betti_splitting(ideal, first, second)
    with pytest.raises(NormDepthError):
        verify_betti_splitting(ideal, first, first)


def test_minimalized_input_is_fine():
    assert g_profile(minimalize([monomial(2, 5), monomial(5, 7)])).gs == (0,)
