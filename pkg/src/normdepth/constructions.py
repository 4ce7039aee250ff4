"""Graphs and ideals with prescribed normalized depth profiles.

Each builder returns the object together with the profile it is predicted
to have.  Predictions come from the recursions (adjoining a variable,
adjoining a disjoint edge, disjoint products), never from a Hochster
computation, so ``g_profile(result.ideal) == result.predicted`` is a check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .betti import GProfile, predict_adjoin_variable, predict_product
from .errors import NormDepthError
from .graphs import (
    Graph,
    complement,
    complete_bipartite,
    cut_vertices,
    disjoint_union,
    edge_ideal,
    is_chordal,
    is_connected,
    isolated_vertices,
    matching_number,
)
from .ideal import MonomialIdeal, adjoin_variable, product_disjoint


@dataclass(frozen=True)
class ConstructionResult:
    ideal: MonomialIdeal
    predicted: GProfile
    provenance: str
    graph: Graph | None = None

    @property
    def variables(self) -> int:
        return self.ideal.ambient


def cut_vertex_example_graph() -> Graph:
    """Six-vertex cochordal graph whose complement has the cut vertex 1."""
    return Graph(6, [(2, 4), (3, 4), (2, 5), (3, 5), (2, 6), (3, 6), (1, 6)])


def zero_profile(nu: int) -> GProfile:
    """Profile ``(0, ..., 0)`` of an edge ideal (``d_k = 2k``)."""
    return GProfile.from_g([0] * nu, [2 * k for k in range(1, nu + 1)])


def cut_profile(nu: int) -> GProfile:
    """Profile ``(1, 0, ..., 0)`` of an edge ideal."""
    return GProfile.from_g([1] + [0] * (nu - 1), [2 * k for k in range(1, nu + 1)])


def predict_adjoin_edge(profile: GProfile) -> GProfile:
    """Profile of ``H ⊔ {new edge}`` from that of a cochordal ``H``.

    ``g(k) = min(g_H(k) + 1, g_H(k-1))`` with infinite sentinels at both ends.
    The caller is responsible for ``H`` being cochordal; see
    :func:`predict_adjoin_edge_for`.
    """
    inf = float("inf")
    g = [inf, *profile.gs, inf]
    nu = profile.nu + 1
    gs = [int(min(g[k] + 1, g[k - 1])) for k in range(1, nu + 1)]
    return GProfile.from_g(gs, [2 * k for k in range(1, nu + 1)])


def predict_adjoin_edge_for(h: Graph, profile: GProfile) -> GProfile:
    if not is_chordal(complement(h)):
        raise NormDepthError("adjoining an edge is only predicted for cochordal graphs")
    return predict_adjoin_edge(profile)


def cut_vertex_graph(t: int) -> Graph:
    """Cochordal graph with matching number ``t`` whose complement has cut vertex 1.

    The complement joins vertex 1 to a clique ``2..t`` and to all of the clique
    ``t+1..2t`` except ``2t``; the graph itself is ``K_{t-1,t}`` plus the
    pendant edge ``{1, 2t}``.  Postconditions are re-checked on every call.
    """
    if t < 2:
        raise NormDepthError(f"t must be at least 2, got {t}")
    side1 = range(2, t + 1)
    side2 = range(t + 1, 2 * t + 1)
    g = Graph(2 * t, [(a, b) for a in side1 for b in side2] + [(1, 2 * t)])
    gc = complement(g)
    if not (is_chordal(gc) and is_connected(gc) and 1 in cut_vertices(gc)):
        raise AssertionError("complement lost its cut vertex structure")
    if isolated_vertices(g) or matching_number(g) != t:
        raise AssertionError("base graph has the wrong matching number")
    return g


def staircase_graph(s: int, m: int) -> ConstructionResult:
    """Graph with ``nu = m`` and ``g = (s, s-1, ..., 1, 0, ..., 0)``.

    ``g(k) = 0`` exactly for ``k = s+1..m``.  It is the cut-vertex graph with
    matching number ``m - s + 1`` plus ``s - 1`` disjoint edges.
    """
    if not 1 <= s < m:
        raise NormDepthError(f"need 1 <= s < m, got s={s}, m={m}")
    base = cut_vertex_graph(m - s + 1)
    g = base
    predicted = cut_profile(m - s + 1)
    edge = Graph(2, [(1, 2)])
    for step in range(s - 1):
        # only the first step starts from a cochordal graph; later steps rely
        # on every squarefree power still having a linear resolution
        predicted = predict_adjoin_edge_for(g, predicted) if step == 0 else predict_adjoin_edge(predicted)
        g = disjoint_union(g, edge)
    return ConstructionResult(edge_ideal(g), predicted, f"staircase_graph(s={s}, m={m})", g)


def step_profile_ideal(s: int, m: int) -> ConstructionResult:
    """Ideal with ``nu = m``, ``g = 1`` for ``k <= s`` and ``0`` afterwards.

    ``I(K_{t,t})`` with ``t = m - s`` (complement: two disjoint cliques)
    followed by ``s`` new variables.
    """
    if not 1 <= s < m:
        raise NormDepthError(f"need 1 <= s < m, got s={s}, m={m}")
    t = m - s
    g = complete_bipartite(t, t)
    ideal = edge_ideal(g)
    predicted = zero_profile(t)
    for _ in range(s):
        ideal = adjoin_variable(ideal)
        predicted = predict_adjoin_variable(predicted)
    return ConstructionResult(ideal, predicted, f"step_profile_ideal(s={s}, m={m})")


def ones_profile_ideal(m: int) -> ConstructionResult:
    """Ideal with ``nu = m`` and ``g = (1, ..., 1)``.

    Product of the step ideal with ``m`` ones and ``nu = m + 1`` and the edge
    ideal of ``K_{m,m}``, in disjoint variables.
    """
    if m < 1:
        raise NormDepthError(f"m must be positive, got {m}")
    step = step_profile_ideal(m, m + 1)
    bip = edge_ideal(complete_bipartite(m, m))
    ideal = product_disjoint(step.ideal, bip)
    predicted = predict_product(step.predicted, zero_profile(m))
    return ConstructionResult(ideal, predicted, f"ones_profile_ideal(m={m})")


def decompose_profile(target: Sequence[int]) -> list[tuple[str, int]]:
    """Split a non-increasing profile into step vectors and all-ones vectors.

    Returns ``("step", s)`` for each copy of ``(1^s, 0^(m-s))`` (largest ``s``
    first) followed by ``("ones", m)`` for each copy of ``(1^m)``.
    """
    a = list(target)
    if not a:
        raise NormDepthError("target profile is empty")
    if any(x < 0 for x in a):
        raise NormDepthError("target profile must be nonnegative")
    if any(b > c for c, b in zip(a, a[1:])):
        raise NormDepthError("target profile must be non-increasing")
    m = len(a)
    parts: list[tuple[str, int]] = []
    for s in range(m - 1, 0, -1):
        parts += [("step", s)] * (a[s - 1] - a[s])
    parts += [("ones", m)] * a[-1]
    return parts


def realize_profile(target: Sequence[int]) -> ConstructionResult:
    """Squarefree ideal with ``nu = len(target)`` and ``g = target``."""
    parts = decompose_profile(target)
    m = len(target)
    factors = []
    for kind, s in parts:
        factors.append(step_profile_ideal(s, m) if kind == "step" else ones_profile_ideal(m))
    if not factors:
        zero = edge_ideal(complete_bipartite(m, m))
        return ConstructionResult(zero, zero_profile(m), f"realize_profile({list(target)})")
    ideal, predicted = factors[0].ideal, factors[0].predicted
    for f in factors[1:]:
        ideal = product_disjoint(ideal, f.ideal)
        predicted = predict_product(predicted, f.predicted)
    if predicted.gs != tuple(target) or predicted.nu != m:
        raise AssertionError("decomposition does not add up to the target")
    return ConstructionResult(ideal, predicted, f"realize_profile({list(target)})")
