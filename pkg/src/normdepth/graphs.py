"""Simple graphs on ``1..n``: complements, chordality, cut vertices, matchings.

Also the matching-theoretic complexes attached to edge ideals and the
combinatorial criteria for vanishing of the normalized depth.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .complexes import SimplicialComplex, maximal_elements
from .errors import NormDepthError
from .ideal import MonomialIdeal, bits, monomial, support

Edge = tuple[int, int]
Matching = tuple[Edge, ...]


def _edge(u: int, v: int) -> Edge:
    if u == v:
        raise NormDepthError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        es = frozenset(_edge(int(u), int(v)) for u, v in edges)
        for u, v in es:
            if u < 1 or v > n:
                raise NormDepthError(f"edge {{{u},{v}}} outside vertex set 1..{n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", es)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def adjacency(self) -> dict[int, int]:
        """Vertex -> bitmask of neighbours (bit ``j - 1`` for ``j``)."""
        adj = {v: 0 for v in self.vertices}
        for u, v in self.edges:
            adj[u] |= 1 << (v - 1)
            adj[v] |= 1 << (u - 1)
        return adj

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(support(self.adjacency()[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return _edge(u, v) in self.edges

    def __str__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}


def isolated_vertices(g: Graph) -> list[int]:
    adj = g.adjacency()
    return [v for v in g.vertices if not adj[v]]


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """``h`` relabeled to ``n+1..n+m`` alongside ``g``."""
    return Graph(g.n + h.n, list(g.edges) + [(u + g.n, v + g.n) for u, v in h.edges])


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(1, n + 1), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def edge_ideal(g: Graph) -> MonomialIdeal:
    iso = isolated_vertices(g)
    if iso:
        raise NormDepthError(f"graph has isolated vertex {iso[0]}")
    return MonomialIdeal(tuple(monomial(u, v) for u, v in g.edges), g.n)


def complement(g: Graph) -> Graph:
    return Graph(g.n, [e for e in combinations(g.vertices, 2) if e not in g.edges])


def induced_subgraph_edges(g: Graph, keep: int) -> list[Edge]:
    return [(u, v) for u, v in g.edges if keep >> (u - 1) & 1 and keep >> (v - 1) & 1]


# -- chordality --------------------------------------------------------------

def maximum_cardinality_search(g: Graph) -> list[int]:
    """Visit order of MCS; ties go to the lowest vertex."""
    adj = g.adjacency()
    weight = {v: 0 for v in g.vertices}
    order = []
    left = set(g.vertices)
    while left:
        v = max(sorted(left), key=lambda x: weight[x])
        order.append(v)
        left.remove(v)
        for u in support(adj[v]):
            if u in left:
                weight[u] += 1
    return order


def is_perfect_elimination_order(g: Graph, order: Sequence[int]) -> bool:
    """Each vertex's neighbours appearing later in ``order`` form a clique."""
    adj = g.adjacency()
    later = 0
    for v in reversed(order):
        nbrs = adj[v] & later
        for b in bits(nbrs):
            u = b.bit_length()
            if (nbrs & ~b) & ~adj[u]:
                return False
        later |= 1 << (v - 1)
    return True


def perfect_elimination_order(g: Graph) -> list[int] | None:
    """Reverse MCS order if it is a perfect elimination ordering, else ``None``."""
    order = maximum_cardinality_search(g)[::-1]
    return order if is_perfect_elimination_order(g, order) else None


def is_chordal(g: Graph) -> bool:
    return perfect_elimination_order(g) is not None


def is_cochordal(g: Graph) -> bool:
    return is_chordal(complement(g))


# -- connectivity ------------------------------------------------------------

def connected_components(g: Graph, within: Iterable[int] | None = None) -> list[frozenset[int]]:
    """Components of the subgraph induced on ``within`` (default: all vertices)."""
    adj = g.adjacency()
    pool = set(g.vertices if within is None else within)
    mask_pool = 0
    for v in pool:
        mask_pool |= 1 << (v - 1)
    comps = []
    for start in sorted(pool):
        if not mask_pool >> (start - 1) & 1:
            continue
        comp = 1 << (start - 1)
        frontier = comp
        while frontier:
            nxt = 0
            for b in bits(frontier):
                nxt |= adj[b.bit_length()]
            nxt &= mask_pool & ~comp
            comp |= nxt
            frontier = nxt
        mask_pool &= ~comp
        comps.append(frozenset(support(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def cut_vertices(g: Graph) -> set[int]:
    """Articulation points by depth-first low-link numbering."""
    if not is_connected(g):
        raise NormDepthError("cut vertices are defined here for connected graphs only")
    adj = {v: sorted(support(m)) for v, m in g.adjacency().items()}
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    cuts: set[int] = set()

    def dfs(v: int, parent: int | None) -> None:
        disc[v] = low[v] = len(disc)
        children = 0
        for u in adj[v]:
            if u not in disc:
                children += 1
                dfs(u, v)
                low[v] = min(low[v], low[u])
                if parent is not None and low[u] >= disc[v]:
                    cuts.add(v)
            elif u != parent:
                low[v] = min(low[v], disc[u])
        if parent is None and children > 1:
            cuts.add(v)

    dfs(1, None)
    return cuts


def complement_has_cut_vertex(g: Graph) -> bool:
    """``G^c`` is connected and has a cut vertex."""
    gc = complement(g)
    return is_connected(gc) and bool(cut_vertices(gc))


# -- matchings ---------------------------------------------------------------

def _matching_number(adj: dict[int, int], avail: int) -> int:
    best = 0

    def live(mask: int) -> int:
        out = 0
        for b in bits(mask):
            if adj[b.bit_length()] & mask:
                out |= b
        return out

    def search(mask: int, size: int) -> None:
        nonlocal best
        mask = live(mask)
        if size > best:
            best = size
        if size + mask.bit_count() // 2 <= best:
            return
        low = mask & -mask
        v = low.bit_length()
        for b in bits(adj[v] & mask):
            search(mask & ~low & ~b, size + 1)
        search(mask & ~low, size)

    search(avail, 0)
    return best


def matching_number(g: Graph, within: int | None = None) -> int:
    """Exact matching number, branching on the lowest uncovered vertex.

    ``within`` restricts to the induced subgraph on a vertex bitmask.
    """
    avail = (1 << g.n) - 1 if within is None else within
    return _matching_number(g.adjacency(), avail)


def enumerate_matchings(g: Graph, k: int) -> Iterator[Matching]:
    """Every ``k``-matching once, in lexicographic order of sorted edge lists."""
    edges = g.sorted_edges()
    m = len(edges)

    def rec(start: int, used: int, chosen: list[Edge]):
        if len(chosen) == k:
            yield tuple(chosen)
            return
        for i in range(start, m - (k - len(chosen)) + 1):
            u, v = edges[i]
            e = 1 << (u - 1) | 1 << (v - 1)
            if not e & used:
                chosen.append(edges[i])
                yield from rec(i + 1, used | e, chosen)
                chosen.pop()

    if k >= 0:
        yield from rec(0, 0, [])


def matching_vertices(matching: Iterable[Edge]) -> int:
    out = 0
    for u, v in matching:
        out |= 1 << (u - 1) | 1 << (v - 1)
    return out


def is_matching(g: Graph, matching: Iterable[Sequence[int]]) -> bool:
    seen = 0
    for u, v in matching:
        if not g.has_edge(u, v):
            return False
        e = 1 << (u - 1) | 1 << (v - 1)
        if e & seen:
            return False
        seen |= e
    return True


def matchings_on(g: Graph, vertex_mask: int) -> Iterator[Matching]:
    """Perfect matchings of the induced subgraph on ``vertex_mask``."""
    k = vertex_mask.bit_count() // 2
    sub = Graph(g.n, induced_subgraph_edges(g, vertex_mask))
    for m in enumerate_matchings(sub, k):
        if matching_vertices(m) == vertex_mask:
            yield m


def clique_complex(h: Graph) -> SimplicialComplex:
    adj = h.adjacency()
    cliques = [0]
    stack = [(0, 1)]
    while stack:
        face, nxt = stack.pop()
        for v in range(nxt, h.n + 1):
            if face & ~adj[v]:
                continue
            c = face | 1 << (v - 1)
            cliques.append(c)
            stack.append((c, v + 1))
    return SimplicialComplex.from_faces(h.n, cliques)


def gamma_complex(g: Graph, k: int) -> SimplicialComplex:
    """Complex of vertex sets containing no ``k``-matching of ``g``.

    Built from matching numbers of induced subgraphs, independently of
    squarefree powers, so the Stanley-Reisner round trip is a real check.
    """
    nu = matching_number(g)
    if not 1 <= k <= nu:
        raise NormDepthError(f"k must lie in 1..{nu}, got {k}")
    adj = g.adjacency()
    faces = [f for f in range(1 << g.n) if _matching_number(adj, f) < k]
    return SimplicialComplex(g.n, maximal_elements(faces))


def is_dominating_matching(g: Graph, matching: Sequence[Sequence[int]]) -> bool:
    if not is_matching(g, matching):
        raise NormDepthError("not a matching of the graph")
    return dominates(g, matching_vertices(tuple(tuple(e) for e in matching)))


def dominates(g: Graph, vertex_mask: int) -> bool:
    adj = g.adjacency()
    for v in g.vertices:
        if vertex_mask >> (v - 1) & 1:
            continue
        if not adj[v] & vertex_mask:
            return False
    return True


# -- special matchings -------------------------------------------------------

@dataclass(frozen=True)
class CutSplit:
    """A cut vertex of ``G^c`` with the two sides of ``G^c - cut``."""

    cut: int
    side1: frozenset[int]
    side2: frozenset[int]


def cut_split(g: Graph, cut: int, side1: Iterable[int] | None = None) -> CutSplit:
    """Validate the hypotheses on ``g`` and split ``G^c - cut``.

    ``side1`` must be a component of ``G^c - cut``; by default the one
    holding the lowest vertex.
    """
    if isolated_vertices(g):
        raise NormDepthError(f"graph has isolated vertex {isolated_vertices(g)[0]}")
    gc = complement(g)
    if not is_chordal(gc):
        raise NormDepthError("complement is not chordal")
    if not is_connected(gc):
        raise NormDepthError("complement is disconnected")
    comps = connected_components(gc, [v for v in g.vertices if v != cut])
    if len(comps) < 2:
        raise NormDepthError(f"vertex {cut} is not a cut vertex of the complement")
    if side1 is None:
        c1 = comps[0]
    else:
        c1 = frozenset(side1)
        if c1 not in comps:
            raise NormDepthError(f"{sorted(c1)} is not a component of the complement minus {cut}")
    rest = frozenset(v for v in g.vertices if v != cut and v not in c1)
    return CutSplit(cut, c1, rest)


def is_special_matching(g: Graph, matching: Sequence[Sequence[int]], split: CutSplit) -> bool:
    """Ordered ``k``-matching with ``e1 = {cut, j}`` and ``e2`` running side1 -> side2."""
    if len(matching) < 2 or not is_matching(g, matching):
        return False
    e1, e2 = matching[0], matching[1]
    if split.cut not in e1:
        return False
    i2, j2 = e2
    return i2 in split.side1 and j2 in split.side2


def find_special_matching(g: Graph, cut: int, k: int, side1: Iterable[int] | None = None) -> Matching:
    """Construct a special ``k``-matching by repairing an arbitrary one.

    Start from the lexicographically first ``k``-matching, move ``cut`` into
    the first edge, then make the second edge cross from ``side1`` to
    ``side2`` with one exchange.  Every ``side1``-``side2`` pair is an edge of
    ``g``, which is what makes the exchanges legal.
    """
    split = cut_split(g, cut, side1)
    nu = matching_number(g)
    if not 2 <= k <= nu:
        raise NormDepthError(f"k must lie in 2..{nu}, got {k}")
    m = [list(e) for e in next(enumerate_matchings(g, k))]
    nbrs = g.neighbors(cut)

    covered = {v for e in m for v in e}
    if cut in covered:
        q = next(q for q, e in enumerate(m) if cut in e)
        e = m.pop(q)
        m.insert(0, [cut, e[0] if e[1] == cut else e[1]])
    else:
        hit = [(q, v) for q, e in enumerate(m) for v in e if v in nbrs]
        if hit:
            q, j = hit[0]
            m.pop(q)
            m.insert(0, [cut, j])
        else:
            m[0] = [cut, min(nbrs)]

    j = m[0][1]
    s1, s2 = split.side1, split.side2
    rest = m[1:]
    crossing = [q for q, (a, b) in enumerate(rest) if (a in s1) != (b in s1)]
    if crossing:
        a, b = rest.pop(crossing[0])
        rest.insert(0, [a, b] if a in s1 else [b, a])
    else:
        inside1 = [e for e in rest if e[0] in s1]
        inside2 = [e for e in rest if e[0] in s2]
        if inside1 and inside2:
            (a1, b1), (a2, b2) = inside1[0], inside2[0]
            others = [e for e in rest if e is not inside1[0] and e is not inside2[0]]
            rest = [[a1, b2], [b1, a2]] + others
        elif inside2:
            # every other edge sits in side2; side1 minus j is nonempty and free
            free = sorted(s1 - {j})[0]
            a2, b2 = inside2[0]
            rest = [[free, b2]] + [e for e in rest if e is not inside2[0]]
        else:
            free = sorted(s2 - {j})[0]
            a1, b1 = inside1[0]
            rest = [[a1, free]] + [e for e in rest if e is not inside1[0]]
    out = tuple(tuple(e) for e in [m[0]] + rest)
    if not is_special_matching(g, out, split):
        raise AssertionError(f"construction produced a non-special matching {out}")
    return out


def special_matchings_bruteforce(g: Graph, cut: int, k: int, side1: Iterable[int] | None = None) -> list[Matching]:
    """All ``k``-matchings admitting an ordering that makes them special."""
    split = cut_split(g, cut, side1)
    out = []
    for m in enumerate_matchings(g, k):
        for p, e1 in enumerate(m):
            if cut not in e1:
                continue
            for q, e2 in enumerate(m):
                if q == p:
                    continue
                for i2, j2 in (e2, e2[::-1]):
                    others = tuple(e for r, e in enumerate(m) if r not in (p, q))
                    cand = (e1, (i2, j2)) + others
                    if is_special_matching(g, cand, split):
                        out.append(cand)
    return out


# -- vanishing criterion for the normalized depth ---------------------------

def _check_order(g: Graph, k: int, order: Sequence[int]) -> None:
    from .betti import is_linear_quotients_order
    from .ideal import squarefree_power

    if isolated_vertices(g):
        raise NormDepthError("graph has isolated vertices")
    gens = set(squarefree_power(edge_ideal(g), k).gens)
    if set(order) != gens or len(order) != len(gens):
        raise NormDepthError("order is not an ordering of the minimal generators")
    if not is_linear_quotients_order(order):
        raise NormDepthError("order does not have linear quotients")


def _witness_holds(g: Graph, order: Sequence[int], i: int) -> bool:
    vm = order[i - 1]
    if not dominates(g, vm):
        return False
    earlier = order[: i - 1]
    for t in g.vertices:
        bit = 1 << (t - 1)
        if vm & bit:
            continue
        room = vm | bit
        if not any(u & room == u for u in earlier):
            return False
    return True


def is_zero_depth_witness(g: Graph, k: int, order: Sequence[int], matching: Sequence[Sequence[int]], i: int) -> bool:
    """Check a dominating ``k``-matching ``M`` at 1-based position ``i`` of ``order``.

    ``V(M)`` must be the support of ``u_i`` and every vertex ``t`` outside it
    must admit an earlier ``u_m`` supported in ``V(M) ∪ {t}``.
    """
    _check_order(g, k, order)
    if not 2 <= i <= len(order):
        return False
    matching = tuple(tuple(e) for e in matching)
    if len(matching) != k or not is_matching(g, matching):
        return False
    if matching_vertices(matching) != order[i - 1]:
        return False
    return _witness_holds(g, order, i)


def zero_depth_witness(g: Graph, k: int, order: Sequence[int]) -> tuple[Matching, int] | None:
    """Search ``i = s, ..., 2`` for a position satisfying the vanishing criterion."""
    _check_order(g, k, order)
    for i in range(len(order), 1, -1):
        if _witness_holds(g, order, i):
            return next(matchings_on(g, order[i - 1])), i
    return None
