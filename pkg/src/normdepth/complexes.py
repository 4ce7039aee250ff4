"""Simplicial complexes, Stanley-Reisner translation and reduced homology.

Faces are ``int`` bitmasks over the ground set (bit ``i - 1`` for vertex
``i``), matching the monomial encoding in :mod:`normdepth.ideal`.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import NormDepthError
from .ideal import MonomialIdeal, bits, minimal_elements, monomial, support
from .linalg import rank


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: ``0`` for the rationals, otherwise a prime ``p``."""

    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if c != 0 and not _is_prime(c):
            raise NormDepthError(f"field characteristic must be 0 or prime, got {c}")

    def __str__(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = FieldSpec(0)
GF2 = FieldSpec(2)


def maximal_elements(masks: Iterable[int]) -> tuple[int, ...]:
    uniq = sorted(set(masks), key=lambda m: (-m.bit_count(), m))
    kept: list[int] = []
    for m in uniq:
        if not any(k & m == m for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on the ground set ``1..n`` stored by its facets.

    ``facets == ()`` is the void complex; ``facets == (0,)`` is the complex
    ``{∅}`` whose only face is the empty set.
    """

    n: int
    facets: tuple[int, ...]

    def __post_init__(self):
        facets = tuple(sorted(set(self.facets)))
        object.__setattr__(self, "facets", facets)
        if maximal_elements(facets) != facets:
            raise NormDepthError("facets must form an antichain")
        for f in facets:
            if f.bit_length() > self.n:
                raise NormDepthError(f"facet {support(f)} leaves the ground set 1..{self.n}")

    @classmethod
    def from_faces(cls, n: int, faces: Iterable[int]) -> SimplicialComplex:
        return cls(n, maximal_elements(faces))

    @classmethod
    def from_facet_lists(cls, n: int, facets: Iterable[Iterable[int]]) -> SimplicialComplex:
        return cls.from_faces(n, (monomial(*f) for f in facets))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def vertex_mask(self) -> int:
        out = 0
        for f in self.facets:
            out |= f
        return out

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(support(self.vertex_mask))

    def facet_sets(self) -> list[frozenset[int]]:
        return [frozenset(support(f)) for f in self.facets]

    def faces(self) -> set[int]:
        out: set[int] = set()
        for f in self.facets:
            if f in out:
                continue
            sub = f
            while True:
                out.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & f
        return out

    def __contains__(self, face) -> bool:
        mask = face if isinstance(face, int) else monomial(*face)
        return any(mask & f == mask for f in self.facets)

    def to_json(self) -> dict:
        return {"vertices": self.n, "facets": [list(support(f)) for f in self.facets]}

    @classmethod
    def from_json(cls, data: dict) -> SimplicialComplex:
        return cls.from_facet_lists(int(data["vertices"]), data["facets"])


def faces_avoiding(n: int, nonfaces: Iterable[int]) -> list[int]:
    """All subsets of ``{0..n-1}`` (as masks) containing no mask of ``nonfaces``.

    Faces are grown by appending vertices in increasing order, so each face
    is produced once and a nonface only needs checking when its top vertex
    is the one being appended.
    """
    by_top: dict[int, list[int]] = defaultdict(list)
    for g in nonfaces:
        by_top[g.bit_length() - 1].append(g)
    out = [0]
    stack = [(0, 0)]
    while stack:
        face, nxt = stack.pop()
        for v in range(nxt, n):
            cand = face | (1 << v)
            if any(g & cand == g for g in by_top.get(v, ())):
                continue
            out.append(cand)
            stack.append((cand, v + 1))
    return out


def stanley_reisner(ideal: MonomialIdeal) -> SimplicialComplex:
    """Complex whose faces are the subsets of ``1..n`` containing no generator support."""
    if ideal.is_zero:
        raise NormDepthError("Stanley-Reisner complex of the zero ideal is not handled")
    return SimplicialComplex.from_faces(ideal.ambient, faces_avoiding(ideal.ambient, ideal.gens))


def stanley_reisner_ideal(cx: SimplicialComplex) -> MonomialIdeal:
    """Minimal nonfaces of ``cx`` as an ideal on the ground set ``1..n``."""
    faces = cx.faces()
    nonfaces = []
    for mask in range(1, 1 << cx.n):
        if mask in faces:
            continue
        # minimal: every facet of the nonface (drop one vertex) is a face
        if all(mask ^ b in faces for b in bits(mask)):
            nonfaces.append(mask)
    return MonomialIdeal(minimal_elements(nonfaces), cx.n) if nonfaces else MonomialIdeal((), 0)


def induced_subcomplex(cx: SimplicialComplex, subset: Iterable[int] | int) -> SimplicialComplex:
    """``Δ_W``: faces of ``cx`` contained in ``W``."""
    w = subset if isinstance(subset, int) else monomial(*subset)
    if w.bit_length() > cx.n:
        raise NormDepthError("W must lie in the ground set")
    if cx.is_void:
        return cx
    return SimplicialComplex.from_faces(cx.n, (f & w for f in cx.facets))


def cone_point(cx: SimplicialComplex) -> int | None:
    """Lowest vertex lying in every facet, if any."""
    if cx.is_void:
        return None
    common = -1
    for f in cx.facets:
        common &= f
    if not common:
        return None
    return (common & -common).bit_length()


def is_connected_complex(cx: SimplicialComplex) -> bool:
    """Connectivity of the 1-skeleton."""
    verts = cx.vertex_mask
    if not verts:
        raise NormDepthError("connectivity needs at least one vertex")
    reached = verts & -verts
    changed = True
    while changed:
        changed = False
        for f in cx.facets:
            if f & reached and f & ~reached:
                reached |= f
                changed = True
    return reached == verts


def _homology_dims(faces: Iterable[int], characteristic: int) -> dict[int, int]:
    by_size: dict[int, list[int]] = defaultdict(list)
    for f in faces:
        by_size[f.bit_count()].append(f)
    if not by_size:
        raise NormDepthError("reduced homology of the void complex is undefined")
    top = max(by_size)
    index = {size: {f: i for i, f in enumerate(sorted(fs))} for size, fs in by_size.items()}
    f_counts = {d: len(by_size.get(d + 1, ())) for d in range(-1, top)}

    # ranks[d] = rank of the boundary C_d -> C_{d-1}; C_{-1} is spanned by ∅
    ranks = {d: 0 for d in range(-1, top + 1)}
    for d in range(0, top):
        lower = index[d]
        rows = []
        for face in by_size[d + 1]:
            row = {}
            sign = 1
            for b in bits(face):
                row[lower[face ^ b]] = sign
                sign = -sign
            rows.append(row)
        ranks[d] = rank(rows, characteristic)

    dims = {}
    for d in range(-1, top):
        h = f_counts[d] - ranks[d] - ranks[d + 1]
        if h:
            dims[d] = h
    euler_faces = sum((-1) ** d * f for d, f in f_counts.items())
    euler_homology = sum((-1) ** d * h for d, h in dims.items())
    if euler_faces != euler_homology:
        raise ArithmeticError("Euler characteristic mismatch in homology computation")
    return dims


def reduced_homology(cx: SimplicialComplex, field: FieldSpec = QQ) -> dict[int, int]:
    """Nonzero ``dim H̃_i(cx; K)`` keyed by ``i >= -1``.

    Cohomology has the same dimensions over a field.
    """
    if cx.is_void:
        raise NormDepthError("reduced homology of the void complex is undefined")
    if cone_point(cx) is not None:
        return {}
    return _homology_dims(cx.faces(), field.characteristic)


@lru_cache(maxsize=1 << 17)
def homology_of_nonfaces(n: int, nonfaces: tuple[int, ...], characteristic: int) -> tuple[tuple[int, int], ...]:
    """Reduced homology of the complex on ``{0..n-1}`` with the given minimal nonfaces.

    Returned as sorted ``(degree, dim)`` pairs; memoized because the same
    relabeled restriction recurs across many induced subcomplexes.
    """
    dims = _homology_dims(faces_avoiding(n, nonfaces), characteristic)
    return tuple(sorted(dims.items()))
