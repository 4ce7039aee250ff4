"""Squarefree monomials and monomial ideals.

A squarefree monomial is stored as an ``int`` bitmask: bit ``i - 1`` is set
when ``x_i`` divides the monomial.  Products of coprime monomials are bitwise
ORs, divisibility is a subset test, and the degree is the popcount.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import NormDepthError


def monomial(*indices: int) -> int:
    """Bitmask of the squarefree monomial ``x_{i1} x_{i2} ...`` (1-based)."""
    mask = 0
    for i in indices:
        if i < 1:
            raise ValueError(f"variable indices are 1-based, got {i}")
        mask |= 1 << (i - 1)
    return mask


def support(mask: int) -> tuple[int, ...]:
    """Sorted 1-based variable indices dividing the monomial."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def degree(mask: int) -> int:
    return mask.bit_count()


def coprime(u: int, v: int) -> bool:
    return not (u & v)


def divides(u: int, v: int) -> bool:
    return u & v == u


def format_monomial(mask: int) -> str:
    if not mask:
        return "1"
    return "".join(f"x{i}" for i in support(mask))


def bits(mask: int) -> Iterator[int]:
    """Yield the single-bit masks of ``mask`` from lowest to highest."""
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def minimal_elements(masks: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-minimal members, deduplicated and in canonical order."""
    uniq = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    kept: list[int] = []
    for m in uniq:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    """Squarefree monomial ideal given by its minimal generators.

    ``ambient`` is the number of variables of the polynomial ring.  Normally it
    equals the number of variables occurring in the generators; ideals built by
    :func:`widen` or :func:`squarefree_power` may live in a larger ring, and
    :attr:`is_widened` reports that.
    """

    gens: tuple[int, ...]
    ambient: int

    def __post_init__(self):
        gens = tuple(sorted(set(self.gens)))
        object.__setattr__(self, "gens", gens)
        if not gens and self.ambient != 0:
            raise NormDepthError("the zero ideal is only representable with ambient 0")
        if any(g <= 0 for g in gens):
            raise NormDepthError("generators must be nonconstant squarefree monomials")
        if minimal_elements(gens) != gens:
            raise NormDepthError("generators are not a minimal generating system")
        if self.support_mask.bit_length() > self.ambient:
            raise NormDepthError(
                f"generator uses x{self.support_mask.bit_length()} beyond ambient {self.ambient}"
            )

    @property
    def support_mask(self) -> int:
        out = 0
        for g in self.gens:
            out |= g
        return out

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_widened(self) -> bool:
        return self.support_mask != (1 << self.ambient) - 1

    @property
    def monomials(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(support(g)) for g in self.gens)

    def is_equigenerated(self) -> bool:
        return len({g.bit_count() for g in self.gens}) <= 1

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(format_monomial(g) for g in self.gens) + ")"

    @classmethod
    def from_supports(cls, supports: Iterable[Iterable[int]]) -> MonomialIdeal:
        return minimalize(monomial(*s) for s in supports)


ZERO = MonomialIdeal((), 0)


def _compress(masks: tuple[int, ...], used: int) -> tuple[int, ...]:
    positions = {b: 1 << i for i, b in enumerate(bits(used))}
    out = []
    for m in masks:
        c = 0
        for b in bits(m):
            c |= positions[b]
        out.append(c)
    return tuple(out)


def minimalize(monomials: Iterable[int]) -> MonomialIdeal:
    """Ideal generated by ``monomials`` with redundant generators dropped.

    The ambient ring is the smallest one containing the generators: if the
    surviving supports skip some indices, variables are relabeled to
    ``1..n`` preserving their order.
    """
    gens = minimal_elements(monomials)
    if not gens:
        return ZERO
    used = 0
    for g in gens:
        used |= g
    n = used.bit_count()
    if used != (1 << n) - 1:
        gens = _compress(gens, used)
    return MonomialIdeal(gens, n)


def widen(ideal: MonomialIdeal, ambient: int) -> MonomialIdeal:
    """Same generators viewed in a polynomial ring with ``ambient`` variables."""
    if ideal.is_zero:
        raise NormDepthError("cannot widen the zero ideal")
    return MonomialIdeal(ideal.gens, ambient)


def monomial_grade(ideal: MonomialIdeal) -> int:
    """Largest number of pairwise coprime minimal generators."""
    if ideal.is_zero:
        raise NormDepthError("monomial grade is undefined for zero ideal")
    return max_disjoint_family(ideal.gens)


def max_disjoint_family(masks: Iterable[int]) -> int:
    """Exact maximum number of pairwise disjoint sets, by branch and bound."""
    cands = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    if not cands:
        return 0

    # greedy by degree gives the starting lower bound
    best = 0
    used = 0
    for m in cands:
        if not m & used:
            used |= m
            best += 1

    def bound(items: list[int]) -> int:
        if not items:
            return 0
        union = 0
        for m in items:
            union |= m
        return min(len(items), union.bit_count() // items[0].bit_count())

    def search(items: list[int], depth: int) -> None:
        nonlocal best
        if depth > best:
            best = depth
        if not items or depth + bound(items) <= best:
            return
        head, rest = items[0], items[1:]
        search([m for m in rest if not m & head], depth + 1)
        search(rest, depth)

    search(cands, 0)
    return best


def coprime_families(gens: tuple[int, ...], k: int) -> Iterator[tuple[int, ...]]:
    """Index tuples of ``k`` pairwise coprime generators, in lexicographic order."""
    s = len(gens)

    def rec(start: int, used: int, chosen: list[int]):
        if len(chosen) == k:
            yield tuple(chosen)
            return
        for i in range(start, s - (k - len(chosen)) + 1):
            if not gens[i] & used:
                chosen.append(i)
                yield from rec(i + 1, used | gens[i], chosen)
                chosen.pop()

    yield from rec(0, 0, [])


def squarefree_power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    """The ``k``-th squarefree power, kept in the ambient ring of ``ideal``.

    Returns the zero ideal when ``k`` exceeds the monomial grade.
    """
    if k <= 0:
        raise NormDepthError(f"squarefree powers are defined for k >= 1, got {k}")
    if ideal.is_zero:
        return ZERO
    if k == 1:
        return ideal
    products = set()
    for fam in coprime_families(ideal.gens, k):
        u = 0
        for i in fam:
            u |= ideal.gens[i]
        products.add(u)
    if not products:
        return ZERO
    # coprime products are already minimal; re-minimalizing is a cheap guard
    return MonomialIdeal(minimal_elements(products), ideal.ambient)


def initial_degree(ideal: MonomialIdeal) -> int:
    if ideal.is_zero:
        raise NormDepthError("initial degree is undefined for zero ideal")
    return min(g.bit_count() for g in ideal.gens)


def shift(mask: int, offset: int) -> int:
    return mask << offset


def product_disjoint(
    first: MonomialIdeal, second: MonomialIdeal, offset: int | None = None
) -> MonomialIdeal:
    """Product of ideals in disjoint variable sets.

    The variables of ``second`` are renamed ``x_i -> x_{i + offset}``;
    ``offset`` defaults to ``first.ambient``.
    """
    if first.is_zero or second.is_zero:
        return ZERO
    if offset is None:
        offset = first.ambient
    if offset < first.ambient:
        raise NormDepthError(
            f"supports overlap after relabeling: offset {offset} < ambient {first.ambient}"
        )
    moved = tuple(shift(g, offset) for g in second.gens)
    gens = minimal_elements(u | v for u in first.gens for v in moved)
    ambient = max(first.ambient, offset + second.ambient)
    return MonomialIdeal(gens, ambient)


def adjoin_variable(ideal: MonomialIdeal) -> MonomialIdeal:
    """``(I, x_{n+1})`` in one more variable."""
    n = ideal.ambient
    return MonomialIdeal(ideal.gens + (1 << n,), n + 1)


def ideal_sum(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    """Sum of two ideals of the same ring."""
    gens = minimal_elements(first.gens + second.gens)
    if not gens:
        return ZERO
    return MonomialIdeal(gens, max(first.ambient, second.ambient))


def intersect(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    """Intersection via pairwise lcms."""
    gens = minimal_elements(u | v for u in first.gens for v in second.gens)
    if not gens:
        return ZERO
    return MonomialIdeal(gens, max(first.ambient, second.ambient))


def multiply_monomial(ideal: MonomialIdeal, mask: int, ambient: int | None = None) -> MonomialIdeal:
    """``u * I`` for a monomial ``u`` coprime to every generator support."""
    if ideal.is_zero:
        return ZERO
    if mask & ideal.support_mask:
        raise NormDepthError("multiplier shares variables with the ideal")
    n = max(ideal.ambient, mask.bit_length()) if ambient is None else ambient
    return MonomialIdeal(tuple(g | mask for g in ideal.gens), n)
