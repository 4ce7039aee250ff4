"""Graded Betti numbers, depth and normalized depth profiles.

Betti numbers of ``S/I`` come from Hochster's formula over induced
subcomplexes of the Stanley-Reisner complex.  The Taylor complex gives an
independent route used to cross-check it.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .complexes import QQ, FieldSpec, homology_of_nonfaces
from .errors import CapExceeded, NormDepthError
from .ideal import (
    MonomialIdeal,
    bits,
    ideal_sum,
    initial_degree,
    intersect,
    monomial_grade,
    squarefree_power,
)
from .linalg import rank

HOCHSTER_CAP = 22
TAYLOR_CAP = 16
LINEAR_QUOTIENTS_CAP = 20


@dataclass(frozen=True)
class BettiTable:
    """``entries[(i, j)] = β_{i,j}(S/I)``; only nonzero ranks are stored."""

    n: int
    entries: dict[tuple[int, int], int] = dc_field(default_factory=dict)

    def __post_init__(self):
        if any(v < 0 for v in self.entries.values()):
            raise NormDepthError("Betti numbers are nonnegative")
        object.__setattr__(self, "entries", {k: v for k, v in sorted(self.entries.items()) if v})

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    @property
    def pd(self) -> int:
        return max(i for i, _ in self.entries)

    def total(self, i: int) -> int:
        return sum(v for (a, _), v in self.entries.items() if a == i)

    def ideal_betti(self) -> dict[tuple[int, int], int]:
        """``β_{i,j}(I) = β_{i+1,j}(S/I)``."""
        return {(i - 1, j): v for (i, j), v in self.entries.items() if i >= 1}

    def to_json(self) -> dict:
        return {"n": self.n, "entries": [[i, j, v] for (i, j), v in self.entries.items()]}

    @classmethod
    def from_json(cls, data: dict) -> BettiTable:
        return cls(int(data["n"]), {(int(i), int(j)): int(v) for i, j, v in data["entries"]})

    def __str__(self) -> str:
        # Macaulay2 layout: column i, row j - i
        if not self.entries:
            return "(empty)"
        pd = self.pd
        rows = sorted({j - i for i, j in self.entries})
        width = max(len(str(v)) for v in self.entries.values()) + 1
        lines = ["      " + "".join(f"{i:>{width}}" for i in range(pd + 1))]
        lines.append("total:" + "".join(f"{self.total(i):>{width}}" for i in range(pd + 1)))
        for r in rows:
            cells = (self.entries.get((i, i + r), 0) for i in range(pd + 1))
            lines.append(f"{r:>5}:" + "".join(f"{(v or '.'):>{width}}" for v in cells))
        return "\n".join(lines)


def _zero_table(n: int) -> BettiTable:
    return BettiTable(n, {(0, 0): 1})


def _compress_to_support(ideal: MonomialIdeal) -> tuple[int, tuple[int, ...]]:
    used = ideal.support_mask
    pos = {b: 1 << i for i, b in enumerate(bits(used))}
    gens = []
    for g in ideal.gens:
        c = 0
        for b in bits(g):
            c |= pos[b]
        gens.append(c)
    return used.bit_count(), tuple(gens)


def _restrict(w: int, gens: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Generators inside ``W``, relabeled onto ``0..|W|-1``."""
    pos = {}
    for i, b in enumerate(bits(w)):
        pos[b] = 1 << i
    local = []
    for g in gens:
        if g & w == g:
            c = 0
            for b in bits(g):
                c |= pos[b]
            local.append(c)
    local.sort()
    return len(pos), tuple(local)


def _generator_unions(gens: tuple[int, ...]) -> set[int]:
    unions = {0}
    for g in gens:
        unions |= {u | g for u in unions}
    return unions


def betti_hochster(ideal: MonomialIdeal, field: FieldSpec = QQ, cap: int = HOCHSTER_CAP) -> BettiTable:
    """Graded Betti numbers of ``S/I`` by Hochster's formula.

    ``β_{i,|W|} = dim H̃_{|W|-i-1}(Δ_W)``.  A subset ``W`` that is not a union
    of generator supports has a vertex lying in no minimal nonface of
    ``Δ_W``; that vertex is a cone point, so only unions are visited.
    Variables outside the support are cone points too and are skipped.
    """
    if ideal.ambient > cap:
        raise CapExceeded("number of variables", ideal.ambient, cap)
    if ideal.is_zero:
        return _zero_table(ideal.ambient)
    _, gens = _compress_to_support(ideal)
    c = field.characteristic
    entries: Counter = Counter({(0, 0): 1})
    for w in sorted(_generator_unions(gens)):
        if not w:
            continue
        size, local = _restrict(w, gens)
        for d, h in homology_of_nonfaces(size, local, c):
            entries[(size - d - 1, size)] += h
    return BettiTable(ideal.ambient, dict(entries))


def betti_taylor(ideal: MonomialIdeal, field: FieldSpec = QQ, cap: int = TAYLOR_CAP) -> BettiTable:
    """Graded Betti numbers of ``S/I`` from the Taylor complex tensored with ``K``.

    After tensoring, the differential of ``e_σ`` keeps exactly the faces
    ``σ - {u}`` with the same lcm, so the complex splits into strands indexed
    by lcm and each strand is an ordinary chain complex over ``K``.
    """
    s = len(ideal.gens)
    if s > cap:
        raise CapExceeded("number of generators", s, cap)
    if ideal.is_zero:
        return _zero_table(ideal.ambient)
    gens = ideal.gens
    lcm = [0] * (1 << s)
    strands: dict[int, list[int]] = defaultdict(list)
    strands[0].append(0)
    for sigma in range(1, 1 << s):
        low = sigma & -sigma
        lcm[sigma] = lcm[sigma ^ low] | gens[low.bit_length() - 1]
        strands[lcm[sigma]].append(sigma)

    c = field.characteristic
    entries: Counter = Counter({(0, 0): 1})
    for m, members in strands.items():
        if not m:
            continue
        by_size: dict[int, list[int]] = defaultdict(list)
        for sigma in members:
            by_size[sigma.bit_count()].append(sigma)
        top = max(by_size)
        index = {i: {sg: t for t, sg in enumerate(v)} for i, v in by_size.items()}
        ranks = Counter()
        for i in range(2, top + 1):
            lower = index.get(i - 1, {})
            rows = []
            for sigma in by_size.get(i, ()):
                row = {}
                sign = 1
                for b in bits(sigma):
                    tau = sigma ^ b
                    if lcm[tau] == m:
                        row[lower[tau]] = sign
                    sign = -sign
                if row:
                    rows.append(row)
            ranks[i] = rank(rows, c) if rows else 0
        deg = m.bit_count()
        for i in range(1, top + 1):
            h = len(by_size.get(i, ())) - ranks[i] - ranks[i + 1]
            if h:
                entries[(i, deg)] += h
    return BettiTable(ideal.ambient, dict(entries))


def pd_of(ideal: MonomialIdeal, field: FieldSpec = QQ) -> int:
    """Projective dimension of ``S/I``."""
    return betti_hochster(ideal, field).pd


def depth_of(ideal: MonomialIdeal, field: FieldSpec = QQ) -> int:
    """``depth S/I = n - pd S/I`` (Auslander-Buchsbaum)."""
    return ideal.ambient - pd_of(ideal, field)


@dataclass(frozen=True)
class GProfile:
    """Normalized depth function ``g(k) = depth(S/I^[k]) - (d_k - 1)``, k = 1..nu."""

    nu: int
    dks: tuple[int, ...]
    depths: tuple[int, ...]
    gs: tuple[int, ...]

    def __post_init__(self):
        for name in ("dks", "depths", "gs"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        if not len(self.dks) == len(self.depths) == len(self.gs) == self.nu:
            raise NormDepthError("profile vectors must all have length nu")
        for d, dep, g in zip(self.dks, self.depths, self.gs):
            if g != dep - (d - 1):
                raise NormDepthError("g(k) must equal depth - (d_k - 1)")
            if g < 0:
                raise ArithmeticError(f"negative normalized depth {g}: depth >= d_k - 1 violated")
        if any(b <= a for a, b in zip(self.dks, self.dks[1:])):
            raise NormDepthError("initial degrees must be strictly increasing")

    @classmethod
    def from_g(cls, gs: Sequence[int], dks: Sequence[int]) -> GProfile:
        return cls(len(gs), tuple(dks), tuple(g + d - 1 for g, d in zip(gs, dks)), tuple(gs))

    def is_non_increasing(self) -> bool:
        return all(b <= a for a, b in zip(self.gs, self.gs[1:]))

    def to_json(self) -> dict:
        return {"nu": self.nu, "d": list(self.dks), "depth": list(self.depths), "g": list(self.gs)}

    @classmethod
    def from_json(cls, data: dict) -> GProfile:
        return cls(int(data["nu"]), tuple(data["d"]), tuple(data["depth"]), tuple(data["g"]))


def g_profile(ideal: MonomialIdeal, field: FieldSpec = QQ, cap: int = HOCHSTER_CAP) -> GProfile:
    """Normalized depth profile; every power is measured in the ring of ``ideal``."""
    if ideal.is_zero:
        raise NormDepthError("normalized depth is undefined for the zero ideal")
    if ideal.is_widened:
        raise NormDepthError(
            "ideal does not use all of its ambient variables; the profile depends on the ring"
        )
    if ideal.ambient > cap:
        raise CapExceeded("number of variables", ideal.ambient, cap)
    nu = monomial_grade(ideal)
    dks, depths = [], []
    for k in range(1, nu + 1):
        power = squarefree_power(ideal, k)
        dks.append(initial_degree(power))
        depths.append(ideal.ambient - betti_hochster(power, field, cap).pd)
    gs = [dep - (d - 1) for d, dep in zip(dks, depths)]
    return GProfile(nu, tuple(dks), tuple(depths), tuple(gs))


INF = float("inf")


def predict_adjoin_variable(profile: GProfile) -> GProfile:
    """Profile of ``(I, x)`` from the profile of ``I``.

    ``g_J(k) = min(g_I(k) + d_k - d_{k-1} - 1, g_I(k-1))`` with
    ``g_I(0) = g_I(nu+1) = inf`` and ``d_0 = 0``; ``indeg J^[k] = d_{k-1} + 1``.
    """
    nu = profile.nu
    g = [INF, *profile.gs, INF]
    d = [0, *profile.dks]
    gs, dks = [], []
    for k in range(1, nu + 2):
        first = g[k] + d[k] - d[k - 1] - 1 if k <= nu else INF
        gs.append(int(min(first, g[k - 1])))
        dks.append(d[k - 1] + 1)
    return GProfile.from_g(gs, dks)


def predict_product(first: GProfile, second: GProfile) -> GProfile:
    """Profile of a product of ideals in disjoint variables: ``g`` adds, ``nu`` is the min."""
    nu = min(first.nu, second.nu)
    gs = [first.gs[k] + second.gs[k] for k in range(nu)]
    dks = [first.dks[k] + second.dks[k] for k in range(nu)]
    return GProfile.from_g(gs, dks)


def linear_resolution_obstruction(ideal: MonomialIdeal, field: FieldSpec = QQ) -> str | None:
    """Why ``I`` fails to have a linear resolution, or ``None`` if it has one."""
    if ideal.is_zero:
        return "zero ideal"
    if not ideal.is_equigenerated():
        return "generators have different degrees"
    d = initial_degree(ideal)
    table = betti_hochster(ideal, field)
    for (i, j), v in table.entries.items():
        if i >= 1 and j != i + d - 1:
            return f"beta_{i},{j}(S/I) = {v} off the linear strand"
    return None


def has_linear_resolution(ideal: MonomialIdeal, field: FieldSpec = QQ) -> bool:
    return linear_resolution_obstruction(ideal, field) is None


def colon_is_linear(previous: Sequence[int], u: int) -> bool:
    """Whether ``(previous) : u`` is generated by variables.

    The colon is generated by the ``v / gcd(v, u)``; it is variable-generated
    iff each of those is divisible by one that is a single variable.
    """
    diffs = [v & ~u for v in previous]
    singles = 0
    for dv in diffs:
        if dv and not dv & (dv - 1):
            singles |= dv
    return all(dv & singles for dv in diffs)


def is_linear_quotients_order(order: Sequence[int]) -> bool:
    return all(colon_is_linear(order[:j], order[j]) for j in range(1, len(order)))


def linear_quotients_order(ideal: MonomialIdeal, cap: int = LINEAR_QUOTIENTS_CAP) -> tuple[int, ...] | None:
    """An ordering of ``G(I)`` with linear quotients, or ``None``.

    Exhaustive over admissible prefixes (as sets, memoizing dead ends), so a
    ``None`` answer is a proof that no such order exists.
    """
    gens = ideal.gens
    s = len(gens)
    if s > cap:
        raise CapExceeded("number of generators", s, cap)
    if s == 0:
        return ()
    full = (1 << s) - 1
    dead: set[int] = set()

    def extend(chosen: int, prefix: list[int]) -> list[int] | None:
        if chosen == full:
            return prefix
        if chosen in dead:
            return None
        previous = [gens[i] for i in prefix]
        for i in range(s):
            if chosen >> i & 1:
                continue
            if prefix and not colon_is_linear(previous, gens[i]):
                continue
            found = extend(chosen | 1 << i, prefix + [i])
            if found is not None:
                return found
        dead.add(chosen)
        return None

    found = extend(0, [])
    if found is None:
        return None
    return tuple(gens[i] for i in found)


@dataclass
class SplittingReport:
    ok: bool
    discrepancies: list[dict]

    def __bool__(self) -> bool:
        return self.ok


def verify_betti_splitting(
    ideal: MonomialIdeal, first: MonomialIdeal, second: MonomialIdeal, field: FieldSpec = QQ
) -> SplittingReport:
    """Check ``β_{i,j}(I) = β_{i,j}(I1) + β_{i,j}(I2) + β_{i-1,j}(I1 ∩ I2)`` entrywise."""
    g, g1, g2 = set(ideal.gens), set(first.gens), set(second.gens)
    if g1 & g2 or g1 | g2 != g:
        raise NormDepthError("G(I) must be the disjoint union of G(I1) and G(I2)")

    def ideal_betti(j: MonomialIdeal) -> dict:
        return {} if j.is_zero else betti_hochster(j, field).ideal_betti()

    whole = ideal_betti(ideal)
    b1 = ideal_betti(first)
    b2 = ideal_betti(second)
    meet = ideal_betti(intersect(first, second))
    keys = set(whole) | set(b1) | set(b2) | {(i + 1, j) for i, j in meet}
    bad = []
    for i, j in sorted(keys):
        rhs = b1.get((i, j), 0) + b2.get((i, j), 0) + meet.get((i - 1, j), 0)
        lhs = whole.get((i, j), 0)
        if lhs != rhs:
            bad.append({"i": i, "j": j, "lhs": lhs, "rhs": rhs})
    return SplittingReport(not bad, bad)


def is_sum_decomposition(ideal: MonomialIdeal, first: MonomialIdeal, second: MonomialIdeal) -> bool:
    return ideal_sum(first, second).gens == ideal.gens
