"""Exact matrix rank over Q and over prime fields.

Matrices are given as sequences of sparse rows ``{column: value}`` with integer
entries.  Nothing here touches floating point.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Mapping


def rank(rows: Iterable[Mapping[int, int]], characteristic: int = 0) -> int:
    if characteristic == 0:
        return rank_rational(rows)
    if characteristic == 2:
        return rank_gf2(_to_bitrow(r) for r in rows)
    return rank_mod_p(rows, characteristic)


def _to_bitrow(row: Mapping[int, int]) -> int:
    out = 0
    for c, v in row.items():
        if v & 1:
            out |= 1 << c
    return out


def rank_gf2(rows: Iterable[int]) -> int:
    """Rank of 0/1 rows packed as integers, by XOR elimination."""
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            low = r & -r
            p = pivots.get(low)
            if p is None:
                pivots[low] = r
                break
            r ^= p
    return len(pivots)


def rank_mod_p(rows: Iterable[Mapping[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        r = {c: v % p for c, v in row.items() if v % p}
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(r[c], -1, p)
                pivots[c] = {k: v * inv % p for k, v in r.items()}
                break
            f = r[c]
            for k, v in piv.items():
                nv = (r.get(k, 0) - f * v) % p
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    return len(pivots)


def rank_rational(rows: Iterable[Mapping[int, int]]) -> int:
    """Rank over Q by fraction-free echelon insertion.

    Each reduction step replaces ``r`` by ``a*r - b*p`` (``a``, ``b`` the
    leading entries divided by their gcd) and then strips the row content,
    so entries stay small integers.
    """
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        r = {c: v for c, v in row.items() if v}
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                g = 0
                for v in r.values():
                    g = gcd(g, v)
                if g != 1:
                    r = {k: v // g for k, v in r.items()}
                pivots[c] = r
                break
            a, b = piv[c], r[c]
            g = gcd(a, b)
            a, b = a // g, b // g
            if a != 1:
                r = {k: a * v for k, v in r.items()}
            for k, v in piv.items():
                nv = r.get(k, 0) - b * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
            if r:
                g = 0
                for v in r.values():
                    g = gcd(g, v)
                    if g == 1:
                        break
                if g != 1:
                    r = {k: v // g for k, v in r.items()}
    return len(pivots)
