"""Instance generators and the non-increasing-profile sweep."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from multiprocessing import Pool
from typing import Callable, Iterable, Iterator, TypeVar

from .betti import GProfile, g_profile
from .complexes import QQ, FieldSpec
from .errors import CapExceeded
from .graphs import Graph, edge_ideal, isolated_vertices
from .ideal import MonomialIdeal, minimalize

SWEEP_VERTEX_CAP = 8

T = TypeVar("T")
R = TypeVar("R")


def labeled_graphs(n: int) -> Iterator[Graph]:
    """Every graph on ``1..n`` without isolated vertices, by edge-subset bitmask."""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        g = Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        if n and not isolated_vertices(g):
            yield g


def graphs_up_to(max_vertices: int) -> Iterator[Graph]:
    for n in range(2, max_vertices + 1):
        yield from labeled_graphs(n)


def random_graph(rng: random.Random, n: int) -> Graph:
    """Uniform labeled graph on ``n`` vertices, conditioned on no isolated vertex."""
    pairs = list(combinations(range(1, n + 1), 2))
    while True:
        g = Graph(n, [p for p in pairs if rng.random() < 0.5])
        if not isolated_vertices(g):
            return g


def random_ideal(rng: random.Random, max_vars: int, max_gens: int) -> MonomialIdeal:
    """Random squarefree ideal, relabeled onto the variables it uses."""
    n = rng.randint((max_vars + 1) // 2, max_vars)
    count = rng.randint((max_gens + 1) // 2, max_gens)
    # generators of degree d or d + 1 seldom divide one another
    d = 1 if rng.random() < 0.1 else rng.randint(2, max(2, n - 2))
    masks = []
    for _ in range(count):
        size = min(n, d + (rng.random() < 0.3))
        masks.append(sum(1 << i for i in rng.sample(range(n), size)))
    return minimalize(masks)


def pmap(fn: Callable[[T], R], items: Iterable[T], jobs: int = 1) -> Iterator[R]:
    """Ordered map, optionally over a process pool; results come back in input order."""
    if jobs <= 1:
        yield from map(fn, items)
        return
    with Pool(jobs) as pool:
        yield from pool.imap(fn, items, chunksize=64)


@dataclass
class SweepReport:
    description: str
    field: str
    instances: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    profiles: list[dict] | None = None
    seconds: float | None = None

    def to_json(self) -> dict:
        out = {
            "class": self.description,
            "field": self.field,
            "instances": self.instances,
            "counterexamples": self.counterexamples,
        }
        if self.profiles is not None:
            out["profiles"] = self.profiles
        if self.seconds is not None:
            out["seconds"] = round(self.seconds, 3)
        return out


def _profile_of(args: tuple[Graph, int]) -> tuple[Graph, GProfile]:
    g, characteristic = args
    return g, g_profile(edge_ideal(g), FieldSpec(characteristic))


def conjecture_sweep(
    max_vertices: int,
    sample: int | None = None,
    seed: int = 0,
    field: FieldSpec = QQ,
    jobs: int = 1,
    keep_profiles: bool = False,
    timing: bool = False,
) -> SweepReport:
    """Flag every graph whose profile increases somewhere.

    Exhaustive over labeled graphs with ``2..max_vertices`` vertices, or
    ``sample`` seeded random graphs on exactly ``max_vertices`` vertices.
    """
    if max_vertices > SWEEP_VERTEX_CAP:
        raise CapExceeded("max vertices", max_vertices, SWEEP_VERTEX_CAP)
    start = time.perf_counter()
    if sample is None:
        desc = f"all graphs without isolated vertices on 2..{max_vertices} vertices"
        graphs: Iterable[Graph] = graphs_up_to(max_vertices)
    else:
        rng = random.Random(seed)
        desc = f"{sample} random graphs on {max_vertices} vertices (seed {seed})"
        graphs = [random_graph(rng, max_vertices) for _ in range(sample)] if max_vertices >= 2 else []
    report = SweepReport(desc, str(field), profiles=[] if keep_profiles else None)
    work = ((g, field.characteristic) for g in graphs)
    for g, prof in pmap(_profile_of, work, jobs):
        report.instances += 1
        if keep_profiles:
            report.profiles.append({"graph": g.to_json(), "profile": prof.to_json()})
        if not prof.is_non_increasing():
            report.counterexamples.append({"graph": g.to_json(), "profile": prof.to_json()})
    if timing:
        report.seconds = time.perf_counter() - start
    return report
