"""Seeded random instances for sweeps and property corpora.

Generation builds a random spanning tree first and then adds extra edges
uniformly (loops allowed by default), so connectivity holds by
construction; minimum-valency requirements are enforced by rejection.
Everything is driven by an explicit random.Random, so a fixed seed
reproduces instances bit for bit.
"""

from __future__ import annotations

import random
from typing import Sequence

from .covers import DerivedCover, VoltageAssignment, derive
from .exact.groups import FiniteAbelianGroup
from .multigraph import Multigraph


def random_connected_multigraph(rng: random.Random, n: int, extra_edges: int,
                                allow_loops: bool = True, min_degree: int = 0,
                                max_tries: int = 10000) -> Multigraph:
    """Random connected multigraph on n vertices with n - 1 + extra_edges edges."""
    if n < 1:
        raise ValueError("need at least one vertex")
    for _ in range(max_tries):
        edges: list[tuple[int, int]] = []
        for v in range(1, n):
            u = rng.randrange(v)
            edges.append((u, v) if rng.random() < 0.5 else (v, u))
        for _ in range(extra_edges):
            while True:
                t = rng.randrange(n)
                h = rng.randrange(n)
                if t != h or allow_loops:
                    break
            edges.append((t, h))
        g = Multigraph(n, tuple(edges))
        if all(d >= min_degree for d in g.degrees):
            return g
    raise RuntimeError("could not satisfy the degree requirement; loosen the bounds")


def random_voltage_assignment(rng: random.Random, group: FiniteAbelianGroup,
                              edge_count: int) -> VoltageAssignment:
    voltages = tuple(tuple(rng.randrange(n) for n in group.orders) for _ in range(edge_count))
    return VoltageAssignment(group, voltages)


def random_cover(rng: random.Random, group: FiniteAbelianGroup, n: int, extra_edges: int,
                 allow_loops: bool = True, min_degree: int = 2,
                 require_connected: bool = True, max_tries: int = 10000) -> DerivedCover:
    """Random cover of a random valid base; resamples until Y is connected if asked."""
    for _ in range(max_tries):
        base = random_connected_multigraph(rng, n, extra_edges,
                                           allow_loops=allow_loops, min_degree=min_degree)
        cover = derive(base, random_voltage_assignment(rng, group, len(base.edges)))
        if not require_connected or cover.is_connected:
            return cover
    raise RuntimeError("could not find a connected cover; the group may be too large for the base")


def instance_rng(seed: int, index: int) -> random.Random:
    """Deterministic per-instance generator derived from (seed, index)."""
    return random.Random(seed * 1_000_003 + index)
