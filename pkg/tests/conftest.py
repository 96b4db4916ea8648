"""Shared corpora for the property and acceptance suites.

Everything is generated from fixed seeds so the suites are reproducible;
session scope keeps the heavier corpora built once.
"""

from __future__ import annotations

import random

import pytest

from graphzeta import FiniteAbelianGroup, Multigraph, VoltageAssignment, cycle_graph, derive
from graphzeta.randgraphs import (
    instance_rng,
    random_connected_multigraph,
    random_cover,
    random_voltage_assignment,
)


@pytest.fixture(scope="session")
def core_graph_corpus() -> list[Multigraph]:
    """200 random connected multigraphs with n <= 6 and |E| <= 12."""
    rng = random.Random(20240601)
    out = []
    while len(out) < 200:
        n = rng.randint(1, 6)
        extra = rng.randint(0 if n > 1 else 1, 12 - (n - 1))
        out.append(random_connected_multigraph(rng, n, extra))
    return out


@pytest.fixture(scope="session")
def zeta_graph_corpus() -> list[Multigraph]:
    """200 random connected multigraphs with min valency 2 and r >= 2, |E| <= 12."""
    rng = random.Random(77001)
    out = []
    while len(out) < 200:
        n = rng.randint(3, 6)
        extra = rng.randint(2, 5)
        out.append(random_connected_multigraph(rng, n, extra, min_degree=2))
    return out


COVER_GROUPS = ((2,), (3,), (4,), (2, 2), (6,))


def cycle_cover(n: int, orders: tuple[int, ...]):
    """C_n -> C_dn for a cyclic group: the generator on one edge, zero elsewhere."""
    group = FiniteAbelianGroup(orders)
    base = cycle_graph(n)
    voltages = [(0,) * group.rank] * len(base.edges)
    voltages[0] = tuple(1 if i == 0 else 0 for i in range(group.rank))
    return derive(base, VoltageAssignment(group, tuple(voltages)))


@pytest.fixture(scope="session")
def cover_corpus():
    """100 seeded connected covers, 20 per group, cycle bases included for cyclic groups."""
    covers = []
    for gi, orders in enumerate(COVER_GROUPS):
        group = FiniteAbelianGroup(orders)
        cyclic = len(orders) == 1
        count = 0
        if cyclic:
            for n in (3, 4, 5, 6):
                covers.append(cycle_cover(n, orders))
                count += 1
        rng = instance_rng(555000, gi)
        # a connected cover needs the cycle voltages to generate the group,
        # so the base must have at least rank(G) independent cycles
        min_extra = len([n for n in orders if n > 1]) or 1
        while count < 20:
            n = rng.randint(2, 4)
            extra = rng.randint(min_extra, 3)
            covers.append(random_cover(rng, group, n, extra, min_degree=2))
            count += 1
    return covers
