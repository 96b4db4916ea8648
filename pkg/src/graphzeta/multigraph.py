"""Multigraphs, their matrices, spanning-tree counts, and Jacobians.

Vertices are dense integer indices 0..n-1.  Edges are stored as ordered
(tail, head) pairs; the stored order is the edge's reference orientation
and the position in the edge list is the edge's identity, so parallel
edges stay distinguishable.  Loops are allowed and add two to the valency
of their vertex.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .exact.intmatrix import IntMatrix, int_det, smith_normal_form


class GraphFormatError(ValueError):
    """Raised when serialized graph or voltage data is malformed."""


@dataclass(frozen=True)
class Violation:
    requirement: str
    vertex: int

    def message(self) -> str:
        if self.requirement == "connected":
            return f"graph is not connected: vertex {self.vertex} is unreachable from vertex 0"
        return f"vertex {self.vertex} has valency below two"


class GraphValidationError(ValueError):
    def __init__(self, violations: Sequence[Violation]):
        self.violations = tuple(violations)
        super().__init__("; ".join(v.message() for v in self.violations))


@dataclass(frozen=True)
class Multigraph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a multigraph needs at least one vertex")
        edges = tuple((int(t), int(h)) for t, h in self.edges)
        for t, h in edges:
            if not (0 <= t < self.n and 0 <= h < self.n):
                raise ValueError("edge endpoint out of range")
        object.__setattr__(self, "edges", edges)

    @cached_property
    def adjacency_counts(self) -> tuple[tuple[int, ...], ...]:
        """Symmetric edge counts; loops count twice on the diagonal."""
        a = [[0] * self.n for _ in range(self.n)]
        for t, h in self.edges:
            if t == h:
                a[t][t] += 2
            else:
                a[t][h] += 1
                a[h][t] += 1
        return tuple(tuple(row) for row in a)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        d = [0] * self.n
        for t, h in self.edges:
            d[t] += 1
            d[h] += 1
        return tuple(d)

    def loops_at(self, v: int) -> int:
        return sum(1 for t, h in self.edges if t == h == v)

    @cached_property
    def is_connected(self) -> bool:
        return not self._unreachable()

    def _unreachable(self) -> tuple[int, ...]:
        seen = [False] * self.n
        seen[0] = True
        stack = [0]
        adj = self.adjacency_counts
        while stack:
            v = stack.pop()
            for w in range(self.n):
                if adj[v][w] and not seen[w]:
                    seen[w] = True
                    stack.append(w)
        return tuple(v for v in range(self.n) if not seen[v])


def cycle_graph(n: int) -> Multigraph:
    if n == 1:
        return Multigraph(1, ((0, 0),))
    return Multigraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Multigraph:
    return Multigraph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def validate(x: Multigraph, connected: bool = True, no_degree_one: bool = False) -> tuple[Violation, ...]:
    """Check the requested requirements; an empty result means all hold."""
    out: list[Violation] = []
    if connected:
        out.extend(Violation("connected", v) for v in x._unreachable())
    if no_degree_one:
        out.extend(Violation("no_degree_one", v)
                   for v, d in enumerate(x.degrees) if d <= 1)
    return tuple(out)


def require_valid(x: Multigraph, connected: bool = True, no_degree_one: bool = False) -> None:
    violations = validate(x, connected=connected, no_degree_one=no_degree_one)
    if violations:
        raise GraphValidationError(violations)


@dataclass(frozen=True)
class GraphMatrices:
    adjacency: IntMatrix
    degree: IntMatrix
    laplacian: IntMatrix


def matrices(x: Multigraph) -> GraphMatrices:
    a = IntMatrix.from_rows(x.adjacency_counts)
    d = IntMatrix.from_rows([[x.degrees[i] if i == j else 0 for j in range(x.n)]
                             for i in range(x.n)])
    return GraphMatrices(a, d, d - a)


def betti(x: Multigraph) -> int:
    """First Betti number r = |E| - |V| + 1 of a connected multigraph."""
    require_valid(x, connected=True)
    return len(x.edges) - x.n + 1


@lru_cache(maxsize=None)
def kappa(x: Multigraph) -> int:
    """Number of spanning trees, as a reduced-Laplacian determinant.

    Deleting any one row and the matching column gives the same value;
    index 0 is used here.
    """
    require_valid(x, connected=True)
    if x.n == 1:
        return 1
    q = matrices(x).laplacian
    return int_det(q.delete_row_col(0, 0))


def kappa_bruteforce(x: Multigraph) -> int:
    """Spanning-tree count by exhausting edge subsets; the independent oracle.

    Loops never occur in a spanning tree, so only non-loop edges are tried.
    """
    require_valid(x, connected=True)
    if len(x.edges) > 20:
        raise ValueError("brute-force spanning tree count is limited to 20 edges")
    non_loops = [e for e, (t, h) in enumerate(x.edges) if t != h]
    count = 0
    for subset in combinations(non_loops, x.n - 1):
        parent = list(range(x.n))

        def find(v: int) -> int:
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        acyclic = True
        for e in subset:
            t, h = x.edges[e]
            rt, rh = find(t), find(h)
            if rt == rh:
                acyclic = False
                break
            parent[rt] = rh
        if acyclic:
            count += 1
    return count


@dataclass(frozen=True)
class JacobianStructure:
    invariant_factors: tuple[int, ...]

    @property
    def order(self) -> int:
        return math.prod(self.invariant_factors)


def jacobian(x: Multigraph) -> JacobianStructure:
    """Invariant factors of the Jacobian, from the Smith form of the Laplacian.

    The Laplacian of a connected multigraph has rank n - 1; the single zero
    in its Smith diagonal is discarded and the rest presents the group.
    """
    require_valid(x, connected=True)
    snf = smith_normal_form(matrices(x).laplacian)
    diag = snf.diagonal
    zeros = [d for d in diag if d == 0]
    if len(zeros) != 1:
        raise GraphValidationError(tuple(Violation("connected", v) for v in x._unreachable()))
    return JacobianStructure(tuple(d for d in diag if d != 0))


def graph_to_json(x: Multigraph) -> dict:
    return {"vertices": x.n, "edges": [[t, h] for t, h in x.edges]}


def graph_from_json(obj: object) -> Multigraph:
    if not isinstance(obj, dict):
        raise GraphFormatError("graph JSON must be an object")
    if "vertices" not in obj or "edges" not in obj:
        raise GraphFormatError('graph JSON needs "vertices" and "edges"')
    n = obj["vertices"]
    edges = obj["edges"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise GraphFormatError('"vertices" must be a positive integer')
    if not isinstance(edges, list):
        raise GraphFormatError('"edges" must be an array')
    parsed = []
    for e in edges:
        if (not isinstance(e, list) or len(e) != 2
                or not all(isinstance(v, int) and not isinstance(v, bool) for v in e)):
            raise GraphFormatError("each edge must be a [tail, head] integer pair")
        if not all(0 <= v < n for v in e):
            raise GraphFormatError(f"edge {e} has an endpoint outside 0..{n - 1}")
        parsed.append((e[0], e[1]))
    return Multigraph(n, tuple(parsed))
