"""Abelian covers of multigraphs built from voltage assignments.

A voltage assignment labels every base edge, in its reference orientation,
with an element of a finite abelian group G; traversing the edge backwards
picks up the inverse.  The derived graph has vertex set V_X x G with the
deterministic index i*d + idx(g), one lifted edge (v_i, h) -> (v_j, h + g_e)
per base edge and group element, the free G-action sigma: (v, g) -> (v, g + sigma),
and the canonical fiber section w_i = (v_i, 0).  Every abelian cover of a
connected multigraph arises this way up to isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .exact.cyclotomic import CyclotomicInteger
from .exact.groups import Character, Element, FiniteAbelianGroup, quotient_group, subgroup_closure
from .exact.intmatrix import IntMatrix
from .multigraph import GraphFormatError, Multigraph, require_valid


class DisconnectedCoverError(RuntimeError):
    """Raised when an operation needs the derived graph to be connected."""


@dataclass(frozen=True)
class VoltageAssignment:
    group: FiniteAbelianGroup
    voltages: tuple[Element, ...]

    def __post_init__(self):
        object.__setattr__(self, "voltages",
                           tuple(self.group.normalize(v) for v in self.voltages))


class DerivedCover:
    """A base multigraph together with the derived graph of a voltage assignment."""

    def __init__(self, base: Multigraph, assignment: VoltageAssignment,
                 section: Sequence[int] | None = None):
        if len(assignment.voltages) != len(base.edges):
            raise ValueError("voltage count does not match the base edge count")
        require_valid(base, connected=True)
        self.base = base
        self.assignment = assignment
        self.group = assignment.group
        self.degree = self.group.order
        d = self.degree
        add = self.group.add_index_table
        idx = self.group.index
        lifted = []
        for (t, h), g in zip(base.edges, assignment.voltages):
            gi = idx(g)
            for hi in range(d):
                lifted.append((t * d + hi, h * d + add[hi][gi]))
        self.graph = Multigraph(base.n * d, tuple(lifted))
        if section is None:
            section = tuple(i * d for i in range(base.n))
        else:
            section = tuple(section)
            if len(section) != base.n or any(w // d != i for i, w in enumerate(section)):
                raise ValueError("section must pick one vertex from each fiber, in order")
        self.section = section
        self._memo: dict = {}

    @cached_property
    def is_connected(self) -> bool:
        return self.graph.is_connected

    def vertex_index(self, v: int, g: Element) -> int:
        return v * self.degree + self.group.index(g)

    def project(self, w: int) -> int:
        return w // self.degree

    def fiber(self, v: int) -> range:
        return range(v * self.degree, (v + 1) * self.degree)

    def act_vertex(self, sigma: Element, w: int) -> int:
        v, gi = divmod(w, self.degree)
        return v * self.degree + self.group.add_index_table[gi][self.group.index(sigma)]

    def translate_section(self, taus: Sequence[Element]) -> "DerivedCover":
        """Same cover with section w_i' = tau_i . w_i; used to check section independence."""
        new = [self.act_vertex(tau, w) for tau, w in zip(taus, self.section)]
        return DerivedCover(self.base, self.assignment, section=new)

    def describe(self) -> dict:
        from .multigraph import graph_to_json
        return {
            "base": graph_to_json(self.base),
            "group": list(self.group.orders),
            "voltages": [list(v) for v in self.assignment.voltages],
        }


def derive(base: Multigraph, assignment: VoltageAssignment) -> DerivedCover:
    """Build the derived cover of a connected base multigraph."""
    return DerivedCover(base, assignment)


def is_connected_cover(cover: DerivedCover) -> bool:
    return cover.is_connected


def sigma_matrices(cover: DerivedCover) -> dict[Element, IntMatrix]:
    """The matrices A(sigma): entry (i, j) counts edges of Y between w_i and sigma.w_j.

    When w_i equals sigma.w_j (that is, i = j and sigma is the identity)
    the adjacency convention applies and loops at w_i count twice.
    """
    if not cover.is_connected:
        raise DisconnectedCoverError("sigma matrices need a connected derived graph")
    cached = cover._memo.get("sigma")
    if cached is not None:
        return cached
    ay = cover.graph.adjacency_counts
    n = cover.base.n
    out: dict[Element, IntMatrix] = {}
    for sigma in cover.group.elements:
        rows = [[ay[cover.section[i]][cover.act_vertex(sigma, cover.section[j])]
                 for j in range(n)] for i in range(n)]
        out[sigma] = IntMatrix.from_rows(rows)
    cover._memo["sigma"] = out
    return out


def a_chi(cover: DerivedCover, chi: Character) -> tuple[tuple[CyclotomicInteger, ...], ...]:
    """A_chi = sum over sigma of chi(sigma) * A(sigma), over conductor exponent(G)."""
    sig = sigma_matrices(cover)
    m = cover.group.exponent
    n = cover.base.n
    values = {sigma: chi.value(sigma) for sigma in cover.group.elements}
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = CyclotomicInteger.zero(m)
            for sigma, mat in sig.items():
                c = mat.data[i][j]
                if c:
                    acc = acc + values[sigma] * c
            row.append(acc)
        rows.append(tuple(row))
    return tuple(rows)


def quotient(cover: DerivedCover, generators: Iterable[Element]) -> DerivedCover:
    """Intermediate cover attached to a subgroup H: voltages reduced into G/H.

    Quotienting by the kernel of a character of an elementary abelian
    2-group yields the intermediate double cover attached to it.
    """
    group = cover.group
    h = subgroup_closure(group, generators)
    if len(h) == 1:
        return DerivedCover(cover.base, cover.assignment)
    quot, project = quotient_group(group, h)
    new_voltages = tuple(project(v) for v in cover.assignment.voltages)
    return DerivedCover(cover.base, VoltageAssignment(quot, new_voltages))


def res(cover: DerivedCover, divisor_on_y: Sequence[int]) -> tuple[int, ...]:
    """Push a divisor on Y down to X by summing over fibers."""
    if len(divisor_on_y) != cover.graph.n:
        raise ValueError("divisor length does not match the derived graph")
    d = cover.degree
    return tuple(sum(divisor_on_y[v * d + k] for k in range(d)) for v in range(cover.base.n))


def cor(cover: DerivedCover, divisor_on_x: Sequence[int]) -> tuple[int, ...]:
    """Pull a divisor on X up to Y by duplicating across fibers."""
    if len(divisor_on_x) != cover.base.n:
        raise ValueError("divisor length does not match the base graph")
    d = cover.degree
    return tuple(divisor_on_x[w // d] for w in range(cover.graph.n))


def voltages_to_json(assignment: VoltageAssignment) -> dict:
    return {"group": list(assignment.group.orders),
            "voltages": [list(v) for v in assignment.voltages]}


def voltages_from_json(obj: object) -> VoltageAssignment:
    if not isinstance(obj, dict):
        raise GraphFormatError("voltage JSON must be an object")
    if "group" not in obj or "voltages" not in obj:
        raise GraphFormatError('voltage JSON needs "group" and "voltages"')
    orders = obj["group"]
    if (not isinstance(orders, list) or not orders
            or not all(isinstance(x, int) and not isinstance(x, bool) and x >= 1 for x in orders)):
        raise GraphFormatError('"group" must be a nonempty array of cyclic orders >= 1')
    group = FiniteAbelianGroup(tuple(orders))
    raw = obj["voltages"]
    if not isinstance(raw, list):
        raise GraphFormatError('"voltages" must be an array')
    voltages = []
    for v in raw:
        if (not isinstance(v, list) or len(v) != len(orders)
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in v)):
            raise GraphFormatError("each voltage must list one residue per cyclic factor")
        voltages.append(tuple(v))
    return VoltageAssignment(group, tuple(voltages))
