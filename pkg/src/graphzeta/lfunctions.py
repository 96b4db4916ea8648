"""Zeta and L reciprocal polynomials via the three-term determinant formulas.

The zeta function of a valid multigraph (connected, no valency-one
vertices) is represented only through its reciprocal polynomial

    (1 - u^2)^(r-1) * det(I - A u + (D - I) u^2),      r = |E| - |V| + 1,

and the L-function of a character chi of a cover through the same formula
with A replaced by A_chi.  Special values at u = 1 are reported as the
leading Taylor coefficient there, i.e. p^(k)(1)/k! for vanishing order k.
(The unnormalized k-th derivative differs by k!; for the cycle graph C_n
that convention would give 2n^2 where this library reports n^2.)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .covers import DerivedCover, DisconnectedCoverError, a_chi
from .exact.cyclotomic import CycPoly, CyclotomicInteger, cyc_poly_matrix_det
from .exact.groups import Character
from .exact.groupring import GroupRingElement, gr_det
from .exact.polynomials import IntPoly, poly_matrix_det
from .multigraph import Multigraph, betti, matrices, require_valid


class SpecialValueMismatchError(RuntimeError):
    """Internal consistency failure between the theta element and L-values."""


@dataclass(frozen=True)
class ZetaData:
    reciprocal: IntPoly
    r: int
    order: int
    lead: int


@dataclass(frozen=True)
class LData:
    character: Character
    reciprocal: CycPoly
    order: int
    lead: CyclotomicInteger


@dataclass(frozen=True)
class ThetaElement:
    value: GroupRingElement


def _one_minus_u_sq() -> IntPoly:
    return IntPoly.of((1, 0, -1))


@lru_cache(maxsize=None)
def zeta_reciprocal(x: Multigraph) -> ZetaData:
    """1/zeta as an exact integer polynomial, with its behaviour at u = 1."""
    require_valid(x, connected=True, no_degree_one=True)
    gm = matrices(x)
    r = betti(x)
    n = x.n
    entries = [[IntPoly.of((int(i == j),
                            -gm.adjacency.data[i][j],
                            gm.degree.data[i][i] - 1 if i == j else 0))
                for j in range(n)] for i in range(n)]
    det = poly_matrix_det(entries)
    reciprocal = det * (_one_minus_u_sq() ** (r - 1))
    order, lead = reciprocal.taylor_at_one()
    return ZetaData(reciprocal, r, order, lead)


def zeta_reciprocal_hashimoto(x: Multigraph) -> IntPoly:
    """Independent oracle: det(I - uW) for the non-backtracking edge matrix.

    W is indexed by the 2|E| oriented edges; W[e][f] = 1 when f starts
    where e ends and f is not the reversal of e.  Both orientations of a
    loop are distinct oriented edges, each the reversal of the other.
    """
    require_valid(x, connected=True, no_degree_one=True)
    oriented = []
    for t, h in x.edges:
        oriented.append((t, h))
        oriented.append((h, t))
    k = len(oriented)
    one = IntPoly.one()
    zero = IntPoly.zero()
    minus_u = IntPoly.of((0, -1))
    entries = []
    for a in range(k):
        row = []
        _, head = oriented[a]
        rev = a ^ 1
        for b in range(k):
            tail, _ = oriented[b]
            w = 1 if head == tail and b != rev else 0
            diag = one if a == b else zero
            row.append(diag + minus_u if w else diag)
        entries.append(row)
    return poly_matrix_det(entries, degree_bound=k)


def _require_connected(cover: DerivedCover) -> None:
    if not cover.is_connected:
        raise DisconnectedCoverError("the derived graph is disconnected")


def l_reciprocal(cover: DerivedCover, chi: Character) -> LData:
    """1/L(u, chi) over Z[zeta_m]; the trivial character reproduces 1/zeta of the base."""
    _require_connected(cover)
    require_valid(cover.base, connected=True, no_degree_one=True)
    key = ("l", chi.exponents)
    cached = cover._memo.get(key)
    if cached is not None:
        return cached
    x = cover.base
    m = cover.group.exponent
    gm = matrices(x)
    axi = a_chi(cover, chi)
    n = x.n
    one = CyclotomicInteger.one(m)
    zero = CyclotomicInteger.zero(m)
    entries = []
    for i in range(n):
        row = []
        for j in range(n):
            c0 = one if i == j else zero
            c1 = -axi[i][j]
            c2 = CyclotomicInteger.from_int(m, gm.degree.data[i][i] - 1) if i == j else zero
            row.append(CycPoly.of(m, (c0, c1, c2)))
        entries.append(row)
    det = cyc_poly_matrix_det(entries)
    r = betti(x)
    reciprocal = det * CycPoly.from_intpoly(m, _one_minus_u_sq() ** (r - 1))
    order, lead = reciprocal.taylor_at_one()
    data = LData(chi, reciprocal, order, lead)
    cover._memo[key] = data
    return data


def theta_element(cover: DerivedCover) -> ThetaElement:
    """(-2)^(r_X - 1) times the Z[G]-determinant of the equivariant Laplacian form.

    The (i, j) entry collects, for each sigma, the Laplacian pairing of the
    section vertices w_i and sigma.w_j on the coefficient of sigma^(-1).
    Character images are checked against the independently computed
    L-values; a mismatch means an orientation or sign bug and is fatal.
    """
    _require_connected(cover)
    cached = cover._memo.get("theta")
    if cached is not None:
        return cached
    group = cover.group
    n = cover.base.n
    qy = matrices(cover.graph).laplacian
    neg = group.neg_index_table
    entries = []
    for i in range(n):
        row = []
        wi = cover.section[i]
        for j in range(n):
            coeffs = [0] * group.order
            for si in range(group.order):
                coeffs[neg[si]] = qy.data[wi][cover.act_vertex(group.elements[si], cover.section[j])]
            row.append(GroupRingElement(group, tuple(coeffs)))
        entries.append(row)
    r = betti(cover.base)
    theta = gr_det(entries) * ((-2) ** (r - 1))
    for chi in group.characters():
        image = theta.apply_char(chi)
        if chi.is_trivial:
            expected = CyclotomicInteger.zero(group.exponent)
        else:
            expected = l_reciprocal(cover, chi.conjugate()).lead
        if image != expected:
            raise SpecialValueMismatchError(
                f"character image {image.coeffs} does not match the L-value {expected.coeffs}")
    result = ThetaElement(theta)
    cover._memo["theta"] = result
    return result


def product_check(cover: DerivedCover) -> bool:
    """Exact polynomial identity 1/zeta_Y = 1/zeta_X * prod over nontrivial chi of 1/L."""
    _require_connected(cover)
    m = cover.group.exponent
    prod = CycPoly.from_intpoly(m, zeta_reciprocal(cover.base).reciprocal)
    for chi in cover.group.characters():
        if not chi.is_trivial:
            prod = prod * l_reciprocal(cover, chi).reciprocal
    as_int = prod.to_intpoly()
    return as_int == zeta_reciprocal(cover.graph).reciprocal
