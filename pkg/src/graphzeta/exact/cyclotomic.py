"""Exact arithmetic in Z[zeta_m] and in polynomial rings over it.

A cyclotomic integer is stored as its residue modulo the m-th cyclotomic
polynomial: an integer vector of length phi(m) against the power basis
1, z, ..., z^(phi(m)-1).  All values attached to characters of a cover
live over the single conductor m = exponent of the Galois group, so no
conversions between conductors are ever needed (or supported).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .polynomials import IntPoly, cyclotomic_polynomial, evaluation_points, interpolate_integers


def _phi_coeffs(m: int) -> tuple[int, ...]:
    return cyclotomic_polynomial(m).coeffs


def _reduce(m: int, dense: Sequence[int]) -> tuple[int, ...]:
    phi = _phi_coeffs(m)
    k = len(phi) - 1
    work = list(dense)
    if len(work) < k:
        work.extend([0] * (k - len(work)))
    for i in range(len(work) - 1, k - 1, -1):
        c = work[i]
        if c:
            work[i] = 0
            base = i - k
            for j in range(k):
                work[base + j] -= c * phi[j]
    return tuple(work[:k])


@dataclass(frozen=True)
class CyclotomicInteger:
    """Element of Z[zeta_m], always stored fully reduced mod the m-th cyclotomic polynomial."""

    conductor: int
    coeffs: tuple[int, ...]

    @staticmethod
    def reduce(m: int, dense: Sequence[int]) -> "CyclotomicInteger":
        return CyclotomicInteger(m, _reduce(m, dense))

    @staticmethod
    def zero(m: int) -> "CyclotomicInteger":
        return CyclotomicInteger(m, (0,) * _degree(m))

    @staticmethod
    def one(m: int) -> "CyclotomicInteger":
        return CyclotomicInteger.from_int(m, 1)

    @staticmethod
    def from_int(m: int, a: int) -> "CyclotomicInteger":
        return CyclotomicInteger.reduce(m, (a,))

    @staticmethod
    def root_of_unity(m: int, e: int) -> "CyclotomicInteger":
        """zeta_m^e as a reduced residue."""
        e %= m
        dense = [0] * (e + 1)
        dense[e] = 1
        return CyclotomicInteger.reduce(m, dense)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_int(self) -> int:
        if not self.is_rational():
            raise ValueError("cyclotomic integer is not rational")
        return self.coeffs[0]

    def _check(self, other: "CyclotomicInteger") -> None:
        if self.conductor != other.conductor:
            raise ValueError("conductor mismatch")

    def __add__(self, other: "CyclotomicInteger | int") -> "CyclotomicInteger":
        if isinstance(other, int):
            other = CyclotomicInteger.from_int(self.conductor, other)
        self._check(other)
        return CyclotomicInteger(self.conductor,
                                 tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "CyclotomicInteger":
        return CyclotomicInteger(self.conductor, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "CyclotomicInteger | int") -> "CyclotomicInteger":
        if isinstance(other, int):
            other = CyclotomicInteger.from_int(self.conductor, other)
        return self + (-other)

    def __rsub__(self, other: int) -> "CyclotomicInteger":
        return (-self) + other

    def __mul__(self, other: "CyclotomicInteger | int") -> "CyclotomicInteger":
        if isinstance(other, int):
            return CyclotomicInteger(self.conductor, tuple(other * c for c in self.coeffs))
        self._check(other)
        a, b = self.coeffs, other.coeffs
        dense = [0] * (len(a) + len(b) - 1 if a and b else 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        dense[i + j] += ca * cb
        return CyclotomicInteger.reduce(self.conductor, dense)

    __rmul__ = __mul__

    def galois(self, j: int) -> "CyclotomicInteger":
        """Image under the automorphism zeta_m -> zeta_m^j, j coprime to m."""
        m = self.conductor
        j %= m
        if m == 1:
            return self
        if math.gcd(j, m) != 1:
            raise ValueError("galois exponent must be a unit mod the conductor")
        dense = [0] * ((len(self.coeffs) - 1) * j + 1)
        for k, c in enumerate(self.coeffs):
            if c:
                dense[k * j] += c
        return CyclotomicInteger.reduce(m, dense)

    def conjugate(self) -> "CyclotomicInteger":
        """Complex conjugation zeta_m -> zeta_m^(-1)."""
        return self.galois(self.conductor - 1)

    def norm(self) -> int:
        """Product of all Galois conjugates; a rational integer."""
        m = self.conductor
        acc = self
        for j in _units(m)[1:]:
            acc = acc * self.galois(j)
        return acc.as_int()

    def to_json(self) -> dict:
        return {"m": self.conductor, "coeffs": list(self.coeffs)}


def _degree(m: int) -> int:
    return len(_phi_coeffs(m)) - 1


def _units(m: int) -> list[int]:
    return [j for j in range(1, m + 1) if math.gcd(j, m) == 1]


def divexact(a: CyclotomicInteger, b: CyclotomicInteger) -> CyclotomicInteger:
    """Exact quotient a / b in Z[zeta_m]; raises when b does not divide a.

    Implemented by multiplying with all nontrivial conjugates of b, which
    reduces the division to a coordinatewise division by the integer norm.
    """
    if a.conductor != b.conductor:
        raise ValueError("conductor mismatch")
    if b.is_zero():
        raise ZeroDivisionError("division by zero in Z[zeta]")
    if b.is_rational():
        n = b.coeffs[0]
        num = a
    else:
        m = a.conductor
        num = a
        nrm = b
        for j in _units(m)[1:]:
            conj = b.galois(j)
            num = num * conj
            nrm = nrm * conj
        n = nrm.as_int()
    out = []
    for c in num.coeffs:
        q, r = divmod(c, n)
        if r:
            raise ArithmeticError("inexact division in Z[zeta]")
        out.append(q)
    return CyclotomicInteger(a.conductor, tuple(out))


def cyc_matrix_det(entries: Sequence[Sequence[CyclotomicInteger]]) -> CyclotomicInteger:
    """Exact determinant over Z[zeta_m] by fraction-free elimination.

    Z[zeta_m] is an integral domain, so the Bareiss scheme applies; the
    exact divisions go through divexact above.
    """
    n = len(entries)
    if n == 0 or any(len(row) != n for row in entries):
        raise ValueError("matrix must be square and nonempty")
    m = entries[0][0].conductor
    a = [list(row) for row in entries]
    sign = 1
    prev = CyclotomicInteger.one(m)
    for k in range(n - 1):
        pivot_row = next((i for i in range(k, n) if not a[i][k].is_zero()), None)
        if pivot_row is None:
            return CyclotomicInteger.zero(m)
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        pk = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = divexact(pk * row_i[j] - aik * row_k[j], prev)
            row_i[k] = CyclotomicInteger.zero(m)
        prev = pk
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def _strip_cyc(coeffs: Iterable[CyclotomicInteger]) -> tuple[CyclotomicInteger, ...]:
    out = list(coeffs)
    while out and out[-1].is_zero():
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class CycPoly:
    """Polynomial over Z[zeta_m], lowest degree first, trailing coefficient nonzero."""

    conductor: int
    coeffs: tuple[CyclotomicInteger, ...]

    @staticmethod
    def of(m: int, coeffs: Iterable[CyclotomicInteger]) -> "CycPoly":
        return CycPoly(m, _strip_cyc(coeffs))

    @staticmethod
    def zero(m: int) -> "CycPoly":
        return CycPoly(m, ())

    @staticmethod
    def one(m: int) -> "CycPoly":
        return CycPoly(m, (CyclotomicInteger.one(m),))

    @staticmethod
    def from_intpoly(m: int, p: IntPoly) -> "CycPoly":
        return CycPoly.of(m, (CyclotomicInteger.from_int(m, c) for c in p.coeffs))

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, t: int) -> CyclotomicInteger:
        acc = CyclotomicInteger.zero(self.conductor)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def _check(self, other: "CycPoly") -> None:
        if self.conductor != other.conductor:
            raise ValueError("conductor mismatch")

    def __add__(self, other: "CycPoly") -> "CycPoly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return CycPoly.of(self.conductor, out)

    def __neg__(self) -> "CycPoly":
        return CycPoly(self.conductor, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "CycPoly") -> "CycPoly":
        return self + (-other)

    def __mul__(self, other: "CycPoly | CyclotomicInteger | int") -> "CycPoly":
        m = self.conductor
        if isinstance(other, int):
            other = CyclotomicInteger.from_int(m, other)
        if isinstance(other, CyclotomicInteger):
            return CycPoly.of(m, (c * other for c in self.coeffs))
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return CycPoly.zero(m)
        out = [CyclotomicInteger.zero(m) for _ in range(len(a) + len(b) - 1)]
        for i, ca in enumerate(a):
            if not ca.is_zero():
                for j, cb in enumerate(b):
                    out[i + j] = out[i + j] + ca * cb
        return CycPoly(m, tuple(out))

    __rmul__ = __mul__

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.coeffs)

    def to_intpoly(self) -> IntPoly:
        if not self.is_rational():
            raise ValueError("polynomial has irrational cyclotomic coefficients")
        return IntPoly.of(c.as_int() for c in self.coeffs)

    def taylor_at_one(self) -> tuple[int, CyclotomicInteger]:
        """Vanishing order at u = 1 and the leading Taylor coefficient there."""
        if self.is_zero():
            raise ValueError("zero polynomial has no leading Taylor coefficient")
        cur = self
        order = 0
        while cur(1).is_zero():
            cur = _cyc_divide_by_u_minus_one(cur)
            order += 1
        return order, cur(1)


def _cyc_divide_by_u_minus_one(p: CycPoly) -> CycPoly:
    c = p.coeffs
    n = len(c) - 1
    q: list[CyclotomicInteger] = [CyclotomicInteger.zero(p.conductor)] * n
    acc = c[n]
    for k in range(n - 1, -1, -1):
        q[k] = acc
        acc = c[k] + acc
    return CycPoly(p.conductor, tuple(q))


def cyc_poly_matrix_det(entries: Sequence[Sequence[CycPoly]],
                        degree_bound: int | None = None) -> CycPoly:
    """Determinant of a square matrix over Z[zeta_m][u].

    Same evaluate-and-interpolate scheme as the integer case, applied to
    each power-basis coordinate independently.
    """
    n = len(entries)
    if n == 0 or any(len(row) != n for row in entries):
        raise ValueError("matrix must be square and nonempty")
    m = entries[0][0].conductor
    if degree_bound is None:
        if any(e.degree() > 2 for row in entries for e in row):
            raise ValueError("entries of degree > 2 need an explicit degree bound")
        degree_bound = 2 * n
    pts = evaluation_points(degree_bound + 1)
    dets = []
    for t in pts:
        mat = [[e(t) for e in row] for row in entries]
        dets.append(cyc_matrix_det(mat))
    width = _degree(m)
    columns = []
    for c in range(width):
        columns.append(interpolate_integers(pts, [d.coeffs[c] for d in dets]))
    length = max((len(col) for col in columns), default=0)
    coeffs = []
    for k in range(length):
        vec = tuple(columns[c][k] if k < len(columns[c]) else 0 for c in range(width))
        coeffs.append(CyclotomicInteger(m, vec))
    return CycPoly.of(m, coeffs)
