"""Integer polynomials, cyclotomic polynomials, and exact polynomial-matrix determinants."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .intmatrix import IntMatrix, int_det


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = [int(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class IntPoly:
    """Polynomial with integer coefficients, lowest degree first.

    The zero polynomial is the empty coefficient tuple; otherwise the last
    coefficient is nonzero.
    """

    coeffs: tuple[int, ...]

    @staticmethod
    def of(coeffs: Iterable[int]) -> "IntPoly":
        return IntPoly(_strip(coeffs))

    @staticmethod
    def zero() -> "IntPoly":
        return IntPoly(())

    @staticmethod
    def one() -> "IntPoly":
        return IntPoly((1,))

    @staticmethod
    def constant(a: int) -> "IntPoly":
        return IntPoly.of((a,))

    @staticmethod
    def x() -> "IntPoly":
        return IntPoly((0, 1))

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree, with the convention deg 0 = -1."""
        return len(self.coeffs) - 1

    def __call__(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly.of(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            return IntPoly.of(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        if k < 0:
            raise ValueError("negative power")
        result = IntPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divexact(self, den: "IntPoly") -> "IntPoly":
        """Exact division; raises ArithmeticError when den does not divide."""
        q, r = _divmod_poly(self, den)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def taylor_at_one(self) -> tuple[int, int]:
        """Vanishing order k at u = 1 and the Taylor coefficient p^(k)(1)/k!.

        Computed by repeated exact division by (u - 1).
        """
        if self.is_zero():
            raise ValueError("zero polynomial has no leading Taylor coefficient")
        order = 0
        cur = self
        while cur(1) == 0:
            cur = _divide_by_u_minus_one(cur)
            order += 1
        return order, cur(1)


def _divide_by_u_minus_one(p: IntPoly) -> IntPoly:
    c = p.coeffs
    n = len(c) - 1
    q = [0] * n
    acc = c[n]
    for k in range(n - 1, -1, -1):
        q[k] = acc
        acc = c[k] + acc
    # acc is now p(1), known to vanish by the caller
    return IntPoly(tuple(q))


def _divmod_poly(num: IntPoly, den: IntPoly) -> tuple[IntPoly, IntPoly]:
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(num.coeffs)
    d = den.coeffs
    dn = len(d) - 1
    lead = d[-1]
    q = [0] * max(len(rem) - dn, 0)
    for i in range(len(rem) - 1, dn - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        if c % lead != 0:
            raise ArithmeticError("quotient leaves the ring of integer polynomials")
        f = c // lead
        q[i - dn] = f
        for j in range(dn + 1):
            rem[i - dn + j] -= f * d[j]
    return IntPoly.of(q), IntPoly.of(rem)


def taylor_at_one(p) -> tuple[int, object]:
    """Vanishing order and leading Taylor coefficient of p at u = 1."""
    return p.taylor_at_one()


@functools.cache
def cyclotomic_polynomial(m: int) -> IntPoly:
    """The m-th cyclotomic polynomial, by exact division of x^m - 1."""
    if m < 1:
        raise ValueError("conductor must be positive")
    if m == 1:
        return IntPoly((-1, 1))
    xm1 = IntPoly.of([-1] + [0] * (m - 1) + [1])
    den = IntPoly.one()
    for d in range(1, m):
        if m % d == 0:
            den = den * cyclotomic_polynomial(d)
    return xm1.divexact(den)


def evaluation_points(count: int) -> list[int]:
    """Deterministic distinct integers 0, 1, -1, 2, -2, ..."""
    pts = [0]
    k = 1
    while len(pts) < count:
        pts.append(k)
        if len(pts) < count:
            pts.append(-k)
        k += 1
    return pts[:count]


def interpolate_integers(xs: Sequence[int], ys: Sequence[int]) -> tuple[int, ...]:
    """Exact Newton interpolation; raises if the result is not integral."""
    n = len(xs)
    dd = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j])
    coeffs = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        shifted = [Fraction(0)] + coeffs[:-1]
        coeffs = [shifted[k] - xs[i] * coeffs[k] for k in range(n)]
        coeffs[0] += dd[i]
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ArithmeticError("interpolation produced a non-integer coefficient")
        out.append(int(c))
    return tuple(out)


def poly_matrix_det(entries: Sequence[Sequence[IntPoly]],
                    degree_bound: int | None = None) -> IntPoly:
    """Determinant of a square matrix of integer polynomials.

    Strategy: evaluate the matrix at enough integer points, take exact
    integer determinants there, and interpolate back with rational
    arithmetic; the result is provably integral.  Without an explicit
    degree bound the entries must have degree at most 2 and the bound 2n
    is used, matching one point more than the degree (2n + 1 points).
    """
    n = len(entries)
    if any(len(row) != n for row in entries):
        raise ValueError("matrix must be square")
    if n == 0:
        return IntPoly.one()
    if degree_bound is None:
        if any(e.degree() > 2 for row in entries for e in row):
            raise ValueError("entries of degree > 2 need an explicit degree bound")
        degree_bound = 2 * n
    pts = evaluation_points(degree_bound + 1)
    dets = []
    for t in pts:
        m = IntMatrix.from_rows([[e(t) for e in row] for row in entries])
        dets.append(int_det(m))
    return IntPoly.of(interpolate_integers(pts, dets))
