"""Exact integer matrices: determinants, Smith normal form, lattice membership.

Everything in this module runs on Python's arbitrary-precision integers.
Entries of adjugates and of Smith transforms overflow 64-bit machine words
already at modest sizes, so no fixed-width path exists anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, stored row-major as tuples."""

    rows: int
    cols: int
    data: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_rows(rows: Iterable[Iterable[int]]) -> "IntMatrix":
        data = tuple(tuple(int(x) for x in row) for row in rows)
        r = len(data)
        c = len(data[0]) if r else 0
        if any(len(row) != c for row in data):
            raise ValueError("ragged rows")
        return IntMatrix(r, c, data)

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @staticmethod
    def zeros(r: int, c: int) -> "IntMatrix":
        return IntMatrix(r, c, tuple((0,) * c for _ in range(r)))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.data[i][j]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows,
                         tuple(tuple(self.data[i][j] for i in range(self.rows))
                               for j in range(self.cols)))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return IntMatrix(self.rows, self.cols,
                         tuple(tuple(a + b for a, b in zip(ra, rb))
                               for ra, rb in zip(self.data, other.data)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return IntMatrix(self.rows, self.cols,
                         tuple(tuple(a - b for a, b in zip(ra, rb))
                               for ra, rb in zip(self.data, other.data)))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        bt = other.transpose().data
        return IntMatrix(self.rows, other.cols,
                         tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in bt)
                               for row in self.data))

    def scale(self, k: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols,
                         tuple(tuple(k * x for x in row) for row in self.data))

    def mat_vec(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.cols:
            raise ValueError("length mismatch")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.data)

    def delete_row_col(self, i: int, j: int) -> "IntMatrix":
        return IntMatrix(self.rows - 1, self.cols - 1,
                         tuple(tuple(x for cj, x in enumerate(row) if cj != j)
                               for ri, row in enumerate(self.data) if ri != i))


def int_det(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Every division performed is exact, so all intermediates stay integral;
    they are themselves minors of the input, which bounds their growth.
    """
    if not m.is_square:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [list(row) for row in m.data]
    sign = 1
    prev = 1
    for k in range(n - 1):
        pivot_row = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pivot_row is None:
            return 0
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        pk = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pk * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pk
    return sign * a[n - 1][n - 1]


def adjugate(m: IntMatrix) -> IntMatrix:
    """Classical adjugate: adj(M)[j][i] = (-1)^(i+j) det(minor_ij)."""
    if not m.is_square:
        raise ValueError("adjugate of a non-square matrix")
    n = m.rows
    if n == 0:
        return m
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            cof = int_det(m.delete_row_col(i, j))
            out[j][i] = cof if (i + j) % 2 == 0 else -cof
    return IntMatrix.from_rows(out)


@dataclass(frozen=True)
class SmithNormalForm:
    """U @ M @ V equals diag(diagonal) embedded in the matrix shape."""

    diagonal: tuple[int, ...]
    U: IntMatrix
    V: IntMatrix

    def diagonal_matrix(self, rows: int, cols: int) -> IntMatrix:
        d = self.diagonal
        return IntMatrix(rows, cols,
                         tuple(tuple(d[i] if i == j and i < len(d) else 0
                                     for j in range(cols)) for i in range(rows)))


def smith_normal_form(m: IntMatrix) -> SmithNormalForm:
    """Smith normal form with unimodular transforms.

    Returns (diagonal, U, V) with U*M*V diagonal, all diagonal entries
    nonnegative and each dividing the next.  The pivot strategy picks the
    entry of smallest absolute value, reduces its row and column with
    Euclidean steps, and only accepts the pivot once it also divides the
    whole trailing submatrix; this makes the divisibility chain hold by
    construction.
    """
    r, c = m.rows, m.cols
    w = [list(row) for row in m.data]
    u = [[int(i == j) for j in range(r)] for i in range(r)]
    v = [[int(i == j) for j in range(c)] for i in range(c)]

    def add_row(dst: int, src: int, q: int) -> None:
        wd, ws = w[dst], w[src]
        for k in range(c):
            wd[k] += q * ws[k]
        ud, us = u[dst], u[src]
        for k in range(r):
            ud[k] += q * us[k]

    def add_col(dst: int, src: int, q: int) -> None:
        for row in w:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    for t in range(min(r, c)):
        while True:
            best = None
            pi = pj = -1
            for i in range(t, r):
                wi = w[i]
                for j in range(t, c):
                    x = wi[j]
                    if x != 0 and (best is None or abs(x) < best):
                        best = abs(x)
                        pi, pj = i, j
            if best is None:
                break
            if pi != t:
                w[t], w[pi] = w[pi], w[t]
                u[t], u[pi] = u[pi], u[t]
            if pj != t:
                for row in w:
                    row[t], row[pj] = row[pj], row[t]
                for row in v:
                    row[t], row[pj] = row[pj], row[t]
            if w[t][t] < 0:
                w[t] = [-x for x in w[t]]
                u[t] = [-x for x in u[t]]
            p = w[t][t]
            dirty = False
            for i in range(t + 1, r):
                if w[i][t] != 0:
                    add_row(i, t, -(w[i][t] // p))
                    if w[i][t] != 0:
                        dirty = True
            for j in range(t + 1, c):
                if w[t][j] != 0:
                    add_col(j, t, -(w[t][j] // p))
                    if w[t][j] != 0:
                        dirty = True
            if dirty:
                continue
            divides = True
            for i in range(t + 1, r):
                wi = w[i]
                for j in range(t + 1, c):
                    if wi[j] % p != 0:
                        add_row(t, i, 1)
                        divides = False
                        break
                if not divides:
                    break
            if divides:
                break
        if best is None:
            break

    diag = tuple(w[i][i] for i in range(min(r, c)))
    return SmithNormalForm(diag, IntMatrix.from_rows(u), IntMatrix.from_rows(v))


def in_column_span(snf: SmithNormalForm, rows: int, cols: int, b: Sequence[int]) -> bool:
    """Membership test against a precomputed Smith form of the column lattice."""
    y = snf.U.mat_vec(b)
    k = min(rows, cols)
    for i in range(rows):
        if i < k and snf.diagonal[i] != 0:
            if y[i] % snf.diagonal[i] != 0:
                return False
        elif y[i] != 0:
            return False
    return True


def lattice_contains(m: IntMatrix, b: Sequence[int]) -> bool:
    """Decide whether b lies in the integer span of the columns of m."""
    if len(b) != m.rows:
        raise ValueError("vector length does not match row count")
    return in_column_span(smith_normal_form(m), m.rows, m.cols, b)


def kernel_basis(m: IntMatrix) -> tuple[tuple[int, ...], ...]:
    """Basis of the integer kernel {x : m @ x = 0}, as column vectors."""
    snf = smith_normal_form(m)
    k = min(m.rows, m.cols)
    vt = snf.V.transpose().data  # row i of V^T is column i of V
    cols = []
    for j in range(m.cols):
        if j >= k or snf.diagonal[j] == 0:
            cols.append(vt[j])
    return tuple(cols)
