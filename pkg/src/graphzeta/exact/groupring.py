"""The integral group ring Z[G] of a finite abelian group."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .cyclotomic import CyclotomicInteger
from .groups import Character, Element, FiniteAbelianGroup


@dataclass(frozen=True)
class GroupRingElement:
    """Element of Z[G]; coeffs[i] is the coefficient of group.elements[i]."""

    group: FiniteAbelianGroup
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.group.order:
            raise ValueError("coefficient vector does not match the group order")

    @staticmethod
    def zero(group: FiniteAbelianGroup) -> "GroupRingElement":
        return GroupRingElement(group, (0,) * group.order)

    @staticmethod
    def one(group: FiniteAbelianGroup) -> "GroupRingElement":
        return GroupRingElement.basis(group, group.identity)

    @staticmethod
    def basis(group: FiniteAbelianGroup, sigma: Element) -> "GroupRingElement":
        i = group.index(sigma)
        return GroupRingElement(group, tuple(int(j == i) for j in range(group.order)))

    @staticmethod
    def from_dict(group: FiniteAbelianGroup, table: Mapping[Element, int]) -> "GroupRingElement":
        out = [0] * group.order
        for sigma, c in table.items():
            out[group.index(sigma)] += int(c)
        return GroupRingElement(group, tuple(out))

    @staticmethod
    def norm_element(group: FiniteAbelianGroup) -> "GroupRingElement":
        """N_G, the sum of all group elements."""
        return GroupRingElement(group, (1,) * group.order)

    def _check(self, other: "GroupRingElement") -> None:
        if self.group != other.group:
            raise ValueError("group mismatch")

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def coefficient(self, sigma: Element) -> int:
        return self.coeffs[self.group.index(sigma)]

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._check(other)
        return GroupRingElement(self.group, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement(self.group, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        return self + (-other)

    def __mul__(self, other: "GroupRingElement | int") -> "GroupRingElement":
        if isinstance(other, int):
            return GroupRingElement(self.group, tuple(other * c for c in self.coeffs))
        self._check(other)
        add = self.group.add_index_table
        out = [0] * self.group.order
        for i, a in enumerate(self.coeffs):
            if a:
                row = add[i]
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[row[j]] += a * b
        return GroupRingElement(self.group, tuple(out))

    __rmul__ = __mul__

    def augmentation(self) -> int:
        """Coefficient sum; the ring morphism Z[G] -> Z."""
        return sum(self.coeffs)

    def apply_char(self, chi: Character) -> CyclotomicInteger:
        """Ring morphism Z[G] -> Z[zeta_m] sending sigma to chi(sigma)."""
        if chi.group != self.group:
            raise ValueError("character does not belong to this group")
        m = self.group.exponent
        acc = CyclotomicInteger.zero(m)
        for i, c in enumerate(self.coeffs):
            if c:
                e = chi.value_exponent(self.group.elements[i])
                acc = acc + CyclotomicInteger.root_of_unity(m, e) * c
        return acc

    def to_pairs(self) -> tuple[tuple[Element, int], ...]:
        return tuple(zip(self.group.elements, self.coeffs))


def gr_det(entries: Sequence[Sequence[GroupRingElement]]) -> GroupRingElement:
    """Determinant over Z[G] by cofactor expansion.

    Z[G] has zero divisors, so elimination with divisions is unsound here;
    the expansion memoizes on the set of still-active rows (the column is
    determined by how many rows remain), which keeps the cost at
    O(2^n * n) ring multiplications.
    """
    n = len(entries)
    if n == 0 or any(len(row) != n for row in entries):
        raise ValueError("matrix must be square and nonempty")
    group = entries[0][0].group
    zero = GroupRingElement.zero(group)
    memo: dict[tuple[int, ...], GroupRingElement] = {}

    def minor(rows: tuple[int, ...]) -> GroupRingElement:
        if len(rows) == 1:
            return entries[rows[0]][n - 1]
        cached = memo.get(rows)
        if cached is not None:
            return cached
        col = n - len(rows)
        acc = zero
        for pos, ri in enumerate(rows):
            e = entries[ri][col]
            if e.is_zero():
                continue
            term = e * minor(rows[:pos] + rows[pos + 1:])
            acc = acc + term if pos % 2 == 0 else acc - term
        memo[rows] = acc
        return acc

    return minor(tuple(range(n)))
