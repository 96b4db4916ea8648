"""Finite abelian groups as tuples of cyclic orders, and their characters."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Sequence

from .cyclotomic import CyclotomicInteger
from .intmatrix import IntMatrix, smith_normal_form

Element = tuple[int, ...]


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Z/n1 x ... x Z/nk; an element is a tuple of residues (s1, ..., sk)."""

    orders: tuple[int, ...]

    def __post_init__(self):
        if not self.orders:
            object.__setattr__(self, "orders", (1,))
        if any(n < 1 for n in self.orders):
            raise ValueError("cyclic orders must be >= 1")

    @property
    def rank(self) -> int:
        return len(self.orders)

    @cached_property
    def order(self) -> int:
        return math.prod(self.orders)

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*self.orders)

    @property
    def identity(self) -> Element:
        return (0,) * self.rank

    @cached_property
    def elements(self) -> tuple[Element, ...]:
        """All elements in lexicographic order; the identity comes first."""
        return tuple(itertools.product(*(range(n) for n in self.orders)))

    @cached_property
    def _index(self) -> dict[Element, int]:
        return {g: i for i, g in enumerate(self.elements)}

    def index(self, g: Element) -> int:
        return self._index[self.normalize(g)]

    def element(self, i: int) -> Element:
        return self.elements[i]

    def normalize(self, g: Sequence[int]) -> Element:
        if len(g) != self.rank:
            raise ValueError("element has wrong number of coordinates")
        return tuple(int(s) % n for s, n in zip(g, self.orders))

    def add(self, a: Element, b: Element) -> Element:
        return tuple((x + y) % n for x, y, n in zip(a, b, self.orders))

    def neg(self, a: Element) -> Element:
        return tuple((-x) % n for x, n in zip(a, self.orders))

    @cached_property
    def add_index_table(self) -> tuple[tuple[int, ...], ...]:
        els = self.elements
        idx = self._index
        return tuple(tuple(idx[self.add(a, b)] for b in els) for a in els)

    @cached_property
    def neg_index_table(self) -> tuple[int, ...]:
        return tuple(self._index[self.neg(a)] for a in self.elements)

    def characters(self) -> tuple["Character", ...]:
        """All characters, indexed like the elements; the trivial one comes first."""
        return tuple(Character(self, exps) for exps in self.elements)

    def is_elementary_two_group(self) -> bool:
        return self.exponent <= 2


@dataclass(frozen=True)
class Character:
    """Character of a finite abelian group, given by its exponent tuple.

    Values are roots of unity in Z[zeta_m] with m the exponent of the
    whole group, so every character of the cover shares one conductor.
    """

    group: FiniteAbelianGroup
    exponents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exponents", self.group.normalize(self.exponents))

    @property
    def is_trivial(self) -> bool:
        return all(a == 0 for a in self.exponents)

    def value_exponent(self, sigma: Element) -> int:
        """e with chi(sigma) = zeta_m^e."""
        g = self.group
        m = g.exponent
        sigma = g.normalize(sigma)
        return sum((m // n) * a * s for n, a, s in zip(g.orders, self.exponents, sigma)) % m

    def value(self, sigma: Element) -> CyclotomicInteger:
        return CyclotomicInteger.root_of_unity(self.group.exponent, self.value_exponent(sigma))

    def conjugate(self) -> "Character":
        return Character(self.group, self.group.neg(self.exponents))

    def kernel_elements(self) -> tuple[Element, ...]:
        return tuple(s for s in self.group.elements if self.value_exponent(s) == 0)


def char_eval(group: FiniteAbelianGroup, chi: Character, sigma: Element) -> CyclotomicInteger:
    """chi(sigma) as an exact cyclotomic integer over conductor exponent(group)."""
    if chi.group != group:
        raise ValueError("character does not belong to this group")
    return chi.value(sigma)


def subgroup_closure(group: FiniteAbelianGroup, generators: Iterable[Sequence[int]]) -> frozenset[Element]:
    gens = [group.normalize(g) for g in generators]
    seen = {group.identity}
    frontier = [group.identity]
    while frontier:
        cur = frontier.pop()
        for g in gens:
            nxt = group.add(cur, g)
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return frozenset(seen)


def quotient_group(group: FiniteAbelianGroup,
                   subgroup: Iterable[Element]) -> tuple[FiniteAbelianGroup, Callable[[Element], Element]]:
    """The quotient by a subgroup, presented again by cyclic orders.

    Works on the lattice picture: the quotient is Z^k modulo the span of
    diag(orders) and the subgroup elements, brought to cyclic form by a
    Smith reduction.  Returns the quotient together with the projection.
    Cyclic factors of order one are dropped from the presentation.
    """
    k = group.rank
    cols: list[list[int]] = [[group.orders[i] if j == i else 0 for j in range(k)] for i in range(k)]
    for h in subgroup:
        cols.append(list(group.normalize(h)))
    m = IntMatrix.from_rows([[col[i] for col in cols] for i in range(k)])
    snf = smith_normal_form(m)
    diag = snf.diagonal
    keep = [i for i in range(k) if diag[i] > 1]
    quot = FiniteAbelianGroup(tuple(diag[i] for i in keep) if keep else (1,))
    u = snf.U

    def project(g: Element) -> Element:
        y = u.mat_vec(group.normalize(g))
        if keep:
            return tuple(y[i] % diag[i] for i in keep)
        return (0,)

    return quot, project
