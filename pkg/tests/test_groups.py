import itertools
import random

from hypothesis import given, settings
from hypothesis import strategies as st

from graphzeta.exact.cyclotomic import CyclotomicInteger, cyc_matrix_det
from graphzeta.exact.groupring import GroupRingElement, gr_det
from graphzeta.exact.groups import FiniteAbelianGroup, quotient_group, subgroup_closure


def test_group_basics():
    g = FiniteAbelianGroup((2, 3))
    assert g.order == 6
    assert g.exponent == 6
    assert g.elements[0] == g.identity
    assert g.index((1, 2)) == 5
    assert g.add((1, 2), (1, 2)) == (0, 1)
    assert g.neg((1, 2)) == (1, 1)


def test_character_values_forced_cases():
    z2 = FiniteAbelianGroup((2,))
    trivial, chi = z2.characters()
    assert trivial.is_trivial
    for sigma in z2.elements:
        assert trivial.value(sigma) == CyclotomicInteger.one(2)
    assert chi.value((1,)) == CyclotomicInteger.from_int(2, -1)

    z4 = FiniteAbelianGroup((4,))
    chi1 = z4.characters()[1]
    assert chi1.value((1,)).coeffs == (0, 1)  # the class of x mod x^2 + 1


def test_characters_multiplicative_all_groups_up_to_12():
    shapes = [(2,), (3,), (4,), (5,), (6,), (7,), (8,), (9,), (10,), (11,), (12,),
              (2, 2), (2, 4), (2, 6), (3, 3), (2, 2, 2), (2, 2, 3)]
    for orders in shapes:
        g = FiniteAbelianGroup(orders)
        for chi in g.characters():
            for sigma, tau in itertools.product(g.elements, repeat=2):
                assert chi.value(g.add(sigma, tau)) == chi.value(sigma) * chi.value(tau)


def test_character_group_has_group_order_and_conjugates():
    g = FiniteAbelianGroup((2, 3))
    chars = g.characters()
    assert len(chars) == g.order
    for chi in chars:
        conj = chi.conjugate()
        for sigma in g.elements:
            assert conj.value(sigma) == chi.value(sigma).conjugate()


def test_subgroup_closure_and_quotient():
    g = FiniteAbelianGroup((2, 2))
    h = subgroup_closure(g, [(1, 0)])
    assert h == frozenset({(0, 0), (1, 0)})
    quot, project = quotient_group(g, h)
    assert quot.order == 2
    assert project((0, 1)) != project((0, 0))
    assert project((1, 1)) == project((0, 1))
    full, project_all = quotient_group(g, g.elements)
    assert full.order == 1


def test_group_ring_forced_examples():
    g = FiniteAbelianGroup((2,))
    one = GroupRingElement.one(g)
    sigma = GroupRingElement.basis(g, (1,))
    x = GroupRingElement(g, (3, -4))
    assert x * one == x
    omsig = one - sigma
    assert omsig * omsig == GroupRingElement(g, (2, -2))
    norm = GroupRingElement.norm_element(g)
    assert (omsig * norm).is_zero()


def test_group_ring_apply_char():
    g = FiniteAbelianGroup((2,))
    trivial, chi = g.characters()
    x = GroupRingElement(g, (2, -2))
    assert x.apply_char(trivial).as_int() == 0
    assert x.apply_char(chi).as_int() == 4
    norm = GroupRingElement.norm_element(g)
    assert norm.apply_char(chi).is_zero()
    assert norm.apply_char(trivial).as_int() == 2


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(min_value=-6, max_value=6), min_size=12, max_size=12))
def test_augmentation_is_ring_morphism(values):
    g = FiniteAbelianGroup((2, 3))
    x = GroupRingElement(g, tuple(values[:6]))
    y = GroupRingElement(g, tuple(values[6:]))
    assert (x * y).augmentation() == x.augmentation() * y.augmentation()
    assert (x + y).augmentation() == x.augmentation() + y.augmentation()


def test_gr_det_forced_examples():
    g = FiniteAbelianGroup((2,))
    sigma = GroupRingElement.basis(g, (1,))
    x = GroupRingElement(g, (7, -2))
    assert gr_det([[x]]) == x
    zero = GroupRingElement.zero(g)
    assert gr_det([[sigma, zero], [zero, sigma]]) == GroupRingElement.one(g)


def test_gr_det_c3_to_c6_worked_matrix():
    # the equivariant Laplacian pairing matrix of the cycle double cover
    g = FiniteAbelianGroup((2,))
    one = GroupRingElement.one(g)
    sigma = GroupRingElement.basis(g, (1,))
    two = one * 2
    m = [[two, -sigma, -one],
         [-sigma, two, -one],
         [-one, -one, two]]
    assert gr_det(m) == GroupRingElement(g, (2, -2))


def test_gr_det_character_images_match_cyclotomic_determinant():
    rng = random.Random(2024)
    for orders in ((2,), (3,), (2, 2)):
        g = FiniteAbelianGroup(orders)
        for _ in range(8):
            entries = [[GroupRingElement(g, tuple(rng.randint(-3, 3) for _ in range(g.order)))
                        for _ in range(3)] for _ in range(3)]
            det = gr_det(entries)
            for chi in g.characters():
                image = [[e.apply_char(chi) for e in row] for row in entries]
                assert det.apply_char(chi) == cyc_matrix_det(image)
